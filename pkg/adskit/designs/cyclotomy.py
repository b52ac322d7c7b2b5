# Copyright 2025 The adskit Authors
# SPDX-License-Identifier: Apache-2.0
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Cyclotomic classes and cyclotomic numbers of GF(q).

C_i^e is gamma^i <gamma^e> and (i,j)_e counts x in C_i^e with x + 1 in C_j^e.
Numbers are computed directly from the log table, or from the closed forms for
e in {2, 3, 4} once the sign ambiguity of the quadratic partition is resolved
against one directly counted pilot entry.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, Iterable, List, Literal, Optional, Tuple

import numpy as np

from adskit.designs.gf import FieldCtx, field_of_order
from adskit.tools.base import PreconditionError, VerificationError
from adskit.tools.schema import Verdict
from adskit.tools.utils import is_square, prime_power

Method = Literal["direct", "closed"]


@dataclass(frozen=True, eq=False)
class CycCtx:
    field: FieldCtx
    e: int

    @property
    def q(self) -> int:
        return self.field.q

    @property
    def f(self) -> int:
        return (self.q - 1) // self.e

    @cached_property
    def class_of(self) -> np.ndarray:
        """Class index of every element; -1 at 0."""
        cls = self.field.log % self.e
        cls[0] = -1
        return cls

    @cached_property
    def classes(self) -> List[np.ndarray]:
        return [np.flatnonzero(self.class_of == i) for i in range(self.e)]

    @cached_property
    def minus_one_class(self) -> int:
        return int(self.class_of[self.field.neg(1)])

    @cached_property
    def direct_matrix(self) -> np.ndarray:
        xs = self.field.nonzero()
        ys = self.field.plus_one_arrays(xs)
        keep = ys != 0
        matrix = np.zeros((self.e, self.e), dtype=np.int64)
        np.add.at(matrix, (self.class_of[xs[keep]], self.class_of[ys[keep]]), 1)
        return matrix

    def union(self, I: Iterable[int], with_zero: bool = False) -> List[int]:
        members = [int(x) for i in sorted(set(I)) for x in self.classes[self._index(i)]]
        if with_zero:
            members.append(0)
        return sorted(members)

    def _index(self, i: int) -> int:
        if not 0 <= i < self.e:
            raise PreconditionError(f"class index {i} outside 0..{self.e - 1}")
        return i


def cyc_classes(field: FieldCtx, e: int) -> CycCtx:
    if e < 1 or (field.q - 1) % e != 0:
        raise PreconditionError(f"e={e} does not divide q-1={field.q - 1}")
    return CycCtx(field, e)


def cyc_number_direct(cctx: CycCtx, i: int, j: int) -> int:
    return int(cctx.direct_matrix[cctx._index(i), cctx._index(j)])


def class_negation(cctx: CycCtx, i: int) -> int:
    """Index of -C_i^e."""
    return (cctx._index(i) + cctx.minus_one_class) % cctx.e


# quadratic partitions


@dataclass(frozen=True)
class QuadPartition:
    form: str
    first: int
    second: int
    offset: Optional[int] = None
    scale: Optional[int] = None

    def is_proper(self, q: int) -> bool:
        pp = prime_power(q)
        return self.form == "affine_rep" or math.gcd(self.first, pp[0] if pp else q) == 1


@dataclass(frozen=True)
class QuadForm:
    tag: Literal["s2_4t2", "c2_27d2_of_4q", "x2_4y2", "affine_rep"]
    offset: int = 0
    scale: int = 1

    @classmethod
    def affine(cls, offset: int, scale: int) -> "QuadForm":
        return cls("affine_rep", offset, scale)


S2_4T2 = QuadForm("s2_4t2")
C2_27D2 = QuadForm("c2_27d2_of_4q")
X2_4Y2 = QuadForm("x2_4y2")


def _pick(candidates: List[Tuple[int, int]], p: int) -> Optional[Tuple[int, int]]:
    if not candidates:
        return None
    proper = [pair for pair in candidates if math.gcd(pair[0], p) == 1]
    pool = proper or candidates
    return min(pool, key=lambda pair: (pair[1], abs(pair[0]), pair[0]))


def quadratic_partition(q: int, form: QuadForm | str) -> Optional[QuadPartition]:
    """Normalized representation of q in the given form, or None.

    For s2_4t2 and x2_4y2 the first component is 1 mod 4, for c2_27d2_of_4q it is
    1 mod 3, and the second component is nonnegative. A proper representation
    (first component prime to q) wins over an improper one.
    """
    if isinstance(form, str):
        form = QuadForm(form)
    pp = prime_power(q)
    p = pp[0] if pp else q
    if form.tag in ("s2_4t2", "x2_4y2"):
        bound = math.isqrt(q)
        candidates = []
        for s in range(-bound, bound + 1):
            rest = q - s * s
            if s % 4 == 1 and rest % 4 == 0 and is_square(rest // 4):
                candidates.append((s, math.isqrt(rest // 4)))
        pick = _pick(candidates, p)
        return None if pick is None else QuadPartition(form.tag, *pick)
    if form.tag == "c2_27d2_of_4q":
        bound = math.isqrt(4 * q)
        candidates = []
        for c in range(-bound, bound + 1):
            rest = 4 * q - c * c
            if c % 3 == 1 and rest % 27 == 0 and is_square(rest // 27):
                candidates.append((c, math.isqrt(rest // 27)))
        pick = _pick(candidates, p)
        return None if pick is None else QuadPartition(form.tag, *pick)
    if form.tag == "affine_rep":
        if form.scale <= 0 or q < form.offset:
            return None
        for y in range(math.isqrt((q - form.offset) // form.scale) + 2):
            if form.offset + form.scale * y * y == q:
                return QuadPartition("affine_rep", form.offset, y, form.offset, form.scale)
        return None
    raise PreconditionError(f"unknown partition form {form.tag!r}")


# closed forms


def _exact(numerator: int, denominator: int) -> int:
    if numerator % denominator:
        raise VerificationError(
            f"closed form {numerator}/{denominator} is not an integer; partition does not fit q"
        )
    return numerator // denominator


def closed_matrix(q: int, e: int, partition: Optional[QuadPartition] = None, sign: int = 1) -> np.ndarray:
    """The e x e cyclotomic matrix from its closed form, e in {2, 3, 4}."""
    if e not in (2, 3, 4):
        raise PreconditionError(f"closed forms exist for e in {{2, 3, 4}}, not e={e}")
    if (q - 1) % e:
        raise PreconditionError(f"e={e} does not divide q-1={q - 1}")
    f = (q - 1) // e

    if e == 2:
        if f % 2 == 0:
            a, b = (f - 2) // 2, f // 2
            return np.array([[a, b], [b, b]], dtype=np.int64)
        a, b = (f - 1) // 2, (f + 1) // 2
        return np.array([[a, b], [a, a]], dtype=np.int64)

    if e == 3:
        if q % 2 == 0:
            raise PreconditionError(f"order-3 closed forms need odd q, got q={q}")
        partition = partition or quadratic_partition(q, C2_27D2)
        if partition is None:
            raise PreconditionError(f"4q={4 * q} has no representation c^2+27d^2")
        c, d = partition.first, sign * partition.second
        A = _exact(q - 8 + c, 9)
        B = _exact(2 * q - 4 - c - 9 * d, 18)
        C = _exact(2 * q - 4 - c + 9 * d, 18)
        D = _exact(q + 1 + c, 9)
        return np.array([[A, B, C], [B, C, D], [C, D, B]], dtype=np.int64)

    partition = partition or quadratic_partition(q, S2_4T2)
    if partition is None:
        raise PreconditionError(f"q={q} has no representation s^2+4t^2")
    s, t = partition.first, sign * partition.second
    if f % 2:
        A = _exact(q - 7 + 2 * s, 16)
        B = _exact(q + 1 + 2 * s - 8 * t, 16)
        C = _exact(q + 1 - 6 * s, 16)
        D = _exact(q + 1 + 2 * s + 8 * t, 16)
        E = _exact(q - 3 - 2 * s, 16)
        rows = [[A, B, C, D], [E, E, D, B], [A, E, A, E], [E, D, B, E]]
    else:
        A = _exact(q - 11 - 6 * s, 16)
        B = _exact(q - 3 + 2 * s + 8 * t, 16)
        C = _exact(q - 3 + 2 * s, 16)
        D = _exact(q - 3 + 2 * s - 8 * t, 16)
        E = _exact(q + 1 - 2 * s, 16)
        rows = [[A, B, C, D], [B, D, E, E], [C, E, C, E], [D, E, E, B]]
    return np.array(rows, dtype=np.int64)


def resolve_sign(cctx: CycCtx) -> int:
    """Sign of d (e=3) or t (e=4) that makes the closed form match the pilot (0,1)_e."""
    if cctx.e not in (3, 4):
        return 1
    pilot = cyc_number_direct(cctx, 0, 1)
    for sign in (1, -1):
        try:
            candidate = closed_matrix(cctx.q, cctx.e, sign=sign)
        except VerificationError:
            continue
        if candidate[0, 1] == pilot:
            return sign
    raise VerificationError(f"no sign reconciles the closed forms with (0,1)_{cctx.e} at q={cctx.q}")


def cyc_number_closed(
    q: int,
    e: int,
    i: int,
    j: int,
    partition: Optional[QuadPartition] = None,
    sign_hint: Optional[int] = None,
) -> int:
    if sign_hint is None:
        sign_hint = resolve_sign(cyc_classes(field_of_order(q), e)) if e in (3, 4) else 1
    matrix = closed_matrix(q, e, partition, sign_hint)
    if not (0 <= i < e and 0 <= j < e):
        raise PreconditionError(f"class indices ({i},{j}) outside 0..{e - 1}")
    return int(matrix[i, j])


def cyclotomic_matrix(cctx: CycCtx, method: Method = "direct") -> np.ndarray:
    if method == "direct":
        return cctx.direct_matrix.copy()
    if method == "closed":
        return closed_matrix(cctx.q, cctx.e, sign=resolve_sign(cctx))
    raise PreconditionError(f"unknown method {method!r}")


def cyclotomic_identities(matrix: np.ndarray, q: int, e: int) -> Dict[str, bool]:
    """The standard relations among the (i,j)_e."""
    f = (q - 1) // e
    h = e // 2 if (q % 2 and f % 2) else 0
    idx = range(e)
    return {
        "negation": all(matrix[i, j] == matrix[(-i) % e, (j - i) % e] for i in idx for j in idx),
        "swap": all(matrix[i, j] == matrix[(j + h) % e, (i + h) % e] for i in idx for j in idx),
        "row_sums": all(matrix[i].sum() == f - (i == h) for i in idx),
        "column_sums": all(matrix[:, j].sum() == f - (j == 0) for j in idx),
        "total": int(matrix.sum()) == q - 2,
    }


def union_diff_coeffs(
    cctx: CycCtx, I: Iterable[int], with_zero: bool = False, method: Method = "direct"
) -> Tuple[int, np.ndarray]:
    """Coefficients of D(X)D(X^-1) for D the union of the classes in I.

    Every element of C_m has coefficient sum over i, j in I of (j-m, i-m)_e; the
    identity gets |D|.
    """
    I = sorted({cctx._index(i) for i in I})
    if not I:
        raise PreconditionError("union_diff_coeffs needs a nonempty class set")
    e = cctx.e
    matrix = cyclotomic_matrix(cctx, method)
    coeffs = np.zeros(e, dtype=np.int64)
    for m in range(e):
        coeffs[m] = sum(matrix[(j - m) % e, (i - m) % e] for i in I for j in I)
    identity = len(I) * cctx.f
    if with_zero:
        h = cctx.minus_one_class
        members = set(I)
        for m in range(e):
            coeffs[m] += (m in members) + ((m - h) % e in members)
        identity += 1
    return identity, coeffs


def union_verdicts(cctx: CycCtx, I: Iterable[int], with_zero: bool = False, method: Method = "direct") -> List[Verdict]:
    """Classify a union of classes from its coefficients alone."""
    I = sorted(set(I))
    identity, coeffs = union_diff_coeffs(cctx, I, with_zero, method)
    q, k = cctx.q, identity
    values = sorted(set(int(c) for c in coeffs))
    verdicts: List[Verdict] = []
    if len(values) == 1:
        verdicts.append(Verdict(type="DS", v=q, k=k, lambda_=values[0]))
    elif len(values) == 2 and values[1] - values[0] == 1:
        t = cctx.f * sum(1 for c in coeffs if c == values[0])
        verdicts.append(Verdict(type="ADS", v=q, k=k, lambda_=values[0], t=t))
    inside = {int(coeffs[i]) for i in I}
    outside = {int(coeffs[m]) for m in range(cctx.e) if m not in I}
    if len(inside) == 1 and len(outside) == 1 and inside != outside:
        verdicts.append(Verdict(type="PDS", v=q, k=k, lambda_=inside.pop(), mu=outside.pop()))
    return verdicts
