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
"""Generators for the single-group construction families.

Every generator checks the arithmetic condition of its family first, builds
the set, and hands it to ``certify``; nothing leaves this module unverified.
"""

from __future__ import annotations

import asyncio
import math
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

import numpy as np

from adskit.designs.constants import (
    CUBIC_ORDERS,
    CUBIC_ZERO_ORDERS,
    EXPERIMENTAL_FAMILIES,
    PALEY_QR,
)
from adskit.designs.cyclotomy import (
    S2_4T2,
    QuadForm,
    QuadPartition,
    cyc_classes,
    quadratic_partition,
    union_verdicts,
)
from adskit.designs.diffcore import certify, classify, groupring_product, lambda_sets
from adskit.designs.gf import field_of_order, make_field
from adskit.designs.groups import GroupCtx, cyclic_group, product_group
from adskit.designs.sequences import singer_set
from adskit.designs.task_processor import Task, TaskProcessor
from adskit.tools.base import PreconditionError, VerificationError
from adskit.tools.logger import adskit_logger
from adskit.tools.schema import ConstructedSet, Verdict
from adskit.tools.utils import asyncify, is_prime, is_square, prime_power


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)


def _odd_prime_power(q: int, family: str) -> tuple:
    pp = prime_power(q)
    _require(pp is not None and pp[0] != 2, f"{family}: q={q} is not an odd prime power")
    return pp


def _proper_partition(q: int) -> Optional[QuadPartition]:
    partition = quadratic_partition(q, S2_4T2)
    if partition is None or not partition.is_proper(q):
        return None
    return partition


# Paley


def paley_qr(q: int, gamma: Optional[int] = None) -> ConstructedSet:
    """Nonzero squares of GF(q).

    q = 1 (mod 4) gives the Paley partial difference set, which is also an ADS;
    q = 3 (mod 4) gives a skew Hadamard difference set.
    """
    _odd_prime_power(q, PALEY_QR)
    field = field_of_order(q, gamma)
    D = cyc_classes(field, 2).union([0])
    half = (q - 1) // 2
    if q % 4 == 1:
        claimed = Verdict.of("PDS", q, half, (q - 5) // 4, (q - 1) // 4)
        result = certify(field.as_group(), D, claimed, PALEY_QR, recipe={"q": q})
        ads = (q, half, (q - 5) // 4, half)
        if not any(v.type == "ADS" and v.params() == ads for v in result.verdicts):
            raise VerificationError(f"Paley set of GF({q}) is not an ADS{ads}")
        return result
    claimed = Verdict.of("DS", q, half, (q - 3) // 4)
    result = certify(field.as_group(), D, claimed, PALEY_QR, recipe={"q": q})
    ds = next(v for v in result.verdicts if v.type == "DS")
    if not ds.flags.get("skew"):
        raise VerificationError(f"Paley set of GF({q}) is not skew Hadamard")
    return result


# cyclotomic families


def _quartic(q: int) -> tuple:
    if q == 9:
        return (9, 2, 0, 6)
    partition = _proper_partition(q)
    _require(
        q % 8 == 5 and partition is not None and partition.first in (5, -3),
        f"quartic: q={q} is not 5 mod 8 with q = 25+4y^2 or 9+4y^2",
    )
    return (q, (q - 1) // 4, (q - 13) // 16, (q - 1) // 2)


def _quartic_zero(q: int, family: str) -> tuple:
    partition = _proper_partition(q)
    _require(
        q % 8 == 5 and partition is not None and partition.first in (1, -7),
        f"{family}: q={q} is not 5 mod 8 with q = 1+4y^2 or 49+4y^2",
    )
    return (q, (q + 3) // 4, (q - 5) // 16, (q - 1) // 2)


def quartic_pair_holds(q: int) -> bool:
    """C_i^4 u C_(i+1)^4 is an ADS: q = s^2+4 with q = 5 mod 8, or q an even power of p = 3 mod 4."""
    p, alpha = prime_power(q)
    if alpha % 2 == 0 and p % 4 == 3:
        return True
    partition = _proper_partition(q)
    return q % 8 == 5 and partition is not None and partition.second == 1


def _octic(q: int) -> tuple:
    partition = _proper_partition(q)
    _require(
        q % 64 == 41
        and partition is not None
        and abs(partition.first) in (13, 19)
        and is_square((q - 1) // 2),
        f"octic: q={q} is not 41 mod 64 with q = 19^2+4y^2 or 13^2+4y^2 and q = 1+2b^2",
    )
    return (q, (q - 1) // 8, (q - 41) // 64, (q - 1) // 2)


def _dpw_union_sq(q: int) -> tuple:
    l = math.isqrt(q)
    _require(
        l * l == q and prime_power(l) is not None and l % 8 == 3 and is_square(l - 2),
        f"dpw_union_sq: q={q} is not l^2 with l = t^2+2 = 3 mod 8 a prime power",
    )
    return (q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 2)


def _octic_zero(p: int) -> tuple:
    y2, b2 = (p - 9) // 64, (p - 1) // 8
    _require(
        is_prime(p)
        and p > 9
        and (p - 9) % 64 == 0
        and is_square(y2)
        and math.isqrt(y2) % 2 == 1
        and is_square(b2)
        and math.isqrt(b2) % 2 == 1,
        f"octic_zero: p={p} is not a prime 9+64y^2 = 1+8b^2 with y, b odd",
    )
    return (p, (p + 7) // 8, (p - 9) // 64, 3 * (p - 1) // 4)


# family -> (order e, class offsets, with zero)
_SHAPES: Dict[str, tuple] = {
    "quartic": (4, (0,), False),
    "quartic_zero": (4, (0,), True),
    "quartic_zero_neg": (4, (2,), True),
    "quartic_pair": (4, (0, 1), False),
    "octic": (8, (0,), False),
    "dpw_union_sq": (8, (0, 1, 2, 5), False),
    "octic_zero": (8, (0,), True),
    "cubic": (3, (0,), False),
    "cubic_zero": (3, (0,), True),
}


def cyclotomic_ads(
    q: int, family: str, i: int = 0, experimental: bool = False, gamma: Optional[int] = None
) -> ConstructedSet:
    """One of the cyclotomic ADS families, shifted by the class index i."""
    if family not in _SHAPES:
        raise PreconditionError(f"unknown cyclotomic family {family!r}")
    if family in EXPERIMENTAL_FAMILIES and not experimental:
        raise PreconditionError(f"{family} is experimental; pass experimental=True")
    _odd_prime_power(q, family)
    e, offsets, with_zero = _SHAPES[family]
    _require((q - 1) % e == 0, f"{family}: e={e} does not divide q-1={q - 1}")

    field = field_of_order(q, gamma)
    cctx = cyc_classes(field, e)
    I = [(i + offset) % e for offset in offsets]

    if family == "quartic":
        params = _quartic(q)
    elif family in ("quartic_zero", "quartic_zero_neg"):
        params = _quartic_zero(q, family)
    elif family == "quartic_pair":
        _require(
            quartic_pair_holds(q),
            f"quartic_pair: q={q} is neither s^2+4 (5 mod 8) nor an even power of p = 3 mod 4",
        )
        params = (q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 2)
    elif family == "octic":
        params = _octic(q)
    elif family == "dpw_union_sq":
        params = _dpw_union_sq(q)
    elif family == "octic_zero":
        params = _octic_zero(q)
    else:
        orders = CUBIC_ZERO_ORDERS if with_zero else CUBIC_ORDERS
        _require(q in orders, f"{family}: q={q} not in {list(orders)}")
        ads = [v for v in union_verdicts(cctx, I, with_zero, method="closed") if v.type == "ADS"]
        if not ads:
            raise VerificationError(f"{family}: closed forms give no ADS at q={q}")
        params = ads[0].params()

    D = cctx.union(I, with_zero)
    return certify(
        field.as_group(),
        D,
        Verdict.of("ADS", *params),
        family,
        recipe={"q": q, "e": e, "classes": I, "with_zero": with_zero},
    )


def ck_pds(q: int, I: Iterable[int], gamma: Optional[int] = None) -> ConstructedSet:
    """Union of (q+1)-th order classes of GF(q^2): u lines through the origin, minus the origin.

    Gives PDS(q^2, u(q-1), q-2+(u-1)(u-2), u(u-1)) for u = |I| = (q +- 1)/2.
    """
    _odd_prime_power(q, "ck_pds")
    I = sorted(set(int(i) for i in I))
    u = len(I)
    _require(u in ((q - 1) // 2, (q + 1) // 2), f"ck_pds: |I|={u} is not (q+-1)/2 for q={q}")
    _require(all(0 <= i <= q for i in I), f"ck_pds: class indices must lie in 0..{q}")

    field = field_of_order(q * q, gamma)
    cctx = cyc_classes(field, q + 1)
    ctx = field.as_group()
    lines = {i: np.append(cctx.classes[i], 0) for i in I}
    for i in I:
        for j in I:
            product = groupring_product(ctx, lines[i], lines[j])
            if i == j:
                expected = np.zeros(ctx.order, dtype=np.int64)
                expected[lines[i]] = q
            else:
                expected = np.ones(ctx.order, dtype=np.int64)
            if not np.array_equal(product, expected):
                raise VerificationError(f"ck_pds: classes {i} and {j} are not lines of GF({q}^2)")

    claimed = Verdict.of("PDS", q * q, u * (q - 1), q - 2 + (u - 1) * (u - 2), u * (u - 1))
    return certify(ctx, cctx.union(I), claimed, "ck_pds", recipe={"q": q, "I": I})


# difference set <-> almost difference set transfer


def removal_transfer_params(v: int) -> tuple:
    """(k, lambda) a DS must have so that dropping one element leaves an ADS with t = (v-1)/2."""
    _require(v % 16 == 13, f"v={v}: (v+3)/16 is not an integer")
    return (v + 3) // 4, (v + 3) // 16


def addition_transfer_params(v: int) -> tuple:
    """(k, lambda) a DS must have so that adding one element gives an ADS with t = (v-1)/2."""
    _require(v % 16 == 5, f"v={v}: (v-5)/16 is not an integer")
    return (v - 1) // 4, (v - 5) // 16


def _pair_sums(ctx: GroupCtx, arr: np.ndarray) -> np.ndarray:
    rows, cols = np.triu_indices(arr.size, k=1)
    return np.unique(ctx.add_arrays(arr[rows], arr[cols]))


def ds_ads_transfer(direction: str, ctx: GroupCtx, D: Iterable[int], d: int) -> ConstructedSet:
    """Add or remove one element d, turning a DS into an ADS or back."""
    v = ctx.order
    _require(v % 4 == 1, f"{direction}: group order {v} is not 1 mod 4")
    arr = ctx.as_index_array(D)
    d = ctx.check(d)
    members = set(int(x) for x in arr)
    classification = classify(ctx, arr)

    if direction == "ds_minus_elem":
        k, lam = removal_transfer_params(v)
        _require(classification.has("DS", (v, k, lam)), f"{direction}: D is not a DS{(v, k, lam)}")
        _require(d in members, f"{direction}: d is not in D")
        result = sorted(members - {d})
        claimed = Verdict.of("ADS", v, (v - 1) // 4, (v - 13) // 16, (v - 1) // 2)
    elif direction == "ads_plus_elem_to_ds":
        k, lam = removal_transfer_params(v)
        params = (v, k - 1, lam - 1, (v - 1) // 2)
        _require(classification.has("ADS", params), f"{direction}: D is not an ADS{params}")
        _require(d not in members, f"{direction}: d is already in D")
        H = set(lambda_sets(ctx, arr)[0])
        outward = ctx.sub_arrays(d, arr)
        inward = ctx.sub_arrays(arr, d)
        _require(
            all(int(x) in H for x in outward) and all(int(x) in H for x in inward),
            f"{direction}: d - d_i and d_i - d are not all in the lambda-set",
        )
        result = sorted(members | {d})
        claimed = Verdict.of("DS", v, k, lam)
    elif direction == "ds_plus_elem":
        k, lam = addition_transfer_params(v)
        _require(classification.has("DS", (v, k, lam)), f"{direction}: D is not a DS{(v, k, lam)}")
        _require(d not in members, f"{direction}: d is already in D")
        result = sorted(members | {d})
        claimed = Verdict.of("ADS", v, k + 1, lam, (v - 1) // 2)
    elif direction == "ads_minus_elem_to_ds":
        k, lam = addition_transfer_params(v)
        params = (v, k + 1, lam, (v - 1) // 2)
        _require(classification.has("ADS", params), f"{direction}: D is not an ADS{params}")
        _require(d in members, f"{direction}: d is not in D")
        H = set(lambda_sets(ctx, arr)[0])
        others = np.array(sorted(members - {d}), dtype=np.int64)
        both = np.concatenate([ctx.sub_arrays(d, others), ctx.sub_arrays(others, d)])
        _require(
            all(int(x) not in H and int(x) != 0 for x in both),
            f"{direction}: d - d_i and d_i - d are not all outside the lambda-set",
        )
        result = sorted(members - {d})
        claimed = Verdict.of("DS", v, k, lam)
    else:
        raise PreconditionError(f"unknown transfer direction {direction!r}")

    twice = ctx.add(d, d)
    if twice in set(int(x) for x in _pair_sums(ctx, arr)):
        raise PreconditionError(f"{direction}: 2d = {ctx.format_elem(twice)} is a sum of two distinct members")

    return certify(
        ctx,
        result,
        claimed,
        "ds_ads_transfer",
        recipe={"direction": direction, "d": ctx.format_elem(d), "source": ctx.format_set(arr)},
    )


# sets from functions


def gmw_like_support(q: int, gamma: Optional[int] = None) -> ConstructedSet:
    """Support {i : gamma^i + 1 is a nonsquare} in Z_(q-1)."""
    _odd_prime_power(q, "gmw_like_support")
    field = field_of_order(q, gamma)
    cls = cyc_classes(field, 2).class_of
    shifted = field.plus_one_arrays(field.exp)
    D = np.flatnonzero(cls[shifted] == 1)
    n = q - 1
    if q % 4 == 3:
        params = (n, n // 2, (q - 3) // 4, (3 * q - 5) // 4)
    else:
        params = (n, n // 2, (q - 5) // 4, (q - 1) // 4)
    return certify(
        cyclic_group(n), D, Verdict.of("ADS", *params), "gmw_like_support", recipe={"q": q, "gamma": field.gamma}
    )


def _power_table(field, s: int) -> np.ndarray:
    return field.power_arrays(np.arange(field.q, dtype=np.int64), s)


def pf_value(p: int, m: int, s: int) -> Fraction:
    """max over a != 0 and b of Pr_x[f(x+a) - f(x) = b] for f(x) = x^s on GF(p^m)."""
    field = make_field(p, m)
    group = field.as_group()
    xs = np.arange(field.q, dtype=np.int64)
    fx = _power_table(field, s)
    best = 0
    for a in range(1, field.q):
        shifted = fx[group.add_arrays(xs, a)]
        best = max(best, int(np.bincount(group.sub_arrays(shifted, fx), minlength=field.q).max()))
    return Fraction(best, field.q)


def admissible_planar_exponents(p: int, m: int) -> List[int]:
    """Known planar exponents on GF(p^m), one per distinct power function."""
    _require(p % 2 == 1 and is_prime(p), f"planar functions need an odd prime, got p={p}")
    candidates = {2}
    for k in range(1, m):
        if (m // math.gcd(m, k)) % 2 == 1:
            candidates.add(p**k + 1)
    if p == 3:
        for k in range(1, 2 * m, 2):
            if math.gcd(m, k) == 1:
                candidates.add((3**k + 1) // 2)
    field = make_field(p, m)
    seen = set()
    exponents = []
    for s in sorted(candidates):
        table = _power_table(field, s).tobytes()
        if table not in seen:
            seen.add(table)
            exponents.append(s)
    return exponents


def pn_graph_ads(p: int, m: int, s: int) -> ConstructedSet:
    """Graph {(x^s, x)} of a planar power function, an (n^2, n, 0, n-1) ADS for n = p^m."""
    _require(p % 2 == 1 and is_prime(p), f"pn_graph_ads needs an odd prime, got p={p}")
    field = make_field(p, m)
    n = field.q
    table = _power_table(field, s)
    admissible = any(
        np.array_equal(table, _power_table(field, r)) for r in admissible_planar_exponents(p, m)
    )
    pf = pf_value(p, m, s)
    if not admissible:
        adskit_logger.log("WARNING", f"x^{s} is not a listed planar exponent on GF({n}); pf = {pf}")
        if pf != Fraction(1, n):
            raise PreconditionError(f"pn_graph_ads: x^{s} is not planar on GF({n}), pf = {pf}")
    ctx = product_group(field.as_group(), field.as_group())
    D = table * n + np.arange(n, dtype=np.int64)
    return certify(
        ctx,
        D,
        Verdict.of("ADS", n * n, n, 0, n - 1),
        "pn_graph_ads",
        recipe={"p": p, "m": m, "s": s},
        extras={"pf_value": str(pf), "admissible": admissible},
    )


# Paley-Hadamard difference sets


def _twin_prime_set(p: int) -> List[int]:
    r = p + 2
    n = p * r
    chi_p = np.zeros(p, dtype=np.int64)
    chi_p[[(x * x) % p for x in range(1, p)]] = 1
    chi_p[chi_p == 0] = -1
    chi_p[0] = 0
    chi_r = np.zeros(r, dtype=np.int64)
    chi_r[[(x * x) % r for x in range(1, r)]] = 1
    chi_r[chi_r == 0] = -1
    chi_r[0] = 0
    e_p = (r * pow(r, -1, p)) % n
    e_r = (p * pow(p, -1, r)) % n
    g, h = np.meshgrid(np.arange(p), np.arange(r), indexing="ij")
    keep = (chi_p[g] * chi_r[h] == 1) | (h == 0)
    return sorted(int(x) for x in (g[keep] * e_p + h[keep] * e_r) % n)


def paley_hadamard_ds(
    kind: str, p: Optional[int] = None, t: Optional[int] = None, gamma: Optional[int] = None
) -> ConstructedSet:
    """A cyclic (l, (l-1)/2, (l-3)/4) difference set of the given kind."""
    if kind == "qr":
        _require(p is not None and is_prime(p) and p % 4 == 3, f"qr: p={p} is not a prime 3 mod 4")
        l = p
        D = sorted({(x * x) % p for x in range(1, p)})
        recipe = {"p": p}
    elif kind == "singer":
        _require(t is not None and t >= 2, f"singer: t={t} must be at least 2")
        l = 2**t - 1
        D = singer_set(t)
        recipe = {"t": t}
    elif kind == "twin_prime":
        _require(
            p is not None and p % 2 == 1 and is_prime(p) and is_prime(p + 2),
            f"twin_prime: p={p} and p+2 are not both odd primes",
        )
        l = p * (p + 2)
        D = _twin_prime_set(p)
        recipe = {"p": p}
    elif kind == "hall_sextic":
        _require(
            p is not None and is_prime(p) and quadratic_partition(p, QuadForm.affine(27, 4)) is not None,
            f"hall_sextic: p={p} is not a prime 4s^2+27",
        )
        field = make_field(p, 1, gamma)
        r = field.dlog(3) % 6
        _require(r in (1, 5), f"hall_sextic: ind(3) = {r} (mod 6) is neither 1 nor 5")
        l = p
        D = cyc_classes(field, 6).union([0, r, 3])
        recipe = {"p": p, "r": r}
    else:
        raise PreconditionError(f"unknown Paley-Hadamard kind {kind!r}")
    return certify(
        cyclic_group(l),
        D,
        Verdict.of("DS", l, (l - 1) // 2, (l - 3) // 4),
        "paley_hadamard_ds",
        recipe={"kind": kind, **recipe},
    )


# low-order cyclotomic table

# (e, classes, with zero) up to rotation and complement
SUMMARY_SHAPES = (
    (2, (0,), False),
    (2, (0,), True),
    (3, (0,), False),
    (3, (0,), True),
    (4, (0,), False),
    (4, (0,), True),
    (4, (0, 1), False),
    (4, (0, 1), True),
    (4, (0, 2), False),
    (4, (0, 2), True),
)


def table_condition(q: int, e: int, I: Sequence[int], with_zero: bool) -> bool:
    """Whether the table says the union of C_i^e, i in I (plus 0), is an ADS in GF(q)."""
    I = tuple(sorted(I))
    if e == 2:
        return q % 4 == 1
    if e == 3:
        return q in (CUBIC_ZERO_ORDERS if with_zero else CUBIC_ORDERS)
    if e != 4:
        raise PreconditionError(f"the table covers e in {{2, 3, 4}}, not e={e}")
    if I == (0, 2):
        return True
    if I == (0, 1):
        return quartic_pair_holds(q)
    partition = _proper_partition(q)
    if with_zero:
        return q % 8 == 5 and partition is not None and partition.first in (1, -7)
    return q == 9 or (q % 8 == 5 and partition is not None and partition.first in (5, -3))


def _shape_label(e: int, I: Sequence[int], with_zero: bool) -> str:
    label = " u ".join(f"C{i}^{e}" for i in I)
    return label + " u {0}" if with_zero else label


def _scan_order(q: int) -> List[dict]:
    field = field_of_order(q)
    rows = []
    for e, I, with_zero in SUMMARY_SHAPES:
        if (q - 1) % e:
            continue
        verdicts = union_verdicts(cyc_classes(field, e), I, with_zero)
        ads = next((v for v in verdicts if v.type == "ADS"), None)
        expected = table_condition(q, e, I, with_zero)
        rows.append(
            {
                "q": q,
                "e": e,
                "shape": _shape_label(e, I, with_zero),
                "ads": ads is not None,
                "params": ads.label() if ads else "",
                "expected": expected,
                "agrees": expected == (ads is not None),
            }
        )
    return rows


async def _scan(orders: List[int]) -> List[List[dict]]:
    processor = TaskProcessor()
    processor.set_tasks(
        {
            idx: Task(idx=idx, name=f"scan q={q}", tool=asyncify(_scan_order), args=(q,), dependencies=())
            for idx, q in enumerate(orders)
        }
    )
    await processor.schedule()
    return processor.results()


def summary_scan(qmax: int, qmin: int = 3) -> List[dict]:
    """Classify every low-order union over odd prime powers in [qmin, qmax]."""
    orders = [q for q in range(max(qmin, 3), qmax + 1) if q % 2 == 1 and prime_power(q) is not None]
    rows = [row for chunk in asyncio.run(_scan(orders)) for row in chunk]
    disagreements = [row for row in rows if not row["agrees"]]
    if disagreements:
        adskit_logger.log("WARNING", f"summary scan: {len(disagreements)} rows disagree with the table")
    return rows
