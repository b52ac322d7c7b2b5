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
"""Finite abelian groups with canonical integer elements.

Every group is Z_{r_0} x ... x Z_{r_{n-1}} for a tuple of radices, and an element is
its mixed-radix index with r_0 the most significant digit. Cyclic groups have one
radix, products concatenate their factors' radices and the additive group of
GF(p^a) uses a radices equal to p, highest degree first, so that index and field
encoding coincide.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from adskit.tools.base import ForeignElementError, ParseError, PreconditionError

if TYPE_CHECKING:
    from adskit.designs.gf import FieldCtx

Structured = Union[int, Tuple["Structured", ...]]

_TOKEN = re.compile(r"\(([^()]*)\)|(-?\d+)")
_SEPARATOR = re.compile(r"\s*(?:×|\bx\b|(?<=\d)x(?=[a-z]))\s*")


class GroupKind(str, Enum):
    CYCLIC = "cyclic"
    PRODUCT = "product"
    FIELD_ADDITIVE = "field_additive"


@dataclass(frozen=True, eq=False)
class GroupCtx:
    kind: GroupKind
    radices: Tuple[int, ...]
    factors: Tuple["GroupCtx", ...] = ()
    field: Optional["FieldCtx"] = None

    @cached_property
    def order(self) -> int:
        return math.prod(self.radices)

    @cached_property
    def strides(self) -> np.ndarray:
        strides = [1] * len(self.radices)
        for pos in range(len(self.radices) - 2, -1, -1):
            strides[pos] = strides[pos + 1] * self.radices[pos + 1]
        return np.array(strides, dtype=np.int64)

    @cached_property
    def _radix_array(self) -> np.ndarray:
        return np.array(self.radices, dtype=np.int64)

    @cached_property
    def descriptor(self) -> str:
        if self.kind == GroupKind.CYCLIC:
            return f"zv:{self.order}"
        if self.kind == GroupKind.FIELD_ADDITIVE:
            return f"gf:{self.order}"
        return " x ".join(factor.descriptor for factor in self.factors)

    @property
    def identity(self) -> int:
        return 0

    @property
    def is_cyclic(self) -> bool:
        return len(self.radices) == 1

    def __repr__(self) -> str:
        return f"GroupCtx({self.descriptor!r})"

    def same_as(self, other: "GroupCtx") -> bool:
        return self.descriptor == other.descriptor

    # element validation

    def check(self, a) -> int:
        if isinstance(a, (bool, np.bool_)) or not isinstance(a, (int, np.integer)):
            raise ForeignElementError(f"{a!r} is not an element index of {self.descriptor}")
        if not 0 <= int(a) < self.order:
            raise ForeignElementError(f"element {a} lies outside {self.descriptor}")
        return int(a)

    def as_index_array(self, D: Iterable[int]) -> np.ndarray:
        """Validated, sorted, duplicate-free index array of a subset."""
        arr = np.unique(np.asarray(list(D), dtype=np.int64))
        if arr.size and (arr[0] < 0 or arr[-1] >= self.order):
            bad = arr[0] if arr[0] < 0 else arr[-1]
            raise ForeignElementError(f"element {int(bad)} lies outside {self.descriptor}")
        return arr

    def enumerate(self) -> list[int]:
        return list(range(self.order))

    # vectorized arithmetic

    def digits(self, idx) -> np.ndarray:
        idx = np.asarray(idx, dtype=np.int64)
        out = np.empty(idx.shape + (len(self.radices),), dtype=np.int64)
        rem = idx
        for pos in range(len(self.radices) - 1, -1, -1):
            rem, out[..., pos] = np.divmod(rem, self.radices[pos])
        return out

    def from_digits(self, digits: np.ndarray) -> np.ndarray:
        return (np.asarray(digits, dtype=np.int64) * self.strides).sum(axis=-1)

    def add_arrays(self, a, b) -> np.ndarray:
        if self.is_cyclic:
            return (np.asarray(a, dtype=np.int64) + np.asarray(b, dtype=np.int64)) % self.order
        return self.from_digits((self.digits(a) + self.digits(b)) % self._radix_array)

    def sub_arrays(self, a, b) -> np.ndarray:
        if self.is_cyclic:
            return (np.asarray(a, dtype=np.int64) - np.asarray(b, dtype=np.int64)) % self.order
        return self.from_digits((self.digits(a) - self.digits(b)) % self._radix_array)

    def neg_arrays(self, a) -> np.ndarray:
        if self.is_cyclic:
            return (-np.asarray(a, dtype=np.int64)) % self.order
        return self.from_digits((-self.digits(a)) % self._radix_array)

    def scale_arrays(self, n: int, a) -> np.ndarray:
        if self.is_cyclic:
            return (n * np.asarray(a, dtype=np.int64)) % self.order
        return self.from_digits((n * self.digits(a)) % self._radix_array)

    # scalar arithmetic

    def add(self, a: int, b: int) -> int:
        return int(self.add_arrays(self.check(a), self.check(b)))

    def sub(self, a: int, b: int) -> int:
        return int(self.sub_arrays(self.check(a), self.check(b)))

    def neg(self, a: int) -> int:
        return int(self.neg_arrays(self.check(a)))

    def scale(self, n: int, a: int) -> int:
        return int(self.scale_arrays(n, self.check(a)))

    # structured forms and text

    def decode(self, a: int) -> Structured:
        a = self.check(a)
        if self.kind != GroupKind.PRODUCT:
            return a
        parts = []
        for factor in reversed(self.factors):
            a, sub = divmod(a, factor.order)
            parts.append(factor.decode(sub))
        return tuple(reversed(parts))

    def encode(self, x: Structured) -> int:
        if self.kind != GroupKind.PRODUCT:
            if isinstance(x, tuple):
                raise ForeignElementError(f"{x!r} is a tuple but {self.descriptor} is not a product")
            return self.check(x)
        if not isinstance(x, tuple) or len(x) != len(self.factors):
            raise ForeignElementError(f"{x!r} does not match the factors of {self.descriptor}")
        idx = 0
        for factor, part in zip(self.factors, x):
            idx = idx * factor.order + factor.encode(part)
        return idx

    def format_elem(self, a: int) -> Union[int, str]:
        """Ints for cyclic and field groups, ``(a,b)`` text for products."""
        structured = self.decode(a)
        if isinstance(structured, int):
            return structured
        return _format_structured(structured)

    def format_set(self, D: Iterable[int]) -> list[Union[int, str]]:
        return [self.format_elem(int(a)) for a in sorted(int(a) for a in D)]

    def parse_elem(self, text: Union[int, str]) -> int:
        if isinstance(text, int):
            return self.check(text)
        text = text.strip()
        if self.kind != GroupKind.PRODUCT:
            if not re.fullmatch(r"\d+", text):
                raise ParseError(f"cannot read {text!r} as an element of {self.descriptor}")
            return self.check(int(text))
        inner = text.strip()
        if not (inner.startswith("(") and inner.endswith(")")):
            raise ParseError(f"product element {text!r} must be written as a tuple")
        parts = [part.strip() for part in inner[1:-1].split(",")]
        if len(parts) != len(self.factors) or not all(re.fullmatch(r"\d+", part) for part in parts):
            raise ParseError(f"cannot read {text!r} as an element of {self.descriptor}")
        return self.encode(tuple(int(part) for part in parts))

    def parse_set(self, text: str) -> list[int]:
        """Read ``1,3,9`` or ``(0,1),(1,2)`` into canonical indices."""
        text = text.strip()
        if not text:
            return []
        elements = []
        pos = 0
        for match in _TOKEN.finditer(text):
            gap = text[pos : match.start()].strip().strip(",").strip()
            if gap:
                raise ParseError(f"unexpected {gap!r} in element set")
            token = match.group(0)
            if token.startswith("-"):
                raise ParseError(f"negative element {token!r} in element set")
            elements.append(self.parse_elem(token))
            pos = match.end()
        if text[pos:].strip().strip(","):
            raise ParseError(f"unexpected {text[pos:]!r} in element set")
        return sorted(set(elements))


def _format_structured(x: Structured) -> str:
    if isinstance(x, int):
        return str(x)
    return "(" + ",".join(_format_structured(part) for part in x) + ")"


def cyclic_group(v: int) -> GroupCtx:
    if v < 1:
        raise PreconditionError(f"cyclic group order must be positive, got {v}")
    return GroupCtx(GroupKind.CYCLIC, (v,))


def product_group(*factors: GroupCtx) -> GroupCtx:
    if not factors:
        raise PreconditionError("a product group needs at least one factor")
    flat: list[GroupCtx] = []
    for factor in factors:
        flat.extend(factor.factors if factor.kind == GroupKind.PRODUCT else (factor,))
    radices = tuple(r for factor in flat for r in factor.radices)
    return GroupCtx(GroupKind.PRODUCT, radices, factors=tuple(flat))


def field_group(field: "FieldCtx") -> GroupCtx:
    return GroupCtx(GroupKind.FIELD_ADDITIVE, (field.p,) * field.alpha, field=field)


def make_group(spec: str) -> GroupCtx:
    """Build a group from a descriptor such as ``zv:13``, ``gf:9`` or ``zv:4 x zv:7``."""
    from adskit.designs.gf import field_of_order

    tokens = [token.strip() for token in _SEPARATOR.split(spec.strip().lower()) if token.strip()]
    if not tokens:
        raise ParseError(f"empty group descriptor {spec!r}")
    groups = []
    for token in tokens:
        match = re.fullmatch(r"(zv|gf)\s*:\s*(\d+)", token)
        if match is None:
            raise ParseError(f"cannot read group descriptor {token!r}")
        kind, order = match.group(1), int(match.group(2))
        if kind == "zv":
            groups.append(cyclic_group(order))
        else:
            groups.append(field_of_order(order).as_group())
    if len(groups) == 1:
        return groups[0]
    return product_group(*groups)


def is_subgroup(ctx: GroupCtx, H: Iterable[int]) -> bool:
    arr = ctx.as_index_array(H)
    if arr.size == 0 or arr[0] != 0:
        return False
    diffs = ctx.sub_arrays(arr[:, None], arr[None, :])
    return bool(np.isin(diffs, arr).all())


def elem_add(ctx: GroupCtx, a: int, b: int) -> int:
    return ctx.add(a, b)


def elem_neg(ctx: GroupCtx, a: int) -> int:
    return ctx.neg(a)


def enumerate_group(ctx: GroupCtx) -> list[int]:
    return ctx.enumerate()


class CrtMap:
    """phi: Z_{4l} -> Z_4 x Z_l, x -> (x mod 4, x mod l), for odd l."""

    def __init__(self, l: int):
        if l < 1 or l % 2 == 0:
            raise PreconditionError(f"crt_map needs an odd l, got {l}")
        self.l = l
        self.n = 4 * l
        self.source = cyclic_group(self.n)
        self.target = product_group(cyclic_group(4), cyclic_group(l))
        self._e4 = (l * pow(l, -1, 4)) % self.n
        self._el = (4 * pow(4, -1, l)) % self.n if l > 1 else 0

    def phi(self, x: int) -> Tuple[int, int]:
        x = self.source.check(x)
        return (x % 4, x % self.l)

    def inverse(self, pair: Sequence[int]) -> int:
        a, b = pair
        return (a * self._e4 + b * self._el) % self.n

    def phi_index(self, x: int) -> int:
        """phi(x) as a canonical index of Z_4 x Z_l."""
        a, b = self.phi(x)
        return a * self.l + b

    def phi_set(self, D: Iterable[int]) -> list[int]:
        return sorted(self.phi_index(int(x)) for x in D)

    def inverse_set(self, D: Iterable[int]) -> list[int]:
        return sorted(self.inverse(divmod(self.target.check(int(x)), self.l)) for x in D)


def crt_map(l: int) -> CrtMap:
    return CrtMap(l)
