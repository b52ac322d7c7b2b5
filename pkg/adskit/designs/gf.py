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
"""GF(p^a) on canonical integers.

A field element is the integer sum(a_i * p**i) of its coefficient vector modulo a fixed
monic modulus, so the index doubles as the element's position in the additive group.
Multiplication runs through exp/log tables relative to the primitive element gamma.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Optional, Tuple

import numpy as np

from adskit.designs.groups import GroupCtx, field_group
from adskit.tools.base import DomainError, ForeignElementError
from adskit.tools.logger import adskit_logger
from adskit.tools.utils import factorize, get_max_field_order, is_prime, prime_power


@dataclass(frozen=True, eq=False)
class FieldCtx:
    p: int
    alpha: int
    modulus: Tuple[int, ...]
    """Monic modulus coefficients, constant term first."""

    gamma: int
    exp: np.ndarray
    """exp[i] is gamma**i for 0 <= i < q - 1."""

    log: np.ndarray
    """log[x] is the discrete log of x; log[0] is -1."""

    @property
    def q(self) -> int:
        return self.p**self.alpha

    def __repr__(self) -> str:
        return f"FieldCtx(q={self.q}, modulus={self.modulus_text!r}, gamma={self.gamma})"

    @cached_property
    def modulus_text(self) -> str:
        terms = []
        for degree in range(self.alpha, -1, -1):
            coeff = self.modulus[degree]
            if coeff == 0:
                continue
            power = "" if degree == 0 else ("x" if degree == 1 else f"x^{degree}")
            if not power:
                terms.append(str(coeff))
            else:
                terms.append(power if coeff == 1 else f"{coeff}{power}")
        return "+".join(terms)

    def as_group(self) -> GroupCtx:
        return self._group

    @cached_property
    def _group(self) -> GroupCtx:
        return field_group(self)

    def check(self, x) -> int:
        if not isinstance(x, (int, np.integer)) or not 0 <= int(x) < self.q:
            raise ForeignElementError(f"{x!r} is not an element of GF({self.q})")
        return int(x)

    # additive structure

    def add(self, a: int, b: int) -> int:
        return self._group.add(a, b)

    def sub(self, a: int, b: int) -> int:
        return self._group.sub(a, b)

    def neg(self, a: int) -> int:
        return self._group.neg(a)

    def add_arrays(self, a, b) -> np.ndarray:
        return self._group.add_arrays(a, b)

    def plus_one_arrays(self, xs) -> np.ndarray:
        xs = np.asarray(xs, dtype=np.int64)
        p = self.p
        return np.where(xs % p == p - 1, xs - (p - 1), xs + 1)

    # multiplicative structure

    def dlog(self, x: int) -> int:
        x = self.check(x)
        if x == 0:
            raise DomainError(f"discrete log of 0 in GF({self.q})")
        return int(self.log[x])

    def gamma_power(self, i: int) -> int:
        return int(self.exp[i % (self.q - 1)])

    def mul(self, a: int, b: int) -> int:
        a, b = self.check(a), self.check(b)
        if a == 0 or b == 0:
            return 0
        return int(self.exp[(self.log[a] + self.log[b]) % (self.q - 1)])

    def mul_arrays(self, a, b) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        b = np.asarray(b, dtype=np.int64)
        prod = self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, prod)

    def inv(self, a: int) -> int:
        if self.check(a) == 0:
            raise DomainError(f"0 has no inverse in GF({self.q})")
        return int(self.exp[(-self.log[a]) % (self.q - 1)])

    def power(self, a: int, n: int) -> int:
        a = self.check(a)
        if a == 0:
            if n < 0:
                raise DomainError(f"0 has no inverse in GF({self.q})")
            return 1 if n == 0 else 0
        return int(self.exp[(int(self.log[a]) * n) % (self.q - 1)])

    def power_arrays(self, a, n: int) -> np.ndarray:
        a = np.asarray(a, dtype=np.int64)
        powered = self.exp[(self.log[a] * n) % (self.q - 1)]
        if n == 0:
            return np.ones_like(a)
        return np.where(a == 0, 0, powered)

    def is_square(self, a: int) -> bool:
        """Zero counts as a square; in characteristic 2 every element is one."""
        a = self.check(a)
        if a == 0 or self.p == 2:
            return True
        return int(self.log[a]) % 2 == 0

    def nonzero(self) -> np.ndarray:
        return np.arange(1, self.q, dtype=np.int64)


def _least_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    primes = list(factorize(p - 1))
    for g in range(2, p):
        if all(pow(g, (p - 1) // r, p) != 1 for r in primes):
            return g
    raise DomainError(f"no primitive root modulo {p}")


def _x_power_walk(p: int, alpha: int, lower: Tuple[int, ...]) -> Optional[list[int]]:
    """Powers of x modulo x^alpha + sum(lower[i] x^i), or None unless x has order q-1.

    A first return to 1 at step q-1 shows the modulus is irreducible and primitive.
    """
    q = p**alpha
    weights = [p**i for i in range(alpha)]
    coeffs = [0] * alpha
    coeffs[0] = 1
    powers = [1]
    for step in range(1, q):
        top = coeffs[-1]
        coeffs = [0] + coeffs[:-1]
        if top:
            coeffs = [(c - top * low) % p for c, low in zip(coeffs, lower)]
        index = sum(c * w for c, w in zip(coeffs, weights))
        if index == 1:
            return powers if step == q - 1 else None
        if index == 0:
            return None
        powers.append(index)
    return None


def _tables(q: int, powers: list[int]) -> Tuple[np.ndarray, np.ndarray]:
    exp = np.asarray(powers, dtype=np.int64)
    log = np.full(q, -1, dtype=np.int64)
    log[exp] = np.arange(q - 1, dtype=np.int64)
    return exp, log


def _reseat_gamma(field: FieldCtx, gamma: int) -> FieldCtx:
    q = field.q
    if not 0 < gamma < q:
        raise DomainError(f"gamma {gamma} is not a nonzero element of GF({q})")
    shift = int(field.log[gamma])
    if math.gcd(shift, q - 1) != 1:
        raise DomainError(f"gamma {gamma} is not primitive in GF({q})")
    steps = (np.arange(q - 1, dtype=np.int64) * shift) % (q - 1)
    exp, log = _tables(q, list(field.exp[steps]))
    return FieldCtx(field.p, field.alpha, field.modulus, gamma, exp, log)


@lru_cache(maxsize=64)
def make_field(p: int, alpha: int = 1, gamma: Optional[int] = None) -> FieldCtx:
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if alpha < 1:
        raise DomainError(f"field degree must be positive, got {alpha}")
    q = p**alpha
    bound = get_max_field_order()
    if q > bound:
        raise DomainError(f"GF({q}) exceeds the field order bound {bound}")

    if alpha == 1:
        g = _least_primitive_root(p)
        powers = [1]
        for _ in range(q - 2):
            powers.append(powers[-1] * g % p)
        modulus = ((-g) % p, 1)
        exp, log = _tables(q, powers)
        field = FieldCtx(p, 1, modulus, g, exp, log)
    else:
        field = None
        for rank in range(1, p**alpha):
            lower = tuple((rank // p**i) % p for i in range(alpha))
            if lower[0] == 0:
                continue
            powers = _x_power_walk(p, alpha, lower)
            if powers is not None:
                exp, log = _tables(q, powers)
                field = FieldCtx(p, alpha, lower + (1,), p, exp, log)
                break
        if field is None:
            raise DomainError(f"no primitive modulus of degree {alpha} over GF({p})")

    adskit_logger.log("DEBUG", f"built {field!r}")
    if gamma is not None and gamma != field.gamma:
        field = _reseat_gamma(field, gamma)
    return field


def field_of_order(q: int, gamma: Optional[int] = None) -> FieldCtx:
    pp = prime_power(q)
    if pp is None:
        raise DomainError(f"{q} is not a prime power")
    return make_field(pp[0], pp[1], gamma)


def dlog(ctx: FieldCtx, x: int) -> int:
    return ctx.dlog(x)


def as_group(ctx: FieldCtx) -> GroupCtx:
    return ctx.as_group()
