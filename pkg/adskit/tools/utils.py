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
from __future__ import annotations

import asyncio
import math
import os
from functools import partial
from typing import Optional, Tuple

DEFAULT_BUDGET = 10**8
DEFAULT_MAX_FIELD_ORDER = 10**6
DEFAULT_HALL_W_CAP = 12


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw.replace("_", ""))


def get_budget(override: Optional[int] = None) -> int:
    """Subset budget for exhaustive search; ADSKIT_BUDGET overrides the default."""
    if override is not None:
        return override
    return _env_int("ADSKIT_BUDGET", DEFAULT_BUDGET)


def get_max_field_order() -> int:
    return _env_int("ADSKIT_MAX_FIELD_ORDER", DEFAULT_MAX_FIELD_ORDER)


def get_hall_w_cap() -> int:
    return _env_int("ADSKIT_HALL_W_CAP", DEFAULT_HALL_W_CAP)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, math.isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization, {prime: exponent}."""
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def prime_power(q: int) -> Optional[Tuple[int, int]]:
    """Return (p, alpha) with q = p**alpha, or None."""
    if q < 2:
        return None
    factors = factorize(q)
    if len(factors) != 1:
        return None
    ((p, alpha),) = factors.items()
    return p, alpha


def is_prime_power(q: int) -> bool:
    return prime_power(q) is not None


def is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def is_sum_of_two_squares(n: int) -> bool:
    if n < 0:
        return False
    return any(is_square(n - a * a) for a in range(math.isqrt(n) + 1))


def is_eisenstein_norm(n: int) -> bool:
    """True iff n = x^2 + xy + y^2 for some integers x, y."""
    if n < 0:
        return False
    bound = math.isqrt(4 * n // 3) + 1
    for x in range(-bound, bound + 1):
        # y^2 + xy + (x^2 - n) = 0
        disc = 4 * n - 3 * x * x
        if disc < 0:
            continue
        r = math.isqrt(disc)
        if r * r == disc and (r - x) % 2 == 0:
            return True
    return False


def divisors(n: int) -> list[int]:
    small = [d for d in range(1, math.isqrt(n) + 1) if n % d == 0]
    return sorted(set(small + [n // d for d in small]))


def asyncify(sync_func):
    async def async_func(*args, **kwargs):
        loop = asyncio.get_running_loop()
        return await loop.run_in_executor(None, partial(sync_func, *args, **kwargs))

    return async_func
