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
"""Necessary conditions on (v, k, lambda, t) for an almost difference set in Z_v.

Each test returns a FilterVerdict: ``pass``, ``ruled_out`` with the instantiated
condition as witness, or ``not_applicable``. None of them proves existence.
"""

from __future__ import annotations

import math
from typing import Dict, Iterable, List, Optional, Sequence

from adskit.designs.constants import HALL_DEFAULT_MAX_W
from adskit.tools.base import PreconditionError
from adskit.tools.logger import adskit_logger
from adskit.tools.schema import FeasibilityReport, FilterVerdict, ParamSet
from adskit.tools.utils import (
    divisors,
    get_hall_w_cap,
    is_eisenstein_norm,
    is_square,
    is_sum_of_two_squares,
)


def _pass(detail: str = "", **witness) -> FilterVerdict:
    return FilterVerdict(status="pass", detail=detail, witness=witness)


def _ruled_out(detail: str, **witness) -> FilterVerdict:
    return FilterVerdict(status="ruled_out", detail=detail, witness=witness)


def _not_applicable(reason: str) -> FilterVerdict:
    return FilterVerdict(status="not_applicable", detail=reason)


def counting_test(p: ParamSet) -> FilterVerdict:
    v, k, lam, t = p.as_tuple()
    lhs = k * (k - 1)
    rhs = lam * t + (lam + 1) * (v - 1 - t)
    witness = {"equation": "k(k-1) = lambda*t + (lambda+1)(v-1-t)", "lhs": lhs, "rhs": rhs}
    if lhs == rhs:
        return _pass("counting identity holds", **witness)
    return _ruled_out(f"counting: {lhs} != {rhs}", **witness)


def parity_t1_test(p: ParamSet) -> FilterVerdict:
    v, k, lam, t = p.as_tuple()
    if t != 1 or k % 2 == 0:
        return _not_applicable("needs t = 1 and k odd")
    if v % 8 == 4:
        return _ruled_out("parity t=1: v ≡ 4 (mod 8)", v_mod_8=4)
    if v % 8 == 2 and lam % 4 == 2:
        return _ruled_out("parity t=1: v ≡ 2 (mod 8) and lambda ≡ 2 (mod 4)", v_mod_8=2, lambda_mod_4=2)
    if v % 8 == 6 and lam % 4 == 0:
        return _ruled_out("parity t=1: v ≡ 6 (mod 8) and lambda ≡ 0 (mod 4)", v_mod_8=6, lambda_mod_4=0)
    return _pass()


def parity_tv2_test(p: ParamSet) -> FilterVerdict:
    v, k, lam, t = p.as_tuple()
    if t != v - 2 or k % 2 == 0:
        return _not_applicable("needs t = v-2 and k odd")
    if v % 8 == 4:
        return _ruled_out("parity t=v-2: v ≡ 4 (mod 8)", v_mod_8=4)
    if v % 8 == 2 and lam % 4 == 1:
        return _ruled_out("parity t=v-2: v ≡ 2 (mod 8) and lambda ≡ 1 (mod 4)", v_mod_8=2, lambda_mod_4=1)
    if v % 8 == 6 and lam % 4 == 3:
        return _ruled_out("parity t=v-2: v ≡ 6 (mod 8) and lambda ≡ 3 (mod 4)", v_mod_8=6, lambda_mod_4=3)
    return _pass()


class _HallSearch:
    """Depth-first search for the coset counts b of D modulo w.

    b_0 is taken as the largest entry (translating D rotates b). Each complete b
    fixes c_0 = Q - sum(b^2) and c_j = (lambda+1)v/w - R_j with R_j the cyclic
    autocorrelation of b; the solution must have 0 <= c_j <= t and sum(c) = t.
    """

    def __init__(self, p: ParamSet, w: int, symmetric: bool):
        self.v, self.k, self.lam, self.t = p.as_tuple()
        self.w = w
        self.n = self.v // w
        self.symmetric = symmetric
        self.q_target = self.k - (self.lam + 1) + (self.lam + 1) * self.n
        self.solution: Optional[tuple[list[int], list[int]]] = None

    def run(self) -> Optional[tuple[list[int], list[int]]]:
        top = min(self.k, self.n)
        for b0 in range(top, -1, -1):
            if b0 * self.w < self.k:
                break
            if self._extend([b0], self.k - b0, b0 * b0, b0):
                return self.solution
        return None

    def _extend(self, prefix: List[int], remaining: int, squares: int, cap: int) -> bool:
        slots = self.w - len(prefix)
        if slots == 0:
            if remaining == 0 and self.q_target - self.t <= squares <= self.q_target:
                return self._accept(prefix)
            return False
        if remaining > slots * cap:
            return False
        # smallest possible sum of squares spreads the remainder evenly
        low, extra = divmod(remaining, slots)
        if squares + (slots - extra) * low * low + extra * (low + 1) ** 2 > self.q_target:
            return False
        full, rest = divmod(remaining, cap) if cap else (0, remaining)
        if squares + full * cap * cap + rest * rest < self.q_target - self.t:
            return False
        for b in range(min(cap, remaining), -1, -1):
            if self._extend(prefix + [b], remaining - b, squares + b * b, cap):
                return True
        return False

    def _accept(self, b: List[int]) -> bool:
        w, t, n = self.w, self.t, self.n
        c = [self.q_target - sum(x * x for x in b)]
        for j in range(1, w):
            r_j = sum(b[i] * b[(i - j) % w] for i in range(w))
            c.append((self.lam + 1) * n - r_j)
        if any(x < 0 or x > t for x in c) or sum(c) != t:
            return False
        if self.symmetric and not self._symmetric_ok(c):
            return False
        self.solution = (list(b), c)
        return True

    def _symmetric_ok(self, c: List[int]) -> bool:
        w, n, v = self.w, self.n, self.v
        if c[0] > n - 1 or any(x > n for x in c[1:]):
            return False
        for j in range(w):
            if c[j] != c[(-j) % w]:
                return False
            if (2 * j) % w == 0 and c[j] % 2 == 1:
                # fixed points of x -> -x in a self-paired coset are 0 and v/2
                if not (v % 2 == 0 and (v // 2) % w == j):
                    return False
        return True


def hall_mod_w_test(p: ParamSet, w: int, symmetric: bool = False) -> FilterVerdict:
    """Reduce D(X)D(X^-1) = k + lambda*S + (lambda+1)(G-S-1) modulo X^w - 1."""
    cap = get_hall_w_cap()
    if p.v % w != 0:
        raise PreconditionError(f"w={w} does not divide v={p.v}")
    if not 2 <= w <= cap:
        raise PreconditionError(f"w={w} outside 2..{cap}")
    search = _HallSearch(p, w, symmetric)
    found = search.run()
    adskit_logger.log("DEBUG", f"hall mod {w} for {p.as_tuple()}: {found}")
    if found is None:
        mode = " with S = -S" if symmetric else ""
        return _ruled_out(f"hall mod {w}: no nonnegative solution (b, c){mode}", w=w, symmetric=symmetric)
    b, c = found
    return _pass(f"hall mod {w}: solution found", w=w, b=b, c=c, symmetric=symmetric)


def _binary_candidates(p: ParamSet) -> List[int]:
    v, k, lam, t = p.as_tuple()
    if t % 2 == 0:
        return [k - lam - (t + 1 - 4 * l) for l in range(t // 2 + 1)]
    if v % 4 == 0:
        return [k - lam - (t + 1 - 4 * l) for l in range((t - 1) // 2 + 1)]
    return [k - lam - (t - 1 - 4 * l) for l in range((t - 1) // 2 + 1)]


def binary_char_test(p: ParamSet) -> FilterVerdict:
    """Some member of the candidate set must be a perfect square."""
    v, k, lam, t = p.as_tuple()
    if v % 2:
        return _not_applicable("needs v even")
    candidates = _binary_candidates(p)
    squares = [x for x in candidates if is_square(x)]
    if not squares:
        return _ruled_out("binary character: candidate set is square free", candidates=candidates)
    if t == 1 and v % 8 == 4 and not is_sum_of_two_squares(k - lam):
        return _ruled_out(
            "binary character: k - lambda is not a sum of two squares", candidates=candidates, k_minus_lambda=k - lam
        )
    return _pass("binary character: square found", candidates=candidates, squares=squares)


def ternary_char_tests(p: ParamSet) -> FilterVerdict:
    """Both candidate sets must contain a value of the form x^2 + xy + y^2."""
    v, k, lam, t = p.as_tuple()
    if v % 3:
        return _not_applicable("needs 3 | v")
    rest = v - 1 - t
    first = [k - (lam + 1) - (t - 3 * l) for l in range(t // 2 + 1)]
    second = [k - lam + (rest - 3 * l) for l in range(rest // 2 + 1)]
    for name, candidates in (("t-side", first), ("(v-1-t)-side", second)):
        if not any(is_eisenstein_norm(x) for x in candidates):
            return _ruled_out(f"ternary character ({name}): no value x^2+xy+y^2", candidates=candidates)
    return _pass("ternary character: both sets represented", first=first, second=second)


def default_w_list(v: int) -> List[int]:
    return [w for w in divisors(v) if 2 <= w <= min(HALL_DEFAULT_MAX_W, get_hall_w_cap())]


ALL_TESTS = ("counting", "parity_t1", "parity_tv2", "hall", "binary_char", "ternary_char")


def run_all(
    p: ParamSet,
    w_list: Optional[Sequence[int]] = None,
    symmetric: bool = False,
    tests: Optional[Iterable[str]] = None,
) -> FeasibilityReport:
    """Run the battery on p, complemented first when k > v/2."""
    selected = set(tests or ALL_TESTS)
    unknown = selected - set(ALL_TESTS)
    if unknown:
        raise PreconditionError(f"unknown filter tests {sorted(unknown)}")
    tested = p.complement() if 2 * p.k > p.v else p
    results: Dict[str, FilterVerdict] = {}
    if "counting" in selected:
        results["counting"] = counting_test(tested)
    if "parity_t1" in selected:
        results["parity_t1"] = parity_t1_test(tested)
    if "parity_tv2" in selected:
        results["parity_tv2"] = parity_tv2_test(tested)
    if "hall" in selected:
        for w in default_w_list(tested.v) if w_list is None else w_list:
            key = f"hall_mod_{w}"
            if tested.v % w:
                results[key] = _not_applicable(f"w={w} does not divide v={tested.v}")
            else:
                results[key] = hall_mod_w_test(tested, w, symmetric)
    if "binary_char" in selected:
        results["binary_char"] = binary_char_test(tested)
    if "ternary_char" in selected:
        results["ternary_char"] = ternary_char_tests(tested)
    overall = "ruled_out" if any(r.status == "ruled_out" for r in results.values()) else "pass"
    return FeasibilityReport(params=p, tested=tested, tests=results, overall=overall)


def paley_pds_param_check(v: int, k: int, lam: int, mu: int) -> FilterVerdict:
    """Regular PDS with mu = lambda + 1 must be of Paley type or (243,22,1,2), up to complement."""
    if mu != lam + 1:
        raise PreconditionError(f"needs mu = lambda + 1, got lambda={lam}, mu={mu}")
    candidates = [(v, k, lam, mu), (v, v - k - 1, v - 2 * k + mu - 2, v - 2 * k + lam)]
    for params in candidates:
        if params == (243, 22, 1, 2):
            return _pass("sporadic (243,22,1,2)", params=list(params))
        pv, pk, plam, pmu = params
        if pv % 4 == 1 and 2 * pk == pv - 1 and 4 * plam == pv - 5 and 4 * pmu == pv - 1:
            return _pass("Paley type", params=list(params))
    return _ruled_out("neither Paley type nor (243,22,1,2)", params=[v, k, lam, mu])
