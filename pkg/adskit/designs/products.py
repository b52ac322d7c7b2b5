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
"""Almost difference sets in direct products of two groups."""

from __future__ import annotations

import math
from typing import Any, Callable, Dict, Iterable, List, Optional, Tuple, Union

import numpy as np

from adskit.designs.constants import (
    DHM_X1_TRIPLES,
    DHM_X1_TRIPLES_ZERO,
    DHM_Y1_TRIPLES,
    DHM_Y1_TRIPLES_ZERO,
)
from adskit.designs.cyclotomy import X2_4Y2, cyc_classes, quadratic_partition, resolve_sign
from adskit.designs.diffcore import certify, classify
from adskit.designs.gf import field_of_order
from adskit.designs.groups import GroupCtx, cyclic_group, make_group, product_group
from adskit.tools.base import PreconditionError, VerificationError
from adskit.tools.schema import ConstructedSet, Verdict
from adskit.tools.utils import prime_power

GroupLike = Union[GroupCtx, str]
SetLike = Union[Iterable[int], str]
Triple = Tuple[int, int, int]


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PreconditionError(message)


def _group(group: GroupLike) -> GroupCtx:
    return make_group(group) if isinstance(group, str) else group


def _members(ctx: GroupCtx, D: SetLike) -> np.ndarray:
    if isinstance(D, str):
        return ctx.as_index_array(ctx.parse_set(D))
    return ctx.as_index_array(D)


def _odd_field(q: int, family: str, gamma: Optional[int] = None):
    pp = prime_power(q)
    _require(pp is not None and pp[0] != 2, f"{family}: {q} is not an odd prime power")
    return field_of_order(q, gamma)


def _paley_hadamard(ctx: GroupCtx, D: np.ndarray, family: str, name: str) -> Verdict:
    verdict = classify(ctx, D).find("DS")
    _require(
        verdict is not None and verdict.flags.get("paley_hadamard", False),
        f"{family}: {name} is not a Paley-Hadamard difference set in {ctx.descriptor}",
    )
    return verdict


def _rows(outer: GroupCtx, inner: GroupCtx, rows: Dict[int, Iterable[int]]) -> List[int]:
    """Encode {(a, x) : x in rows[a]} in outer x inner."""
    n = inner.order
    return sorted(int(a) * n + int(x) for a, xs in rows.items() for x in xs)


def _complement(ctx: GroupCtx, D: np.ndarray) -> np.ndarray:
    return np.setdiff1d(np.arange(ctx.order, dtype=np.int64), D)


def _ads_for_half(l: int, k: int, family: str) -> Tuple[int, int, int, int]:
    """(4l, 2l+-1, ...) from the size of the Paley-Hadamard ingredient."""
    if 2 * k == l + 1:
        return (4 * l, 2 * l + 1, l, l - 1)
    if 2 * k == l - 1:
        return (4 * l, 2 * l - 1, l - 2, l - 1)
    raise PreconditionError(f"{family}: ingredient of size {k} is not (l+-1)/2 for l={l}")


# Jungnickel


def _jungnickel_set(ctx_a: GroupCtx, D1: np.ndarray, ctx_b: GroupCtx, D2: np.ndarray) -> List[int]:
    D1_star = _complement(ctx_a, D1)
    D2_star = _complement(ctx_b, D2)
    rows: Dict[int, np.ndarray] = {int(b): D1_star for b in D2}
    rows.update({int(b): D1 for b in D2_star})
    return _rows(ctx_b, ctx_a, rows)


def jungnickel_dds(group_a: GroupLike, D1: SetLike, group_b: GroupLike, D2: SetLike) -> ConstructedSet:
    """(D2 x D1*) u (D2* x D1) in B x A, divisible relative to {0} x A.

    D1 is any (v, k, lambda) difference set; D2 must be a (4u^2, 2u^2-u, u^2-u) one.
    """
    ctx_a, ctx_b = _group(group_a), _group(group_b)
    d1, d2 = _members(ctx_a, D1), _members(ctx_b, D2)
    ds1 = classify(ctx_a, d1).find("DS")
    _require(ds1 is not None, f"jungnickel_dds: D1 is not a difference set in {ctx_a.descriptor}")
    u = math.isqrt(ctx_b.order // 4)
    menon = (4 * u * u, 2 * u * u - u, u * u - u)
    _require(
        4 * u * u == ctx_b.order and classify(ctx_b, d2).has("DS", menon),
        f"jungnickel_dds: D2 is not a DS{menon} in {ctx_b.descriptor}",
    )
    v, k, lam = ds1.params()
    lam1 = (2 * u * u - u) * (v - 2 * k) + 4 * u * u * lam
    lam2 = u * u * v - u * v + 2 * k * u
    size = 2 * u * u * v + 2 * k * u - u * v
    ctx = product_group(ctx_b, ctx_a)
    return certify(
        ctx,
        _jungnickel_set(ctx_a, d1, ctx_b, d2),
        Verdict.of("DDS", ctx.order, v, size, lam1, lam2),
        "jungnickel_dds",
        recipe={"D1": ctx_a.format_set(d1), "D2": ctx_b.format_set(d2), "u": u},
        subgroup=range(v),
        extras={"almost": abs(lam1 - lam2) == 1},
    )


def cor55(group: GroupLike, D1: SetLike, i: int = 0) -> ConstructedSet:
    """({i} x D1*) u ({i+1, i+2, i+3} x D1) in Z_4 x G for a Paley-Hadamard D1."""
    ctx = _group(group)
    d1 = _members(ctx, D1)
    _paley_hadamard(ctx, d1, "cor55", "D1")
    i %= 4
    params = _ads_for_half(ctx.order, int(d1.size), "cor55")
    z4 = cyclic_group(4)
    return certify(
        product_group(z4, ctx),
        _jungnickel_set(ctx, d1, z4, np.array([i], dtype=np.int64)),
        Verdict.of("ADS", *params),
        "cor55",
        recipe={"D1": ctx.format_set(d1), "i": i},
    )


# quartic classes in GF(2) x GF(q)


def dhm_admissible_triples(q: int, with_zero: bool = False, gamma: Optional[int] = None) -> List[Triple]:
    """(i, j, l) triples that give an ADS for this q and this primitive element.

    The y = 1 lists are stated for one orientation of y; when the pilot sign
    comes out negative they are reflected to (-i, -j, -l) mod 4.
    """
    field = _odd_field(q, "dhm_quartic", gamma)
    _require(q % 8 == 5, f"dhm_quartic: q={q} is not 5 mod 8")
    partition = quadratic_partition(q, X2_4Y2)
    x, y = partition.first, partition.second
    sign = resolve_sign(cyc_classes(field, 4))
    triples: List[Triple] = []
    if y == 1:
        for triple in DHM_Y1_TRIPLES_ZERO if with_zero else DHM_Y1_TRIPLES:
            triples.append(triple if sign == 1 else tuple((-c) % 4 for c in triple))
    if x == 1:
        triples.extend(DHM_X1_TRIPLES_ZERO if with_zero else DHM_X1_TRIPLES)
    return sorted(set(triples))


def dhm_quartic(
    q: int, i: int, j: int, l: int, with_zero: bool = False, gamma: Optional[int] = None
) -> ConstructedSet:
    """({0} x (C_i u C_j)) u ({1} x (C_l u C_j)), optionally with (0,0), in GF(2) x GF(q)."""
    triple = (i % 4, j % 4, l % 4)
    _require(len(set(triple)) == 3, f"dhm_quartic: {triple} are not pairwise distinct")
    admissible = dhm_admissible_triples(q, with_zero, gamma)
    _require(triple in admissible, f"dhm_quartic: {triple} not admissible at q={q}; admissible: {admissible}")
    field = field_of_order(q, gamma)
    cctx = cyc_classes(field, 4)
    rows = {0: cctx.union([triple[0], triple[1]]), 1: cctx.union([triple[2], triple[1]])}
    if with_zero:
        rows[0] = rows[0] + [0]
        params = (2 * q, q, (q - 1) // 2, (3 * q - 1) // 2)
    else:
        params = (2 * q, q - 1, (q - 3) // 2, 3 * (q - 1) // 2)
    return certify(
        product_group(cyclic_group(2), field.as_group()),
        _rows(cyclic_group(2), field.as_group(), rows),
        Verdict.of("ADS", *params),
        "dhm_quartic",
        recipe={"q": q, "triple": list(triple), "with_zero": with_zero},
    )


# squares and nonsquares


def zlz_z4q(q: int, gamma: Optional[int] = None) -> ConstructedSet:
    """({0} x C_0^2) u ({1,2,3} x C_1^2) u {(0,0), (1,0), (3,0)} in Z_4 x GF(q)."""
    field = _odd_field(q, "zlz_z4q", gamma)
    _require(q % 4 == 3, f"zlz_z4q: q={q} is not 2f+1 with f odd")
    cctx = cyc_classes(field, 2)
    squares, nonsquares = cctx.union([0]), cctx.union([1])
    rows = {0: squares + [0], 1: nonsquares + [0], 2: nonsquares, 3: nonsquares + [0]}
    z4 = cyclic_group(4)
    return certify(
        product_group(z4, field.as_group()),
        _rows(z4, field.as_group(), rows),
        Verdict.of("ADS", 4 * q, 2 * q + 1, q, q - 1),
        "zlz_z4q",
        recipe={"q": q},
    )


def zlz_pq_squares(p: int, q: int, include_row: bool = False) -> ConstructedSet:
    """Pairs (a, b) of GF(p) x GF(q) that are both squares or both nonsquares.

    An ADS exactly when q = p +- 2 or q = p. With ``include_row`` the row
    GF(p) x {0} is added; that set is never an ADS, and for q = p + 2 it is the
    twin-prime difference set.
    """
    fp, fq = _odd_field(p, "zlz_pq_squares"), _odd_field(q, "zlz_pq_squares")
    ctx = product_group(fp.as_group(), fq.as_group())
    cls_p = cyc_classes(fp, 2).class_of
    cls_q = cyc_classes(fq, 2).class_of
    a, b = np.meshgrid(np.arange(p), np.arange(q), indexing="ij")
    keep = (cls_p[a] >= 0) & (cls_p[a] == cls_q[b])
    if include_row:
        _require(p % 4 != q % 4, f"zlz_pq_squares: the row construction needs p != q (mod 4), got {p}, {q}")
        keep |= b == 0
    D = (a[keep] * q + b[keep]).astype(np.int64)
    recipe = {"p": p, "q": q, "include_row": include_row}

    if include_row:
        claimed = None
        if q == p + 2:
            n = p * q
            claimed = Verdict.of("DS", n, (n - 1) // 2, (n - 3) // 4)
        result = certify(ctx, D, claimed, "zlz_pq_squares", recipe=recipe)
        if any(verdict.type == "ADS" for verdict in result.verdicts):
            raise VerificationError(f"zlz_pq_squares: the row set for p={p}, q={q} classifies as an ADS")
        return result

    if q == p:
        claimed = Verdict.of(
            "ADS", p * p, (p - 1) ** 2 // 2, (p * p - 4 * p + 3) // 4, (p * p + 2 * p - 3) // 2
        )
    elif abs(q - p) == 2:
        r = min(p, q)
        claimed = Verdict.of("ADS", p * q, (r * r - 1) // 2, (r + 1) * (r - 3) // 4, r - 1)
    else:
        raise PreconditionError(f"zlz_pq_squares: no ADS unless q = p+-2 or q = p, got p={p}, q={q}")
    return certify(ctx, D, claimed, "zlz_pq_squares", recipe=recipe)


def tang_ding(group: GroupLike, A: SetLike, B: SetLike) -> ConstructedSet:
    """({0,2} x A) u ({1} x B) u ({3} x B*) in Z_4 x G for Paley-Hadamard A and B."""
    ctx = _group(group)
    a, b = _members(ctx, A), _members(ctx, B)
    _paley_hadamard(ctx, a, "tang_ding", "A")
    _paley_hadamard(ctx, b, "tang_ding", "B")
    params = _ads_for_half(ctx.order, int(a.size), "tang_ding")
    z4 = cyclic_group(4)
    rows = {0: a, 1: b, 2: a, 3: _complement(ctx, b)}
    return certify(
        product_group(z4, ctx),
        _rows(z4, ctx, rows),
        Verdict.of("ADS", *params),
        "tang_ding",
        recipe={"A": ctx.format_set(a), "B": ctx.format_set(b)},
    )


def dpw_skew(q: int) -> ConstructedSet:
    """(E x F) u (-E x -F) u (GF(q) x {0}) for the Paley skew sets E, F of GF(q), GF(q+4)."""
    _require(q % 4 == 3, f"dpw_skew: q={q} is not 3 mod 4")
    fq, fr = _odd_field(q, "dpw_skew"), _odd_field(q + 4, "dpw_skew")
    E, minus_E = cyc_classes(fq, 2).union([0]), cyc_classes(fq, 2).union([1])
    F, minus_F = cyc_classes(fr, 2).union([0]), cyc_classes(fr, 2).union([1])
    r = q + 4
    D = [a * r + b for a in E for b in F]
    D += [a * r + b for a in minus_E for b in minus_F]
    D += [a * r for a in range(q)]
    n = q * r
    return certify(
        product_group(fq.as_group(), fr.as_group()),
        D,
        Verdict.of("ADS", n, (n - 3) // 2, (n - 9) // 4, (n - 5) // 2),
        "dpw_skew",
        recipe={"q": q},
    )


_PRODUCT_BUILDERS: Dict[str, Callable[..., ConstructedSet]] = {
    "jungnickel_dds": jungnickel_dds,
    "cor55": cor55,
    "dhm_quartic": dhm_quartic,
    "zlz_z4q": zlz_z4q,
    "zlz_pq_squares": zlz_pq_squares,
    "tang_ding": tang_ding,
    "dpw_skew": dpw_skew,
}


def product_ads(recipe: Dict[str, Any]) -> ConstructedSet:
    """Dispatch a recipe ``{"family": ..., **params}`` to its product construction."""
    params = dict(recipe)
    family = params.pop("family", None)
    builder = _PRODUCT_BUILDERS.get(family)
    if builder is None:
        raise PreconditionError(f"unknown product family {family!r}; choose from {sorted(_PRODUCT_BUILDERS)}")
    return builder(**params)
