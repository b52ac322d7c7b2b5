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
"""Difference spectra and the DS / ADS / PDS / DDS verdicts built on them."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

import numpy as np

from adskit.designs.constants import CITATIONS, DIFF_CHUNK
from adskit.designs.groups import GroupCtx, cyclic_group, is_subgroup
from adskit.tools.base import NotAnADSError, PreconditionError, VerificationError
from adskit.tools.logger import adskit_logger
from adskit.tools.schema import Classification, ConstructedSet, Provenance, Verdict


@dataclass(frozen=True, eq=False)
class DiffSpectrum:
    group: GroupCtx
    k: int
    counts: np.ndarray
    """counts[x] = d_D(x); counts[0] = k."""

    @property
    def v(self) -> int:
        return self.group.order

    @property
    def nonzero(self) -> np.ndarray:
        return self.counts[1:]

    def __getitem__(self, x: int) -> int:
        return int(self.counts[self.group.check(x)])

    def histogram(self) -> Dict[int, int]:
        values, freq = np.unique(self.nonzero, return_counts=True)
        return {int(value): int(n) for value, n in zip(values, freq)}

    def elements_with(self, value: int) -> List[int]:
        return [int(x) + 1 for x in np.flatnonzero(self.nonzero == value)]


def groupring_product(ctx: GroupCtx, A: Iterable[int], B: Iterable[int]) -> np.ndarray:
    """Coefficients of A(X) B(X^-1), indexed by canonical element."""
    a = ctx.as_index_array(A)
    b = ctx.as_index_array(B)
    counts = np.zeros(ctx.order, dtype=np.int64)
    if a.size == 0 or b.size == 0:
        return counts
    rows = max(1, DIFF_CHUNK // b.size)
    for start in range(0, a.size, rows):
        diffs = ctx.sub_arrays(a[start : start + rows, None], b[None, :]).ravel()
        counts += np.bincount(diffs, minlength=ctx.order)
    return counts


def diff_spectrum(ctx: GroupCtx, D: Iterable[int]) -> DiffSpectrum:
    arr = ctx.as_index_array(D)
    return DiffSpectrum(ctx, int(arr.size), groupring_product(ctx, arr, arr))


def _paley_hadamard(v: int, k: int, lam: int) -> bool:
    return v % 4 == 3 and (
        (4 * k == 2 * v - 2 and 4 * lam == v - 3) or (4 * k == 2 * v + 2 and 4 * lam == v + 1)
    )


def _is_paley_type(v: int, k: int, lam: int, mu: int) -> bool:
    return v % 4 == 1 and 2 * k == v - 1 and 4 * lam == v - 5 and 4 * mu == v - 1


def _ds_verdict(ctx: GroupCtx, arr: np.ndarray, lam: int) -> Verdict:
    v, k = ctx.order, int(arr.size)
    neg = np.sort(ctx.neg_arrays(arr))
    skew = (
        v % 2 == 1
        and 2 * k == v - 1
        and 0 not in arr
        and not np.intersect1d(arr, neg).size
    )
    flags = {
        "skew": bool(skew),
        "paley_hadamard": _paley_hadamard(v, k, lam),
        "trivial": k in (0, 1, v - 1, v),
    }
    return Verdict(type="DS", v=v, k=k, lambda_=lam, flags=flags)


def _pds_verdict(ctx: GroupCtx, arr: np.ndarray, spectrum: DiffSpectrum) -> Optional[Verdict]:
    v, k = ctx.order, int(arr.size)
    in_d = np.zeros(v, dtype=bool)
    in_d[arr] = True
    off_d = ~in_d
    off_d[0] = False
    in_d[0] = False
    inside, outside = spectrum.counts[in_d], spectrum.counts[off_d]
    if not inside.size or not outside.size:
        return None
    lam, mu = np.unique(inside), np.unique(outside)
    if lam.size != 1 or mu.size != 1 or lam[0] == mu[0]:
        return None
    lam, mu = int(lam[0]), int(mu[0])
    symmetric = np.array_equal(np.sort(ctx.neg_arrays(arr)), arr)
    flags = {
        "regular": bool(0 not in arr and symmetric),
        "paley_type": _is_paley_type(v, k, lam, mu),
    }
    return Verdict(type="PDS", v=v, k=k, lambda_=lam, mu=mu, flags=flags)


def classify(ctx: GroupCtx, D: Iterable[int], subgroup: Optional[Iterable[int]] = None) -> Classification:
    """Every applicable verdict for D; a Paley set reads as both PDS and ADS."""
    arr = ctx.as_index_array(D)
    spectrum = diff_spectrum(ctx, arr)
    histogram = spectrum.histogram()
    verdicts: List[Verdict] = []
    v, k = ctx.order, int(arr.size)
    values = sorted(histogram)

    if len(values) == 1:
        verdicts.append(_ds_verdict(ctx, arr, values[0]))
    elif len(values) == 2 and values[1] - values[0] == 1:
        lam = values[0]
        S = spectrum.elements_with(lam)
        rest = spectrum.elements_with(lam + 1)
        verdicts.append(
            Verdict(
                type="ADS",
                v=v,
                k=k,
                lambda_=lam,
                t=len(S),
                S=ctx.format_set(S),
                S_complement=ctx.format_set(rest),
            )
        )
    if v > 1:
        pds = _pds_verdict(ctx, arr, spectrum)
        if pds is not None:
            verdicts.append(pds)
    if subgroup is not None:
        dds = dds_classify(ctx, subgroup, arr)
        if dds is not None:
            verdicts.append(dds)
    return Classification(group=ctx.descriptor, v=v, k=k, histogram=histogram, verdicts=verdicts)


def lambda_sets(ctx: GroupCtx, D: Iterable[int]) -> Tuple[List[int], List[int]]:
    """(S, H complement) for an ADS: the nonzero elements of multiplicity lambda, and the rest."""
    spectrum = diff_spectrum(ctx, D)
    values = sorted(spectrum.histogram())
    if len(values) != 2 or values[1] - values[0] != 1:
        raise NotAnADSError(f"set of size {spectrum.k} in {ctx.descriptor} is not an almost difference set")
    return spectrum.elements_with(values[0]), spectrum.elements_with(values[1])


def complement(ctx: GroupCtx, D: Iterable[int], check: bool = True) -> List[int]:
    arr = ctx.as_index_array(D)
    rest = np.setdiff1d(np.arange(ctx.order, dtype=np.int64), arr)
    result = [int(x) for x in rest]
    if not check:
        return result
    before = classify(ctx, arr)
    after = classify(ctx, rest)
    v, k = ctx.order, int(arr.size)
    for verdict in before.verdicts:
        if verdict.type == "ADS":
            expected: Tuple[int, ...] = (v, v - k, v - 2 * k + verdict.lambda_, verdict.t)
        elif verdict.type == "DS":
            expected = (v, v - k, v - 2 * k + verdict.lambda_)
        else:
            continue
        if not after.has(verdict.type, expected):
            raise VerificationError(
                f"complement of {verdict.label()} does not classify as {verdict.type}{expected}"
            )
    return result


def _design_labels(classification: Classification) -> set:
    return {(verdict.type, verdict.params()) for verdict in classification.verdicts if verdict.type in ("DS", "ADS")}


def affine_image(v: int, a: int, b: int, D: Iterable[int]) -> List[int]:
    """{a*d + b mod v}; unit multipliers and translations keep DS and ADS parameters."""
    if math.gcd(a, v) != 1:
        raise PreconditionError(f"gcd({a}, {v}) != 1")
    ctx = cyclic_group(v)
    arr = ctx.as_index_array(D)
    image = sorted(int(x) for x in (a * arr + b) % v)
    if _design_labels(classify(ctx, arr)) != _design_labels(classify(ctx, image)):
        raise VerificationError(f"affine map x -> {a}x+{b} changed the parameters of a set in Z_{v}")
    return image


def dds_classify(ctx: GroupCtx, H: Iterable[int], D: Iterable[int]) -> Optional[Verdict]:
    """DDS record of D relative to the subgroup H, or None when the spectrum does not split."""
    h = ctx.as_index_array(H)
    if not is_subgroup(ctx, h):
        raise PreconditionError(f"{ctx.format_set(h)} is not a subgroup of {ctx.descriptor}")
    v, m = ctx.order, int(h.size)
    if m == 1 or m == v:
        return None
    arr = ctx.as_index_array(D)
    counts = diff_spectrum(ctx, arr).counts
    in_h = np.zeros(v, dtype=bool)
    in_h[h] = True
    in_h[0] = False
    on_h = np.unique(counts[in_h])
    in_h[0] = True
    off_h = np.unique(counts[~in_h])
    if on_h.size != 1 or off_h.size != 1:
        return None
    lam1, lam2 = int(on_h[0]), int(off_h[0])
    return Verdict(
        type="DDS",
        v=v,
        k=int(arr.size),
        m=m,
        lambda1=lam1,
        lambda2=lam2,
        subgroup=ctx.format_set(h),
        flags={"davis": abs(lam1 - lam2) == 1},
    )


def matches_groupring_identity(ctx: GroupCtx, D: Iterable[int], lam: int, S: Iterable[int]) -> bool:
    """D(X)D(X^-1) == k + lam*S + (lam+1)*(G - S - 1)."""
    arr = ctx.as_index_array(D)
    product = groupring_product(ctx, arr, arr)
    expected = np.full(ctx.order, lam + 1, dtype=np.int64)
    expected[ctx.as_index_array(S)] = lam
    expected[0] = arr.size
    return bool(np.array_equal(product, expected))


def certify(
    ctx: GroupCtx,
    D: Iterable[int],
    claimed: Optional[Verdict],
    family: str,
    recipe: Optional[dict] = None,
    subgroup: Optional[Iterable[int]] = None,
    extras: Optional[dict] = None,
) -> ConstructedSet:
    """Classify a generator's output and refuse it unless the claim is among the verdicts."""
    arr = ctx.as_index_array(D)
    classification = classify(ctx, arr, subgroup=subgroup)
    if claimed is not None and not classification.has(claimed.type, claimed.params()):
        found = ", ".join(verdict.label() for verdict in classification.verdicts) or "none"
        raise VerificationError(f"{family} claimed {claimed.label()} but the set classifies as {found}")
    adskit_logger.log(
        "INFO",
        f"{family}: verified {claimed.label() if claimed else 'set'} in {ctx.descriptor}",
    )
    return ConstructedSet(
        group=ctx.descriptor,
        members=ctx.format_set(arr),
        elements=[int(x) for x in arr],
        claimed=claimed,
        verified=claimed is not None,
        verdicts=classification.verdicts,
        provenance=Provenance(family=family, citation=CITATIONS.get(family, ""), recipe=recipe or {}),
        extras=extras or {},
    )
