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
"""Periodic binary sequences and their autocorrelation.

C_s(w) = sum_t (-1)^(s(t+w) - s(t)) = n - 2 * popcount(s(. + w) xor s). A support
D of size k has C_s(w) = n - 4(k - d_D(w)), which links three-level sequences to
almost difference sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Union

import numpy as np

from adskit.designs.diffcore import certify, classify, diff_spectrum
from adskit.designs.gf import make_field
from adskit.designs.groups import crt_map, cyclic_group
from adskit.tools.base import ParseError, PreconditionError, VerificationError
from adskit.tools.schema import Classification, ConstructedSet, CorrSpectrum, Verdict

_OPTIMAL_VALUES = {
    3: [{-1}],
    1: [{1, -3}],
    2: [{-2, 2}],
    0: [{0, 4}, {0, -4}],
}


@dataclass(frozen=True, eq=False)
class SeqBits:
    bits: np.ndarray

    def __post_init__(self):
        bits = np.asarray(self.bits, dtype=np.uint8)
        if bits.ndim != 1 or bits.size == 0:
            raise PreconditionError("a sequence needs period n >= 1")
        if np.any(bits > 1):
            raise ParseError("sequence entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @property
    def period(self) -> int:
        return int(self.bits.size)

    def __len__(self) -> int:
        return self.period

    def __getitem__(self, t: int) -> int:
        return int(self.bits[t % self.period])

    def __eq__(self, other) -> bool:
        return isinstance(other, SeqBits) and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash(self.bits.tobytes())

    def __repr__(self) -> str:
        return f"SeqBits({self.to_text()!r})"

    def complement(self) -> "SeqBits":
        return SeqBits(1 - self.bits)

    def shift(self, w: int) -> "SeqBits":
        """The sequence t -> s(t + w)."""
        return SeqBits(np.roll(self.bits, -w))

    def to_text(self) -> str:
        return "".join("1" if b else "0" for b in self.bits)

    @classmethod
    def from_text(cls, text: str) -> "SeqBits":
        text = "".join(text.split())
        if not text or set(text) - {"0", "1"}:
            raise ParseError("a sequence file holds one line of 0 and 1 characters")
        return cls(np.frombuffer(text.encode(), dtype=np.uint8) - ord("0"))


def char_seq(D: Iterable[int], n: int) -> SeqBits:
    ctx = cyclic_group(n)
    bits = np.zeros(n, dtype=np.uint8)
    bits[ctx.as_index_array(D)] = 1
    return SeqBits(bits)


def support(s: SeqBits) -> List[int]:
    return [int(t) for t in np.flatnonzero(s.bits)]


def legendre(p: int) -> SeqBits:
    """Characteristic sequence of the nonzero squares modulo an odd prime p."""
    field = make_field(p)
    return char_seq([x for x in range(1, p) if field.is_square(x)], p)


def crosscorr(s: SeqBits, u: SeqBits, w: int) -> int:
    if s.period != u.period:
        raise PreconditionError(f"period mismatch: {s.period} != {u.period}")
    differ = np.count_nonzero(np.roll(s.bits, -w) ^ u.bits)
    return s.period - 2 * int(differ)


def autocorr(s: SeqBits, w: int) -> int:
    return crosscorr(s, s, w)


def _distribution(values: np.ndarray) -> Dict[int, int]:
    levels, counts = np.unique(values, return_counts=True)
    return {int(level): int(count) for level, count in zip(levels, counts)}


def autocorr_spectrum(s: SeqBits) -> CorrSpectrum:
    n = s.period
    values = np.array([autocorr(s, w) for w in range(n)], dtype=np.int64)
    distribution = _distribution(values)
    off_peak = set(int(x) for x in values[1:])
    optimal = not off_peak or any(off_peak <= allowed for allowed in _OPTIMAL_VALUES[n % 4])
    ideal = n % 4 == 3 and off_peak == {-1}
    return CorrSpectrum(
        period=n,
        values=[int(x) for x in values],
        distribution=distribution,
        level_count=len(distribution),
        optimal=optimal,
        ideal=ideal,
    )


def classify_autocorr(s: SeqBits) -> CorrSpectrum:
    return autocorr_spectrum(s)


def ads_from_sequence(s: SeqBits) -> Optional[Classification]:
    """Read a three-level sequence as an ADS through C = n - 4(k - d)."""
    spectrum = autocorr_spectrum(s)
    levels = sorted(set(spectrum.values[1:]))
    if len(levels) != 2 or levels[1] - levels[0] != 4:
        return None
    n, D = s.period, support(s)
    k = len(D)
    lam = k - (n - levels[0]) // 4
    t = spectrum.values[1:].count(levels[0])
    classification = classify(cyclic_group(n), D)
    if not classification.has("ADS", (n, k, lam, t)):
        raise VerificationError(f"sequence levels predict ADS{(n, k, lam, t)} but its support disagrees")
    return classification


def interleave(seed: SeqBits, delta: int = 0) -> SeqBits:
    """Period-4l sequence with rows (s, s̄(x+delta), s̄, s̄(x+delta)) of an ideal seed of period l."""
    if not classify_autocorr(seed).ideal:
        raise PreconditionError("interleave needs a seed with ideal autocorrelation")
    l = seed.period
    t = np.arange(4 * l)
    row, col = t % 4, t % l
    base = seed.bits[col]
    shifted = 1 - seed.bits[(col + delta) % l]
    bits = np.where(row == 0, base, np.where(row == 2, 1 - base, shifted)).astype(np.uint8)
    u = SeqBits(bits)
    expected = {4 * l: 1, -4: l - 1, 0: 3 * l}
    got = autocorr_spectrum(u).distribution
    if got != expected:
        raise VerificationError(f"interleaved spectrum {got} differs from {expected}")
    return u


def interleave_params(l: int, seed_size: int) -> tuple:
    if 2 * seed_size == l - 1:
        return (4 * l, 2 * l + 1, l, l - 1)
    if 2 * seed_size == l + 1:
        return (4 * l, 2 * l - 1, l - 2, l - 1)
    raise PreconditionError(f"seed of size {seed_size} is not Paley-Hadamard in Z_{l}")


def cyclic_group_order(descriptor: str) -> int:
    if not descriptor.startswith("zv:") or "x" in descriptor:
        raise PreconditionError(f"seed must live in a cyclic group, got {descriptor}")
    return int(descriptor[3:])


def interleave_support(
    seed: Union[ConstructedSet, Iterable[int]], l: Optional[int] = None, delta: int = 0
) -> ConstructedSet:
    """Support of the interleaved sequence, with its Z_4 x Z_l decomposition."""
    if isinstance(seed, ConstructedSet):
        C = list(seed.elements)
        l = l or cyclic_group_order(seed.group)
    else:
        C = sorted(int(x) for x in seed)
    if l is None:
        raise PreconditionError("interleave_support needs the seed period l")
    verdict = classify(cyclic_group(l), C).find("DS")
    if verdict is None or not verdict.flags.get("paley_hadamard"):
        raise PreconditionError(f"seed {C} is not a Paley-Hadamard difference set in Z_{l}")

    u = interleave(char_seq(C, l), delta)
    D = support(u)
    phi = crt_map(l)
    members = set(C)
    shifted = {(c - delta) % l for c in C}
    rows = {
        0: sorted(members),
        1: sorted(set(range(l)) - shifted),
        2: sorted(set(range(l)) - members),
        3: sorted(set(range(l)) - shifted),
    }
    predicted = sorted(a * l + b for a, bs in rows.items() for b in bs)
    if phi.phi_set(D) != predicted:
        raise VerificationError("interleaved support does not match its Z_4 x Z_l decomposition")
    n = 4 * l
    offsets = {0: 0, 1: 3 * l, 2: 2 * l, 3: l}
    blocks = sorted(((l + 1) * y + offsets[row]) % n for row, ys in rows.items() for y in ys)
    if blocks != D:
        raise VerificationError("interleaved support does not match its Z_4l coset form")

    params = interleave_params(l, len(C))
    v, k, lam, t = params
    comp = (v, v - k, v - 2 * k + lam, t)
    return certify(
        cyclic_group(n),
        D,
        Verdict.of("ADS", *params),
        "interleave",
        recipe={"l": l, "delta": delta, "seed": C},
        extras={
            "decomposition": {str(row): values for row, values in rows.items()},
            "complement_params": list(comp),
        },
    )


def mseq(t: int) -> SeqBits:
    """Maximal-length sequence s(n+t) = sum c_i s(n+i) from the primitive modulus of GF(2^t)."""
    if t < 2:
        raise PreconditionError(f"mseq needs t >= 2, got {t}")
    taps = make_field(2, t).modulus[:t]
    n = 2**t - 1
    bits = np.ones(n, dtype=np.uint8)
    window = [1] * t
    for i in range(t, n):
        nxt = sum(c & b for c, b in zip(taps, window)) % 2
        bits[i] = nxt
        window = window[1:] + [nxt]
    return SeqBits(bits)


def singer_set(t: int) -> List[int]:
    """Zero positions of the m-sequence: a (2^t-1, 2^(t-1)-1, 2^(t-2)-1) difference set."""
    return [int(i) for i in np.flatnonzero(mseq(t).bits == 0)]


def correlation_identity_holds(D: Iterable[int], n: int) -> bool:
    """C_s(w) = n - 4(k - d_D(w)) for every w != 0."""
    D = list(D)
    s = char_seq(D, n)
    counts = diff_spectrum(cyclic_group(n), D).counts
    k = len(set(D))
    return all(autocorr(s, w) == n - 4 * (k - int(counts[w])) for w in range(1, n))
