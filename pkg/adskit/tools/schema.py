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

from typing import Any, Dict, List, Literal, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

ElemText = Union[int, str]
VerdictType = Literal["DS", "ADS", "PDS", "DDS"]


class Verdict(BaseModel):
    """One structural reading of a subset: DS, ADS, PDS or DDS."""

    model_config = ConfigDict(populate_by_name=True)

    type: VerdictType
    """Design type."""

    v: int
    """Group order."""

    k: int
    """Subset size."""

    lambda_: Optional[int] = Field(default=None, alias="lambda")
    """The (lower) difference multiplicity."""

    t: Optional[int] = None
    """ADS only: number of nonzero elements with multiplicity lambda."""

    mu: Optional[int] = None
    """PDS only: multiplicity off the set."""

    m: Optional[int] = None
    """DDS only: order of the forbidden subgroup."""

    lambda1: Optional[int] = None
    lambda2: Optional[int] = None

    S: Optional[List[ElemText]] = None
    """ADS only: nonzero elements of multiplicity lambda."""

    S_complement: Optional[List[ElemText]] = None
    """ADS only: nonzero elements of multiplicity lambda + 1."""

    subgroup: Optional[List[ElemText]] = None
    flags: Dict[str, bool] = Field(default_factory=dict)

    @classmethod
    def of(cls, kind: str, *params: int) -> "Verdict":
        """Bare verdict from a parameter tuple, e.g. ``Verdict.of("ADS", 13, 3, 0, 6)``."""
        if kind == "DS":
            v, k, lam = params
            return cls(type=kind, v=v, k=k, lambda_=lam)
        if kind == "ADS":
            v, k, lam, t = params
            return cls(type=kind, v=v, k=k, lambda_=lam, t=t)
        if kind == "PDS":
            v, k, lam, mu = params
            return cls(type=kind, v=v, k=k, lambda_=lam, mu=mu)
        v, m, k, lam1, lam2 = params
        return cls(type=kind, v=v, m=m, k=k, lambda1=lam1, lambda2=lam2)

    def params(self) -> Tuple[int, ...]:
        if self.type == "DS":
            return (self.v, self.k, self.lambda_)
        if self.type == "ADS":
            return (self.v, self.k, self.lambda_, self.t)
        if self.type == "PDS":
            return (self.v, self.k, self.lambda_, self.mu)
        return (self.v, self.m, self.k, self.lambda1, self.lambda2)

    def label(self) -> str:
        return f"{self.type}{self.params()}"

    def document(self) -> dict:
        return self.model_dump(by_alias=True, exclude_none=True)


class Classification(BaseModel):
    """Every verdict that applies to a subset, plus its spectrum histogram."""

    group: str
    v: int
    k: int
    histogram: Dict[int, int]
    """Difference value -> number of nonzero elements attaining it."""

    verdicts: List[Verdict] = Field(default_factory=list)

    def find(self, kind: str) -> Optional[Verdict]:
        return next((verdict for verdict in self.verdicts if verdict.type == kind), None)

    def has(self, kind: str, params: Tuple[int, ...]) -> bool:
        return any(
            verdict.type == kind and verdict.params() == tuple(params)
            for verdict in self.verdicts
        )

    @property
    def is_none(self) -> bool:
        return not self.verdicts

    def document(self) -> dict:
        return {
            "group": self.group,
            "v": self.v,
            "k": self.k,
            "histogram": {str(key): value for key, value in sorted(self.histogram.items())},
            "verdicts": [verdict.document() for verdict in self.verdicts],
        }


class Provenance(BaseModel):
    family: str
    """Generator family id."""

    citation: str
    """Citation key of the construction."""

    recipe: Dict[str, Any] = Field(default_factory=dict)
    """Numeric parameters the generator was called with."""


class ConstructedSet(BaseModel):
    """A generator output together with its self-verification."""

    model_config = ConfigDict(populate_by_name=True)

    group: str
    """Group descriptor, e.g. ``zv:4 x zv:7``."""

    members: List[ElemText] = Field(default_factory=list, alias="set")
    """Elements in text form, canonically ordered."""

    elements: List[int] = Field(default_factory=list, exclude=True)
    """Canonical indices of the elements."""

    claimed: Optional[Verdict] = None
    """Parameters the construction promises; None means no design is promised."""

    verified: bool = False
    verdicts: List[Verdict] = Field(default_factory=list)
    provenance: Provenance
    extras: Dict[str, Any] = Field(default_factory=dict)

    def document(self) -> dict:
        doc = {
            "group": self.group,
            "set": list(self.members),
            "claimed": self.claimed.document() if self.claimed is not None else None,
            "verified": self.verified,
            "verdicts": [verdict.document() for verdict in self.verdicts],
            "provenance": self.provenance.model_dump(),
        }
        if self.extras:
            doc["extras"] = self.extras
        return doc


class ParamSet(BaseModel):
    """A (v, k, lambda, t) query for the feasibility filters."""

    model_config = ConfigDict(populate_by_name=True, frozen=True)

    v: int = Field(ge=1)
    k: int = Field(ge=0)
    lambda_: int = Field(alias="lambda")
    t: int = Field(ge=0)

    @model_validator(mode="after")
    def _k_within_v(self) -> "ParamSet":
        if self.k > self.v:
            raise ValueError(f"k={self.k} exceeds v={self.v}")
        return self

    def complement(self) -> "ParamSet":
        return ParamSet(
            v=self.v, k=self.v - self.k, lambda_=self.v - 2 * self.k + self.lambda_, t=self.t
        )

    def as_tuple(self) -> Tuple[int, int, int, int]:
        return (self.v, self.k, self.lambda_, self.t)

    @classmethod
    def parse(cls, text: str) -> "ParamSet":
        v, k, lam, t = (int(part) for part in text.replace(" ", "").strip("()").split(","))
        return cls(v=v, k=k, lambda_=lam, t=t)


class FilterVerdict(BaseModel):
    status: Literal["pass", "ruled_out", "not_applicable"]
    detail: str = ""
    """Which condition decided the outcome."""

    witness: Dict[str, Any] = Field(default_factory=dict)
    """The instantiated equation or candidate set backing the outcome."""


class FeasibilityReport(BaseModel):
    params: ParamSet
    tested: ParamSet
    """The parameters actually tested, after complement normalization."""

    tests: Dict[str, FilterVerdict]
    overall: Literal["pass", "ruled_out"]

    @property
    def ruled_out(self) -> bool:
        return self.overall == "ruled_out"

    def document(self) -> dict:
        return {
            "params": self.params.model_dump(by_alias=True),
            "tested": self.tested.model_dump(by_alias=True),
            "tests": {name: verdict.model_dump() for name, verdict in self.tests.items()},
            "overall": self.overall,
        }


class CorrSpectrum(BaseModel):
    period: int
    values: List[int]
    """C_s(w) for w = 0 .. period-1."""

    distribution: Dict[int, int]
    """Correlation value -> number of shifts (the peak included)."""

    level_count: int
    optimal: bool
    ideal: bool

    @property
    def off_peak(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for value in self.values[1:]:
            counts[value] = counts.get(value, 0) + 1
        return counts

    def document(self, full: bool = False) -> dict:
        doc = {
            "period": self.period,
            "distribution": {str(key): value for key, value in sorted(self.distribution.items())},
            "level_count": self.level_count,
            "optimal": self.optimal,
            "ideal": self.ideal,
        }
        if full:
            doc["values"] = list(self.values)
        return doc


class CommandResult(BaseModel):
    status: Literal["ok", "ruled_out", "precondition_failed", "error"]
    payload: Dict[str, Any] = Field(default_factory=dict)
    diagnostics: List[str] = Field(default_factory=list)

    @property
    def exit_code(self) -> int:
        if self.status in ("ok", "ruled_out"):
            return 0
        return 2 if self.status == "error" else 1
