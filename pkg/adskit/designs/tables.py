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
"""Tabular reports: candidate parameter lists, the cyclotomic summary scan and
cyclotomic-number matrices, as pandas DataFrames ready for ``to_csv``."""

from __future__ import annotations

from typing import List, Literal, Optional

import pandas as pd

from adskit.designs.constants import T1_REFERENCE, TV2_REFERENCE
from adskit.designs.constructions import summary_scan
from adskit.designs.cyclotomy import Method, cyc_classes, cyclotomic_identities, cyclotomic_matrix
from adskit.designs.filters import parity_t1_test, parity_tv2_test, run_all
from adskit.designs.gf import field_of_order
from adskit.tools.base import PreconditionError
from adskit.tools.logger import adskit_logger
from adskit.tools.schema import ParamSet

CandidateKind = Literal["t1", "tv2"]

_REFERENCE = {"t1": T1_REFERENCE, "tv2": TV2_REFERENCE}


def candidate_params(kind: CandidateKind, vmax: int = 200) -> List[ParamSet]:
    """(v, k, lambda, t) with v even, k odd, k <= v/2 and integral lambda >= 0.

    ``t1`` fixes t = 1, ``tv2`` fixes t = v - 2.
    """
    if kind not in _REFERENCE:
        raise PreconditionError(f"unknown candidate kind {kind!r}; choose t1 or tv2")
    found = []
    for v in range(2, vmax + 1, 2):
        for k in range(1, v // 2 + 1, 2):
            if kind == "t1":
                num, t = k * (k - 1) - v + 2, 1
            else:
                num, t = k * (k - 1) - 1, v - 2
            if num >= 0 and num % (v - 1) == 0:
                found.append(ParamSet(v=v, k=k, lambda_=num // (v - 1), t=t))
    return found


def candidate_table(kind: CandidateKind, vmax: int = 200, battery: bool = False) -> pd.DataFrame:
    """Candidates with their parity verdict and the reference boxing.

    With ``battery`` every row also goes through ``run_all`` and the names of the
    tests that ruled it out are listed.
    """
    boxed = {params: mark for params, mark in _REFERENCE[kind]}
    parity = parity_t1_test if kind == "t1" else parity_tv2_test
    rows = []
    for p in candidate_params(kind, vmax):
        verdict = parity(p)
        row = {
            "v": p.v,
            "k": p.k,
            "lambda": p.lambda_,
            "t": p.t,
            "boxed": boxed.get(p.as_tuple(), False),
            "ruled_out": verdict.status == "ruled_out",
            "reason": verdict.detail if verdict.status == "ruled_out" else "",
        }
        if battery:
            report = run_all(p)
            row["overall"] = report.overall
            row["ruled_out_by"] = ";".join(
                name for name, test in report.tests.items() if test.status == "ruled_out"
            )
        rows.append(row)
    adskit_logger.log("DEBUG", f"{kind} candidates up to v={vmax}: {len(rows)}")
    return pd.DataFrame(rows)


def summary_table(qmax: int, qmin: int = 3) -> pd.DataFrame:
    return pd.DataFrame(
        summary_scan(qmax, qmin), columns=["q", "e", "shape", "ads", "params", "expected", "agrees"]
    )


def cycnum_table(q: int, e: int, method: Method = "direct", gamma: Optional[int] = None) -> pd.DataFrame:
    """The e x e matrix of (i, j)_e, rows i and columns j."""
    if e < 1 or (q - 1) % e:
        raise PreconditionError(f"e={e} does not divide q-1={q - 1}")
    matrix = cyclotomic_matrix(cyc_classes(field_of_order(q, gamma), e), method)
    failed = [name for name, ok in cyclotomic_identities(matrix, q, e).items() if not ok]
    if failed:
        adskit_logger.log("WARNING", f"cyclotomic numbers for q={q}, e={e} break {failed}")
    frame = pd.DataFrame(matrix, index=range(e), columns=range(e))
    frame.index.name = "i"
    frame.columns.name = "j"
    return frame
