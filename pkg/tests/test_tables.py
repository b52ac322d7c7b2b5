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

import pytest

from adskit.designs.constants import T1_EXTRA_RULED_OUT, T1_REFERENCE, TV2_REFERENCE
from adskit.designs.tables import candidate_params, candidate_table, cycnum_table, summary_table
from adskit.tools.base import PreconditionError


@pytest.mark.parametrize(
    "kind, reference",
    [
        pytest.param("t1", T1_REFERENCE, id="t1"),
        pytest.param("tv2", TV2_REFERENCE, id="tv2"),
    ],
)
def test_candidate_params_match_reference(kind, reference):
    found = [p.as_tuple() for p in candidate_params(kind)]
    assert found == [params for params, _ in reference]


def test_candidate_params_unknown_kind():
    with pytest.raises(PreconditionError):
        candidate_params("t2")


def test_candidate_table_t1():
    frame = candidate_table("t1")
    assert list(frame.columns) == ["v", "k", "lambda", "t", "boxed", "ruled_out", "reason"]
    assert len(frame) == 20
    ruled_out = {tuple(row) for row in frame.loc[frame["ruled_out"], ["v", "k", "lambda", "t"]].itertuples(index=False)}
    boxed = {tuple(row) for row in frame.loc[frame["boxed"], ["v", "k", "lambda", "t"]].itertuples(index=False)}
    assert ruled_out == boxed | set(T1_EXTRA_RULED_OUT)
    assert (frame.loc[frame["ruled_out"], "reason"] != "").all()


def test_candidate_table_tv2():
    frame = candidate_table("tv2")
    assert len(frame) == 14
    assert (frame["boxed"] == frame["ruled_out"]).all()


def test_candidate_table_battery():
    frame = candidate_table("t1", vmax=50, battery=True)
    assert {"overall", "ruled_out_by"} <= set(frame.columns)
    parity_hits = frame.loc[frame["ruled_out"]]
    assert (parity_hits["overall"] == "ruled_out").all()
    assert parity_hits["ruled_out_by"].str.contains("parity_t1").all()


def test_cycnum_table():
    frame = cycnum_table(13, 4)
    assert frame.index.name == "i"
    assert frame.columns.name == "j"
    assert frame.values.tolist() == [[0, 1, 2, 0], [1, 1, 0, 1], [0, 1, 0, 1], [1, 0, 1, 1]]
    assert (cycnum_table(13, 4, method="closed").values == frame.values).all()
    with pytest.raises(PreconditionError):
        cycnum_table(13, 5)


def test_summary_table():
    frame = summary_table(50)
    assert list(frame.columns) == ["q", "e", "shape", "ads", "params", "expected", "agrees"]
    assert frame["agrees"].all()
    assert set(frame["e"]) == {2, 3, 4}
