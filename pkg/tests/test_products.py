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

import numpy as np
import pytest

from adskit.designs.groups import make_group
from adskit.designs.products import (
    cor55,
    dhm_admissible_triples,
    dhm_quartic,
    dpw_skew,
    jungnickel_dds,
    product_ads,
    tang_ding,
    zlz_pq_squares,
    zlz_z4q,
)
from adskit.tools.base import PreconditionError


@pytest.mark.parametrize(
    "D1, label",
    [
        pytest.param([1, 2, 4], "ADS(28, 13, 5, 6)", id="residues"),
        pytest.param([0, 3, 5, 6], "ADS(28, 15, 7, 6)", id="nonresidues_with_zero"),
    ],
)
def test_cor55(D1, label):
    result = cor55("zv:7", D1)
    assert result.verified
    assert result.claimed.label() == label
    assert result.group == "zv:4 x zv:7"


def test_cor55_needs_paley_hadamard():
    with pytest.raises(PreconditionError):
        cor55("zv:13", [1, 3, 9])


def test_jungnickel():
    result = jungnickel_dds("zv:7", [1, 2, 4], "zv:4", [0])
    assert result.verified
    assert result.claimed.label() == "DDS(28, 7, 13, 5, 6)"
    assert result.extras["almost"]
    assert result.elements == cor55("zv:7", [1, 2, 4]).elements


def test_jungnickel_needs_menon_set():
    with pytest.raises(PreconditionError):
        jungnickel_dds("zv:7", [1, 2, 4], "zv:4", [0, 1])


def test_tang_ding_matches_cor55():
    td = tang_ding("zv:7", [1, 2, 4], [1, 2, 4])
    assert td.verified
    assert td.elements == cor55("zv:7", [1, 2, 4], i=3).elements


def test_zlz_z4q_is_translated_tang_ding():
    zlz = zlz_z4q(7)
    assert zlz.claimed.label() == "ADS(28, 15, 7, 6)"
    td = tang_ding("zv:7", [0, 3, 5, 6], [3, 5, 6])
    ctx = make_group("zv:4 x zv:7")
    shifted = sorted(int(x) for x in ctx.add_arrays(np.array(td.elements), ctx.parse_elem("(1,0)")))
    assert shifted == zlz.elements


def test_zlz_z4q_needs_3_mod_4():
    with pytest.raises(PreconditionError):
        zlz_z4q(13)


@pytest.mark.parametrize(
    "q, label",
    [
        pytest.param(3, "ADS(21, 9, 3, 8)", id="q3"),
        pytest.param(7, "ADS(77, 37, 17, 36)", id="q7"),
        pytest.param(19, "ADS(437, 217, 107, 216)", id="q19"),
    ],
)
def test_dpw_skew(q, label):
    result = dpw_skew(q)
    assert result.verified
    assert result.claimed.label() == label


def test_dpw_skew_needs_3_mod_4():
    with pytest.raises(PreconditionError):
        dpw_skew(5)


def test_dhm_quartic():
    assert (0, 3, 1) in dhm_admissible_triples(13)
    result = dhm_quartic(13, 0, 3, 1)
    assert result.verified
    assert result.claimed.label() == "ADS(26, 12, 5, 18)"
    with pytest.raises(PreconditionError):
        dhm_quartic(13, 0, 0, 1)
    with pytest.raises(PreconditionError):
        dhm_quartic(17, 0, 3, 1)


@pytest.mark.parametrize(
    "with_zero, label",
    [
        pytest.param(False, "ADS(26, 12, 5, 18)", id="plain"),
        pytest.param(True, "ADS(26, 13, 6, 19)", id="with_zero"),
    ],
)
def test_dhm_quartic_every_admissible_triple(with_zero, label):
    triples = dhm_admissible_triples(13, with_zero)
    assert len(triples) >= 2
    for triple in triples:
        result = dhm_quartic(13, *triple, with_zero=with_zero)
        assert result.verified, triple
        assert result.claimed.label() == label


@pytest.mark.parametrize(
    "p, q, label",
    [
        pytest.param(3, 5, "ADS(15, 4, 0, 2)", id="3_5"),
        pytest.param(5, 7, "ADS(35, 12, 3, 4)", id="5_7"),
        pytest.param(3, 3, "ADS(9, 2, 0, 6)", id="3_3"),
        pytest.param(5, 5, "ADS(25, 8, 2, 16)", id="5_5"),
    ],
)
def test_zlz_pq_squares(p, q, label):
    result = zlz_pq_squares(p, q)
    assert result.verified
    assert result.claimed.label() == label


def test_zlz_pq_squares_row():
    result = zlz_pq_squares(3, 5, include_row=True)
    assert result.claimed.label() == "DS(15, 7, 3)"
    assert not any(verdict.type == "ADS" for verdict in result.verdicts)
    with pytest.raises(PreconditionError):
        zlz_pq_squares(3, 7, include_row=True)
    with pytest.raises(PreconditionError):
        zlz_pq_squares(3, 11)


def test_product_ads_dispatch():
    result = product_ads({"family": "cor55", "group": "zv:7", "D1": [1, 2, 4]})
    assert result.claimed.label() == "ADS(28, 13, 5, 6)"
    with pytest.raises(PreconditionError):
        product_ads({"family": "kronecker"})
