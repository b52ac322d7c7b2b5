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

from fractions import Fraction

import pytest

from adskit.designs.constructions import (
    addition_transfer_params,
    admissible_planar_exponents,
    ck_pds,
    cyclotomic_ads,
    ds_ads_transfer,
    gmw_like_support,
    paley_hadamard_ds,
    paley_qr,
    pf_value,
    pn_graph_ads,
    quartic_pair_holds,
    removal_transfer_params,
    summary_scan,
    table_condition,
)
from adskit.designs.groups import cyclic_group
from adskit.tools.base import PreconditionError
from tests.conftest import odd_prime_powers


@pytest.mark.parametrize(
    "q, label",
    [
        pytest.param(13, "PDS(13, 6, 2, 3)", id="13"),
        pytest.param(9, "PDS(9, 4, 1, 2)", id="9"),
        pytest.param(7, "DS(7, 3, 1)", id="7"),
        pytest.param(11, "DS(11, 5, 2)", id="11"),
    ],
)
def test_paley_qr(q, label):
    result = paley_qr(q)
    assert result.verified
    assert result.claimed.label() == label


def test_paley_qr_extras():
    assert paley_qr(7).elements == [1, 2, 4]
    assert any(verdict.label() == "ADS(13, 6, 2, 6)" for verdict in paley_qr(13).verdicts)
    with pytest.raises(PreconditionError):
        paley_qr(8)
    with pytest.raises(PreconditionError):
        paley_qr(15)


@pytest.mark.parametrize(
    "q, family, label",
    [
        pytest.param(13, "quartic", "ADS(13, 3, 0, 6)", id="quartic_13"),
        pytest.param(9, "quartic", "ADS(9, 2, 0, 6)", id="quartic_9"),
        pytest.param(37, "quartic_zero", "ADS(37, 10, 2, 18)", id="quartic_zero_37"),
        pytest.param(37, "quartic_zero_neg", "ADS(37, 10, 2, 18)", id="quartic_zero_neg_37"),
        pytest.param(13, "quartic_pair", "ADS(13, 6, 2, 6)", id="quartic_pair_13"),
        pytest.param(73, "octic_zero", "ADS(73, 10, 1, 54)", id="octic_zero_73"),
        pytest.param(7, "cubic", "ADS(7, 2, 0, 4)", id="cubic_7"),
        pytest.param(19, "cubic", "ADS(19, 6, 1, 6)", id="cubic_19"),
        pytest.param(25, "cubic", "ADS(25, 8, 2, 16)", id="cubic_25"),
        pytest.param(13, "cubic_zero", "ADS(13, 5, 1, 4)", id="cubic_zero_13"),
        pytest.param(37, "cubic_zero", "ADS(37, 13, 4, 24)", id="cubic_zero_37"),
        pytest.param(9, "dpw_union_sq", "ADS(9, 4, 1, 4)", id="dpw_union_sq_9"),
        pytest.param(121, "dpw_union_sq", "ADS(121, 60, 29, 60)", id="dpw_union_sq_121"),
    ],
)
def test_cyclotomic_families(q, family, label):
    result = cyclotomic_ads(q, family)
    assert result.verified
    assert result.claimed.label() == label
    assert result.provenance.family == family


def test_quartic_residues_of_13():
    assert cyclotomic_ads(13, "quartic").elements == [1, 3, 9]
    assert cyclotomic_ads(13, "quartic", i=1).elements == [2, 5, 6]


def test_cyclotomic_preconditions():
    with pytest.raises(PreconditionError):
        cyclotomic_ads(41, "octic")
    with pytest.raises(PreconditionError):
        cyclotomic_ads(37, "quartic")
    with pytest.raises(PreconditionError):
        cyclotomic_ads(13, "sextic")
    with pytest.raises(PreconditionError):
        cyclotomic_ads(11, "cubic")


@pytest.mark.parametrize(
    "gamma", [pytest.param(None, id="default"), pytest.param(6, id="g6"), pytest.param(7, id="g7")]
)
def test_octic_has_no_instance_at_41(gamma):
    with pytest.raises(PreconditionError, match="octic: q=41"):
        cyclotomic_ads(41, "octic", experimental=True, gamma=gamma)


def test_octic_zero_does_not_depend_on_gamma():
    built = [cyclotomic_ads(73, "octic_zero", gamma=gamma) for gamma in (None, 5, 59)]
    assert all(result.verified for result in built)
    assert built[0].elements == built[1].elements == built[2].elements
    assert "experimental" not in built[0].provenance.recipe


def test_quartic_pair_holds():
    assert quartic_pair_holds(9)
    assert quartic_pair_holds(13)
    assert not quartic_pair_holds(37)


@pytest.mark.parametrize(
    "q, I, label",
    [
        pytest.param(3, [0, 1], "PDS(9, 4, 1, 2)", id="q3"),
        pytest.param(5, [0, 2, 4], "PDS(25, 12, 5, 6)", id="q5_upper"),
        pytest.param(5, [1, 3], "PDS(25, 8, 3, 2)", id="q5_lower"),
        pytest.param(7, [0, 1, 2, 3], "PDS(49, 24, 11, 12)", id="q7_upper"),
    ],
)
def test_ck_pds(q, I, label):
    result = ck_pds(q, I)
    assert result.verified
    assert result.claimed.label() == label


def test_ck_pds_size():
    with pytest.raises(PreconditionError):
        ck_pds(5, [0])


def test_transfer_params():
    assert removal_transfer_params(13) == (4, 1)
    assert addition_transfer_params(21) == (5, 1)
    with pytest.raises(PreconditionError):
        removal_transfer_params(21)


@pytest.mark.parametrize(
    "direction, v, D, d, label, members",
    [
        pytest.param("ds_minus_elem", 13, [0, 1, 3, 9], 0, "ADS(13, 3, 0, 6)", [1, 3, 9], id="ds_minus_elem"),
        pytest.param("ads_plus_elem_to_ds", 13, [0, 4, 6], 1, "DS(13, 4, 1)", [0, 1, 4, 6], id="ads_plus_elem_to_ds"),
        pytest.param("ds_plus_elem", 21, [0, 1, 4, 14, 16], 3, "ADS(21, 6, 1, 10)", [0, 1, 3, 4, 14, 16], id="ds_plus_elem"),
        pytest.param(
            "ads_minus_elem_to_ds", 21, [0, 1, 2, 5, 15, 17], 0, "DS(21, 5, 1)", [1, 2, 5, 15, 17], id="ads_minus_elem_to_ds"
        ),
    ],
)
def test_transfers(direction, v, D, d, label, members):
    result = ds_ads_transfer(direction, cyclic_group(v), D, d)
    assert result.verified
    assert result.claimed.label() == label
    assert result.elements == members


def test_transfer_preconditions():
    with pytest.raises(PreconditionError):
        ds_ads_transfer("ds_minus_elem", cyclic_group(13), [0, 1, 3, 9], 2)
    with pytest.raises(PreconditionError):
        ds_ads_transfer("ds_minus_elem", cyclic_group(12), [0, 1, 3, 9], 0)
    with pytest.raises(PreconditionError):
        ds_ads_transfer("sideways", cyclic_group(13), [0, 1, 3, 9], 0)


@pytest.mark.parametrize(
    "q, label",
    [
        pytest.param(7, "ADS(6, 3, 1, 4)", id="7"),
        pytest.param(13, "ADS(12, 6, 2, 3)", id="13"),
        pytest.param(11, "ADS(10, 5, 2, 7)", id="11"),
    ],
)
def test_gmw_like_support(q, label):
    result = gmw_like_support(q)
    assert result.verified
    assert result.claimed.label() == label


def test_gmw_like_support_of_seven():
    assert gmw_like_support(7).elements == [2, 4, 5]


def test_gmw_like_support_sweep(sweep):
    for q in odd_prime_powers(5, sweep.gmw_qmax):
        assert gmw_like_support(q).verified, q


def test_planar_exponents():
    assert admissible_planar_exponents(3, 1) == [2]
    assert pf_value(3, 1, 2) == Fraction(1, 3)
    assert pf_value(3, 1, 1) == Fraction(1, 1)


@pytest.mark.parametrize(
    "p, m, s, label",
    [
        pytest.param(3, 1, 2, "ADS(9, 3, 0, 2)", id="gf3"),
        pytest.param(5, 1, 2, "ADS(25, 5, 0, 4)", id="gf5"),
        pytest.param(3, 2, 2, "ADS(81, 9, 0, 8)", id="gf9"),
        pytest.param(3, 2, 14, "ADS(81, 9, 0, 8)", id="gf9_s14"),
        *(pytest.param(3, 3, s, "ADS(729, 27, 0, 26)", id=f"gf27_s{s}") for s in (2, 4, 10, 122)),
    ],
)
def test_pn_graph_ads(p, m, s, label):
    assert s in admissible_planar_exponents(p, m)
    result = pn_graph_ads(p, m, s)
    assert result.verified
    assert result.claimed.label() == label
    assert result.extras["admissible"]


def test_pn_graph_accepts_unlisted_planar_exponent(monkeypatch):
    # x^6 = (x^2)^3 on GF(27) is planar but not among the listed exponents
    warnings = []
    monkeypatch.setattr(
        "adskit.designs.constructions.adskit_logger.log",
        lambda level, message: warnings.append(message) if level == "WARNING" else None,
    )
    result = pn_graph_ads(3, 3, 6)
    assert result.verified
    assert result.claimed.label() == "ADS(729, 27, 0, 26)"
    assert not result.extras["admissible"]
    assert result.extras["pf_value"] == "1/27"
    assert any("x^6" in message for message in warnings)


def test_pn_graph_rejects_non_planar():
    with pytest.raises(PreconditionError):
        pn_graph_ads(3, 1, 3)
    with pytest.raises(PreconditionError):
        pn_graph_ads(4, 1, 2)


@pytest.mark.parametrize(
    "kind, kwargs, label",
    [
        pytest.param("qr", {"p": 11}, "DS(11, 5, 2)", id="qr_11"),
        pytest.param("singer", {"t": 4}, "DS(15, 7, 3)", id="singer_4"),
        pytest.param("twin_prime", {"p": 3}, "DS(15, 7, 3)", id="twin_prime_3"),
        pytest.param("twin_prime", {"p": 5}, "DS(35, 17, 8)", id="twin_prime_5"),
        pytest.param("hall_sextic", {"p": 31}, "DS(31, 15, 7)", id="hall_sextic_31"),
    ],
)
def test_paley_hadamard_ds(kind, kwargs, label):
    result = paley_hadamard_ds(kind, **kwargs)
    assert result.verified
    assert result.claimed.label() == label
    ds = next(verdict for verdict in result.verdicts if verdict.type == "DS")
    assert ds.flags["paley_hadamard"]


def test_paley_hadamard_preconditions():
    with pytest.raises(PreconditionError):
        paley_hadamard_ds("qr", p=13)
    with pytest.raises(PreconditionError):
        paley_hadamard_ds("twin_prime", p=7)
    with pytest.raises(PreconditionError):
        paley_hadamard_ds("hall_sextic", p=37)
    with pytest.raises(PreconditionError):
        paley_hadamard_ds("biquadratic", p=7)


def test_table_condition():
    assert table_condition(13, 2, [0], False)
    assert not table_condition(7, 2, [0], False)
    assert table_condition(17, 4, [0, 2], True)
    assert table_condition(13, 4, [0], False)
    assert table_condition(37, 4, [0], True)
    with pytest.raises(PreconditionError):
        table_condition(17, 8, [0], False)


def test_summary_scan_agrees_with_table(sweep):
    rows = summary_scan(sweep.summary_qmax)
    assert rows
    disagreements = [row for row in rows if not row["agrees"]]
    assert not disagreements
    first = [row for row in rows if row["q"] == 13 and row["shape"] == "C0^4"]
    assert first and first[0]["params"] == "ADS(13, 3, 0, 6)"
