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

from adskit.designs.cyclotomy import (
    C2_27D2,
    S2_4T2,
    QuadForm,
    class_negation,
    closed_matrix,
    cyc_classes,
    cyc_number_closed,
    cyc_number_direct,
    cyclotomic_identities,
    cyclotomic_matrix,
    quadratic_partition,
    resolve_sign,
    union_diff_coeffs,
    union_verdicts,
)
from adskit.designs.diffcore import classify, diff_spectrum
from adskit.designs.gf import field_of_order, make_field
from adskit.tools.base import PreconditionError
from adskit.tools.schema import Verdict
from tests.conftest import odd_prime_powers


def test_classes_of_gf13():
    field = make_field(13)
    assert cyc_classes(field, 2).union([0]) == [1, 3, 4, 9, 10, 12]
    quartic = cyc_classes(field, 4)
    assert quartic.union([0]) == [1, 3, 9]
    assert quartic.union([1]) == [2, 5, 6]
    assert quartic.union([0], with_zero=True) == [0, 1, 3, 9]
    assert quartic.minus_one_class == 2
    assert class_negation(quartic, 1) == 3
    with pytest.raises(PreconditionError):
        cyc_classes(field, 5)
    with pytest.raises(PreconditionError):
        quartic.union([4])


@pytest.mark.parametrize(
    "q, form, expected",
    [
        pytest.param(13, S2_4T2, (-3, 1), id="13_s2_4t2"),
        pytest.param(37, S2_4T2, (1, 3), id="37_s2_4t2"),
        pytest.param(125, S2_4T2, (-11, 1), id="125_proper_wins"),
        pytest.param(7, C2_27D2, (1, 1), id="7_c2_27d2"),
        pytest.param(13, C2_27D2, (-5, 1), id="13_c2_27d2"),
        pytest.param(31, QuadForm.affine(27, 4), (27, 1), id="31_affine"),
        pytest.param(43, QuadForm.affine(27, 4), (27, 2), id="43_affine"),
    ],
)
def test_quadratic_partition(q, form, expected):
    partition = quadratic_partition(q, form)
    assert (partition.first, partition.second) == expected


def test_quadratic_partition_absent():
    assert quadratic_partition(5, C2_27D2) is None
    assert quadratic_partition(7, S2_4T2) is None
    assert quadratic_partition(29, QuadForm.affine(27, 4)) is None


def test_quartic_numbers_of_gf13():
    cctx = cyc_classes(make_field(13), 4)
    expected = np.array([[0, 1, 2, 0], [1, 1, 0, 1], [0, 1, 0, 1], [1, 0, 1, 1]])
    assert np.array_equal(cyclotomic_matrix(cctx, "direct"), expected)
    assert resolve_sign(cctx) == -1
    assert np.array_equal(cyclotomic_matrix(cctx, "closed"), expected)
    assert cyc_number_closed(13, 4, 0, 2) == 2
    assert cyc_number_direct(cctx, 0, 2) == 2
    assert cyc_number_direct(cctx, 1, 2) == 0


def test_quadratic_numbers():
    assert closed_matrix(13, 2).tolist() == [[2, 3], [3, 3]]
    assert closed_matrix(7, 2).tolist() == [[1, 2], [1, 1]]
    with pytest.raises(PreconditionError):
        closed_matrix(13, 6)


def test_closed_forms_match_direct_counts(sweep):
    for q in odd_prime_powers(3, sweep.cyclotomy_qmax):
        field = field_of_order(q)
        for e in (2, 3, 4):
            if (q - 1) % e:
                continue
            cctx = cyc_classes(field, e)
            direct = cyclotomic_matrix(cctx, "direct")
            assert np.array_equal(direct, cyclotomic_matrix(cctx, "closed")), (q, e)
            assert all(cyclotomic_identities(direct, q, e).values()), (q, e)


@pytest.mark.parametrize("q", [pytest.param(q, id=f"q{q}") for q in (8, 16, 32)])
def test_identities_in_characteristic_two(q):
    field = field_of_order(q)
    for e in (3, 5, 7, 15):
        if (q - 1) % e == 0:
            matrix = cyclotomic_matrix(cyc_classes(field, e))
            assert all(cyclotomic_identities(matrix, q, e).values())


def test_union_coefficients_match_realized_sets(sweep):
    qmax = 200 if sweep.full else 60
    for q in odd_prime_powers(3, qmax):
        field = field_of_order(q)
        for e in (2, 3, 4):
            if (q - 1) % e:
                continue
            cctx = cyc_classes(field, e)
            unions = [(i,) for i in range(e)] + [(i, j) for i in range(e) for j in range(i + 1, e)]
            for I in unions:
                for with_zero in (False, True):
                    identity, coeffs = union_diff_coeffs(cctx, I, with_zero)
                    counts = diff_spectrum(field.as_group(), cctx.union(I, with_zero)).counts
                    assert counts[0] == identity
                    assert np.array_equal(counts[1:], coeffs[cctx.class_of[1:]]), (q, e, I, with_zero)


def test_union_verdicts_agree_with_classify():
    field = make_field(13)
    cctx = cyc_classes(field, 4)
    verdicts = union_verdicts(cctx, [0])
    assert [v.label() for v in verdicts] == ["ADS(13, 3, 0, 6)"]
    assert classify(field.as_group(), cctx.union([0])).has("ADS", (13, 3, 0, 6))
    paley = union_verdicts(cyc_classes(field, 2), [0])
    assert Verdict.of("PDS", 13, 6, 2, 3).params() in [v.params() for v in paley if v.type == "PDS"]


def test_cubic_union():
    cctx = cyc_classes(make_field(7), 3)
    assert cctx.union([0]) == [1, 6]
    assert [v.label() for v in union_verdicts(cctx, [0], method="closed")] == ["ADS(7, 2, 0, 4)"]
