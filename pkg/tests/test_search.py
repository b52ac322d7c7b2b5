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

from adskit.designs.groups import cyclic_group, make_group
from adskit.designs.search import brute_search, canonical_form, unit_multipliers
from adskit.tools.base import BudgetExceededError, PreconditionError


def test_unit_multipliers():
    assert unit_multipliers(cyclic_group(12)) == [1, 5, 7, 11]
    assert unit_multipliers(make_group("zv:2 x zv:2")) == [1]


def test_canonical_form():
    ctx = cyclic_group(13)
    assert canonical_form(ctx, [1, 3, 9]) == (0, 1, 4)
    assert canonical_form(ctx, [0, 5, 7]) == canonical_form(ctx, [1, 3, 9])
    assert canonical_form(ctx, []) == ()


def test_singer_translates():
    found = brute_search(cyclic_group(7), 3, dedup=False)
    assert len(found) == 14
    assert {result.claimed.label() for result in found} == {"DS(7, 3, 1)"}
    assert all(result.verified for result in found)


def test_singer_up_to_equivalence():
    found = brute_search(cyclic_group(7), 3)
    assert len(found) == 1


def test_quartic_residues_found():
    ctx = cyclic_group(13)
    found = brute_search(ctx, 3, lam=0, t=6)
    forms = {tuple(result.elements) for result in found}
    assert canonical_form(ctx, [1, 3, 9]) in forms
    assert canonical_form(ctx, [0, 4, 6]) in forms
    assert all(result.claimed.label() == "ADS(13, 3, 0, 6)" for result in found)


def test_small_cyclic_ads():
    ctx = cyclic_group(6)
    found = brute_search(ctx, 3)
    forms = {tuple(result.elements): result.claimed.label() for result in found}
    assert forms[canonical_form(ctx, [2, 4, 5])] == "ADS(6, 3, 1, 4)"


def test_budget():
    with pytest.raises(BudgetExceededError):
        brute_search(cyclic_group(40), 10, budget=1000)


def test_bad_size():
    with pytest.raises(PreconditionError):
        brute_search(cyclic_group(7), 0)
