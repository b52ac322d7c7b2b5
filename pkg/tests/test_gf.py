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

from adskit.designs.gf import field_of_order, make_field
from adskit.tools.base import DomainError, ForeignElementError


def test_prime_field_tables():
    field = make_field(7)
    assert field.gamma == 3
    assert field.exp.tolist() == [1, 3, 2, 6, 4, 5]
    assert field.log[0] == -1
    assert field.mul(3, 5) == 1
    assert field.inv(3) == 5
    assert field.power(3, 6) == 1
    assert field.dlog(2) == 2
    assert [x for x in range(1, 7) if field.is_square(x)] == [1, 2, 4]


def test_extension_field_encoding():
    field = make_field(3, 2)
    assert field.q == 9
    assert field.modulus_text == "x^2+x+2"
    assert field.gamma == 3
    # x^2 = 2x + 1
    assert field.gamma_power(2) == 7
    assert sorted(field.exp.tolist()) == list(range(1, 9))
    assert field.plus_one_arrays([0, 2, 5]).tolist() == [1, 0, 3]


@pytest.mark.parametrize("q", [pytest.param(q, id=f"q{q}") for q in (8, 9, 16, 25, 27, 49)])
def test_field_axioms(q):
    field = field_of_order(q)
    elems = range(q)
    for a in elems:
        for b in elems:
            assert field.mul(a, b) == field.mul(b, a)
            for c in (1, q - 1):
                assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
    for a in range(1, q):
        assert field.mul(a, field.inv(a)) == 1


def test_gamma_override():
    field = make_field(7, gamma=5)
    assert field.gamma == 5
    assert field.exp.tolist() == [1, 5, 4, 6, 2, 3]
    with pytest.raises(DomainError):
        make_field(7, gamma=2)
    with pytest.raises(DomainError):
        make_field(7, gamma=0)


@pytest.mark.parametrize(
    "call, error",
    [
        pytest.param(lambda: make_field(4), DomainError, id="not_prime"),
        pytest.param(lambda: field_of_order(12), DomainError, id="not_prime_power"),
        pytest.param(lambda: make_field(7).dlog(0), DomainError, id="dlog_zero"),
        pytest.param(lambda: make_field(7).inv(0), DomainError, id="inverse_zero"),
        pytest.param(lambda: make_field(7).mul(7, 1), ForeignElementError, id="foreign"),
    ],
)
def test_domain_errors(call, error):
    with pytest.raises(error):
        call()


def test_field_order_bound(monkeypatch):
    monkeypatch.setenv("ADSKIT_MAX_FIELD_ORDER", "1000")
    with pytest.raises(DomainError):
        make_field(4001)
