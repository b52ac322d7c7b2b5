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

import asyncio

import pytest

from adskit.tools.utils import (
    asyncify,
    divisors,
    factorize,
    get_budget,
    get_hall_w_cap,
    is_eisenstein_norm,
    is_prime,
    is_square,
    is_sum_of_two_squares,
    prime_power,
)


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize(
    "q, expected",
    [
        pytest.param(9, (3, 2), id="9"),
        pytest.param(13, (13, 1), id="13"),
        pytest.param(128, (2, 7), id="128"),
        pytest.param(1, None, id="1"),
        pytest.param(12, None, id="12"),
    ],
)
def test_prime_power(q, expected):
    assert prime_power(q) == expected


def test_factorize():
    assert factorize(360) == {2: 3, 3: 2, 5: 1}


def test_squares_and_norms():
    assert is_square(0) and is_square(49) and not is_square(-4) and not is_square(50)
    assert is_sum_of_two_squares(13) and not is_sum_of_two_squares(21)
    assert [n for n in range(14) if is_eisenstein_norm(n)] == [0, 1, 3, 4, 7, 9, 12, 13]
    assert not is_eisenstein_norm(-3)


def test_divisors():
    assert divisors(44) == [1, 2, 4, 11, 22, 44]


def test_env_overrides(monkeypatch):
    monkeypatch.setenv("ADSKIT_BUDGET", "1_000")
    monkeypatch.setenv("ADSKIT_HALL_W_CAP", "8")
    assert get_budget() == 1000
    assert get_budget(5) == 5
    assert get_hall_w_cap() == 8
    monkeypatch.setenv("ADSKIT_BUDGET", "")
    assert get_budget() == 10**8


def test_asyncify():
    add = asyncify(lambda a, b=0: a + b)
    assert asyncio.run(add(2, b=3)) == 5


def test_logger_level_and_models(monkeypatch):
    from adskit.tools.logger import adskit_logger
    from adskit.tools.schema import ParamSet

    records = []
    monkeypatch.setattr(adskit_logger.logger, "log", lambda level, message: records.append((level, message)))
    previous = adskit_logger.level
    try:
        adskit_logger.set_level("WARNING")
        adskit_logger.log("INFO", "dropped")
        adskit_logger.log("WARNING", ParamSet(v=13, k=3, lambda_=0, t=6))
    finally:
        adskit_logger.set_level(previous)
    assert len(records) == 1
    assert "'lambda': 0" in records[0][1]
