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

import os

import pytest
from dotenv import load_dotenv


class SweepConf:
    """Bounds for the exhaustive sweeps; ADSKIT_FULL_SWEEP=1 widens them."""

    def __init__(self):
        load_dotenv()
        self.full = os.getenv("ADSKIT_FULL_SWEEP", "0").lower() in ("1", "true", "t")
        self.cyclotomy_qmax = 2000 if self.full else 200
        self.summary_qmax = 2000 if self.full else 200
        self.gmw_qmax = 200 if self.full else 50
        self.soundness_vmax = 28 if self.full else 16
        self.soundness_kmax = 7 if self.full else 5
        self.legendre_pmax = 127 if self.full else 43
        self.mseq_tmax = 7 if self.full else 5


@pytest.fixture(scope="session")
def sweep():
    return SweepConf()


def odd_prime_powers(lo, hi):
    from adskit.tools.utils import prime_power

    return [q for q in range(lo, hi + 1) if q % 2 == 1 and prime_power(q) is not None]
