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
from adskit.designs.diffcore import classify, diff_spectrum
from adskit.designs.filters import run_all
from adskit.designs.groups import make_group

__all__ = [
    "classify",
    "diff_spectrum",
    "make_group",
    "run_all",
    "candidate_table",
    "summary_table",
    "cycnum_table",
]

_TABLES = ("candidate_table", "summary_table", "cycnum_table")


def __getattr__(name):
    # the table builders pull in pandas
    if name in _TABLES:
        from adskit.designs import tables

        return getattr(tables, name)
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
