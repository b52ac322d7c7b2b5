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

from __future__ import annotations

from adskit.tools.logger import adskit_logger


class AdsKitError(Exception):
    def __init__(self, message):
        self.message = message
        adskit_logger.log("ERROR", self.message)
        super().__init__(self.message)


class PreconditionError(AdsKitError):
    """A named arithmetic or structural precondition does not hold."""


class ForeignElementError(AdsKitError):
    """An element index lies outside the group it was used with."""


class DomainError(AdsKitError):
    """Field-level domain fault, e.g. the discrete log of zero."""


class BudgetExceededError(AdsKitError):
    """An exhaustive search would enumerate more subsets than allowed."""


class VerificationError(AdsKitError):
    """A constructed set does not have the parameters it was built to have.

    Generators raise this instead of returning unverified output.
    """


class NotAnADSError(AdsKitError):
    """The set is not an almost difference set in the given group."""


class ParseError(AdsKitError):
    """Malformed group descriptor, element set or sequence text."""
