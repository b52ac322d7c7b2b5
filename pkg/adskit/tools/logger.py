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

import logging
import os
import pprint
import sys

from pydantic import BaseModel

LOGGING_ENABLED = os.getenv("LOGGING_ENABLED", "True").lower() in ("true", "1", "t")


def _level(name) -> int:
    if isinstance(name, int):
        return name
    return getattr(logging, str(name).upper(), logging.INFO)


class Logger:
    """Process-wide logger for the toolkit.

    Records go to stderr so that stdout stays free for the CLI's result
    documents. Dicts and pydantic models are pretty-printed.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
            cls._instance.init()
        return cls._instance

    def init(self):
        self.logger = logging.getLogger("adskit")
        self.logger.propagate = False
        self.level = _level(os.getenv("LOGGING_LEVEL", "INFO"))
        self.logger.setLevel(self.level)

        if not self.logger.handlers:
            self.stream_handler = logging.StreamHandler(sys.stderr)
            self.stream_handler.setFormatter(logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s"))
            self.logger.addHandler(self.stream_handler)

    def set_level(self, level) -> None:
        self.level = _level(level)
        self.logger.setLevel(self.level)

    def log(self, level, *args, **kwargs):
        level = _level(level)
        if not LOGGING_ENABLED or level < self.level:
            return
        for arg in args:
            if isinstance(arg, BaseModel):
                arg = arg.model_dump(by_alias=True)
            message = pprint.pformat(arg, **kwargs) if isinstance(arg, dict) else str(arg)
            self.logger.log(level, message)


adskit_logger = Logger()
