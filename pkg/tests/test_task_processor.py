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

from adskit.designs.task_processor import Task, TaskProcessor
from adskit.tools.base import PreconditionError
from adskit.tools.utils import asyncify


def run(tasks):
    async def go():
        processor = TaskProcessor()
        processor.set_tasks(tasks)
        await processor.schedule()
        return processor.results()

    return asyncio.run(go())


def test_results_in_index_order():
    square = asyncify(lambda x: x * x)
    tasks = {idx: Task(idx=idx, name=f"square {idx}", tool=square, args=(idx,), dependencies=()) for idx in range(5)}
    assert run(tasks) == [0, 1, 4, 9, 16]


def test_dependencies_run_first():
    order = []

    async def record(name):
        order.append(name)
        return name

    tasks = {
        0: Task(idx=0, name="last", tool=record, args=("last",), dependencies=(1, 2)),
        1: Task(idx=1, name="first", tool=record, args=("first",), dependencies=()),
        2: Task(idx=2, name="second", tool=record, args=("second",), dependencies=(1,)),
    }
    assert run(tasks) == ["last", "first", "second"]
    assert order == ["first", "second", "last"]


def test_failure_is_raised():
    def fail():
        raise PreconditionError("no such field")

    tasks = {
        0: Task(idx=0, name="ok", tool=asyncify(lambda: 1), args=(), dependencies=()),
        1: Task(idx=1, name="fail", tool=asyncify(fail), args=(), dependencies=()),
    }
    with pytest.raises(PreconditionError):
        run(tasks)
