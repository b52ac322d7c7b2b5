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

import asyncio
from collections.abc import Collection
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from adskit.designs.constants import SCHEDULING_INTERVAL
from adskit.tools.logger import adskit_logger


@dataclass
class Task:
    idx: int
    name: str
    tool: Callable
    args: Collection[Any]
    dependencies: Collection[int]
    kwargs: Dict[str, Any] = field(default_factory=dict)
    observation: Optional[Any] = None
    error: Optional[BaseException] = None

    async def __call__(self) -> Any:
        adskit_logger.log("DEBUG", f"running {self.name} task")
        result = await self.tool(*self.args, **self.kwargs)
        adskit_logger.log("DEBUG", f"{self.name} task completed")
        return result


class TaskProcessor:
    """Runs independent numeric tasks concurrently; results come back in index order."""

    tasks: Dict[int, Task]
    tasks_done: Dict[int, asyncio.Event]
    remaining_tasks: set[int]

    def __init__(self):
        self.tasks = {}
        self.tasks_done = {}
        self.remaining_tasks = set()

    def set_tasks(self, tasks: dict[int, Task]):
        self.tasks.update(tasks)
        self.tasks_done.update({task_idx: asyncio.Event() for task_idx in tasks})
        self.remaining_tasks.update(set(tasks.keys()))

    def _all_tasks_done(self):
        return all(self.tasks_done[d].is_set() for d in self.tasks_done)

    def _get_all_executable_tasks(self):
        return sorted(
            task_idx
            for task_idx in self.remaining_tasks
            if all(self.tasks_done[dep].is_set() for dep in self.tasks[task_idx].dependencies)
        )

    async def _run_task(self, task: Task):
        try:
            task.observation = await task()
        except Exception as e:
            task.error = e
            adskit_logger.log("DEBUG", f"{task.name} task failed: {e}")
        self.tasks_done[task.idx].set()

    async def schedule(self):
        """Run all tasks in self.tasks in parallel, respecting dependencies."""
        running = []
        while not self._all_tasks_done():
            for task_idx in self._get_all_executable_tasks():
                running.append(asyncio.create_task(self._run_task(self.tasks[task_idx])))
                self.remaining_tasks.remove(task_idx)

            await asyncio.sleep(SCHEDULING_INTERVAL)
        await asyncio.gather(*running)

        failed = [self.tasks[idx] for idx in sorted(self.tasks) if self.tasks[idx].error is not None]
        if failed:
            raise failed[0].error

    def results(self) -> List[Any]:
        return [self.tasks[idx].observation for idx in sorted(self.tasks)]
