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
"""Exhaustive search for difference-set-like subsets of small groups."""

from __future__ import annotations

import asyncio
import itertools
import math
from typing import List, Optional, Tuple

import numpy as np

from adskit.designs.constants import SEARCH_BATCH
from adskit.designs.diffcore import certify, classify
from adskit.designs.groups import GroupCtx
from adskit.designs.task_processor import Task, TaskProcessor
from adskit.tools.base import BudgetExceededError, PreconditionError
from adskit.tools.logger import adskit_logger
from adskit.tools.schema import ConstructedSet, Verdict
from adskit.tools.utils import asyncify, get_budget


def unit_multipliers(ctx: GroupCtx) -> List[int]:
    """Integers n prime to the exponent; x -> n*x is then an automorphism."""
    exponent = math.lcm(*ctx.radices)
    return [n for n in range(1, max(exponent, 2)) if math.gcd(n, exponent) == 1]


def canonical_form(ctx: GroupCtx, D) -> Tuple[int, ...]:
    """Least sorted image of D under translations and unit multipliers."""
    arr = ctx.as_index_array(D)
    if arr.size == 0:
        return ()
    best = None
    for n in unit_multipliers(ctx):
        image = ctx.scale_arrays(n, arr)
        translates = np.sort(ctx.sub_arrays(image[None, :], image[:, None]), axis=1)
        candidate = min(tuple(int(x) for x in row) for row in translates)
        if best is None or candidate < best:
            best = candidate
    return best


def _spread_mask(ctx: GroupCtx, block: np.ndarray, lam: Optional[int], t: Optional[int]) -> np.ndarray:
    """Rows whose nonzero difference counts take one value or two consecutive ones."""
    v = ctx.order
    n = block.shape[0]
    diffs = ctx.sub_arrays(block[:, :, None], block[:, None, :])
    offsets = (np.arange(n, dtype=np.int64) * v)[:, None, None]
    counts = np.bincount((diffs + offsets).ravel(), minlength=n * v).reshape(n, v)[:, 1:]
    lo, hi = counts.min(axis=1), counts.max(axis=1)
    mask = hi - lo <= 1
    if lam is not None:
        mask &= lo == lam
    if t is not None:
        mask &= (hi - lo == 1) & ((counts == lo[:, None]).sum(axis=1) == t)
    return mask


def _scan_partition(
    ctx: GroupCtx,
    pool: Tuple[int, ...],
    first: int,
    size: int,
    prefix: Tuple[int, ...],
    lam: Optional[int],
    t: Optional[int],
    include_pds: bool,
) -> List[np.ndarray]:
    """All size-subsets of pool whose least member is pool[first], prefixed by ``prefix``."""
    if size == 0:
        combos = iter([()])
    else:
        head = (pool[first],)
        combos = (head + rest for rest in itertools.combinations(pool[first + 1 :], size - 1))
    hits: List[np.ndarray] = []
    while True:
        batch = list(itertools.islice(combos, SEARCH_BATCH))
        if not batch:
            break
        block = np.array([prefix + combo for combo in batch], dtype=np.int64)
        if include_pds:
            hits.extend(row for row in block if not classify(ctx, row).is_none)
        else:
            hits.extend(block[_spread_mask(ctx, block, lam, t)])
    return hits


async def _run_partitions(tasks: dict) -> List[List[np.ndarray]]:
    processor = TaskProcessor()
    processor.set_tasks(tasks)
    await processor.schedule()
    return processor.results()


def _pick_claim(verdicts: List[Verdict], lam: Optional[int], t: Optional[int]) -> Optional[Verdict]:
    for kind in ("ADS", "DS", "PDS"):
        for verdict in verdicts:
            if verdict.type != kind:
                continue
            if lam is not None and verdict.lambda_ != lam:
                continue
            if t is not None and verdict.t != t:
                continue
            return verdict
    return None


def brute_search(
    ctx: GroupCtx,
    k: int,
    lam: Optional[int] = None,
    t: Optional[int] = None,
    dedup: bool = True,
    include_pds: bool = False,
    budget: Optional[int] = None,
) -> List[ConstructedSet]:
    """Every k-subset of ctx that is a DS or ADS (or PDS with ``include_pds``).

    With ``dedup`` only subsets containing 0 are enumerated and one
    representative per translation/multiplier class is kept.
    """
    v = ctx.order
    if v < 2 or not 1 <= k <= v:
        raise PreconditionError(f"brute_search needs 1 <= k <= v and v >= 2, got v={v}, k={k}")
    if dedup:
        pool, size, prefix = tuple(range(1, v)), k - 1, (0,)
    else:
        pool, size, prefix = tuple(range(v)), k, ()
    total = math.comb(len(pool), size)
    limit = get_budget(budget)
    if total > limit:
        raise BudgetExceededError(f"C({len(pool)},{size}) = {total} subsets exceeds the budget {limit}")

    firsts = [0] if size == 0 else range(len(pool) - size + 1)
    scan = asyncify(_scan_partition)
    tasks = {
        idx: Task(
            idx=idx,
            name=f"partition {first}",
            tool=scan,
            args=(ctx, pool, first, size, prefix, lam, t, include_pds),
            dependencies=(),
        )
        for idx, first in enumerate(firsts)
    }
    adskit_logger.log("INFO", f"searching {total} subsets of {ctx.descriptor} in {len(tasks)} partitions")
    hits = [row for chunk in asyncio.run(_run_partitions(tasks)) for row in chunk]

    if dedup:
        seen = set()
        unique = []
        for row in hits:
            form = canonical_form(ctx, row)
            if form not in seen:
                seen.add(form)
                unique.append(np.array(form, dtype=np.int64))
        hits = unique

    results = []
    for row in hits:
        claimed = _pick_claim(classify(ctx, row).verdicts, lam, t)
        if claimed is None:
            continue
        results.append(
            certify(ctx, row, claimed, "brute_search", recipe={"k": k, "lambda": lam, "t": t, "dedup": dedup})
        )
    return results
