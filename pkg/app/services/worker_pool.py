import asyncio
import logging
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Tuple

from app.models.graph import WeightedGraph
from app.models.nde import NdeTree
from app.schemas.graph import DegreeConstraint
from app.schemas.move import TrialResult
from app.services.rng import TrialSeedSchedule
from app.services.trials import reduce_trials, run_trial_range

logger = logging.getLogger(__name__)


def split_range(count: int, parts: int) -> List[Tuple[int, int]]:
    """Split trials [0, count) into `parts` contiguous (start, count) ranges of near-equal size"""
    base, extra = divmod(count, parts)
    ranges = []
    start = 0
    for k in range(parts):
        size = base + (1 if k < extra else 0)
        ranges.append((start, size))
        start += size
    return ranges


class TrialWorkerPool(ABC):
    """Executes the PAO trials of one selected tree and returns the reduced winner"""

    @abstractmethod
    async def best_trial(
        self, tree: NdeTree, tree_slot: int, generation: int, trial_count: int
    ) -> Optional[TrialResult]:
        ...

    async def close(self) -> None:
        pass


class LocalWorkerPool(TrialWorkerPool):
    """
    In-process pool: a trial range is cut into one contiguous chunk per
    thread, chunks run on a thread pool and their winners are reduced in
    chunk order.

    Attributes:
        graph (WeightedGraph): shared read-only instance
        constraint (DegreeConstraint): degree cap every move must respect
        schedule (TrialSeedSchedule): seed source, identical to the distributed mode
        threads (int): parallelism degree; never changes the result
    """

    def __init__(
        self,
        graph: WeightedGraph,
        constraint: DegreeConstraint,
        schedule: TrialSeedSchedule,
        threads: int = 1,
    ):
        if threads < 1:
            raise ValueError("threads must be at least 1")
        self.graph = graph
        self.constraint = constraint
        self.schedule = schedule
        self.threads = threads
        self._executor = ThreadPoolExecutor(max_workers=threads, thread_name_prefix="pao-worker")

    async def best_trial(
        self, tree: NdeTree, tree_slot: int, generation: int, trial_count: int
    ) -> Optional[TrialResult]:
        return await self.best_in_range(tree, tree_slot, generation, 0, trial_count)

    async def best_in_range(
        self, tree: NdeTree, tree_slot: int, generation: int, start: int, count: int
    ) -> Optional[TrialResult]:
        if count <= 0:
            return None
        loop = asyncio.get_running_loop()
        chunks = [
            (start + offset, size)
            for offset, size in split_range(count, min(self.threads, count))
        ]
        futures = [
            loop.run_in_executor(
                self._executor,
                run_trial_range,
                tree, self.graph, self.constraint, self.schedule,
                generation, tree_slot, chunk_start, chunk_size,
            )
            for chunk_start, chunk_size in chunks
        ]
        return reduce_trials(await asyncio.gather(*futures))

    async def close(self) -> None:
        self._executor.shutdown(wait=True)
