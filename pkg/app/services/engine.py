"""
Evolution Engine

Improvement-only evolutionary loop over a population of degree-constrained
spanning trees. Each generation:
1. Draws two distinct trees from a schedule-seeded generator
2. Runs T PAO trials per tree on the worker pool
3. Keeps, per tree, the trial with the most negative delta (lowest trial
   index on ties) and applies it only if it strictly lowers the weight
4. Updates the best individual and the generation counter

The trajectory depends only on the graph and EaConfig; the worker pool
(thread count, local or distributed) changes timing, never results.
"""

import logging
import time
from typing import Dict, List, Optional, Tuple

from app.core.config import settings
from app.core.exceptions import InvalidEncodingError
from app.models.graph import WeightedGraph
from app.models.nde import NdeTree
from app.models.population import Population
from app.schemas.ea import EaConfig, SolveReport
from app.schemas.graph import DegreeConstraint
from app.services import nde
from app.services.operators import apply_move, kruskal_constrained
from app.services.rng import TrialSeedSchedule, Xoshiro256StarStar
from app.services.worker_pool import LocalWorkerPool, TrialWorkerPool

logger = logging.getLogger(__name__)


class EvolutionEngine:
    """
    Runs the evolutionary loop for one graph and configuration.

    Attributes:
        graph (WeightedGraph): problem instance
        config (EaConfig): run parameters
        worker_pool (TrialWorkerPool): executes PAO trials
        constraint (DegreeConstraint): derived from config.dmax
        schedule (TrialSeedSchedule): derived from config.master_seed
        trials (int): PAO trials per selected tree
        accepted_moves (int): moves applied since the engine was created
    """

    def __init__(self, graph: WeightedGraph, config: EaConfig, worker_pool: TrialWorkerPool):
        self.graph = graph
        self.config = config
        self.worker_pool = worker_pool
        self.constraint: DegreeConstraint = config.constraint
        self.schedule = TrialSeedSchedule(config.master_seed)
        self.trials = config.trials_for(graph.n)
        self.accepted_moves = 0
        self.population: Optional[Population] = None

    def init_population(self) -> Population:
        """Build every individual with constrained Kruskal; ConstructionFailedError propagates"""
        trees = [
            kruskal_constrained(self.graph, self.constraint, self.schedule.init_seed(slot))
            for slot in range(self.config.population_size)
        ]
        population = Population.from_trees(trees)
        logger.info(
            f"Initialised population of {population.size} trees "
            f"(n={self.graph.n}, dmax={self.constraint.dmax}), best weight {population.best.weight}"
        )
        return population

    def select_pair(self, generation: int) -> Tuple[int, int]:
        rng = Xoshiro256StarStar(self.schedule.selection_seed(generation))
        size = self.config.population_size
        i = rng.below(size)
        j = rng.below(size - 1)
        if j >= i:
            j += 1
        return i, j

    async def step(self, population: Population) -> Population:
        """Advance the population by one generation"""
        generation = population.generation + 1
        changes: Dict[int, NdeTree] = {}

        for slot in self.select_pair(generation):
            tree = population.trees[slot]
            result = await self.worker_pool.best_trial(tree, slot, generation, self.trials)
            if result is None or result.move.delta >= 0:
                continue
            moved = apply_move(tree, result.move, self.graph, self.constraint)
            if settings.DEBUG_CHECKS:
                self._check(moved)
            changes[slot] = moved
            self.accepted_moves += 1
            logger.debug(
                f"Generation {generation}: tree {slot} improved by {-result.move.delta} "
                f"(trial {result.trial_index}) to {moved.weight}"
            )

        return population.replace(changes, generation=generation)

    async def run(self, record_trajectory: bool = False, mode: str = "local", satellites: int = 0) -> SolveReport:
        """
        Iterate step() until max_iterations generations ran or the best weight
        reached target_weight. The first warmup_iterations generations are
        excluded from the per-iteration timing.
        """
        population = self.init_population()
        trajectory: List[str] = []
        warmup = min(self.config.warmup_iterations, self.config.max_iterations)
        target = self.config.target_weight

        iterations = 0
        timed_start: Optional[float] = None
        run_start = time.perf_counter()
        while iterations < self.config.max_iterations:
            if target is not None and population.best.weight <= target:
                break
            if iterations == warmup:
                timed_start = time.perf_counter()
            population = await self.step(population)
            iterations += 1
            if record_trajectory:
                trajectory.append(population.digest())
        end = time.perf_counter()

        timed = iterations - warmup if timed_start is not None else 0
        avg_iter_s = (end - timed_start) / timed if timed > 0 else 0.0

        best = population.best
        self._check(best)
        self.population = population

        report = SolveReport(
            mode=mode,
            satellites=satellites,
            n=self.graph.n,
            dmax=self.constraint.dmax,
            population_size=self.config.population_size,
            trials_per_tree=self.trials,
            master_seed=self.config.master_seed,
            best_weight=best.weight,
            best_parents=nde.decode(best),
            best_edges=sorted(best.edges()),
            iterations=iterations,
            timed_iterations=timed,
            avg_iter_s=avg_iter_s,
            total_time_s=end - run_start,
            accepted_moves=self.accepted_moves,
            acceptance_rate=self.accepted_moves / (2 * iterations) if iterations else 0.0,
            trajectory=trajectory,
        )
        logger.info(
            f"Run finished: best weight {report.best_weight} after {iterations} generations, "
            f"{report.avg_iter_s:.6g} s/iteration, acceptance {report.acceptance_rate:.3f}"
        )
        return report

    def _check(self, tree: NdeTree) -> None:
        report = nde.validate(tree, self.graph)
        if not report.ok:
            raise InvalidEncodingError(f"invalid tree in population: {report.violation}")
        if not nde.satisfies(tree, self.constraint):
            raise InvalidEncodingError(f"tree violates dmax={self.constraint.dmax}")


async def solve_local(
    graph: WeightedGraph,
    config: EaConfig,
    threads: int = 1,
    record_trajectory: bool = False,
) -> SolveReport:
    """Run the engine in-process on a LocalWorkerPool"""
    pool = LocalWorkerPool(graph, config.constraint, TrialSeedSchedule(config.master_seed), threads=threads)
    try:
        engine = EvolutionEngine(graph, config, pool)
        return await engine.run(record_trajectory=record_trajectory)
    finally:
        await pool.close()
