import math
from typing import List, Optional, Tuple

from pydantic import Field

from app.core.config import settings
from app.schemas.base import BaseSchema, FrozenSchema
from app.schemas.graph import DegreeConstraint

# Seed derivation packs tree slot and trial index into 16 bits each.
MAX_POPULATION = 4096
MAX_TRIALS = 4096


class EaConfig(FrozenSchema):
    '''Parameters of one evolutionary run; the run is a pure function of these and the graph'''
    dmax: int = Field(ge=1)
    population_size: int = Field(default_factory=lambda: settings.DEFAULT_POPULATION_SIZE, ge=2, le=MAX_POPULATION)
    trials_per_tree: Optional[int] = Field(
        default=None, ge=1, le=MAX_TRIALS,
        description="PAO trials per selected tree each generation; defaults to ceil(sqrt(n))",
    )
    max_iterations: int = Field(default=1000, ge=0)
    warmup_iterations: int = Field(default=0, ge=0, description="Generations run before timing starts")
    target_weight: Optional[int] = Field(default=None, ge=0)
    master_seed: int = Field(default=0, ge=0, lt=2**64)

    @property
    def constraint(self) -> DegreeConstraint:
        return DegreeConstraint(dmax=self.dmax)

    def trials_for(self, n: int) -> int:
        if self.trials_per_tree is not None:
            return self.trials_per_tree
        return min(MAX_TRIALS, math.isqrt(n - 1) + 1 if n > 1 else 1)


class SolveReport(BaseSchema):
    '''Outcome of a run: best tree, its weight and per-iteration timing'''
    mode: str = "local"
    satellites: int = 0
    satellite_workers: List[int] = Field(default_factory=list, description="Worker threads each satellite announced")
    n: int
    dmax: int
    population_size: int
    trials_per_tree: int
    master_seed: int
    best_weight: int
    best_parents: List[int]
    best_edges: List[Tuple[int, int]]
    iterations: int = Field(ge=0, description="Generations executed, warm-up included")
    timed_iterations: int = Field(ge=0)
    avg_iter_s: float = Field(ge=0.0)
    total_time_s: float = Field(ge=0.0)
    accepted_moves: int = Field(ge=0)
    acceptance_rate: float = Field(ge=0.0, le=1.0, description="Accepted moves per tree trial set")
    trajectory: List[str] = Field(default_factory=list, description="Population digest after each generation")
