"""
PAO trial execution and reduction shared by every worker pool.

A trial is identified by (generation, tree_slot, trial_index); its seed comes
from the TrialSeedSchedule. Trials are reduced by (delta, trial_index), a
total order, so any partition of a trial range reduced in any grouping
yields the same winner.
"""

from typing import Iterable, Optional

from app.models.graph import WeightedGraph
from app.models.nde import NdeTree
from app.schemas.graph import DegreeConstraint
from app.schemas.move import TrialResult
from app.services.operators import pao
from app.services.rng import TrialSeedSchedule


def reduce_trials(results: Iterable[Optional[TrialResult]]) -> Optional[TrialResult]:
    """Most negative delta wins, lowest trial_index breaks ties; None entries are NoMoveFound"""
    best: Optional[TrialResult] = None
    for result in results:
        if result is not None and (best is None or result.sort_key < best.sort_key):
            best = result
    return best


def run_trial_range(
    tree: NdeTree,
    g: WeightedGraph,
    c: DegreeConstraint,
    schedule: TrialSeedSchedule,
    generation: int,
    tree_slot: int,
    start: int,
    count: int,
) -> Optional[TrialResult]:
    """Run trials start..start+count-1 on tree and return the best one"""
    best: Optional[TrialResult] = None
    for trial_index in range(start, start + count):
        seed = schedule.trial_seed(generation, tree_slot, trial_index)
        move = pao(tree, g, c, seed)
        if move is None:
            continue
        if best is None or move.delta < best.move.delta:
            best = TrialResult(trial_index=trial_index, move=move)
    return best
