"""
Invariant and oracle suite for one instance.

Every check yields a CheckResult; nothing here raises on a failed check.
assert_verified() turns a failed suite into VerificationFailedError.
"""

import logging
from enum import Enum
from typing import List, Optional

from pydantic import Field

from app.core.exceptions import ConstructionFailedError, VerificationFailedError
from app.models.graph import WeightedGraph
from app.models.nde import NdeTree
from app.schemas.base import BaseSchema
from app.schemas.ea import EaConfig
from app.schemas.graph import DegreeConstraint
from app.services import nde
from app.services.engine import solve_local
from app.services.generator import random_spanning_tree
from app.services.operators import apply_move, kruskal_constrained, pao
from app.services.oracles import BRUTEFORCE_MAX_NODES, dcmst_bruteforce, mst_weight_prim, mst_weight_reference
from app.services.rng import splitmix64

logger = logging.getLogger(__name__)


class CheckStatus(str, Enum):
    PASSED = "passed"
    FAILED = "failed"
    SKIPPED = "skipped"


class CheckResult(BaseSchema):
    name: str
    status: CheckStatus
    detail: str = ""

    def __str__(self) -> str:
        suffix = f": {self.detail}" if self.detail else ""
        return f"[{self.status.value.upper():7}] {self.name}{suffix}"


class VerifyOptions(BaseSchema):
    '''Effort knobs for the suite; defaults finish in seconds for n in the low thousands'''
    seed: int = Field(default=0, ge=0, lt=2**64)
    round_trips: int = Field(default=20, ge=1)
    pao_trials: int = Field(default=500, ge=1)
    ea_iterations: int = Field(default=500, ge=0)
    population_size: int = Field(default=8, ge=2)


def _result(name: str, ok: bool, detail: str = "") -> CheckResult:
    return CheckResult(name=name, status=CheckStatus.PASSED if ok else CheckStatus.FAILED, detail=detail)


def _skipped(name: str, detail: str) -> CheckResult:
    return CheckResult(name=name, status=CheckStatus.SKIPPED, detail=detail)


def check_graph(g: WeightedGraph) -> CheckResult:
    seen = set()
    for u, v, _ in g.edges:
        if u == v:
            return _result("graph_invariants", False, f"self-loop at {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            return _result("graph_invariants", False, f"duplicate edge {key}")
        seen.add(key)
    for u, neighbors in enumerate(g.adjacency):
        for v, w in neighbors:
            if not any(x == u and y == w for x, y in g.adjacency[v]):
                return _result("graph_invariants", False, f"adjacency not symmetric at ({u}, {v})")
    degree_sum = sum(len(neighbors) for neighbors in g.adjacency)
    if degree_sum != 2 * g.edge_count:
        return _result("graph_invariants", False, "adjacency does not match the edge list")
    return _result("graph_invariants", True, f"n={g.n}, {g.edge_count} edges")


def check_round_trips(g: WeightedGraph, options: VerifyOptions) -> CheckResult:
    for k in range(options.round_trips):
        parents = random_spanning_tree(g, splitmix64(options.seed + k))
        tree = nde.encode(parents, g)
        if nde.decode(tree) != parents:
            return _result("nde_round_trip", False, f"decode(encode(p)) != p for tree {k}")
        again = nde.encode(nde.decode(tree), g)
        if again.edges() != tree.edges() or again.weight != tree.weight:
            return _result("nde_round_trip", False, f"encode(decode(t)) changed tree {k}")
        if not nde.validate(tree, g).ok:
            return _result("nde_round_trip", False, f"encoded tree {k} fails validation")
    return _result("nde_round_trip", True, f"{options.round_trips} random spanning trees")


def check_pao_safety(tree: NdeTree, g: WeightedGraph, c: DegreeConstraint, options: VerifyOptions) -> CheckResult:
    applied = 0
    current = tree
    for k in range(options.pao_trials):
        move = pao(current, g, c, splitmix64(options.seed ^ (k + 1)))
        if move is None:
            continue
        moved = apply_move(current, move, g, c)
        report = nde.validate(moved, g)
        if not report.ok:
            return _result("pao_safety", False, f"move {k} broke the encoding: {report.violation}")
        if not nde.satisfies(moved, c):
            return _result("pao_safety", False, f"move {k} violated dmax={c.dmax}")
        if len(current.edges() ^ moved.edges()) != 2:
            return _result("pao_safety", False, f"move {k} did not change exactly one edge")
        if moved.weight != current.weight + move.delta:
            return _result("pao_safety", False, f"move {k} delta accounting is off")
        current = moved
        applied += 1
    return _result("pao_safety", True, f"{applied} of {options.pao_trials} trials applied")


async def run_verify(g: WeightedGraph, c: DegreeConstraint, options: Optional[VerifyOptions] = None) -> List[CheckResult]:
    options = options or VerifyOptions()
    results = [check_graph(g)]

    mst = mst_weight_reference(g)
    prim = mst_weight_prim(g)
    results.append(_result("kruskal_matches_prim", mst == prim, f"kruskal={mst}, prim={prim}"))

    unconstrained = kruskal_constrained(g, DegreeConstraint.unconstrained(g.n), options.seed)
    results.append(_result(
        "unconstrained_kruskal_is_mst",
        unconstrained.weight == mst,
        f"tree={unconstrained.weight}, mst={mst}",
    ))

    results.append(check_round_trips(g, options))

    try:
        tree: Optional[NdeTree] = kruskal_constrained(g, c, options.seed)
    except ConstructionFailedError as e:
        tree = None
        results.append(_skipped("constrained_tree", str(e)))
    if tree is not None:
        report = nde.validate(tree, g)
        results.append(_result(
            "constrained_tree",
            report.ok and nde.satisfies(tree, c) and tree.weight >= mst,
            f"weight={tree.weight}" if report.ok else str(report.violation),
        ))
        results.append(check_pao_safety(tree, g, c, options))

    ea_weight: Optional[int] = None
    if tree is None:
        results.append(_skipped("ea_lower_bound", "no initial tree"))
    else:
        cfg = EaConfig(
            dmax=c.dmax,
            population_size=options.population_size,
            max_iterations=options.ea_iterations,
            master_seed=options.seed,
        )
        try:
            solved = await solve_local(g, cfg)
        except ConstructionFailedError as e:
            results.append(_skipped("ea_lower_bound", str(e)))
        else:
            ea_weight = solved.best_weight
            results.append(_result("ea_lower_bound", ea_weight >= mst, f"ea={ea_weight}, mst={mst}"))

    if g.n > BRUTEFORCE_MAX_NODES:
        results.append(_skipped("bruteforce_oracle", f"n={g.n} exceeds {BRUTEFORCE_MAX_NODES}"))
    else:
        optimum = dcmst_bruteforce(g, c)
        if optimum is None:
            results.append(_result(
                "bruteforce_oracle",
                tree is None,
                "infeasible" if tree is None else "oracle says infeasible but a tree was built",
            ))
        else:
            ok = mst <= optimum and (ea_weight is None or ea_weight >= optimum)
            if tree is not None:
                ok = ok and tree.weight >= optimum
            results.append(_result("bruteforce_oracle", ok, f"optimum={optimum}, ea={ea_weight}, mst={mst}"))

    failed = sum(r.status == CheckStatus.FAILED for r in results)
    logger.info(f"Verification of n={g.n}, dmax={c.dmax}: {len(results)} checks, {failed} failed")
    return results


def assert_verified(results: List[CheckResult]) -> None:
    failed = [r for r in results if r.status == CheckStatus.FAILED]
    if failed:
        raise VerificationFailedError("; ".join(str(r) for r in failed))
