"""
Exact reference answers used to validate the evolutionary solver.

mst_weight_reference and mst_weight_prim solve the unconstrained problem;
dcmst_bruteforce solves the degree-constrained one exactly for tiny graphs.
"""

import heapq
import logging
from typing import Iterator, List, Optional, Tuple

from app.core.exceptions import InstanceTooLargeError
from app.models.graph import WeightedGraph
from app.schemas.graph import DegreeConstraint
from app.services.union_find import RollbackUnionFind, UnionFind

logger = logging.getLogger(__name__)

BRUTEFORCE_MAX_NODES = 10


def mst_weight_reference(g: WeightedGraph) -> int:
    """Exact MST weight by classic Kruskal with union-find"""
    components = UnionFind(g.n)
    total = 0
    taken = 0
    for u, v, w in sorted(g.edges, key=lambda e: e[2]):
        if components.union(u, v):
            total += w
            taken += 1
            if taken == g.n - 1:
                break
    return total


def mst_weight_prim(g: WeightedGraph) -> int:
    """Exact MST weight by Prim with a binary heap; independent of Kruskal"""
    visited = [False] * g.n
    heap: List[Tuple[int, int]] = [(0, 0)]
    total = 0
    while heap:
        w, node = heapq.heappop(heap)
        if visited[node]:
            continue
        visited[node] = True
        total += w
        for other, weight in g.adjacency[node]:
            if not visited[other]:
                heapq.heappush(heap, (weight, other))
    return total


def iter_spanning_trees(g: WeightedGraph) -> Iterator[List[Tuple[int, int, int]]]:
    """Every spanning tree of g as an edge list (backtracking include/exclude)"""
    edges = list(g.edges)
    components = RollbackUnionFind(g.n)
    chosen: List[Tuple[int, int, int]] = []
    needed = g.n - 1

    def search(i: int) -> Iterator[List[Tuple[int, int, int]]]:
        if len(chosen) == needed:
            yield list(chosen)
            return
        if len(edges) - i < needed - len(chosen):
            return
        u, v, w = edges[i]
        if components.union(u, v):
            chosen.append(edges[i])
            yield from search(i + 1)
            chosen.pop()
            components.undo()
        yield from search(i + 1)

    yield from search(0)


def dcmst_bruteforce(g: WeightedGraph, c: DegreeConstraint) -> Optional[int]:
    """
    Minimum weight over all spanning trees with every degree <= dmax,
    or None when no such tree exists.

    Exhaustive branch and bound over edges in ascending weight order; a branch
    is cut when the cheapest possible completion cannot beat the incumbent.
    """
    if g.n > BRUTEFORCE_MAX_NODES:
        raise InstanceTooLargeError(
            f"brute force is limited to {BRUTEFORCE_MAX_NODES} nodes, graph has {g.n}"
        )

    edges = sorted(g.edges, key=lambda e: e[2])
    weights = [w for _, _, w in edges]
    needed = g.n - 1
    components = RollbackUnionFind(g.n)
    degrees = [0] * g.n
    best: List[Optional[int]] = [None]

    def search(i: int, taken: int, total: int) -> None:
        if taken == needed:
            if best[0] is None or total < best[0]:
                best[0] = total
            return
        missing = needed - taken
        if len(edges) - i < missing:
            return
        if best[0] is not None and total + sum(weights[i:i + missing]) >= best[0]:
            return
        u, v, w = edges[i]
        if degrees[u] < c.dmax and degrees[v] < c.dmax and components.union(u, v):
            degrees[u] += 1
            degrees[v] += 1
            search(i + 1, taken + 1, total + w)
            degrees[u] -= 1
            degrees[v] -= 1
            components.undo()
        search(i + 1, taken, total)

    search(0, 0, 0)
    logger.debug(f"Brute force n={g.n} dmax={c.dmax}: optimum {best[0]}")
    return best[0]
