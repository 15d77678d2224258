"""
Tree construction and mutation operators.

kruskal_constrained builds the initial individuals; pao proposes a Preserve
Ancestor Operator move and apply_move performs it on a copy of the tree.
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from app.core.config import settings
from app.core.exceptions import ConstructionFailedError, InvalidEncodingError, StaleMoveError
from app.models.graph import WeightedGraph
from app.models.nde import NdeTree
from app.schemas.graph import DegreeConstraint
from app.schemas.move import PaoMove
from app.services import nde
from app.services.rng import Xoshiro256StarStar
from app.services.union_find import UnionFind

logger = logging.getLogger(__name__)

KRUSKAL_MAX_ATTEMPTS = 32
PAO_MAX_ATTEMPTS = 16


def kruskal_constrained(g: WeightedGraph, c: DegreeConstraint, seed: int) -> NdeTree:
    """
    Kruskal's scan with an extra rejection rule: an edge is skipped when it
    would push either endpoint above dmax. Equal weights are scanned in a
    seed-shuffled order. The greedy can dead-end on feasible instances, so it
    is retried with a fresh shuffle before giving up.
    """
    rng = Xoshiro256StarStar(seed)
    needed = g.n - 1

    for attempt in range(1, KRUSKAL_MAX_ATTEMPTS + 1):
        order = list(g.edges)
        rng.shuffle(order)
        order.sort(key=lambda e: e[2])

        components = UnionFind(g.n)
        degrees = [0] * g.n
        chosen: List[Tuple[int, int]] = []
        for u, v, _ in order:
            if degrees[u] >= c.dmax or degrees[v] >= c.dmax:
                continue
            if components.union(u, v):
                degrees[u] += 1
                degrees[v] += 1
                chosen.append((u, v))
                if len(chosen) == needed:
                    break

        if len(chosen) == needed:
            if attempt > 1:
                logger.debug(f"Constrained Kruskal succeeded on attempt {attempt}")
            return nde.encode_edges(chosen, g, root=0)

    raise ConstructionFailedError(
        f"constrained Kruskal found no spanning tree with dmax={c.dmax} "
        f"after {KRUSKAL_MAX_ATTEMPTS} attempts"
    )


def pao(t: NdeTree, g: WeightedGraph, c: DegreeConstraint, seed: int) -> Optional[PaoMove]:
    """
    Draw one Preserve Ancestor Operator move, or None when no move was found.

    A non-root entry p is drawn; the candidate attach nodes are graph
    neighbours of nodes[p] outside p's subtree, other than its current
    parent, with spare degree. One candidate is drawn uniformly. Up to
    PAO_MAX_ATTEMPTS prune points are tried.
    """
    n = t.n
    if n < 2:
        return None
    rng = Xoshiro256StarStar(seed)
    positions = t.positions
    degrees = t.degrees

    for _ in range(PAO_MAX_ATTEMPTS):
        p = 1 + rng.below(n - 1)
        prune_node = int(t.nodes[p])
        start, end = nde.subtree_range(t, p)
        old_parent = int(t.nodes[t.parent_index(p)])

        candidates = [
            (a, w)
            for a, w in g.adjacency[prune_node]
            if a != old_parent
            and not start <= positions[a] < end
            and degrees[a] < c.dmax
        ]
        if not candidates:
            continue

        attach_node, attach_weight = candidates[rng.below(len(candidates))]
        return PaoMove(
            prune_index=p,
            prune_node=prune_node,
            old_parent=old_parent,
            attach_node=attach_node,
            delta=attach_weight - g.weight(old_parent, prune_node),
            seed=seed,
        )
    return None


def apply_move(
    t: NdeTree,
    m: PaoMove,
    g: WeightedGraph,
    c: Optional[DegreeConstraint] = None,
) -> NdeTree:
    """
    Return a new tree with the subtree at m.prune_index detached and
    re-inserted as the first child of m.attach_node; t is left unchanged.
    Raises StaleMoveError when m does not describe a legal move on t.
    """
    n = t.n
    p = m.prune_index
    if not 1 <= p < n or int(t.nodes[p]) != m.prune_node:
        raise StaleMoveError(f"entry {p} does not hold node {m.prune_node}")
    if int(t.nodes[t.parent_index(p)]) != m.old_parent:
        raise StaleMoveError(f"node {m.prune_node} is no longer a child of {m.old_parent}")
    if not 0 <= m.attach_node < n or m.attach_node == m.old_parent:
        raise StaleMoveError(f"attach node {m.attach_node} is not a legal target")
    start, end = nde.subtree_range(t, p)
    attach_index = int(t.positions[m.attach_node])
    if start <= attach_index < end:
        raise StaleMoveError(f"attach node {m.attach_node} lies inside the moved subtree")
    if not g.has_edge(m.attach_node, m.prune_node):
        raise StaleMoveError(f"({m.attach_node}, {m.prune_node}) is not an edge of the graph")
    if c is not None and t.degrees[m.attach_node] >= c.dmax:
        raise StaleMoveError(f"attach node {m.attach_node} has no spare degree under dmax={c.dmax}")
    delta = g.weight(m.attach_node, m.prune_node) - g.weight(m.old_parent, m.prune_node)
    if delta != m.delta:
        raise StaleMoveError(f"move delta {m.delta} does not match the tree ({delta})")

    slice_nodes = t.nodes[start:end]
    slice_depths = t.depths[start:end] - t.depths[p] + t.depths[attach_index] + 1
    rest_nodes = np.concatenate((t.nodes[:start], t.nodes[end:]))
    rest_depths = np.concatenate((t.depths[:start], t.depths[end:]))
    insert_at = (attach_index if attach_index < start else attach_index - (end - start)) + 1

    nodes = np.concatenate((rest_nodes[:insert_at], slice_nodes, rest_nodes[insert_at:]))
    depths = np.concatenate((rest_depths[:insert_at], slice_depths, rest_depths[insert_at:]))
    degrees = t.degrees.copy()
    degrees[m.old_parent] -= 1
    degrees[m.attach_node] += 1

    moved = NdeTree.from_arrays(nodes, depths, t.weight + m.delta, degrees)

    if settings.DEBUG_CHECKS:
        report = nde.validate(moved, g)
        if not report.ok:
            raise InvalidEncodingError(f"move produced an invalid tree: {report.violation}")
        if c is not None and not nde.satisfies(moved, c):
            raise InvalidEncodingError(f"move violated dmax={c.dmax}")
    return moved
