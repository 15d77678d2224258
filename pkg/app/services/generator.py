"""
Random problem instances and random spanning trees.

Both are pure functions of their arguments: every draw comes from the
repo-wide Xoshiro256StarStar generator.
"""

import logging
import math
from typing import List, Set, Tuple

from app.core.exceptions import InvalidParameterError
from app.models.graph import WeightedGraph
from app.models.nde import ROOT_SENTINEL
from app.services.rng import Xoshiro256StarStar

logger = logging.getLogger(__name__)

MAX_GENERATED_WEIGHT = 10**6


def target_edge_count(n: int, density: float) -> int:
    """round(density * n(n-1)/2), rounding halves up"""
    return int(math.floor(density * n * (n - 1) / 2 + 0.5))


def generate_random_graph(n: int, density: float, seed: int) -> WeightedGraph:
    """
    Connected random graph with round(density * n(n-1)/2) edges.

    A random spanning tree over a shuffled node permutation comes first, so
    the result is connected without rejection; extra distinct edges are then
    added until the edge count is reached. Weights are uniform in [1, 10^6].
    """
    if n < 2:
        raise InvalidParameterError(f"n must be at least 2, got {n}")
    if not 0.0 < density <= 1.0:
        raise InvalidParameterError(f"density must be in (0, 1], got {density}")
    m = target_edge_count(n, density)
    if m < n - 1:
        raise InvalidParameterError(
            f"density {density} gives {m} edges, a connected graph on {n} nodes needs {n - 1}"
        )

    rng = Xoshiro256StarStar(seed)
    order = rng.permutation(n)
    present: Set[Tuple[int, int]] = set()
    edges: List[Tuple[int, int, int]] = []

    def add(u: int, v: int) -> None:
        key = (u, v) if u < v else (v, u)
        present.add(key)
        edges.append((key[0], key[1], 1 + rng.below(MAX_GENERATED_WEIGHT)))

    for i in range(1, n):
        add(order[i], order[rng.below(i)])

    extra = m - (n - 1)
    available = n * (n - 1) // 2 - (n - 1)
    if extra * 2 > available:
        # Dense: draw the extra edges without replacement from the explicit complement.
        pool = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
        for i in range(extra):
            j = i + rng.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
            add(*pool[i])
    else:
        while len(edges) < m:
            u = rng.below(n)
            v = rng.below(n)
            if u != v and ((u, v) if u < v else (v, u)) not in present:
                add(u, v)

    logger.debug(f"Generated graph n={n} density={density} seed={seed}: {len(edges)} edges")
    return WeightedGraph.from_edges(n, edges)


def random_spanning_tree(g: WeightedGraph, seed: int) -> List[int]:
    """
    Uniformly random spanning tree of g (Wilson's loop-erased random walks),
    returned as a parent array rooted at a random node.
    """
    rng = Xoshiro256StarStar(seed)
    n = g.n
    root = rng.below(n)
    in_tree = [False] * n
    in_tree[root] = True
    parents = [ROOT_SENTINEL] * n
    successor = [ROOT_SENTINEL] * n

    for start in rng.permutation(n):
        node = start
        while not in_tree[node]:
            neighbors = g.adjacency[node]
            successor[node] = neighbors[rng.below(len(neighbors))][0]
            node = successor[node]
        node = start
        while not in_tree[node]:
            parents[node] = successor[node]
            in_tree[node] = True
            node = successor[node]
    return parents
