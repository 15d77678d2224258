from dataclasses import dataclass, field
from typing import Dict, Iterable, Tuple

from app.core.exceptions import GraphValidationError
from app.services.union_find import UnionFind

MAX_WEIGHT = (1 << 32) - 1

Edge = Tuple[int, int, int]
Neighbor = Tuple[int, int]


@dataclass(frozen=True)
class WeightedGraph:
    """
    Undirected graph with non-negative 32-bit integer weights.

    Instances are immutable and always valid: no self-loops, no duplicate
    undirected edges, connected, n >= 2. Build them with from_edges().

    Attributes:
        n: node count, nodes are 0..n-1
        edges: (u, v, w) records in input order
        adjacency: per node, (neighbor, weight) pairs sorted by neighbor id
    """

    n: int
    edges: Tuple[Edge, ...]
    adjacency: Tuple[Tuple[Neighbor, ...], ...] = field(compare=False, repr=False)
    _weights: Dict[Tuple[int, int], int] = field(compare=False, repr=False)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge]) -> "WeightedGraph":
        if n < 2:
            raise GraphValidationError(f"graph needs at least 2 nodes, got {n}")

        records = []
        weights: Dict[Tuple[int, int], int] = {}
        for u, v, w in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) references a node outside 0..{n - 1}")
            if u == v:
                raise GraphValidationError(f"self-loop on node {u}")
            if not 0 <= w <= MAX_WEIGHT:
                raise GraphValidationError(f"weight {w} of edge ({u}, {v}) outside 0..{MAX_WEIGHT}")
            key = (u, v) if u < v else (v, u)
            if key in weights:
                raise GraphValidationError(f"duplicate edge ({u}, {v})")
            weights[key] = w
            records.append((u, v, w))

        components = UnionFind(n)
        for u, v, _ in records:
            components.union(u, v)
        if components.components != 1:
            raise GraphValidationError(f"graph is disconnected ({components.components} components)")

        neighbors = [[] for _ in range(n)]
        for u, v, w in records:
            neighbors[u].append((v, w))
            neighbors[v].append((u, w))
        adjacency = tuple(tuple(sorted(row)) for row in neighbors)

        return cls(n=n, edges=tuple(records), adjacency=adjacency, _weights=weights)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self._weights

    def weight(self, u: int, v: int) -> int:
        """Weight of edge (u, v); KeyError if the graph has no such edge"""
        return self._weights[(u, v) if u < v else (v, u)]
