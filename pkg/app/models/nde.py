from dataclasses import dataclass
from typing import FrozenSet, List, NamedTuple, Sequence, Tuple

import numpy as np

ROOT_SENTINEL = -1


def _frozen(array: np.ndarray) -> np.ndarray:
    array.flags.writeable = False
    return array


class SubtreeRange(NamedTuple):
    """Contiguous slice [start, end) of entries holding the subtree rooted at entries[start]"""
    start: int
    end: int

    @property
    def size(self) -> int:
        return self.end - self.start


@dataclass(frozen=True, eq=False)
class NdeTree:
    """
    A spanning tree stored as the node-depth encoding: (node, depth) pairs
    in depth-first preorder, so every subtree is a contiguous slice.

    The arrays are read-only; a new NdeTree is built for every change.
    weight and degrees are caches over the implied parent/child edges and
    positions maps a node id to its index in the entry list.

    Two trees are equal when they have the same root and the same edge set;
    sibling order is representation only.
    """

    nodes: np.ndarray
    depths: np.ndarray
    weight: int
    degrees: np.ndarray
    positions: np.ndarray

    @classmethod
    def from_arrays(cls, nodes: np.ndarray, depths: np.ndarray, weight: int, degrees: np.ndarray) -> "NdeTree":
        nodes = np.ascontiguousarray(nodes, dtype=np.int32)
        depths = np.ascontiguousarray(depths, dtype=np.int32)
        positions = np.full(len(nodes), -1, dtype=np.int32)
        in_range = (nodes >= 0) & (nodes < len(nodes))
        positions[nodes[in_range]] = np.flatnonzero(in_range).astype(np.int32)
        return cls(
            nodes=_frozen(nodes),
            depths=_frozen(depths),
            weight=int(weight),
            degrees=_frozen(np.ascontiguousarray(degrees, dtype=np.int32)),
            positions=_frozen(positions),
        )

    @classmethod
    def from_pairs(cls, pairs: Sequence[Tuple[int, int]], weight: int = 0) -> "NdeTree":
        """Raw tree from (node, depth) pairs; caches are not derived (see services.nde.build_tree)"""
        nodes = np.array([node for node, _ in pairs], dtype=np.int32)
        depths = np.array([depth for _, depth in pairs], dtype=np.int32)
        return cls.from_arrays(nodes, depths, weight, np.zeros(len(pairs), dtype=np.int32))

    @property
    def n(self) -> int:
        return len(self.nodes)

    @property
    def root(self) -> int:
        return int(self.nodes[0])

    def pairs(self) -> List[Tuple[int, int]]:
        return list(zip(self.nodes.tolist(), self.depths.tolist()))

    def parent_index(self, index: int) -> int:
        """Index of the parent entry: nearest preceding entry one level up"""
        if index == 0:
            return ROOT_SENTINEL
        target = self.depths[index] - 1
        return int(np.flatnonzero(self.depths[:index] == target)[-1])

    def parent_indices(self) -> np.ndarray:
        """Parent index for every entry, ROOT_SENTINEL for the root; assumes a valid depth sequence"""
        parents = np.full(self.n, ROOT_SENTINEL, dtype=np.int32)
        stack: List[int] = []
        for i, depth in enumerate(self.depths.tolist()):
            del stack[depth:]
            if stack:
                parents[i] = stack[-1]
            stack.append(i)
        return parents

    def edges(self) -> FrozenSet[Tuple[int, int]]:
        parents = self.parent_indices()
        nodes = self.nodes
        result = set()
        for i in range(1, self.n):
            u, v = int(nodes[parents[i]]), int(nodes[i])
            result.add((u, v) if u < v else (v, u))
        return frozenset(result)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NdeTree):
            return NotImplemented
        return self.root == other.root and self.edges() == other.edges()

    def __hash__(self) -> int:
        return hash((self.root, self.edges()))
