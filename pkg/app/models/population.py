import hashlib
from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

from app.models.nde import NdeTree


def best_of(trees: Sequence[NdeTree]) -> int:
    """Index of the minimum-weight tree, lowest index on ties"""
    weights = [t.weight for t in trees]
    return weights.index(min(weights))


@dataclass(frozen=True)
class Population:
    """
    The forest of candidate spanning trees over one shared graph.

    Immutable: an evolution step returns a new Population that shares the
    trees it did not change.
    """

    trees: Tuple[NdeTree, ...]
    best_index: int
    generation: int = 0

    @classmethod
    def from_trees(cls, trees: Sequence[NdeTree], generation: int = 0) -> "Population":
        return cls(trees=tuple(trees), best_index=best_of(trees), generation=generation)

    @property
    def size(self) -> int:
        return len(self.trees)

    @property
    def best(self) -> NdeTree:
        return self.trees[self.best_index]

    def replace(self, changes: dict, generation: int) -> "Population":
        trees = list(self.trees)
        for slot, tree in changes.items():
            trees[slot] = tree
        return Population.from_trees(trees, generation=generation)

    def digest(self) -> str:
        """SHA-256 over the generation and every tree's (node, depth) words"""
        h = hashlib.sha256()
        h.update(np.array([self.generation], dtype='<u8').tobytes())
        for tree in self.trees:
            words = (tree.depths.astype('<u8') << np.uint64(32)) | tree.nodes.astype('<u8')
            h.update(words.astype('<u8').tobytes())
        return h.hexdigest()
