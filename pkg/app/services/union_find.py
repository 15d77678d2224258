from typing import List, Tuple


class UnionFind:
    """Disjoint sets over node ids 0..n-1 with union by size and path halving"""

    __slots__ = ("parent", "size", "components")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.components = n

    def find(self, k: int) -> int:
        parent = self.parent
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    def union(self, a: int, b: int) -> bool:
        """Merge the sets of a and b; False if they were already joined"""
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False
        if self.size[root_a] < self.size[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.size[root_a] += self.size[root_b]
        self.components -= 1
        return True


class RollbackUnionFind:
    """
    Union-find without path compression whose unions can be undone in LIFO
    order. Used by the backtracking spanning tree enumeration.
    """

    __slots__ = ("parent", "size", "_history")

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self._history: List[Tuple[int, int]] = []

    def find(self, k: int) -> int:
        while self.parent[k] != k:
            k = self.parent[k]
        return k

    def union(self, a: int, b: int) -> bool:
        root_a = self.find(a)
        root_b = self.find(b)
        if root_a == root_b:
            return False
        if self.size[root_a] < self.size[root_b]:
            root_a, root_b = root_b, root_a
        self.parent[root_b] = root_a
        self.size[root_a] += self.size[root_b]
        self._history.append((root_a, root_b))
        return True

    def undo(self) -> None:
        root_a, root_b = self._history.pop()
        self.parent[root_b] = root_b
        self.size[root_a] -= self.size[root_b]
