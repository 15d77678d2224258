"""
Node-Depth Encoding operations.

A spanning tree is a list of (node, depth) pairs in depth-first preorder.
The parent of entry i is the nearest preceding entry whose depth is one
less, and the subtree rooted at entry p is the slice that follows p until
the depth falls back to depth[p] or below.
"""

import logging
from typing import List, Optional, Sequence, Tuple

import numpy as np

from app.core.exceptions import InvalidEncodingError, NotATreeError, NotSpanningError
from app.models.graph import WeightedGraph
from app.models.nde import ROOT_SENTINEL, NdeTree, SubtreeRange
from app.schemas.graph import DegreeConstraint
from app.schemas.nde import TreeReport, Violation, ViolationKind

logger = logging.getLogger(__name__)


def encode(parents: Sequence[int], g: WeightedGraph) -> NdeTree:
    """
    Encode a parent array (ROOT_SENTINEL marks the root) as an NdeTree.

    Children are visited in ascending node id, so the encoding of a given
    rooted tree is canonical.
    """
    n = g.n
    if len(parents) != n:
        raise NotSpanningError(f"parent array covers {len(parents)} nodes, graph has {n}")

    roots = [v for v, p in enumerate(parents) if p == ROOT_SENTINEL]
    if len(roots) != 1:
        raise NotATreeError(f"expected exactly one root, found {len(roots)}")
    root = roots[0]

    children: List[List[int]] = [[] for _ in range(n)]
    degrees = np.zeros(n, dtype=np.int32)
    weight = 0
    for v, p in enumerate(parents):
        if p == ROOT_SENTINEL:
            continue
        if not 0 <= p < n or p == v:
            raise NotATreeError(f"node {v} has invalid parent {p}")
        if not g.has_edge(p, v):
            raise NotSpanningError(f"tree edge ({p}, {v}) is not an edge of the graph")
        children[p].append(v)
        degrees[p] += 1
        degrees[v] += 1
        weight += g.weight(p, v)

    nodes = np.empty(n, dtype=np.int32)
    depths = np.empty(n, dtype=np.int32)
    count = 0
    stack: List[Tuple[int, int]] = [(root, 0)]
    while stack:
        node, depth = stack.pop()
        nodes[count] = node
        depths[count] = depth
        count += 1
        for child in reversed(children[node]):
            stack.append((child, depth + 1))

    if count != n:
        raise NotATreeError(f"parent array contains a cycle ({n - count} nodes unreachable from root {root})")

    return NdeTree.from_arrays(nodes, depths, weight, degrees)


def encode_edges(edges: Sequence[Tuple[int, int]], g: WeightedGraph, root: int = 0) -> NdeTree:
    """Encode an undirected tree edge list, rooted at root"""
    n = g.n
    if len(edges) != n - 1:
        raise NotATreeError(f"a spanning tree of {n} nodes has {n - 1} edges, got {len(edges)}")
    neighbors: List[List[int]] = [[] for _ in range(n)]
    for u, v in edges:
        neighbors[u].append(v)
        neighbors[v].append(u)

    parents = [ROOT_SENTINEL] * n
    seen = [False] * n
    seen[root] = True
    frontier = [root]
    while frontier:
        node = frontier.pop()
        for other in neighbors[node]:
            if not seen[other]:
                seen[other] = True
                parents[other] = node
                frontier.append(other)
    if not all(seen):
        raise NotSpanningError("edge list does not connect every node")
    return encode(parents, g)


def check_depth_sequence(depths: np.ndarray) -> None:
    """Raise InvalidEncodingError unless depths is a valid preorder depth sequence"""
    if len(depths) == 0 or depths[0] != 0:
        raise InvalidEncodingError("first entry must be the root at depth 0")
    rest = depths[1:]
    bad = np.flatnonzero((rest < 1) | (rest > depths[:-1] + 1))
    if bad.size:
        i = int(bad[0]) + 1
        raise InvalidEncodingError(
            f"invalid depth step at index {i}: {int(depths[i - 1])} -> {int(depths[i])}"
        )


def decode(t: NdeTree) -> List[int]:
    """Parent array of the encoded tree, ROOT_SENTINEL for the root"""
    check_depth_sequence(t.depths)
    parent_idx = t.parent_indices()
    parents = [ROOT_SENTINEL] * t.n
    nodes = t.nodes.tolist()
    for i in range(1, t.n):
        parents[nodes[i]] = nodes[parent_idx[i]]
    return parents


def build_tree(nodes: np.ndarray, depths: np.ndarray, g: WeightedGraph) -> NdeTree:
    """NdeTree from raw arrays with weight and degree caches derived from g"""
    if len(nodes) != g.n or len(depths) != g.n:
        raise InvalidEncodingError(f"expected {g.n} entries, got {len(nodes)}")
    check_depth_sequence(np.asarray(depths))
    nodes = np.asarray(nodes)
    if nodes.min() < 0 or nodes.max() >= g.n or np.any(np.bincount(nodes, minlength=g.n) != 1):
        raise InvalidEncodingError("entries must hold every node id exactly once")
    raw = NdeTree.from_arrays(nodes, depths, 0, np.zeros(g.n, dtype=np.int32))
    parent_idx = raw.parent_indices()
    node_list = raw.nodes.tolist()
    weight = 0
    degrees = np.zeros(g.n, dtype=np.int32)
    for i in range(1, g.n):
        u, v = node_list[parent_idx[i]], node_list[i]
        try:
            weight += g.weight(u, v)
        except KeyError:
            raise InvalidEncodingError(f"implied edge ({u}, {v}) is not an edge of the graph") from None
        degrees[u] += 1
        degrees[v] += 1
    return NdeTree.from_arrays(raw.nodes, raw.depths, weight, degrees)


def subtree_range(t: NdeTree, p: int) -> SubtreeRange:
    """Slice of entries forming the subtree rooted at index p"""
    tail = t.depths[p + 1:] <= t.depths[p]
    if tail.size:
        first = int(tail.argmax())
        if tail[first]:
            return SubtreeRange(p, p + 1 + first)
    return SubtreeRange(p, t.n)


def satisfies(t: NdeTree, c: DegreeConstraint) -> bool:
    return t.n == 0 or int(t.degrees.max()) <= c.dmax


def validate(t: NdeTree, g: WeightedGraph) -> TreeReport:
    """Check every NdeTree invariant against g and report the first violation"""

    def fail(kind: ViolationKind, detail: str, index: Optional[int] = None) -> TreeReport:
        return TreeReport(violation=Violation(kind=kind, index=index, detail=detail))

    n = g.n
    if t.n != n or len(t.depths) != n or len(t.degrees) != n:
        return fail(ViolationKind.LENGTH_MISMATCH, f"tree has {t.n} entries, graph has {n} nodes")

    nodes = t.nodes.tolist()
    depths = t.depths.tolist()
    if depths[0] != 0:
        return fail(ViolationKind.ROOT_DEPTH, f"root depth is {depths[0]}", 0)

    seen = [False] * n
    for i, node in enumerate(nodes):
        if not 0 <= node < n:
            return fail(ViolationKind.NODE_OUT_OF_RANGE, f"node {node} outside 0..{n - 1}", i)
        if seen[node]:
            return fail(ViolationKind.DUPLICATE_NODE, f"DuplicateNode({node})", i)
        seen[node] = True

    for i in range(1, n):
        if not 1 <= depths[i] <= depths[i - 1] + 1:
            return fail(ViolationKind.DEPTH_STEP, f"depth {depths[i - 1]} -> {depths[i]}", i)

    parent_idx = t.parent_indices()
    weight = 0
    degrees = [0] * n
    for i in range(1, n):
        u, v = nodes[parent_idx[i]], nodes[i]
        if not g.has_edge(u, v):
            return fail(ViolationKind.NOT_A_GRAPH_EDGE, f"NotAGraphEdge({u},{v})", i)
        weight += g.weight(u, v)
        degrees[u] += 1
        degrees[v] += 1

    if weight != t.weight:
        return fail(ViolationKind.WEIGHT_MISMATCH, f"cached weight {t.weight}, recomputed {weight}")
    cached = t.degrees.tolist()
    for node in range(n):
        if cached[node] != degrees[node]:
            return fail(
                ViolationKind.DEGREE_MISMATCH,
                f"node {node}: cached degree {cached[node]}, recomputed {degrees[node]}",
                t.positions[node].item(),
            )
    return TreeReport()


def tree_to_words(t: NdeTree) -> np.ndarray:
    """Wire layout: one 64-bit word per entry, depth in the high 32 bits, node id in the low 32"""
    return (t.depths.astype(np.uint64) << np.uint64(32)) | t.nodes.astype(np.uint64)


def tree_from_words(words: np.ndarray, g: WeightedGraph) -> NdeTree:
    words = np.asarray(words, dtype=np.uint64)
    nodes = (words & np.uint64(0xFFFFFFFF)).astype(np.int64)
    depths = (words >> np.uint64(32)).astype(np.int64)
    if nodes.size and (nodes.max() >= g.n or depths.max() >= g.n):
        raise InvalidEncodingError("tree word references a node or depth outside the graph")
    return build_tree(nodes.astype(np.int32), depths.astype(np.int32), g)
