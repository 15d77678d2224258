import itertools

import pytest

from app.core.exceptions import ConstructionFailedError, SolverError, StaleMoveError
from app.models.graph import WeightedGraph
from app.schemas.graph import DegreeConstraint
from app.schemas.move import PaoMove
from app.services import nde
from app.services.generator import generate_random_graph
from app.services.operators import apply_move, kruskal_constrained, pao
from app.services.oracles import mst_weight_reference
from app.services.rng import Xoshiro256StarStar, splitmix64

def _rooted_trees(g):
    """Every spanning tree of g under every root, as parent arrays"""
    for parents in itertools.product(range(-1, g.n), repeat=g.n):
        try:
            yield nde.encode(list(parents), g)
        except SolverError:
            continue

def _check_move(t, move, g, c):
    moved = apply_move(t, move, g, c)
    assert nde.validate(moved, g).ok
    assert nde.satisfies(moved, c)
    assert len(t.edges() ^ moved.edges()) == 2
    assert moved.weight == t.weight + move.delta
    return moved

def test_kruskal_unconstrained_is_mst(graph_16):
    """Test dmax = n-1 reproduces the MST weight"""
    t = kruskal_constrained(graph_16, DegreeConstraint.unconstrained(16), seed=1)
    assert nde.validate(t, graph_16).ok
    assert t.weight == mst_weight_reference(graph_16)
    assert t.root == 0

def test_kruskal_unconstrained_matches_reference_on_100_graphs():
    """Test dmax = n-1 matches classic Kruskal exactly for n up to 256"""
    for seed in range(100):
        n = 4 + (seed * 53) % 253
        g = generate_random_graph(n, min(1.0, 8.0 / (n - 1)), seed)
        t = kruskal_constrained(g, DegreeConstraint.unconstrained(n), seed)
        assert t.weight == mst_weight_reference(g), f"seed {seed}, n {n}"

def test_kruskal_k4_golden(k4_golden):
    """Test the degree rejection rule on the golden instance"""
    c = DegreeConstraint(dmax=2)
    t = kruskal_constrained(k4_golden, c, seed=3)
    assert nde.validate(t, k4_golden).ok
    assert nde.satisfies(t, c)
    assert t.weight == 12

def test_kruskal_star_fails(star):
    """Test an infeasible instance raises ConstructionFailedError"""
    with pytest.raises(ConstructionFailedError):
        kruskal_constrained(star, DegreeConstraint(dmax=2), seed=0)

def test_kruskal_deterministic(graph_64):
    """Test equal seeds give equal trees"""
    c = DegreeConstraint(dmax=3)
    assert kruskal_constrained(graph_64, c, 5).pairs() == kruskal_constrained(graph_64, c, 5).pairs()

def test_kruskal_breaks_ties_by_seed():
    """Test equal weights are scanned in a seed-dependent order"""
    edges = [(u, v, 1) for u in range(6) for v in range(u + 1, 6)]
    g = WeightedGraph.from_edges(6, edges)
    c = DegreeConstraint(dmax=5)
    trees = {kruskal_constrained(g, c, seed).edges() for seed in range(20)}
    assert len(trees) > 1
    assert all(sum(g.weight(u, v) for u, v in tree) == 5 for tree in trees)

def test_pao_triangle_deltas(triangle):
    """Test the triangle's reachable PAO deltas over all rooted trees"""
    c = DegreeConstraint(dmax=2)
    deltas = set()
    for t in _rooted_trees(triangle):
        for seed in range(200):
            move = pao(t, triangle, c, seed)
            if move is not None:
                _check_move(t, move, triangle, c)
                deltas.add(move.delta)
    assert deltas == {-2, -1, 1, 2}

def test_pao_path_has_no_move(path4):
    """Test a graph that is itself a tree admits no move"""
    t = nde.encode([-1, 0, 1, 2], path4)
    assert pao(t, path4, DegreeConstraint(dmax=3), seed=11) is None

def test_pao_move_fields(k4_golden):
    """Test a move describes its own source tree"""
    t = nde.encode([-1, 0, 0, 0], k4_golden)
    move = pao(t, k4_golden, DegreeConstraint(dmax=3), seed=99)
    assert move is not None
    assert move.seed == 99
    assert int(t.nodes[move.prune_index]) == move.prune_node
    assert move.old_parent == 0
    assert move.attach_node in (1, 2, 3)
    assert move.delta == 9

def test_apply_move_reinserts_after_attach_node(k4_golden):
    """Test the subtree becomes the first child of the attach node"""
    t = nde.encode([-1, 0, 0, 0], k4_golden)
    move = PaoMove(prune_index=3, prune_node=3, old_parent=0, attach_node=1, delta=9, seed=0)
    moved = apply_move(t, move, k4_golden)
    assert moved.pairs() == [(0, 0), (1, 1), (3, 2), (2, 1)]
    assert moved.weight == 12
    assert moved.degrees.tolist() == [2, 2, 1, 1]
    assert t.pairs() == [(0, 0), (1, 1), (2, 1), (3, 1)]

def test_apply_move_moves_whole_subtree(k4_golden):
    """Test depths of a moved subtree are rebased"""
    t = nde.encode([-1, 0, 1, 0], k4_golden)
    assert t.pairs() == [(0, 0), (1, 1), (2, 2), (3, 1)]
    move = PaoMove(prune_index=1, prune_node=1, old_parent=0, attach_node=3, delta=9, seed=0)
    moved = apply_move(t, move, k4_golden)
    assert moved.pairs() == [(0, 0), (3, 1), (1, 2), (2, 3)]
    assert nde.validate(moved, k4_golden).ok

def test_apply_move_stale(k4_golden, path4):
    """Test moves that no longer fit the tree raise StaleMoveError"""
    star = nde.encode([-1, 0, 0, 0], k4_golden)
    move = PaoMove(prune_index=3, prune_node=3, old_parent=0, attach_node=1, delta=9, seed=0)
    moved = apply_move(star, move, k4_golden)

    with pytest.raises(StaleMoveError):
        apply_move(moved, move, k4_golden)
    with pytest.raises(StaleMoveError):
        apply_move(star, move.model_copy(update={"delta": 8}), k4_golden)
    with pytest.raises(StaleMoveError):
        apply_move(star, move.model_copy(update={"attach_node": 0}), k4_golden)
    with pytest.raises(StaleMoveError):
        apply_move(star, move.model_copy(update={"old_parent": 2}), k4_golden)

    path = nde.encode([-1, 0, 1, 2], path4)
    inside = PaoMove(prune_index=1, prune_node=1, old_parent=0, attach_node=2, delta=0, seed=0)
    with pytest.raises(StaleMoveError):
        apply_move(path, inside, path4)
    not_an_edge = PaoMove(prune_index=3, prune_node=3, old_parent=2, attach_node=0, delta=0, seed=0)
    with pytest.raises(StaleMoveError):
        apply_move(path, not_an_edge, path4)

def test_apply_move_rechecks_degree(k4_golden):
    """Test the optional constraint guards the attach node's degree"""
    t = nde.encode([-1, 0, 1, 2], k4_golden)
    move = PaoMove(prune_index=3, prune_node=3, old_parent=2, attach_node=1, delta=0, seed=0)
    with pytest.raises(StaleMoveError):
        apply_move(t, move, k4_golden, DegreeConstraint(dmax=2))
    assert apply_move(t, move, k4_golden).weight == t.weight

def _safety_graph(n, dmax, seed):
    return generate_random_graph(n, 1.0 if dmax == 2 or n <= 16 else 0.3, seed)

@pytest.mark.parametrize("n", [16, 64])
@pytest.mark.parametrize("dmax", [2, 3, 5])
def test_pao_safety(n, dmax):
    """Test chained PAO moves keep every invariant"""
    g = _safety_graph(n, dmax, n + dmax)
    c = DegreeConstraint(dmax=dmax)
    t = kruskal_constrained(g, c, seed=1)
    rng = Xoshiro256StarStar(n * dmax)
    for _ in range(300):
        move = pao(t, g, c, rng.next_u64())
        if move is not None:
            t = _check_move(t, move, g, c)

@pytest.mark.slow
@pytest.mark.parametrize("n", [16, 64, 256])
@pytest.mark.parametrize("dmax", [2, 3, 5])
def test_pao_safety_extended(n, dmax):
    """Test 10,000 random (tree, seed) applications per configuration"""
    g = _safety_graph(n, dmax, splitmix64(n ^ dmax))
    c = DegreeConstraint(dmax=dmax)
    start = kruskal_constrained(g, c, seed=2)
    t = start
    rng = Xoshiro256StarStar(n + 100 * dmax)
    for k in range(10_000):
        if k % 500 == 0:
            t = start
        move = pao(t, g, c, rng.next_u64())
        if move is not None:
            t = _check_move(t, move, g, c)
