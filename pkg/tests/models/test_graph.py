import pytest

from app.core.exceptions import GraphValidationError
from app.models.graph import MAX_WEIGHT, WeightedGraph

def test_from_edges_builds_symmetric_adjacency(triangle):
    """Test adjacency is the symmetric closure of the edge list"""
    assert triangle.n == 3
    assert triangle.edge_count == 3
    assert triangle.adjacency[0] == ((1, 1), (2, 3))
    assert triangle.adjacency[1] == ((0, 1), (2, 2))
    assert triangle.adjacency[2] == ((0, 3), (1, 2))

def test_weight_lookup_is_orientation_free(triangle):
    """Test weight(u, v) == weight(v, u)"""
    assert triangle.weight(1, 2) == 2
    assert triangle.weight(2, 1) == 2
    assert triangle.has_edge(2, 0)
    with pytest.raises(KeyError):
        WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 1)]).weight(0, 2)

@pytest.mark.parametrize("n,edges,message", [
    (1, [], "at least 2 nodes"),
    (2, [(0, 0, 5), (0, 1, 1)], "self-loop"),
    (3, [(0, 1, 1), (1, 0, 2), (1, 2, 1)], "duplicate"),
    (4, [(0, 1, 1), (2, 3, 1)], "disconnected"),
    (2, [(0, 2, 1)], "outside"),
    (2, [(0, 1, MAX_WEIGHT + 1)], "weight"),
    (2, [(0, 1, -1)], "weight"),
])
def test_invalid_graphs_rejected(n, edges, message):
    """Test every structural invariant is enforced at construction"""
    with pytest.raises(GraphValidationError) as exc:
        WeightedGraph.from_edges(n, edges)
    assert message in str(exc.value)

def test_max_weight_accepted():
    """Test 32-bit weights are allowed"""
    g = WeightedGraph.from_edges(2, [(0, 1, MAX_WEIGHT)])
    assert g.weight(0, 1) == MAX_WEIGHT

def test_graphs_compare_by_edges():
    """Test equal edge lists give equal graphs"""
    a = WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 2)])
    b = WeightedGraph.from_edges(3, [(0, 1, 1), (1, 2, 2)])
    assert a == b
