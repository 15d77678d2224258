import pytest
from fastapi.testclient import TestClient

from app.models.graph import WeightedGraph
from app.services.generator import generate_random_graph

# Edge lists of the hand-written instances
TRIANGLE_EDGES = [(0, 1, 1), (1, 2, 2), (0, 2, 3)]
PATH_EDGES = [(0, 1, 5), (1, 2, 5), (2, 3, 5)]
STAR_EDGES = [(0, 1, 1), (0, 2, 1), (0, 3, 1)]
K4_GOLDEN_EDGES = [(0, 1, 1), (0, 2, 1), (0, 3, 1), (1, 2, 10), (1, 3, 10), (2, 3, 10)]
K4_GOLDEN_OPTIMUM = 12

@pytest.fixture
def app():
    from app.main import app
    return app

@pytest.fixture
def client(app):
    return TestClient(app)

@pytest.fixture
def triangle() -> WeightedGraph:
    """Triangle with weights 1, 2, 3; MST weight 3"""
    return WeightedGraph.from_edges(3, TRIANGLE_EDGES)

@pytest.fixture
def path4() -> WeightedGraph:
    """Path 0-1-2-3 with every weight 5"""
    return WeightedGraph.from_edges(4, PATH_EDGES)

@pytest.fixture
def star() -> WeightedGraph:
    """K1,3 centred on node 0; infeasible for dmax=2"""
    return WeightedGraph.from_edges(4, STAR_EDGES)

@pytest.fixture
def k4_golden() -> WeightedGraph:
    """K4 whose dmax=2 optimum is 12 while the MST weighs 3"""
    return WeightedGraph.from_edges(4, K4_GOLDEN_EDGES)

@pytest.fixture
def graph_64() -> WeightedGraph:
    return generate_random_graph(64, 0.2, 42)

@pytest.fixture
def graph_16() -> WeightedGraph:
    return generate_random_graph(16, 0.5, 1)

@pytest.fixture
def graph_data():
    """Graph document payload for the HTTP API"""
    return {
        "n": 4,
        "edges": [list(edge) for edge in K4_GOLDEN_EDGES]
    }
