from fastapi.testclient import TestClient

from app.services.generator import generate_random_graph
from app.services.graph_io import graph_to_document

def test_generate_graph(client: TestClient):
    """Test generation matches the library generator"""
    response = client.post("/api/v1/graphs/generate", json={"n": 16, "density": 0.5, "seed": 1})
    assert response.status_code == 200
    data = response.json()
    assert data["n"] == 16
    assert len(data["edges"]) == 60
    expected = graph_to_document(generate_random_graph(16, 0.5, 1))
    assert data == expected.model_dump(mode="json")

def test_generate_rejects_bad_density(client: TestClient):
    """Test request validation on density"""
    response = client.post("/api/v1/graphs/generate", json={"n": 16, "density": 1.5, "seed": 1})
    assert response.status_code == 422

def test_generate_rejects_too_sparse(client: TestClient):
    """Test densities below a spanning tree map to a solver error"""
    response = client.post("/api/v1/graphs/generate", json={"n": 100, "density": 0.001, "seed": 1})
    assert response.status_code == 400
    assert response.json()["error"] == "InvalidParameterError"

def test_validate_graph(client: TestClient, graph_data):
    """Test a valid document is accepted"""
    response = client.post("/api/v1/graphs/validate", json=graph_data)
    assert response.status_code == 200
    assert response.json() == {"n": 4, "edge_count": 6, "valid": True}

def test_validate_disconnected_graph(client: TestClient):
    """Test a disconnected graph is rejected"""
    response = client.post("/api/v1/graphs/validate", json={"n": 4, "edges": [[0, 1, 1], [2, 3, 1]]})
    assert response.status_code == 400
    assert response.json()["error"] == "GraphValidationError"

def test_validate_self_loop(client: TestClient):
    """Test self-loops are rejected"""
    response = client.post("/api/v1/graphs/validate", json={"n": 2, "edges": [[0, 1, 1], [1, 1, 2]]})
    assert response.status_code == 400

def test_validate_empty_edges(client: TestClient):
    """Test an empty edge list fails schema validation"""
    response = client.post("/api/v1/graphs/validate", json={"n": 2, "edges": []})
    assert response.status_code == 422
