from fastapi.testclient import TestClient

from app.core.config import settings

def test_health_check(client: TestClient):
    """Test the health endpoint reports project metadata"""
    response = client.get("/system/health")
    assert response.status_code == 200
    assert response.json() == {
        "status": "healthy",
        "project": settings.PROJECT_NAME,
        "version": settings.API_VERSION,
        "environment": settings.ENVIRONMENT,
    }
