from fastapi import APIRouter
from app.api.system.endpoints import health

router = APIRouter()

# Include routers
router.include_router(health.router, prefix="/health", tags=["System"])
