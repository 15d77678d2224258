from fastapi import APIRouter
from app.api.v1.endpoints import graphs, solve, verify

# Create the main v1 API router
api_router = APIRouter()

# Include routers for different resources
api_router.include_router(
    graphs.router,
    prefix="/graphs",
    tags=["Graphs"]
)

api_router.include_router(
    solve.router,
    prefix="/solve",
    tags=["Solver"]
)

api_router.include_router(
    verify.router,
    prefix="/verify",
    tags=["Verification"]
)
