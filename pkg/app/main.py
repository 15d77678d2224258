import logging
from fastapi import FastAPI, Request
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from app.api.system.router import router as system_router
from app.api.v1.router import api_router
from app.core.config import settings
from app.core.exceptions import SolverError
from app.core.logging import setup_logging

# Configure logging
setup_logging(settings.LOG_LEVEL)
logger = logging.getLogger(__name__)

app = FastAPI(
    title=settings.PROJECT_NAME,
    description="Degree-constrained minimum spanning trees with the Node-Depth Encoding",
    version=settings.API_VERSION
)

# CORS configuration for local tooling
app.add_middleware(
    CORSMiddleware,
    allow_origins=["http://localhost:5173"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)


@app.exception_handler(SolverError)
async def solver_error_handler(request: Request, exc: SolverError) -> JSONResponse:
    logger.warning(f"{request.method} {request.url.path} rejected: {exc}")
    return JSONResponse(status_code=400, content={"detail": str(exc), "error": type(exc).__name__})


# Include system routes
app.include_router(system_router, prefix="/system")
app.include_router(api_router, prefix="/api/v1")

if __name__ == "__main__":
    import uvicorn
    uvicorn.run("app.main:app", host="0.0.0.0", port=8000, reload=True)
