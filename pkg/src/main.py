from contextlib import asynccontextmanager
from fastapi import FastAPI

from config import settings

from app.criticality.routes import router as criticality_router
from app.enumeration.routes import router as enumeration_router
from app.families.routes import router as families_router
from app.matching.routes import router as polynomials_router
from app.matching.service import get_matching_service
from app.verification.routes import router as verification_router

from middleware.insert_engine_middleware import InsertEngineMiddleware
from middleware.timing_middleware import TimingMiddleware
from middleware.response_wrapper_middleware import ResponseWrapperMiddleware
from logger import get_logger

from prometheus_fastapi_instrumentator import Instrumentator

logger = get_logger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Lifespan context manager for startup and shutdown events"""
    # Startup
    engine = get_matching_service()
    logger.info(
        "Matching engine ready",
        extra={"memo_cap": engine.cache.cap, "environment": settings.environment},
    )

    yield

    # Shutdown
    logger.info("Shutting down", extra={"memo_entries": len(engine.cache)})


app = FastAPI(
    title=settings.app_name,
    description="Matching polynomials, theta-critical graphs and the verification censuses",
    version=settings.app_version,
    debug=settings.debug,
    lifespan=lifespan,
)

Instrumentator().instrument(app).expose(app)

app.add_middleware(TimingMiddleware)
app.add_middleware(InsertEngineMiddleware)
app.add_middleware(ResponseWrapperMiddleware)

app.include_router(polynomials_router)
app.include_router(criticality_router)
app.include_router(families_router)
app.include_router(enumeration_router)
app.include_router(verification_router)


@app.get("/health")
async def health_check():
    """Liveness check with the size of the shared memo table."""
    engine = get_matching_service()
    return {"status": "ok", "memo_entries": len(engine.cache), "version": settings.app_version}
