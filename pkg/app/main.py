from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from contextlib import asynccontextmanager

from app.components.base.config import get_settings
from app.components.base.logging import configure_logging, get_logger
from app.components.combinatorics.router import get_service as tables_service, router as tables_router
from app.components.uniformity_lab.router import get_service as verify_service, router as verify_router
from app.components.trie_model.router import get_service as trie_service, router as trie_router
from app.components.experiments.router import get_service as experiments_service, router as experiments_router


@asynccontextmanager
async def lifespan(app: FastAPI):
    """Application lifespan: startup and shutdown."""
    settings = get_settings()
    configure_logging(settings.environment)
    logger = get_logger("main")

    logger.info("Starting Comparison Complexity Lab API", version=settings.app_version, seed=settings.seed)

    yield

    logger.info("Shutting down Comparison Complexity Lab API")


settings = get_settings()

app = FastAPI(
    title=settings.app_name,
    version=settings.app_version,
    lifespan=lifespan,
)

# CORS
app.add_middleware(
    CORSMiddleware,
    allow_origins=settings.cors_origins,
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Mount component routers
app.include_router(tables_router, prefix="/api/v1")
app.include_router(verify_router, prefix="/api/v1")
app.include_router(trie_router, prefix="/api/v1")
app.include_router(experiments_router, prefix="/api/v1")


@app.get("/api/v1/health")
async def health_check():
    """Health check endpoint."""
    components = [
        await service().health_check()
        for service in (tables_service, verify_service, trie_service, experiments_service)
    ]
    return {
        "status": "healthy",
        "version": settings.app_version,
        "components": components,
    }


@app.get("/api/v1/config")
async def get_config():
    """Get current configuration."""
    return {
        "app_name": settings.app_name,
        "version": settings.app_version,
        "environment": settings.environment,
        "seed": settings.seed,
        "default_trials": settings.default_trials,
        "buildheap_census_cap": settings.buildheap_census_cap,
        "binomial_census_cap": settings.binomial_census_cap,
        "chi_square_alpha": settings.chi_square_alpha,
        "csv_decimals": settings.csv_decimals,
    }
