from pydantic_settings import BaseSettings
from typing import List
from functools import lru_cache


class Settings(BaseSettings):
    """Centralized configuration for all lab components."""

    # Application
    app_name: str = "Comparison Complexity Lab"
    app_version: str = "1.0.0"
    environment: str = "development"

    # Server
    host: str = "0.0.0.0"
    port: int = 8000
    cors_origins: List[str] = ["http://localhost:3000", "http://localhost:5173"]

    # Experiments
    seed: int = 20240611  # CMPLAB_SEED
    default_trials: int = 200
    jobs: int = 1

    # Exhaustive census caps (n! permutations are enumerated)
    buildheap_census_cap: int = 9
    binomial_census_cap: int = 6

    # Statistics and numerics
    chi_square_alpha: float = 1e-6
    h_coefficient_tail: float = 1e-12
    exact_table_cap: int = 256  # largest index evaluated with exact rationals in dyadic recurrences

    # Output
    csv_decimals: int = 6
    presets_path: str = "./config/experiments.yaml"

    class Config:
        env_prefix = "CMPLAB_"
        env_file = ".env"
        extra = "ignore"


@lru_cache()
def get_settings() -> Settings:
    """Singleton settings instance."""
    return Settings()
