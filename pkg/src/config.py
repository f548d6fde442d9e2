"""
Configuration for the powerful-sets toolkit.
"""

from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    """Application settings from environment variables."""

    # Logging
    log_level: str = "INFO"

    # Zeta tables (one int64 per mask)
    max_zeta_order: int = 24
    zeta_memory_cap_bytes: int = 1 << 30

    # Per-operation caps
    max_reconstruct_order: int = 16
    max_antichain_order: int = 6
    max_canon_order: int = 10
    canon_batch_size: int = 4096
    max_closure_generators: int = 20

    # Enumeration
    max_census_order: int = 6
    max_family_order: int = 11
    census_workers: int = 1
    census_strategy: str = "incremental"

    class Config:
        env_file = ".env"


# Global settings instance
settings = Settings()
