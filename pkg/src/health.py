"""
Runtime status: library versions, CPU count and active caps.
"""

import logging
import os
import platform
from datetime import datetime

import numpy as np
import pydantic

from . import __version__
from .config import settings

logger = logging.getLogger(__name__)


def get_health_status() -> dict:
    """Get runtime status."""
    return {
        "status": "healthy",
        "version": __version__,
        "python": platform.python_version(),
        "numpy": np.__version__,
        "pydantic": pydantic.VERSION,
        "cpu_count": os.cpu_count() or 1,
        "census_workers": settings.census_workers,
        "census_strategy": settings.census_strategy,
        "caps": {
            "zeta_order": settings.max_zeta_order,
            "zeta_memory_bytes": settings.zeta_memory_cap_bytes,
            "reconstruct_order": settings.max_reconstruct_order,
            "antichain_order": settings.max_antichain_order,
            "canon_order": settings.max_canon_order,
            "census_order": settings.max_census_order,
            "family_order": settings.max_family_order,
            "closure_generators": settings.max_closure_generators,
        },
        "timestamp": datetime.now().isoformat(),
    }


def log_startup_info():
    """Log startup information."""
    health = get_health_status()

    logger.info(f"powerful-sets {health['version']}")
    logger.info(f"Python {health['python']}, numpy {health['numpy']}, pydantic {health['pydantic']}")
    logger.info(f"CPUs: {health['cpu_count']}, census workers: {health['census_workers']}")
    logger.info(f"Caps: {health['caps']}")
