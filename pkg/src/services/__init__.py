"""Census, conjecture, diamond family and cache services."""

from .cache_service import CacheService
from .census_service import CensusService, census
from .conjecture_service import ConjectureService, check_conjecture_coloop, check_conjecture_projection
from .family_service import FamilyService, diamond_family

__all__ = [
    "CacheService",
    "CensusService",
    "census",
    "ConjectureService",
    "check_conjecture_coloop",
    "check_conjecture_projection",
    "FamilyService",
    "diamond_family",
]
