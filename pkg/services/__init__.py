"""
Services package for the WeightLat stability toolkit
Provides high-level orchestration services
"""

from .stability_service import StabilityService, get_stability_service

__all__ = ['StabilityService', 'get_stability_service']
