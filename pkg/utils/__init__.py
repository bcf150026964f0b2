"""
Utils package for the WeightLat stability toolkit
Provides centralized access to all utility classes
"""

# Import all utility classes to make them accessible at package level
from .lattice_utils import Family, LatticeUtils
from .transform_utils import MinTransforms
from .graph_utils import GraphParamUtils
from .weight_utils import WeightUtils
from .monotone_utils import MonotoneUtils
from .subadditive_utils import CoverClosure, SubadditiveUtils
from .convex_utils import ConvexUtils
from .oracle_utils import OracleUtils
from .file_utils import FileUtils

# Make utility classes available when importing from utils package
__all__ = [
    # Lattice utilities
    'Family',
    'LatticeUtils',
    'MinTransforms',

    # Weight utilities
    'GraphParamUtils',
    'WeightUtils',

    # Property utilities
    'MonotoneUtils',
    'CoverClosure',
    'SubadditiveUtils',
    'ConvexUtils',

    # Reference implementations
    'OracleUtils',

    # File formats
    'FileUtils',
]
