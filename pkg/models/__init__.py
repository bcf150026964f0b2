"""
Models package for the WeightLat stability toolkit
Provides centralized access to all Pydantic models and exceptions
"""

# Import all models to make them accessible at package level
from .graph import Graph, FamilyKind, ExplicitFamilySpec
from .weights import WeightFn, ParamKind
from .reports import (
    PropertyKind,
    ConvexMode,
    CoverWitness,
    DefectReport,
    IterationTrace,
    RepairResult,
    Report,
)
from .errors import (
    WeightLatError,
    InputError,
    PosetAxiomError,
    FamilyMismatchError,
    JoinUndefinedError,
    GuardExceededError,
    HypothesisViolatedError,
)

# Make models available when importing from models package
__all__ = [
    # Graph models
    'Graph',
    'FamilyKind',
    'ExplicitFamilySpec',

    # Weight models
    'WeightFn',
    'ParamKind',

    # Result models
    'PropertyKind',
    'ConvexMode',
    'CoverWitness',
    'DefectReport',
    'IterationTrace',
    'RepairResult',
    'Report',

    # Errors
    'WeightLatError',
    'InputError',
    'PosetAxiomError',
    'FamilyMismatchError',
    'JoinUndefinedError',
    'GuardExceededError',
    'HypothesisViolatedError',
]
