"""
Result models: defect reports, repairs, iteration traces and CLI reports
"""

from pydantic import BaseModel, ConfigDict, Field
from typing import Any, ClassVar, Dict, List, Optional, Tuple, Union
from enum import Enum

from .weights import WeightFn


class PropertyKind(str, Enum):
    """Approximate properties the toolkit checks and repairs"""
    MONOTONE = "monotone"
    SUBADDITIVE = "subadditive"
    CONVEX = "convex"


class ConvexMode(str, Enum):
    """Admissible triples for convexity.

    LITERAL takes every H_low <= H <= H_high; STRICT only strict chains.
    """
    LITERAL = "literal"
    STRICT_CHAIN = "strict"


class CoverWitness(BaseModel):
    """A cover of ``target`` by ``parts`` whose weights sum to ``cover_sum``"""
    target: int
    parts: List[int] = Field(min_length=1)
    cover_sum: float


class DefectReport(BaseModel):
    """Minimal epsilon for an approximate property plus a witness attaining it.

    Witness is a pair (monotone), a triple (convex) or a cover (subadditive);
    it is None when no admissible configuration exists.
    """
    property: PropertyKind
    epsilon_star: float = Field(ge=0)
    witness: Optional[Union[CoverWitness, Tuple[int, ...]]] = None
    mode: Optional[ConvexMode] = None

    def holds(self, epsilon: float) -> bool:
        return self.epsilon_star <= epsilon


class IterationTrace(BaseModel):
    iterations: int = 0
    sup_changes: List[float] = Field(default_factory=list)
    converged: bool = False


class RepairResult(BaseModel):
    """Repaired weight function with the verified norm guarantee.

    ``guarantee_met`` is true only when the hypothesis (epsilon at least the
    defect) holds and every numerical check in ``checks`` passed.
    """
    model_config = ConfigDict(arbitrary_types_allowed=True)

    property: PropertyKind
    repaired: WeightFn
    epsilon: float
    defect: float
    norm_distance: float
    bound: float
    hypothesis_met: bool
    checks: Dict[str, bool] = Field(default_factory=dict)
    auxiliary: Dict[str, WeightFn] = Field(default_factory=dict)
    trace: Optional[IterationTrace] = None
    mode: Optional[ConvexMode] = None
    notes: List[str] = Field(default_factory=list)

    @property
    def guarantee_met(self) -> bool:
        return self.hypothesis_met and all(self.checks.values())


class Report(BaseModel):
    """Machine-readable command output; field order is the JSON key order"""
    command: List[str]
    property: PropertyKind
    mode: Optional[ConvexMode] = None
    family: str
    epsilon: Optional[float] = None
    epsilon_star: float
    witness: Optional[Any] = None
    norm_distance: Optional[float] = None
    bound: Optional[float] = None
    guarantee_met: Optional[bool] = None
    checks: Dict[str, bool] = Field(default_factory=dict)
    iterations: Optional[int] = None
    converged: Optional[bool] = None
    oracle_epsilon_star: Optional[float] = None
    oracle_agrees: Optional[bool] = None
    notes: List[str] = Field(default_factory=list)
    timings: Optional[Dict[str, float]] = None

    CSV_FIELDS: ClassVar[Tuple[str, ...]] = ('property', 'mode', 'epsilon_star', 'norm_distance', 'guarantee_met')
