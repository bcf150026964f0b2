"""
Stability service: turns loaded inputs into defect, check and repair reports
"""

import logging
import math
import time
from typing import Any, Dict, List, Optional, Tuple

from config.guards import GuardConfig, OracleBudget, get_guard_config
from models import (
    ConvexMode,
    CoverWitness,
    DefectReport,
    ExplicitFamilySpec,
    FamilyKind,
    Graph,
    ParamKind,
    PropertyKind,
    RepairResult,
    Report,
    WeightFn,
)
from models.errors import InputError
from utils import (
    ConvexUtils,
    FileUtils,
    LatticeUtils,
    MonotoneUtils,
    OracleUtils,
    SubadditiveUtils,
    WeightUtils,
)
from utils.lattice_utils import Family

logger = logging.getLogger(__name__)

# relative agreement required between a kernel and its oracle
ORACLE_TOL = 1e-12


class StabilityService:
    """Orchestrates the lattice kernels for one command invocation"""

    def __init__(self, budget: Optional[OracleBudget] = None):
        self.budget = budget or OracleBudget()
        logger.info("[StabilityService] Initialized")

    # ------------------------------------------------------------------
    # inputs
    # ------------------------------------------------------------------
    def load_family(self, kind: FamilyKind, graph_path: Optional[str] = None,
                    explicit_path: Optional[str] = None,
                    guards: Optional[GuardConfig] = None) -> Tuple[Optional[Graph], Family]:
        """Read the graph and/or explicit family file and materialise the family"""
        kind = FamilyKind(kind)
        graph = FileUtils.parse_graph(graph_path) if graph_path else None
        explicit: Optional[ExplicitFamilySpec] = None
        if kind == FamilyKind.EXPLICIT:
            if not explicit_path:
                raise InputError("--family explicit needs --explicit FILE")
            explicit = FileUtils.parse_explicit_family(explicit_path)
        elif graph is None:
            raise InputError(f"--family {kind.value} needs --graph FILE")
        family = LatticeUtils.build_family(graph, kind, explicit, guards)
        return graph, family

    def load_weights(self, family: Family, graph: Optional[Graph] = None,
                     weights_path: Optional[str] = None, param: Optional[ParamKind] = None,
                     offset: float = 0.0, seed: Optional[int] = None,
                     lo: float = 0.0, hi: float = 1.0, integer: bool = False,
                     guards: Optional[GuardConfig] = None) -> WeightFn:
        """Weights from a file, an exact parameter, or a seeded random draw (in that order)"""
        if weights_path:
            return FileUtils.parse_weights(weights_path, family)
        if param is not None:
            if graph is None:
                raise InputError("--param needs --graph FILE")
            return WeightUtils.gen_param_weights(graph, family, ParamKind(param), offset, guards)
        if seed is not None:
            if integer:
                return WeightUtils.random_integer_weights(family, seed, int(lo), int(hi))
            return WeightUtils.random_weights(family, seed, lo, hi)
        raise InputError("no weights given: use --weights FILE, --param NAME or --seed N")

    # ------------------------------------------------------------------
    # kernels
    # ------------------------------------------------------------------
    def defect(self, family: Family, w: WeightFn, prop: PropertyKind,
               mode: ConvexMode = ConvexMode.STRICT_CHAIN,
               guards: Optional[GuardConfig] = None) -> DefectReport:
        prop = PropertyKind(prop)
        if prop == PropertyKind.MONOTONE:
            return MonotoneUtils.monotone_defect(family, w, guards)
        if prop == PropertyKind.SUBADDITIVE:
            return SubadditiveUtils.subadditive_defect(family, w, guards)
        return ConvexUtils.convex_defect(family, w, mode, guards)

    def oracle_defect(self, family: Family, w: WeightFn, prop: PropertyKind,
                      mode: ConvexMode = ConvexMode.STRICT_CHAIN) -> DefectReport:
        return OracleUtils.brute_defect(family, w, prop, mode, self.budget)

    def repair_result(self, family: Family, w: WeightFn, prop: PropertyKind, epsilon: float,
                      mode: ConvexMode = ConvexMode.STRICT_CHAIN, tol: Optional[float] = None,
                      max_iter: Optional[int] = None,
                      guards: Optional[GuardConfig] = None) -> RepairResult:
        prop = PropertyKind(prop)
        if prop == PropertyKind.MONOTONE:
            return MonotoneUtils.monotone_repair(family, w, epsilon, guards)
        if prop == PropertyKind.SUBADDITIVE:
            return SubadditiveUtils.subadditive_repair(family, w, epsilon, guards)
        kwargs = {}
        if tol is not None:
            kwargs['tol'] = tol
        if max_iter is not None:
            kwargs['max_iter'] = max_iter
        return ConvexUtils.convex_repair(family, w, epsilon, mode, guards=guards, **kwargs)

    # ------------------------------------------------------------------
    # reports
    # ------------------------------------------------------------------
    @staticmethod
    def serialize_witness(family: Family, witness: Any) -> Any:
        """Element ids replaced by their labels"""
        if witness is None:
            return None
        if isinstance(witness, CoverWitness):
            return {
                'target': family.label(witness.target),
                'parts': [family.label(p) for p in witness.parts],
                'cover_sum': witness.cover_sum,
            }
        return [family.label(a) for a in witness]

    @staticmethod
    def _check_epsilon(epsilon: float) -> None:
        # NaN and infinities are not valid JSON
        if not math.isfinite(epsilon) or epsilon < 0:
            raise InputError(f"epsilon must be finite and >= 0, got {epsilon}")

    def _base_report(self, command: List[str], family: Family, prop: PropertyKind,
                     mode: ConvexMode, defect: DefectReport, epsilon: Optional[float] = None) -> Report:
        convex = prop == PropertyKind.CONVEX
        return Report(
            command=list(command),
            property=prop,
            mode=mode if convex else None,
            family=family.kind.value,
            epsilon=epsilon,
            epsilon_star=defect.epsilon_star,
            witness=self.serialize_witness(family, defect.witness),
            notes=[f"mode={ConvexMode(mode).value}"] if convex else [],
        )

    def _cross_check(self, report: Report, family: Family, w: WeightFn, prop: PropertyKind,
                     mode: ConvexMode) -> None:
        reference = self.oracle_defect(family, w, prop, mode).epsilon_star
        agrees = abs(reference - report.epsilon_star) <= ORACLE_TOL * max(1.0, abs(reference))
        report.oracle_epsilon_star = reference
        report.oracle_agrees = agrees
        if not agrees:
            logger.warning(
                f"[StabilityService] Oracle disagrees on {prop.value}: kernel {report.epsilon_star!r}, "
                f"oracle {reference!r}"
            )

    def defect_report(self, command: List[str], family: Family, w: WeightFn, prop: PropertyKind,
                      mode: ConvexMode = ConvexMode.STRICT_CHAIN, epsilon: Optional[float] = None,
                      guards: Optional[GuardConfig] = None, oracle: bool = False,
                      timings: bool = False) -> Report:
        """
        Defect report; with ``epsilon`` it also records whether the property holds

        Args:
            command: Echo of the command line
            oracle: Also run the brute-force reference and record agreement
            timings: Attach wall-clock seconds per phase
        """
        prop, mode = PropertyKind(prop), ConvexMode(mode)
        if epsilon is not None:
            self._check_epsilon(epsilon)
        guards = guards or get_guard_config()
        clock: Dict[str, float] = {}

        started = time.perf_counter()
        defect = self.defect(family, w, prop, mode, guards)
        clock['defect'] = time.perf_counter() - started
        report = self._base_report(command, family, prop, mode, defect, epsilon)
        if epsilon is not None:
            report.checks = {'holds': defect.holds(epsilon)}

        if oracle:
            started = time.perf_counter()
            self._cross_check(report, family, w, prop, mode)
            clock['oracle'] = time.perf_counter() - started
        if timings:
            report.timings = clock
        logger.info(f"[StabilityService] {prop.value} defect {defect.epsilon_star!r} on {family!r}")
        return report

    def repair(self, command: List[str], family: Family, w: WeightFn, prop: PropertyKind,
               epsilon: float, mode: ConvexMode = ConvexMode.STRICT_CHAIN,
               tol: Optional[float] = None, max_iter: Optional[int] = None,
               guards: Optional[GuardConfig] = None, oracle: bool = False,
               timings: bool = False) -> Tuple[Report, RepairResult]:
        """Repair ``w`` for ``prop`` and report the verified guarantee"""
        prop, mode = PropertyKind(prop), ConvexMode(mode)
        self._check_epsilon(epsilon)
        guards = guards or get_guard_config()
        clock: Dict[str, float] = {}

        started = time.perf_counter()
        defect = self.defect(family, w, prop, mode, guards)
        clock['defect'] = time.perf_counter() - started
        started = time.perf_counter()
        result = self.repair_result(family, w, prop, epsilon, mode, tol, max_iter, guards)
        clock['repair'] = time.perf_counter() - started

        report = self._base_report(command, family, prop, mode, defect, epsilon)
        report.norm_distance = result.norm_distance
        report.bound = result.bound
        report.guarantee_met = result.guarantee_met
        report.checks = dict(result.checks, hypothesis=result.hypothesis_met)
        if result.trace is not None:
            report.iterations = result.trace.iterations
            report.converged = result.trace.converged
        report.notes = list(result.notes) if prop == PropertyKind.CONVEX else []

        if oracle:
            started = time.perf_counter()
            self._cross_check(report, family, w, prop, mode)
            clock['oracle'] = time.perf_counter() - started
        if timings:
            report.timings = clock
        logger.info(
            f"[StabilityService] {prop.value} repair at eps={epsilon!r}: distance {result.norm_distance!r}, "
            f"guarantee_met={result.guarantee_met}"
        )
        return report, result

    def report_all(self, command: List[str], family: Family, w: WeightFn,
                   guards: Optional[GuardConfig] = None, oracle: bool = False,
                   timings: bool = False) -> List[Report]:
        """One defect report per property, convexity in both modes"""
        plan = [
            (PropertyKind.MONOTONE, ConvexMode.STRICT_CHAIN),
            (PropertyKind.SUBADDITIVE, ConvexMode.STRICT_CHAIN),
            (PropertyKind.CONVEX, ConvexMode.STRICT_CHAIN),
            (PropertyKind.CONVEX, ConvexMode.LITERAL),
        ]
        return [self.defect_report(command, family, w, prop, mode, None, guards, oracle, timings)
                for prop, mode in plan]


# Service instance (singleton pattern)
_stability_service_instance = None

def get_stability_service() -> StabilityService:
    """Get singleton instance of StabilityService"""
    global _stability_service_instance
    if _stability_service_instance is None:
        _stability_service_instance = StabilityService()
    return _stability_service_instance


# Default export
__all__ = ['StabilityService', 'get_stability_service']
