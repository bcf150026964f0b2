"""
Approximate monotonicity: defect, repair and the converse check
"""

import logging
from typing import Optional, Tuple

import numpy as np

from config.guards import GuardConfig, get_guard_config
from models import DefectReport, PropertyKind, RepairResult, WeightFn
from models.errors import InputError
from utils.lattice_utils import Family
from utils.transform_utils import MinTransforms
from utils.weight_utils import WeightUtils

logger = logging.getLogger(__name__)

# slack for floating comparisons in the reported checks
CHECK_TOL = 1e-12


class MonotoneUtils:
    """Checks and repairs for w(H) <= w(H') + eps whenever H is strictly inside H'"""

    @staticmethod
    def _prepare(family: Family, w: WeightFn, guards: Optional[GuardConfig]) -> GuardConfig:
        guards = guards or get_guard_config()
        guards.check('pairs', family.width)
        WeightUtils.check_binding(family, w)
        return guards

    @staticmethod
    def monotone_defect(family: Family, w: WeightFn, guards: Optional[GuardConfig] = None) -> DefectReport:
        """
        Smallest eps for which w is eps-approximately monotone

        Returns:
            DefectReport whose witness is a strict pair (H, H') attaining
            w(H) - w(H') = epsilon_star, or None when no strict pair exists
        """
        MonotoneUtils._prepare(family, w, guards)
        above, above_arg = MinTransforms.up_min(family, w.values, strict=True)
        gaps = np.where(np.isfinite(above), w.values - above, -np.inf)
        if not np.isfinite(gaps).any():
            return DefectReport(property=PropertyKind.MONOTONE, epsilon_star=0.0)

        h = int(np.argmax(gaps))
        epsilon_star = max(0.0, float(gaps[h]))
        # a strictly increasing w has no pair attaining 0
        witness = (h, int(above_arg[h])) if gaps[h] >= 0 else None
        report = DefectReport(property=PropertyKind.MONOTONE, epsilon_star=epsilon_star, witness=witness)
        logger.info(f"[Monotone] Defect {epsilon_star!r} on {family!r}, witness {report.witness}")
        return report

    @staticmethod
    def is_approx_monotone(family: Family, w: WeightFn, epsilon: float,
                           guards: Optional[GuardConfig] = None) -> bool:
        MonotoneUtils._check_epsilon(epsilon)
        return MonotoneUtils.monotone_defect(family, w, guards).epsilon_star <= epsilon

    @staticmethod
    def is_decreasing(family: Family, w: WeightFn, guards: Optional[GuardConfig] = None) -> bool:
        """True when H strictly inside H' implies w(H) >= w(H')"""
        MonotoneUtils._prepare(family, w, guards)
        below, _ = MinTransforms.down_min(family, w.values, strict=True)
        return bool(np.all(~np.isfinite(below) | (below >= w.values)))

    @staticmethod
    def superset_minimum(family: Family, w: WeightFn) -> np.ndarray:
        """min over H' containing H (H itself included) of w(H')"""
        minima, _ = MinTransforms.up_min(family, w.values, strict=False)
        return minima

    @staticmethod
    def monotone_repair(family: Family, w: WeightFn, epsilon: float,
                        guards: Optional[GuardConfig] = None) -> RepairResult:
        """
        w~(H) = min{w(H') : H inside H'} + eps/2

        The result is always monotone; when w is eps-approximately monotone it
        also lies within eps/2 of w in the sup norm.
        """
        MonotoneUtils._check_epsilon(epsilon)
        guards = MonotoneUtils._prepare(family, w, guards)
        defect = MonotoneUtils.monotone_defect(family, w, guards).epsilon_star

        repaired = WeightUtils.bind(family, MonotoneUtils.superset_minimum(family, w) + epsilon / 2.0)
        distance = WeightUtils.sup_norm_distance(w, repaired)
        bound = epsilon / 2.0
        checks = {
            'repaired_monotone': MonotoneUtils.verify_monotone(family, repaired, guards) is None,
            'norm_bound': distance <= bound + CHECK_TOL,
        }
        hypothesis_met = defect <= epsilon
        result = RepairResult(
            property=PropertyKind.MONOTONE,
            repaired=repaired,
            epsilon=epsilon,
            defect=defect,
            norm_distance=distance,
            bound=bound,
            hypothesis_met=hypothesis_met,
            checks=checks,
        )
        if not result.guarantee_met:
            logger.warning(
                f"[Monotone] Guarantee unmet: eps={epsilon!r}, defect={defect!r}, distance={distance!r}"
            )
        else:
            logger.info(f"[Monotone] Repaired {family!r}: distance {distance!r} <= {bound!r}")
        return result

    @staticmethod
    def verify_monotone(family: Family, w: WeightFn,
                        guards: Optional[GuardConfig] = None) -> Optional[Tuple[int, int]]:
        """None when w is exactly monotone, otherwise a violating strict pair"""
        report = MonotoneUtils.monotone_defect(family, w, guards)
        if report.epsilon_star > 0:
            return report.witness
        return None

    @staticmethod
    def monotone_converse_check(family: Family, w: WeightFn, w_tilde: WeightFn, epsilon: float,
                                guards: Optional[GuardConfig] = None) -> Tuple[DefectReport, bool]:
        """
        Converse direction: a monotone w~ within eps/2 of w makes w eps-approximately monotone

        Returns:
            (defect report of w, whether the conclusion defect <= eps holds);
            raises InputError when w~ is not monotone or too far from w
        """
        MonotoneUtils._check_epsilon(epsilon)
        violation = MonotoneUtils.verify_monotone(family, w_tilde, guards)
        if violation is not None:
            raise InputError(f"reference weights are not monotone: violating pair {violation}")
        distance = WeightUtils.sup_norm_distance(w, w_tilde)
        if distance > epsilon / 2.0 + CHECK_TOL:
            raise InputError(f"reference weights are {distance!r} away, more than eps/2 = {epsilon / 2.0!r}")
        report = MonotoneUtils.monotone_defect(family, w, guards)
        return report, report.epsilon_star <= epsilon + CHECK_TOL

    @staticmethod
    def _check_epsilon(epsilon: float) -> None:
        if not epsilon >= 0 or not np.isfinite(epsilon):
            raise InputError(f"epsilon must be finite and >= 0, got {epsilon}")
