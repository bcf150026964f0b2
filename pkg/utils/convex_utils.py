"""
Approximate convexity on containment chains: defect, minorant iteration, repair
"""

import logging
from typing import List, Optional, Tuple

import numpy as np

from config.guards import GuardConfig, get_guard_config
from config.settings import DEFAULT_MAX_ITER, DEFAULT_TOL
from models import ConvexMode, DefectReport, IterationTrace, PropertyKind, RepairResult, WeightFn
from models.errors import InputError
from utils.lattice_utils import Family, LatticeUtils
from utils.transform_utils import MinTransforms
from utils.weight_utils import WeightUtils

logger = logging.getLogger(__name__)

# slack for the reported bound checks
BOUND_TOL = 1e-9
# descent between iterates is exact up to rounding
DESCENT_TOL = 1e-12


class ConvexUtils:
    """Second-order monotonicity: 2 w(H) <= w(H_low) + w(H_high) + eps along chains"""

    @staticmethod
    def _prepare(family: Family, w: WeightFn, guards: Optional[GuardConfig]) -> GuardConfig:
        guards = guards or get_guard_config()
        guards.check('triples', family.width)
        WeightUtils.check_binding(family, w)
        return guards

    @staticmethod
    def _neighbour_minima(family: Family, values: np.ndarray, mode: ConvexMode):
        strict = ConvexMode(mode) == ConvexMode.STRICT_CHAIN
        below, below_arg = MinTransforms.down_min(family, values, strict=strict)
        above, above_arg = MinTransforms.up_min(family, values, strict=strict)
        return below, below_arg, above, above_arg

    @staticmethod
    def step(family: Family, values: np.ndarray, mode: ConvexMode) -> np.ndarray:
        """
        One update: min over admissible (H_low, H_high) of the average of the two values

        The pair (H, H) is always admissible, so the update never increases a
        value. In strict mode, elements without a strict pair on both sides
        keep their value.
        """
        below, _, above, _ = ConvexUtils._neighbour_minima(family, values, mode)
        average = (below + above) / 2.0
        if ConvexMode(mode) == ConvexMode.LITERAL:
            return average
        return np.where(np.isfinite(average), np.minimum(values, average), values)

    @staticmethod
    def carried_over(family: Family, mode: ConvexMode) -> int:
        """Number of elements left unconstrained by the strict update"""
        if ConvexMode(mode) == ConvexMode.LITERAL:
            return 0
        probe = np.zeros(family.size)
        below, _, above, _ = ConvexUtils._neighbour_minima(family, probe, mode)
        return int(np.count_nonzero(~(np.isfinite(below) & np.isfinite(above))))

    @staticmethod
    def convex_defect(family: Family, w: WeightFn, mode: ConvexMode = ConvexMode.STRICT_CHAIN,
                      guards: Optional[GuardConfig] = None) -> DefectReport:
        """
        Smallest eps for which w is eps-approximately convex in ``mode``

        Returns:
            DefectReport with a triple (H_low, H, H_high) attaining
            2 w(H) - w(H_low) - w(H_high) = epsilon_star, or no witness when
            the mode admits no triple
        """
        mode = ConvexMode(mode)
        ConvexUtils._prepare(family, w, guards)
        below, below_arg, above, above_arg = ConvexUtils._neighbour_minima(family, w.values, mode)
        admissible = np.isfinite(below) & np.isfinite(above)
        gaps = np.where(admissible, 2.0 * w.values - below - above, -np.inf)
        if not admissible.any():
            return DefectReport(property=PropertyKind.CONVEX, epsilon_star=0.0, mode=mode)

        h = int(np.argmax(gaps))
        epsilon_star = max(0.0, float(gaps[h]))
        witness = (int(below_arg[h]), h, int(above_arg[h])) if gaps[h] >= 0 else None
        logger.info(f"[Convex] {mode.value} defect {epsilon_star!r} on {family!r}, witness {witness}")
        return DefectReport(property=PropertyKind.CONVEX, epsilon_star=epsilon_star, witness=witness, mode=mode)

    @staticmethod
    def is_approx_convex(family: Family, w: WeightFn, epsilon: float,
                         mode: ConvexMode = ConvexMode.STRICT_CHAIN,
                         guards: Optional[GuardConfig] = None) -> bool:
        ConvexUtils._check_epsilon(epsilon)
        return ConvexUtils.convex_defect(family, w, mode, guards).epsilon_star <= epsilon

    @staticmethod
    def _check_iteration(tol: float, max_iter: int) -> None:
        if not tol > 0:
            raise InputError(f"tolerance must be > 0, got {tol}")
        if max_iter < 1:
            raise InputError(f"max_iter must be at least 1, got {max_iter}")

    @staticmethod
    def _iterate(family: Family, start: np.ndarray, mode: ConvexMode, tol: float,
                 max_iter: int) -> Tuple[np.ndarray, IterationTrace, bool]:
        """Apply ``step`` from ``start`` until the sup change is <= tol"""
        current = start
        trace = IterationTrace()
        descending = True
        for _ in range(max_iter):
            nxt = ConvexUtils.step(family, current, mode)
            change = float(np.max(np.abs(nxt - current))) if current.size else 0.0
            descending = descending and bool(np.all(nxt <= current + DESCENT_TOL))
            trace.iterations += 1
            trace.sup_changes.append(change)
            current = nxt
            if change <= tol:
                trace.converged = True
                break
        if not trace.converged:
            logger.warning(
                f"[Convex] {ConvexMode(mode).value} iteration did not converge in {max_iter} steps "
                f"(last change {trace.sup_changes[-1]!r})"
            )
        return current, trace, descending

    @staticmethod
    def convex_iterate(family: Family, w: WeightFn, mode: ConvexMode = ConvexMode.STRICT_CHAIN,
                       tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER,
                       guards: Optional[GuardConfig] = None) -> Tuple[WeightFn, IterationTrace]:
        """
        Non-increasing minorant sequence w_0, w_1, ... from w

        w_0 = step(w); w_k = step(w_{k-1}) until the sup-norm change is at
        most ``tol`` or ``max_iter`` steps were taken after w_0.

        Returns:
            (last iterate, trace); non-convergence is reported in the trace
        """
        mode = ConvexMode(mode)
        ConvexUtils._prepare(family, w, guards)
        ConvexUtils._check_iteration(tol, max_iter)
        start = ConvexUtils.step(family, w.values, mode)
        values, trace, _ = ConvexUtils._iterate(family, start, mode, tol, max_iter)
        logger.info(
            f"[Convex] {mode.value} iteration on {family!r}: {trace.iterations} steps, converged={trace.converged}"
        )
        return WeightUtils.bind(family, values), trace

    @staticmethod
    def literal_limit(family: Family, w: WeightFn, guards: Optional[GuardConfig] = None) -> float:
        """
        Constant limit of the literal iteration: min over H of w_0(H)

        The literal update keeps the global minimum fixed and pulls the top
        halfway to it at every step, so on a family with a greatest element
        every value converges to this constant.
        """
        ConvexUtils._prepare(family, w, guards)
        if family.top is None:
            raise InputError("literal limit needs a family with a greatest element")
        first = ConvexUtils.step(family, w.values, ConvexMode.LITERAL)
        return float(np.min(first))

    @staticmethod
    def convex_repair(family: Family, w: WeightFn, epsilon: float,
                      mode: ConvexMode = ConvexMode.STRICT_CHAIN,
                      tol: float = DEFAULT_TOL, max_iter: int = DEFAULT_MAX_ITER,
                      guards: Optional[GuardConfig] = None) -> RepairResult:
        """
        Convex repair w_hat with inf w - eps/2 <= w_hat <= w + eps/2

        w''_0 is the first update taken on w + eps/2 (the shift commutes with
        the averaging), then iterated to w_hat. Also reports
        w' = max{w - eps/2, 0} and checks inf w' <= w_hat.
        """
        mode = ConvexMode(mode)
        ConvexUtils._check_epsilon(epsilon)
        guards = ConvexUtils._prepare(family, w, guards)
        ConvexUtils._check_iteration(tol, max_iter)
        half = epsilon / 2.0

        upper = ConvexUtils.step(family, w.values, mode) + half
        values, trace, descending = ConvexUtils._iterate(family, upper, mode, tol, max_iter)
        repaired = WeightUtils.bind(family, values)
        floor = WeightUtils.bind(family, np.maximum(w.values - half, 0.0))
        defect = ConvexUtils.convex_defect(family, w, mode, guards).epsilon_star
        residual = ConvexUtils.convex_defect(family, repaired, mode, guards).epsilon_star
        distance = WeightUtils.sup_norm_distance(w, repaired)
        low = float(np.min(w.values))
        bound = float(np.max(w.values)) - low + half

        checks = {
            'upper_bound': bool(np.all(values <= w.values + half + BOUND_TOL)),
            'lower_bound': bool(np.all(values >= low - half - BOUND_TOL)),
            'lower_bound_strong': bool(np.all(values >= float(np.min(upper)) - BOUND_TOL)),
            'minorant_chain': descending and bool(np.all(values <= upper + DESCENT_TOL)),
            'floor_bound': float(np.min(floor.values)) <= float(np.min(values)) + BOUND_TOL,
            'repaired_convex': trace.converged and residual <= 10.0 * tol,
        }
        notes = [f"mode={mode.value}"]
        carried = ConvexUtils.carried_over(family, mode)
        if carried:
            notes.append(f"{carried} element(s) without a strict pair on both sides keep their value")
            logger.warning(f"[Convex] Strict update leaves {carried} boundary element(s) unconstrained")

        result = RepairResult(
            property=PropertyKind.CONVEX,
            repaired=repaired,
            epsilon=epsilon,
            defect=defect,
            norm_distance=distance,
            bound=bound,
            hypothesis_met=defect <= epsilon,
            checks=checks,
            auxiliary={'upper': WeightUtils.bind(family, upper), 'floor': floor},
            trace=trace,
            mode=mode,
            notes=notes,
        )
        if not result.guarantee_met:
            logger.warning(f"[Convex] Guarantee unmet: eps={epsilon!r}, defect={defect!r}, checks={checks}")
        return result

    @staticmethod
    def chain_valley_check(family: Family, w: WeightFn, tol: float = 1e-9,
                           guards: Optional[GuardConfig] = None) -> Optional[Tuple[List[int], int]]:
        """
        None when every maximal chain carries a valley-shaped sequence

        Otherwise returns the first offending chain and the index of the peak:
        the last position before a fall that follows an earlier rise.
        Changes of at most ``tol`` count as flat.
        """
        WeightUtils.check_binding(family, w)
        for chain in LatticeUtils.maximal_chains(family, guards):
            values = w.values[chain]
            rising = False
            for j in range(1, len(chain)):
                diff = values[j] - values[j - 1]
                if diff > tol:
                    rising = True
                elif diff < -tol and rising:
                    logger.info(f"[Convex] Valley violated on chain {chain} at position {j - 1}")
                    return chain, j - 1
        return None

    @staticmethod
    def chain_minima(family: Family, w: WeightFn,
                     guards: Optional[GuardConfig] = None) -> List[Tuple[List[int], int]]:
        """Every maximal chain with the position of its first global minimum"""
        WeightUtils.check_binding(family, w)
        return [(chain, int(np.argmin(w.values[chain])))
                for chain in LatticeUtils.maximal_chains(family, guards)]

    @staticmethod
    def _check_epsilon(epsilon: float) -> None:
        if not epsilon >= 0 or not np.isfinite(epsilon):
            raise InputError(f"epsilon must be finite and >= 0, got {epsilon}")
