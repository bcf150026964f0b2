"""
Approximate subadditivity: cover closure, sandwich and epsilon-repair
"""

import logging
import math
from typing import Dict, List, Optional, Tuple

import numpy as np

from config.guards import GuardConfig, get_guard_config
from models import CoverWitness, DefectReport, PropertyKind, RepairResult, WeightFn
from models.errors import HypothesisViolatedError, InputError, JoinUndefinedError
from utils.lattice_utils import Family
from utils.transform_utils import INF, MinTransforms
from utils.weight_utils import WeightUtils

logger = logging.getLogger(__name__)

CHECK_TOL = 1e-12


class CoverClosure:
    """Minimal cover sums with the binary split chosen at every element.

    ``splits[h]`` is None when the trivial cover {h} is optimal, otherwise the
    pair (a, b) of strictly smaller elements joining to h.
    """

    def __init__(self, family: Family, values: np.ndarray, splits: List[Optional[Tuple[int, int]]]):
        self.family = family
        self.values = values
        self.splits = splits

    def parts(self, h: int) -> List[int]:
        """Distinct parts of an optimal cover of ``h``, ascending"""
        found = set()
        stack = [h]
        while stack:
            node = stack.pop()
            split = self.splits[node]
            if split is None:
                found.add(node)
            else:
                stack.extend(split)
        return sorted(found)

    def witness(self, w: WeightFn, h: int) -> CoverWitness:
        parts = self.parts(h)
        return CoverWitness(target=h, parts=parts, cover_sum=math.fsum(w.values[p] for p in parts))


class SubadditiveUtils:
    """Checks and repairs for w(H) <= w(H_1) + ... + w(H_n) + eps over covers of H"""

    @staticmethod
    def _prepare(family: Family, w: WeightFn, guards: Optional[GuardConfig]) -> GuardConfig:
        guards = guards or get_guard_config()
        guards.check('covers', family.width)
        WeightUtils.check_binding(family, w)
        if not family.is_join_closed():
            raise JoinUndefinedError(*SubadditiveUtils._missing_join(family))
        return guards

    @staticmethod
    def _missing_join(family: Family) -> Tuple[int, int]:
        a, b = np.argwhere(family.join_table() < 0)[0]
        return int(a), int(b)

    @staticmethod
    def _closure_bitset(family: Family, w: WeightFn) -> CoverClosure:
        width = family.width
        minc = MinTransforms.to_mask_array(w.values)
        splits: List[Optional[Tuple[int, int]]] = [None] * family.size
        popcount = np.array([bin(mask).count('1') for mask in range(1 << width)])

        for layer in range(2, width + 1):
            for h in np.flatnonzero(popcount == layer):
                h = int(h)
                bits = [b for b in range(width) if h >> b & 1]
                local_full = (1 << layer) - 1
                idx = np.arange(1 << layer, dtype=np.int64)
                glob = np.zeros(1 << layer, dtype=np.int64)
                for t, b in enumerate(bits):
                    glob |= ((idx >> t) & 1) << b

                # B ranges over proper subsets of h containing h \ A
                local = minc[glob].copy()
                local[local_full] = INF
                upper, upper_arg = MinTransforms.mask_transform(local, layer, upward=True)
                a_local = idx[1:local_full]
                candidates = minc[glob[a_local]] + upper[local_full ^ a_local]
                j = int(np.argmin(candidates))
                if candidates[j] < minc[h]:
                    minc[h] = candidates[j]
                    a_mask = int(glob[a_local[j]])
                    b_mask = int(glob[upper_arg[local_full ^ a_local[j]]])
                    splits[h - 1] = (a_mask - 1, b_mask - 1)

        return CoverClosure(family, minc[1:], splits)

    @staticmethod
    def _closure_explicit(family: Family, w: WeightFn) -> CoverClosure:
        joins = family.join_table()
        leq = family.leq_matrix()
        minc = np.array(w.values, dtype=np.float64, copy=True)
        splits: List[Optional[Tuple[int, int]]] = [None] * family.size
        order = np.lexsort((np.arange(family.size), leq.sum(axis=0)))

        for h in order:
            h = int(h)
            pairs = np.argwhere(joins == h)
            pairs = pairs[(pairs[:, 0] != h) & (pairs[:, 1] != h)]
            if pairs.size == 0:
                continue
            candidates = minc[pairs[:, 0]] + minc[pairs[:, 1]]
            j = int(np.argmin(candidates))
            if candidates[j] < minc[h]:
                minc[h] = candidates[j]
                splits[h] = (int(pairs[j, 0]), int(pairs[j, 1]))

        return CoverClosure(family, minc, splits)

    @staticmethod
    def closure_table(family: Family, w: WeightFn, guards: Optional[GuardConfig] = None) -> CoverClosure:
        """Cover closure values together with the optimal splits"""
        SubadditiveUtils._prepare(family, w, guards)
        if family.is_bitset:
            closure = SubadditiveUtils._closure_bitset(family, w)
        else:
            closure = SubadditiveUtils._closure_explicit(family, w)
        logger.info(f"[Subadditive] Cover closure computed on {family!r}")
        return closure

    @staticmethod
    def cover_closure(family: Family, w: WeightFn, guards: Optional[GuardConfig] = None) -> WeightFn:
        """
        w_bar(H) = min over covers {H_1..H_n} of H of w(H_1) + ... + w(H_n)

        Parts may overlap; w_bar is the subadditive minorant of w.
        """
        closure = SubadditiveUtils.closure_table(family, w, guards)
        return WeightUtils.bind(family, closure.values)

    @staticmethod
    def subadditive_defect(family: Family, w: WeightFn, guards: Optional[GuardConfig] = None) -> DefectReport:
        """Smallest eps for which w is eps-approximately subadditive, with an optimal cover"""
        closure = SubadditiveUtils.closure_table(family, w, guards)
        gaps = w.values - closure.values
        h = int(np.argmax(gaps))
        epsilon_star = max(0.0, float(gaps[h]))
        report = DefectReport(
            property=PropertyKind.SUBADDITIVE,
            epsilon_star=epsilon_star,
            witness=closure.witness(w, h),
        )
        logger.info(f"[Subadditive] Defect {epsilon_star!r} on {family!r} at element {h}")
        return report

    @staticmethod
    def is_approx_subadditive(family: Family, w: WeightFn, epsilon: float,
                              guards: Optional[GuardConfig] = None) -> bool:
        SubadditiveUtils._check_epsilon(epsilon)
        return SubadditiveUtils.subadditive_defect(family, w, guards).epsilon_star <= epsilon

    @staticmethod
    def subadditive_repair(family: Family, w: WeightFn, epsilon: float,
                           guards: Optional[GuardConfig] = None) -> RepairResult:
        """
        Repair by cover closure and verify the epsilon sandwich

        With w1 = max{0, w - eps}: if w is eps-approximately subadditive then
        w1 <= w_bar <= w, so ||w - w_bar|| <= eps. A smaller eps is reported,
        not raised, through ``hypothesis_met``.
        """
        SubadditiveUtils._check_epsilon(epsilon)
        guards = guards or get_guard_config()
        closure = SubadditiveUtils.closure_table(family, w, guards)
        repaired = WeightUtils.bind(family, closure.values)
        lower = WeightUtils.bind(family, np.maximum(0.0, w.values - epsilon))
        defect = max(0.0, float(np.max(w.values - closure.values)))
        distance = WeightUtils.sup_norm_distance(w, repaired)

        checks: Dict[str, bool] = {
            'repaired_subadditive': SubadditiveUtils.verify_subadditive(family, repaired, CHECK_TOL, guards) is None,
            'minorant': bool(np.all(repaired.values <= w.values)),
            'lower_sandwich': bool(np.all(lower.values <= repaired.values + CHECK_TOL)),
            'norm_bound': distance <= epsilon + CHECK_TOL,
        }
        result = RepairResult(
            property=PropertyKind.SUBADDITIVE,
            repaired=repaired,
            epsilon=epsilon,
            defect=defect,
            norm_distance=distance,
            bound=epsilon,
            hypothesis_met=defect <= epsilon,
            checks=checks,
            auxiliary={'lower': lower},
        )
        if not result.guarantee_met:
            logger.warning(f"[Subadditive] Guarantee unmet: eps={epsilon!r}, defect={defect!r}")
        else:
            logger.info(f"[Subadditive] Repaired {family!r}: distance {distance!r} <= {epsilon!r}")
        return result

    @staticmethod
    def subadditive_sandwich(family: Family, w1: WeightFn, w2: WeightFn,
                             guards: Optional[GuardConfig] = None) -> WeightFn:
        """
        Subadditive w_bar with w1 <= w_bar <= w2

        Requires w1(H) <= w2(H_1) + ... + w2(H_n) for every cover of H, i.e.
        w1 <= cover_closure(w2); raises HypothesisViolatedError otherwise.
        """
        WeightUtils.check_binding(family, w1)
        closure = SubadditiveUtils.cover_closure(family, w2, guards)
        violated = np.flatnonzero(w1.values > closure.values + CHECK_TOL)
        if violated.size:
            h = int(violated[0])
            raise HypothesisViolatedError(h, float(w1.values[h]), float(closure.values[h]))
        return closure

    @staticmethod
    def verify_subadditive(family: Family, w: WeightFn, tol: float = 0.0,
                           guards: Optional[GuardConfig] = None) -> Optional[Tuple[int, int]]:
        """
        None when w(A v B) <= w(A) + w(B) + tol for every pair, else the first violating pair

        Pairs are scanned with a <= b in lexicographic order; binary joins
        suffice since any finite cover folds into repeated joins.
        """
        guards = guards or get_guard_config()
        guards.check('pairs', family.width)
        WeightUtils.check_binding(family, w)
        if not tol >= 0:
            raise InputError(f"tolerance must be >= 0, got {tol}")
        values = w.values

        if family.is_bitset:
            masks = np.arange(1, family.size + 1, dtype=np.int64)
            for a in range(family.size):
                tail = masks[a:]
                joined = values[(tail | (a + 1)) - 1]
                bad = np.flatnonzero(joined > values[a] + values[a:] + tol)
                if bad.size:
                    return a, int(a + bad[0])
            return None

        if not family.is_join_closed():
            raise JoinUndefinedError(*SubadditiveUtils._missing_join(family))
        joins = family.join_table()
        excess = values[joins] > values[:, None] + values[None, :] + tol
        excess = np.triu(excess)
        if excess.any():
            a, b = np.argwhere(excess)[0]
            return int(a), int(b)
        return None

    @staticmethod
    def _check_epsilon(epsilon: float) -> None:
        if not epsilon >= 0 or not np.isfinite(epsilon):
            raise InputError(f"epsilon must be finite and >= 0, got {epsilon}")
