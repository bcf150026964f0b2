"""
Brute-force reference implementations for tiny families

Everything here goes through ``Family.size``, ``Family.leq`` and
``Family.join`` only and shares no code with the transform kernels.
"""

import logging
from itertools import combinations
from typing import List, Optional, Tuple

from config.guards import OracleBudget
from models import ConvexMode, CoverWitness, DefectReport, PropertyKind, WeightFn
from utils.lattice_utils import Family

logger = logging.getLogger(__name__)


class OracleUtils:
    """Exhaustive loops over pairs, triples and covers"""

    @staticmethod
    def brute_min_cover(family: Family, w: WeightFn, h: int,
                        budget: Optional[OracleBudget] = None) -> Tuple[float, CoverWitness]:
        """
        Minimal cover sum of ``h`` by enumerating every subset of the elements below it

        Args:
            family: Join-closed family
            w: Weights bound to ``family``
            h: Target element id
            budget: Limit on the number of elements below ``h``

        Returns:
            (minimal sum, witness); the first minimal subset found in order of
            size, then lexicographic, is kept
        """
        budget = budget or OracleBudget()
        parts = [p for p in range(family.size) if family.leq(p, h)]
        budget.check('cover_parts', len(parts))

        best: Optional[float] = None
        best_parts: List[int] = []
        for r in range(1, len(parts) + 1):
            for subset in combinations(parts, r):
                joined = subset[0]
                for p in subset[1:]:
                    joined = family.join(joined, p)
                if joined != h:
                    continue
                total = sum(float(w[p]) for p in subset)
                if best is None or total < best:
                    best = total
                    best_parts = list(subset)

        return best, CoverWitness(target=h, parts=best_parts, cover_sum=best)

    @staticmethod
    def brute_defect(family: Family, w: WeightFn, prop: PropertyKind,
                     mode: ConvexMode = ConvexMode.STRICT_CHAIN,
                     budget: Optional[OracleBudget] = None) -> DefectReport:
        """Defect of ``w`` for ``prop`` by nested loops (brute_min_cover for covers)"""
        budget = budget or OracleBudget()
        budget.check('family_size', family.size)
        prop = PropertyKind(prop)

        if prop == PropertyKind.MONOTONE:
            report = OracleUtils._monotone(family, w)
        elif prop == PropertyKind.SUBADDITIVE:
            report = OracleUtils._subadditive(family, w, budget)
        else:
            report = OracleUtils._convex(family, w, ConvexMode(mode))
        logger.debug(f"[Oracle] {prop.value} defect {report.epsilon_star!r} on {family!r}")
        return report

    @staticmethod
    def _monotone(family: Family, w: WeightFn) -> DefectReport:
        best, witness = None, None
        for a in range(family.size):
            for b in range(family.size):
                if a == b or not family.leq(a, b):
                    continue
                gap = float(w[a]) - float(w[b])
                if best is None or gap > best:
                    best, witness = gap, (a, b)
        return OracleUtils._report(PropertyKind.MONOTONE, best, witness)

    @staticmethod
    def _subadditive(family: Family, w: WeightFn, budget: OracleBudget) -> DefectReport:
        best, witness = None, None
        for h in range(family.size):
            total, cover = OracleUtils.brute_min_cover(family, w, h, budget)
            gap = float(w[h]) - total
            if best is None or gap > best:
                best, witness = gap, cover
        return DefectReport(property=PropertyKind.SUBADDITIVE, epsilon_star=max(0.0, best), witness=witness)

    @staticmethod
    def _convex(family: Family, w: WeightFn, mode: ConvexMode) -> DefectReport:
        strict = mode == ConvexMode.STRICT_CHAIN
        best, witness = None, None
        for b in range(family.size):
            lows = [a for a in range(family.size) if family.leq(a, b) and not (strict and a == b)]
            highs = [c for c in range(family.size) if family.leq(b, c) and not (strict and c == b)]
            for a in lows:
                for c in highs:
                    gap = 2.0 * float(w[b]) - float(w[a]) - float(w[c])
                    if best is None or gap > best:
                        best, witness = gap, (a, b, c)
        return OracleUtils._report(PropertyKind.CONVEX, best, witness, mode)

    @staticmethod
    def _report(prop: PropertyKind, best: Optional[float], witness,
                mode: Optional[ConvexMode] = None) -> DefectReport:
        if best is None:
            return DefectReport(property=prop, epsilon_star=0.0, mode=mode)
        return DefectReport(
            property=prop,
            epsilon_star=max(0.0, best),
            witness=witness if best >= 0 else None,
            mode=mode,
        )
