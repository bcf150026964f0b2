"""
Weight function construction: binding, exact-parameter generators, random draws
"""

import logging
from typing import Dict, Iterable, Mapping, Optional

import numpy as np

from config.guards import GuardConfig, get_guard_config
from models import FamilyKind, Graph, ParamKind, WeightFn
from models.errors import FamilyMismatchError, InputError
from utils.graph_utils import EXACT_SEARCH_PARAMS, GraphParamUtils
from utils.lattice_utils import Family

logger = logging.getLogger(__name__)


class WeightUtils:
    """Utility class for weight functions bound to a family"""

    @staticmethod
    def bind(family: Family, values: Iterable[float]) -> WeightFn:
        """Validate ``values`` (one per element id) and bind them to ``family``"""
        try:
            w = WeightFn(values=list(values) if not isinstance(values, np.ndarray) else values,
                         family_key=family.key)
        except ValueError as e:
            raise InputError(f"invalid weights: {e}") from e
        if w.size != family.size:
            raise FamilyMismatchError(
                f"weight function has {w.size} values but the family has {family.size} elements"
            )
        return w

    @staticmethod
    def constant(family: Family, value: float) -> WeightFn:
        return WeightUtils.bind(family, np.full(family.size, float(value)))

    @staticmethod
    def from_labels(family: Family, mapping: Mapping[str, float]) -> WeightFn:
        """Build weights from canonical element labels; every element must appear"""
        missing = [label for label in family.labels if label not in mapping]
        if missing:
            raise InputError(f"weights are missing element '{missing[0]}'")
        extra = [label for label in mapping if label not in set(family.labels)]
        if extra:
            raise InputError(f"'{extra[0]}' is not an element of the {family.kind.value} family")
        return WeightUtils.bind(family, [mapping[label] for label in family.labels])

    @staticmethod
    def to_labels(w: WeightFn, family: Family) -> Dict[str, float]:
        WeightUtils.check_binding(family, w)
        return {label: float(value) for label, value in zip(family.labels, w.values)}

    @staticmethod
    def check_binding(family: Family, *weights: WeightFn) -> None:
        for w in weights:
            if w.family_key != family.key:
                raise FamilyMismatchError(
                    f"weight function is bound to {w.family_key}, not {family.key}"
                )

    @staticmethod
    def gen_param_weights(graph: Graph, family: Family, param: ParamKind, offset: float = 0.0,
                          guards: Optional[GuardConfig] = None) -> WeightFn:
        """
        w(H) = parameter(H) + offset for every subgraph element H

        Args:
            graph: Underlying graph
            family: Vertex-induced or edge-subsets family of ``graph``
            param: Exact parameter
            offset: Non-negative shift (restores strict positivity when wanted)

        Returns:
            WeightFn bound to ``family``
        """
        param = ParamKind(param)
        if family.kind == FamilyKind.EXPLICIT:
            raise InputError("explicit families have no underlying subgraph to measure")
        if not offset >= 0 or not np.isfinite(offset):
            raise InputError(f"offset must be finite and >= 0, got {offset}")
        guards = guards or get_guard_config()
        if param in EXACT_SEARCH_PARAMS:
            guards.check('params', graph.n)

        values = np.empty(family.size, dtype=np.float64)
        for a in range(family.size):
            sub = GraphParamUtils.subgraph(family.vertices(a), family.edges(a))
            values[a] = GraphParamUtils.parameter(sub, param, guards) + offset

        logger.info(f"[Weights] Generated {param.value} weights over {family!r}")
        return WeightUtils.bind(family, values)

    @staticmethod
    def _check_interval(lo: float, hi: float) -> None:
        if not (np.isfinite(lo) and np.isfinite(hi)):
            raise InputError(f"interval bounds must be finite, got [{lo}, {hi}]")
        if lo < 0:
            raise InputError(f"lower bound must be >= 0, got {lo}")
        if lo > hi:
            raise InputError(f"lower bound {lo} exceeds upper bound {hi}")

    @staticmethod
    def random_weights(family: Family, seed: int, lo: float = 0.0, hi: float = 1.0) -> WeightFn:
        """
        Independent uniform draws on [lo, hi], one per element id in id order

        The generator is numpy's PCG64 seeded with ``seed``
        (``numpy.random.default_rng(seed).uniform(lo, hi, size)``).
        """
        WeightUtils._check_interval(lo, hi)
        rng = np.random.default_rng(seed)
        values = rng.uniform(lo, hi, size=family.size)
        return WeightUtils.bind(family, np.clip(values, lo, hi))

    @staticmethod
    def random_integer_weights(family: Family, seed: int, lo: int = 0, hi: int = 10) -> WeightFn:
        """Uniform integers on [lo, hi] (inclusive), PCG64 seeded with ``seed``"""
        WeightUtils._check_interval(lo, hi)
        rng = np.random.default_rng(seed)
        return WeightUtils.bind(family, rng.integers(lo, hi, endpoint=True, size=family.size))

    @staticmethod
    def decreasing_weights(family: Family, seed: int, lo: float = 0.0, hi: float = 1.0) -> WeightFn:
        """Random weights that never increase along containment.

        Values are drawn as in ``random_weights``, sorted descending and laid
        out along a linear extension (size of the down-set, then id).
        """
        WeightUtils._check_interval(lo, hi)
        rng = np.random.default_rng(seed)
        values = np.sort(rng.uniform(lo, hi, size=family.size))[::-1]
        if family.is_bitset:
            rank = np.array([bin(a + 1).count('1') for a in range(family.size)])
        else:
            rank = family.leq_matrix().sum(axis=0)
        order = np.lexsort((np.arange(family.size), rank))
        out = np.empty(family.size, dtype=np.float64)
        out[order] = values
        return WeightUtils.bind(family, out)

    @staticmethod
    def perturb(w: WeightFn, delta: float, seed: int) -> WeightFn:
        """Add uniform noise on [-delta, delta] and clamp at 0; deterministic per seed"""
        if not delta >= 0 or not np.isfinite(delta):
            raise InputError(f"perturbation size must be finite and >= 0, got {delta}")
        if delta == 0:
            return w
        rng = np.random.default_rng(seed)
        noise = rng.uniform(-delta, delta, size=w.size)
        values = np.maximum(w.values + noise, 0.0)
        # rounding in the addition may overshoot the radius by an ulp
        values = np.clip(values, w.values - delta, w.values + delta)
        return WeightFn(values=np.maximum(values, 0.0), family_key=w.family_key)

    @staticmethod
    def sup_norm_distance(w1: WeightFn, w2: WeightFn) -> float:
        """max over elements of |w1(H) - w2(H)|"""
        if w1.family_key != w2.family_key or w1.size != w2.size:
            raise FamilyMismatchError(
                f"cannot compare weights bound to {w1.family_key} and {w2.family_key}"
            )
        if w1.size == 0:
            return 0.0
        return float(np.max(np.abs(w1.values - w2.values)))
