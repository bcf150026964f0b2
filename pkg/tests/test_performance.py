"""
Timing smoke tests at the default guard sizes
"""

import time

from models import ConvexMode, FamilyKind, Graph
from utils import ConvexUtils, LatticeUtils, MonotoneUtils, WeightUtils


def _family(n):
    graph = LatticeUtils.random_graph(n, 0.5, 0)
    return LatticeUtils.build_family(graph, FamilyKind.VERTEX_INDUCED)


def test_monotone_defect_on_twelve_vertices():
    family = _family(12)
    w = WeightUtils.random_weights(family, 1, 0.0, 1.0)
    started = time.perf_counter()
    MonotoneUtils.monotone_defect(family, w)
    assert time.perf_counter() - started < 2.0


def test_convex_step_on_twelve_vertices():
    family = _family(12)
    w = WeightUtils.random_weights(family, 2, 0.0, 1.0)
    for mode in (ConvexMode.STRICT_CHAIN, ConvexMode.LITERAL):
        started = time.perf_counter()
        ConvexUtils.step(family, w.values, mode)
        assert time.perf_counter() - started < 2.0


def test_family_build_on_fourteen_vertices():
    started = time.perf_counter()
    family = LatticeUtils.build_family(Graph(n=14), FamilyKind.VERTEX_INDUCED)
    assert family.size == (1 << 14) - 1
    assert time.perf_counter() - started < 2.0
