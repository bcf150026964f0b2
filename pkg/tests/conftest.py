"""
Shared fixtures: small graphs, their families and the worked weight functions
"""

import os
import sys
import json

import numpy as np
import pytest

# Add parent directory to path to import our modules
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from models import ExplicitFamilySpec, FamilyKind, Graph
from utils import LatticeUtils, WeightUtils

P3_COMPONENTS = {'0': 1, '1': 1, '2': 1, '0,1': 1, '0,2': 2, '1,2': 1, '0,1,2': 1}
P3_SQUARES = {'0': 1, '1': 1, '2': 1, '0,1': 4, '0,2': 4, '1,2': 4, '0,1,2': 9}
P3_SQUARE_CLOSURE = {'0': 1, '1': 1, '2': 1, '0,1': 2, '0,2': 2, '1,2': 2, '0,1,2': 3}


@pytest.fixture
def p3_graph():
    return Graph(n=3, edges=[(0, 1), (1, 2)])


@pytest.fixture
def p3(p3_graph):
    return LatticeUtils.build_family(p3_graph, FamilyKind.VERTEX_INDUCED)


@pytest.fixture
def k1():
    return LatticeUtils.build_family(Graph(n=1), FamilyKind.VERTEX_INDUCED)


@pytest.fixture
def k3_graph():
    return Graph(n=3, edges=[(0, 1), (0, 2), (1, 2)])


@pytest.fixture
def k3(k3_graph):
    return LatticeUtils.build_family(k3_graph, FamilyKind.VERTEX_INDUCED)


@pytest.fixture
def e3():
    """{a}, {b} below {a,b}"""
    spec = ExplicitFamilySpec(elements=['a', 'b', 'ab'], leq=[(0, 2), (1, 2)], top=2)
    return LatticeUtils.build_family(None, FamilyKind.EXPLICIT, spec)


@pytest.fixture
def p3_components(p3):
    return WeightUtils.from_labels(p3, P3_COMPONENTS)


@pytest.fixture
def p3_squares(p3):
    return WeightUtils.from_labels(p3, P3_SQUARES)


def by_label(family, w):
    """Weights keyed by element label, for comparisons against worked examples"""
    return {label: float(value) for label, value in zip(family.labels, w.values)}


def random_instance(seed, max_n, p=0.5, lo=0.0, hi=10.0, integer=False):
    """Random G(n, p) vertex-induced family with random weights, deterministic per seed"""
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, max_n, endpoint=True))
    graph = LatticeUtils.random_graph(n, p, seed)
    family = LatticeUtils.build_family(graph, FamilyKind.VERTEX_INDUCED)
    if integer:
        w = WeightUtils.random_integer_weights(family, seed, int(lo), int(hi))
    else:
        w = WeightUtils.random_weights(family, seed, lo, hi)
    return graph, family, w


def write_json(path, payload):
    path.write_text(json.dumps(payload))
    return str(path)
