"""
Tests for exact graph parameters
"""

from itertools import product

import networkx as nx
import pytest

from config.guards import GuardConfig
from models import Graph, ParamKind
from models.errors import GuardExceededError
from utils import GraphParamUtils


def brute_chromatic(g):
    nodes = list(g.nodes())
    if not nodes:
        return 0
    for k in range(1, len(nodes) + 1):
        for colouring in product(range(k), repeat=len(nodes)):
            colour = dict(zip(nodes, colouring))
            if all(colour[u] != colour[v] for u, v in g.edges()):
                return k
    return len(nodes)


@pytest.mark.parametrize('param,expected', [
    (ParamKind.MAX_DEGREE, 2),
    (ParamKind.CLIQUE_NUMBER, 2),
    (ParamKind.INDEPENDENCE_NUMBER, 2),
    (ParamKind.CHROMATIC_NUMBER, 2),
    (ParamKind.COMPONENT_COUNT, 1),
    (ParamKind.ORDER, 3),
    (ParamKind.SIZE, 2),
])
def test_p3_parameters(p3_graph, param, expected):
    assert GraphParamUtils.graph_parameter(p3_graph, param) == expected


def test_k3_and_k1(k3_graph):
    assert GraphParamUtils.graph_parameter(k3_graph, ParamKind.CHROMATIC_NUMBER) == 3
    assert GraphParamUtils.graph_parameter(k3_graph, ParamKind.CLIQUE_NUMBER) == 3
    assert GraphParamUtils.graph_parameter(k3_graph, ParamKind.INDEPENDENCE_NUMBER) == 1
    assert GraphParamUtils.graph_parameter(Graph(n=1), ParamKind.MAX_DEGREE) == 0


def test_edgeless_and_empty_graphs():
    edgeless = Graph(n=4)
    assert GraphParamUtils.graph_parameter(edgeless, ParamKind.CHROMATIC_NUMBER) == 1
    assert GraphParamUtils.graph_parameter(edgeless, ParamKind.INDEPENDENCE_NUMBER) == 4
    assert GraphParamUtils.graph_parameter(edgeless, ParamKind.COMPONENT_COUNT) == 4
    empty = nx.Graph()
    for param in ParamKind:
        assert GraphParamUtils.parameter(empty, param) == 0


def test_chromatic_number_needs_backtracking():
    # odd cycle and Petersen graph: clique bound 2, answer 3
    assert GraphParamUtils.chromatic_number(nx.cycle_graph(5)) == 3
    assert GraphParamUtils.chromatic_number(nx.petersen_graph()) == 3
    assert GraphParamUtils.chromatic_number(nx.complete_graph(5)) == 5


@pytest.mark.parametrize('seed', range(10))
def test_chromatic_number_matches_exhaustive_colouring(seed):
    g = nx.gnp_random_graph(6, 0.5, seed=seed)
    assert GraphParamUtils.chromatic_number(g) == brute_chromatic(g)


def test_exact_parameters_respect_the_guard():
    g = nx.complete_graph(5)
    with pytest.raises(GuardExceededError):
        GraphParamUtils.parameter(g, ParamKind.CLIQUE_NUMBER, GuardConfig(params=4))
    assert GraphParamUtils.parameter(g, ParamKind.ORDER, GuardConfig(params=4)) == 5
