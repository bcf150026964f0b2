"""
Tests for family construction, order structure and enumeration
"""

import math

import numpy as np
import pytest

from config.guards import GuardConfig, get_guard_config
from models import ExplicitFamilySpec, FamilyKind, Graph
from models.errors import GuardExceededError, InputError, JoinUndefinedError, PosetAxiomError
from utils import LatticeUtils


def test_graph_normalises_edges():
    graph = Graph(n=3, edges=[[2, 1], [0, 1]])
    assert graph.edges == ((0, 1), (1, 2))
    assert graph.vertex_count == 3
    assert graph.edge_count == 2


@pytest.mark.parametrize('edges', [[(1, 1)], [(0, 1), (1, 0)], [(0, 3)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        Graph(n=3, edges=edges)


def test_p3_vertex_induced_ids_follow_bit_order(p3):
    assert p3.size == 7
    assert p3.labels == ['0', '1', '0,1', '2', '0,2', '1,2', '0,1,2']
    assert p3.top == 6
    assert p3.vertices(4) == [0, 2]
    assert p3.edges(6) == [(0, 1), (1, 2)]
    assert p3.edges(4) == []


def test_k1_family_is_a_single_top(k1):
    assert k1.size == 1
    assert k1.top == 0
    assert list(LatticeUtils.strict_pairs(k1)) == []
    assert list(LatticeUtils.strict_triples(k1)) == []
    assert LatticeUtils.maximal_chains(k1) == [[0]]


def test_edge_subsets_family(p3_graph):
    family = LatticeUtils.build_family(p3_graph, FamilyKind.EDGE_SUBSETS)
    assert family.labels == ['0', '1', '0,1']
    assert family.vertices(0) == [0, 1]
    assert family.vertices(2) == [0, 1, 2]
    assert family.edges(1) == [(1, 2)]


def test_edge_subsets_of_edgeless_graph_is_rejected():
    with pytest.raises(InputError):
        LatticeUtils.build_family(Graph(n=3), FamilyKind.EDGE_SUBSETS)


def test_leq_and_join(p3):
    a, b = p3.lookup('0'), p3.lookup('2')
    assert LatticeUtils.join(p3, a, b) == p3.lookup('0,2')
    assert LatticeUtils.leq(p3, a, p3.lookup('0,1'))
    assert not LatticeUtils.leq(p3, b, p3.lookup('0,1'))
    assert LatticeUtils.leq(p3, a, a)


def test_strict_pair_and_triple_counts(p3):
    pairs = list(LatticeUtils.strict_pairs(p3))
    assert len(pairs) == 12
    assert all(p3.leq(a, b) and a != b for a, b in pairs)
    assert pairs == sorted(pairs)
    assert len(list(LatticeUtils.strict_triples(p3))) == 6


def test_maximal_chains_of_p3(p3):
    chains = LatticeUtils.maximal_chains(p3)
    assert len(chains) == 6
    assert all(len(chain) == 3 and chain[-1] == p3.top for chain in chains)
    assert [p3.lookup('0'), p3.lookup('0,2'), p3.top] in chains


def test_explicit_family(e3):
    assert e3.labels == ['a', 'b', 'ab']
    assert e3.join(0, 1) == 2
    assert e3.is_join_closed()
    assert list(LatticeUtils.strict_pairs(e3)) == [(0, 2), (1, 2)]
    assert list(LatticeUtils.strict_triples(e3)) == []
    assert sorted(LatticeUtils.maximal_chains(e3)) == [[0, 2], [1, 2]]


def test_explicit_relation_is_closed_transitively():
    spec = ExplicitFamilySpec(elements=['x', 'y', 'z'], leq=[(0, 1), (1, 2)])
    family = LatticeUtils.build_family(None, FamilyKind.EXPLICIT, spec)
    assert family.leq(0, 2)
    assert family.upper_covers(0) == [1]


def test_explicit_cycle_is_rejected():
    spec = ExplicitFamilySpec(elements=['x', 'y'], leq=[(0, 1), (1, 0)])
    with pytest.raises(PosetAxiomError):
        LatticeUtils.build_family(None, FamilyKind.EXPLICIT, spec)


def test_explicit_family_without_join():
    # a and b have two minimal upper bounds
    spec = ExplicitFamilySpec(elements=['a', 'b', 'c', 'd'], leq=[(0, 2), (0, 3), (1, 2), (1, 3)])
    family = LatticeUtils.build_family(None, FamilyKind.EXPLICIT, spec)
    assert not family.is_join_closed()
    with pytest.raises(JoinUndefinedError):
        family.join(0, 1)


def test_declared_top_must_contain_everything():
    spec = ExplicitFamilySpec(elements=['a', 'b'], leq=[], top=1)
    with pytest.raises(InputError):
        LatticeUtils.build_family(None, FamilyKind.EXPLICIT, spec)


def test_explicit_spec_validation():
    with pytest.raises(ValueError):
        ExplicitFamilySpec(elements=['a', 'a'])
    with pytest.raises(ValueError):
        ExplicitFamilySpec(elements=['a'], leq=[(0, 1)])


def test_family_guard():
    with pytest.raises(GuardExceededError) as info:
        LatticeUtils.build_family(Graph(n=15), FamilyKind.VERTEX_INDUCED, guards=GuardConfig())
    assert info.value.limit == 14
    small = GuardConfig(family=2)
    with pytest.raises(GuardExceededError):
        LatticeUtils.build_family(Graph(n=3), FamilyKind.VERTEX_INDUCED, guards=small)


def test_guard_override_and_ceiling(monkeypatch):
    import config.guards as guards_module

    assert get_guard_config(override=True).override
    monkeypatch.setattr(guards_module, 'GUARD_SETTING', 20)
    raised = guards_module.get_guard_config()
    assert raised.family == 20 and raised.covers == 20
    monkeypatch.setattr(guards_module, 'GUARD_SETTING', 'override')
    assert guards_module.get_guard_config().override


def test_random_graph_is_deterministic():
    assert LatticeUtils.random_graph(6, 0.5, 3) == LatticeUtils.random_graph(6, 0.5, 3)
    assert LatticeUtils.random_graph(5, 0.0, 1).edge_count == 0
    assert LatticeUtils.random_graph(5, 1.0, 1).edge_count == 10
    with pytest.raises(InputError):
        LatticeUtils.random_graph(4, 1.5, 0)


def test_family_keys_differ_between_families(p3):
    assert p3.key == LatticeUtils.build_family(Graph(n=3, edges=[(0, 1), (1, 2)]), FamilyKind.VERTEX_INDUCED).key
    assert p3.key != LatticeUtils.build_family(Graph(n=2), FamilyKind.VERTEX_INDUCED).key


def containment(family):
    return np.array([[family.leq(a, b) for b in range(family.size)] for a in range(family.size)])


def divisors_of_twelve():
    spec = ExplicitFamilySpec(
        elements=['1', '2', '3', '4', '6', '12'],
        leq=[(0, 1), (0, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)],
        top=5,
    )
    return LatticeUtils.build_family(None, FamilyKind.EXPLICIT, spec)


def order_test_families():
    families = [LatticeUtils.build_family(LatticeUtils.random_graph(n, 0.5, n), FamilyKind.VERTEX_INDUCED)
                for n in range(1, 8)]
    k4 = Graph(n=4, edges=[(u, v) for u in range(4) for v in range(u + 1, 4)])
    families.append(LatticeUtils.build_family(k4, FamilyKind.EDGE_SUBSETS))
    families.append(divisors_of_twelve())
    return families


@pytest.mark.parametrize('family', order_test_families(), ids=repr)
def test_containment_is_a_partial_order_with_top(family):
    leq = containment(family)
    assert leq.diagonal().all()
    assert not (leq & leq.T & ~np.eye(family.size, dtype=bool)).any()
    through = (leq.astype(np.int64) @ leq.astype(np.int64)) > 0
    assert not (through & ~leq).any()
    assert leq[:, family.top].all()


@pytest.mark.parametrize('family', order_test_families(), ids=repr)
def test_join_is_the_least_upper_bound(family):
    leq = containment(family)
    for a in range(family.size):
        for b in range(family.size):
            j = family.join(a, b)
            upper = leq[a] & leq[b]
            assert upper[j]
            assert leq[j, upper].all()


@pytest.mark.parametrize('family', order_test_families(), ids=repr)
def test_strict_enumerations_match_containment(family):
    strict = containment(family) & ~np.eye(family.size, dtype=bool)
    pairs = [(a, b) for a in range(family.size) for b in range(family.size) if strict[a, b]]
    assert list(LatticeUtils.strict_pairs(family)) == pairs
    if family.width <= 6:
        triples = [(a, b, c) for a, b in pairs for c in range(family.size) if strict[b, c]]
        assert list(LatticeUtils.strict_triples(family)) == triples


def test_divisor_lattice_joins_are_least_common_multiples():
    family = divisors_of_twelve()
    for a in range(family.size):
        for b in range(family.size):
            joined = int(family.label(family.join(a, b)))
            assert joined == math.lcm(int(family.label(a)), int(family.label(b)))
