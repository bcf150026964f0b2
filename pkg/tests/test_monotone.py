"""
Tests for approximate monotonicity
"""

import numpy as np
import pytest

from conftest import by_label, random_instance
from models.errors import InputError
from utils import MonotoneUtils, WeightUtils


def test_component_count_defect(p3, p3_components):
    report = MonotoneUtils.monotone_defect(p3, p3_components)
    assert report.epsilon_star == 1.0
    assert report.witness == (p3.lookup('0,2'), p3.lookup('0,1,2'))


def test_is_approx_monotone(p3, p3_components):
    assert MonotoneUtils.is_approx_monotone(p3, p3_components, 1.0)
    assert not MonotoneUtils.is_approx_monotone(p3, p3_components, 0.999)
    assert MonotoneUtils.is_approx_monotone(p3, p3_components, 100.0)
    with pytest.raises(InputError):
        MonotoneUtils.is_approx_monotone(p3, p3_components, -1.0)


def test_monotone_weights_have_no_defect(p3):
    order = WeightUtils.bind(p3, [bin(a + 1).count('1') for a in range(p3.size)])
    report = MonotoneUtils.monotone_defect(p3, order)
    assert report.epsilon_star == 0.0
    assert report.witness is None
    assert MonotoneUtils.verify_monotone(p3, order) is None


def test_constant_and_single_element(p3, k1):
    assert MonotoneUtils.monotone_defect(p3, WeightUtils.constant(p3, 2.0)).epsilon_star == 0.0
    report = MonotoneUtils.monotone_defect(k1, WeightUtils.constant(k1, 5.0))
    assert report.epsilon_star == 0.0 and report.witness is None
    assert MonotoneUtils.verify_monotone(k1, WeightUtils.constant(k1, 5.0)) is None


def test_verify_monotone_witness(p3, p3_components):
    assert MonotoneUtils.verify_monotone(p3, p3_components) == (p3.lookup('0,2'), p3.top)


def test_component_count_repair(p3, p3_components):
    result = MonotoneUtils.monotone_repair(p3, p3_components, 1.0)
    assert set(by_label(p3, result.repaired).values()) == {1.5}
    assert result.norm_distance == 0.5
    assert result.bound == 0.5
    assert result.guarantee_met
    assert MonotoneUtils.verify_monotone(p3, result.repaired) is None


def test_repair_below_the_defect_flags_the_guarantee(p3, p3_components):
    result = MonotoneUtils.monotone_repair(p3, p3_components, 0.5)
    assert not result.hypothesis_met
    assert not result.guarantee_met
    assert result.checks['repaired_monotone']


def test_repair_is_identity_on_monotone_input(p3):
    order = WeightUtils.bind(p3, [bin(a + 1).count('1') for a in range(p3.size)])
    result = MonotoneUtils.monotone_repair(p3, order, 0.0)
    assert result.repaired == order


def test_repair_of_constant(p3):
    result = MonotoneUtils.monotone_repair(p3, WeightUtils.constant(p3, 2.0), 3.0)
    assert np.all(result.repaired.values == 3.5)


@pytest.mark.parametrize('seed', range(20))
def test_repair_shift_by_half_epsilon(seed):
    _, family, w = random_instance(seed, 5)
    base = MonotoneUtils.monotone_repair(family, w, 0.0).repaired.values
    shifted = MonotoneUtils.monotone_repair(family, w, 0.75).repaired.values
    assert np.array_equal(shifted, base + 0.375)


def test_forward_direction_on_random_instances():
    for seed in range(200):
        _, family, w = random_instance(seed, 8, lo=0.0, hi=10.0)
        defect = MonotoneUtils.monotone_defect(family, w).epsilon_star
        result = MonotoneUtils.monotone_repair(family, w, defect)
        assert MonotoneUtils.verify_monotone(family, result.repaired) is None
        assert result.norm_distance <= defect / 2 + 1e-12
        assert result.guarantee_met


def test_converse_direction_on_random_instances():
    for seed in range(200):
        _, family, w = random_instance(seed, 6)
        monotone = MonotoneUtils.monotone_repair(family, w, 0.0).repaired
        epsilon = 0.5 + (seed % 7) * 0.25
        noisy = WeightUtils.perturb(monotone, epsilon / 2, seed)
        assert MonotoneUtils.monotone_defect(family, noisy).epsilon_star <= epsilon + 1e-12


def test_converse_check(p3, p3_components):
    repaired = MonotoneUtils.monotone_repair(p3, p3_components, 1.0).repaired
    report, holds = MonotoneUtils.monotone_converse_check(p3, p3_components, repaired, 1.0)
    assert holds and report.epsilon_star == 1.0
    with pytest.raises(InputError):
        MonotoneUtils.monotone_converse_check(p3, repaired, p3_components, 1.0)
    with pytest.raises(InputError):
        MonotoneUtils.monotone_converse_check(p3, p3_components, repaired, 0.5)


def test_is_decreasing(p3, p3_components):
    decreasing = WeightUtils.bind(p3, [4 - bin(a + 1).count('1') for a in range(p3.size)])
    assert MonotoneUtils.is_decreasing(p3, decreasing)
    assert not MonotoneUtils.is_decreasing(p3, p3_components)
