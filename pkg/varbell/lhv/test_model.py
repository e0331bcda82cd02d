#!/usr/bin/env python
# -*- coding: utf-8 -*-
import itertools as it
import pytest
import numpy as np
from varbell.errors import InvariantError
from ._model import (
    LhvAssignment, LhvDistribution, mk_value, mk_values, v_value,
    distribution_moments, random_lhv_distribution
)


def test_assignment():
    lam = LhvAssignment([(1, -1), (-1, 1)])
    assert lam.n == 2
    assert lam.values == ((1, -1), (-1, 1))
    # bits: v1=1 -> bit0, v1'=0, v2=0, v2'=1 -> bit3
    assert lam.code == 0b1001
    assert LhvAssignment.from_code(lam.code, 2) == lam
    assert hash(lam) == hash(LhvAssignment.from_code(9, 2))
    for bad in [[], [(1, 0)], [(2, 1)]]:
        with pytest.raises(InvariantError):
            LhvAssignment(bad)
    with pytest.raises(InvariantError):
        LhvAssignment.from_code(16, 2)
    assert isinstance(repr(lam), str)


def test_mk_value_examples():
    assert mk_value(LhvAssignment([(1, 1)])) == 1.0
    assert mk_value(LhvAssignment([(-1, 1)])) == -1.0
    assert mk_value(LhvAssignment([(1, 1), (1, 1)])) == 1.0
    values = {
        mk_value(LhvAssignment(pairs))
        for pairs in it.product(it.product((1, -1), repeat=2), repeat=2)
    }
    assert values == {-1.0, 1.0}


def test_v_value():
    assert v_value(LhvAssignment([(1, 1)])) == 2.0
    assert v_value(LhvAssignment([(-1, -1)])) == 0.0


@pytest.mark.parametrize('n', range(1, 6))
def test_vectorized_matches_scalar(n):
    codes = np.arange(4 ** n)
    fast = mk_values(codes, n)
    slow = [mk_value(LhvAssignment.from_code(c, n)) for c in codes]
    assert np.array_equal(fast, slow)


def test_distribution():
    up = LhvAssignment([(1, 1)])
    down = LhvAssignment([(-1, -1)])
    d = LhvDistribution([(up, 0.5), (down, 0.5)])
    assert d.n == 1
    assert len(d) == 2
    assert np.array_equal(d.codes, [up.code, down.code])
    with pytest.raises(InvariantError):
        LhvDistribution([])
    with pytest.raises(InvariantError):
        LhvDistribution([(up, 0.6), (down, 0.6)])
    with pytest.raises(InvariantError):
        LhvDistribution([(up, 1.5), (down, -0.5)])
    with pytest.raises(InvariantError):
        LhvDistribution([(up, 0.5), (LhvAssignment([(1, 1)] * 2), 0.5)])


def test_distribution_moments_examples():
    up = LhvAssignment([(1, 1)])
    down = LhvAssignment([(-1, -1)])
    assert distribution_moments(LhvDistribution([(up, 1.0)])) == (1, 0, 2)
    assert distribution_moments(
        LhvDistribution([(up, 0.5), (down, 0.5)])
    ) == pytest.approx((0, 1, 1))


@pytest.mark.parametrize('n', [1, 2, 3, 6, 10])
def test_random_distributions(n):
    rng = np.random.default_rng(n)
    for _ in range(1000):
        mean, var, v = distribution_moments(
            random_lhv_distribution(n, size=8, seed=rng)
        )
        assert v == pytest.approx(mean + mean ** 2 + var, abs=1e-12)
        assert v <= 2 + 1e-12
        assert var <= 1 - mean ** 2 + 1e-12


def test_random_distribution_is_seeded():
    a = random_lhv_distribution(4, size=5, seed=11)
    b = random_lhv_distribution(4, size=5, seed=11)
    assert np.array_equal(a.codes, b.codes)
    assert np.array_equal(a.weights, b.weights)
