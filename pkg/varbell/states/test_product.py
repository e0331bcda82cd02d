#!/usr/bin/env python
# -*- coding: utf-8 -*-
import math
import pytest
import numpy as np
from varbell.errors import CapacityError, DomainError, InvariantError
from varbell.linalg import expectation
from varbell.mk import canonical_settings, mk_bell_operator, variant_operator
from ._product import (
    QubitBloch, ProductState, product_state, embed, product_expectation_v,
    random_product_state
)


def test_qubit_bloch():
    a, b = QubitBloch(math.pi, 1.0).amplitudes()
    assert a == pytest.approx(0)
    assert b == pytest.approx(np.exp(1j))
    for polar, azimuth in [(-0.1, 0), (4.0, 0), (0, 2 * math.pi), (0, -1)]:
        with pytest.raises(InvariantError):
            QubitBloch(polar, azimuth)


def test_product_state_gauge():
    ps = ProductState([(1j, 0), (1j / math.sqrt(2), 1 / math.sqrt(2))])
    assert ps.n == len(ps) == 2
    assert np.all(ps.alpha.imag == 0)
    assert np.all(ps.alpha.real >= 0)
    assert ps.beta[1] == pytest.approx(-1j / math.sqrt(2))
    with pytest.raises(InvariantError):
        ProductState([(1, 1)])
    with pytest.raises(InvariantError):
        ProductState([])


def test_product_state_families():
    zeros = product_state([QubitBloch(0)] * 3)
    assert np.allclose(zeros.alpha, 1)
    assert np.allclose(zeros.beta, 0)
    plus = product_state([QubitBloch(math.pi / 2)] * 2)
    assert np.allclose(embed(plus).amplitudes, [0.5] * 4)
    assert np.allclose(embed(zeros).amplitudes, np.eye(8)[0])
    ones = product_state([QubitBloch(math.pi, 0.5)])
    assert ones.alpha[0] == pytest.approx(0)
    assert abs(ones.beta[0]) == pytest.approx(1)


def test_blochs_round_trip():
    ps = random_product_state(5, seed=3)
    again = product_state(ps.blochs())
    assert np.allclose(again.alpha, ps.alpha)
    assert np.allclose(again.beta, ps.beta)
    assert np.all(ps.basis_fidelities() >= 0.5)


def test_product_expectation_examples():
    assert product_expectation_v(
        product_state([QubitBloch(0)] * 3)
    ) == pytest.approx(4.0)
    assert product_expectation_v(
        product_state([QubitBloch(math.pi / 2)] * 2)
    ) == pytest.approx(1 + 2 ** -0.5)
    assert product_expectation_v(
        product_state([QubitBloch(math.pi / 2), QubitBloch(0), QubitBloch(0)])
    ) == pytest.approx(2.0)
    assert product_expectation_v(
        product_state([QubitBloch(0)] * 50)
    ) == pytest.approx(2.0 ** 49)
    with pytest.raises(DomainError):
        product_expectation_v(product_state([QubitBloch(0)]))
    with pytest.raises(CapacityError):
        product_expectation_v(product_state([QubitBloch(0)] * 51))


@pytest.mark.parametrize('n', range(2, 7))
def test_closed_form_matches_dense(n):
    v = variant_operator(mk_bell_operator(canonical_settings(n)).primal)
    rng = np.random.default_rng(n)
    for _ in range(1000):
        ps = random_product_state(n, seed=rng)
        assert product_expectation_v(ps) == pytest.approx(
            expectation(v, embed(ps)), abs=1e-10
        )


@pytest.mark.parametrize('n', range(2, 7))
def test_separability_bound_on_samples(n):
    rng = np.random.default_rng(100 + n)
    values = [
        product_expectation_v(random_product_state(n, seed=rng))
        for _ in range(10000)
    ]
    assert max(values) <= 2 ** (n - 1) + 1e-9


def test_random_product_state():
    a = random_product_state(4, seed=7)
    b = random_product_state(4, seed=7)
    assert np.array_equal(a.alpha, b.alpha)
    assert np.array_equal(a.beta, b.beta)
    norms = np.abs(a.alpha) ** 2 + np.abs(a.beta) ** 2
    assert np.allclose(norms, 1, atol=1e-12)
    with pytest.raises(InvariantError):
        random_product_state(0)


def test_embed_capacity():
    with pytest.raises(CapacityError):
        embed(product_state([QubitBloch(0)] * 11))
