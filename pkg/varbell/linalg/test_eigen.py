#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest
import numpy as np
from varbell.errors import ConvergenceError, HermiticityError
from ._operator import Operator
from ._eigen import dominant_eigenvalue


def test_diagonal():
    op = Operator(np.diag([-5.0, 1.0, 2.0, 0.0]))
    assert dominant_eigenvalue(op) == pytest.approx(2.0, abs=1e-9)


def test_negative_definite():
    op = Operator(np.diag([-1.0, -3.0]))
    assert dominant_eigenvalue(op) == pytest.approx(-1.0, abs=1e-9)


def test_zero_operator():
    assert dominant_eigenvalue(Operator(np.zeros((8, 8)))) == 0.0


@pytest.mark.parametrize('seed', range(4))
def test_random_hermitian(seed):
    rng = np.random.default_rng(seed)
    h = rng.normal(size=(16, 16)) + 1j * rng.normal(size=(16, 16))
    h = h + h.conj().T
    expected = np.linalg.eigvalsh(h)[-1]
    assert dominant_eigenvalue(Operator(h), seed=seed) == pytest.approx(
        expected, abs=1e-8
    )


def test_degenerate_top():
    op = Operator(np.diag([3.0, 3.0, 1.0, -3.0]))
    assert dominant_eigenvalue(op) == pytest.approx(3.0, abs=1e-9)


def test_deterministic():
    h = np.arange(16, dtype=float).reshape(4, 4)
    op = Operator(h + h.T)
    assert dominant_eigenvalue(op, seed=3) == dominant_eigenvalue(op, seed=3)


def test_errors():
    with pytest.raises(HermiticityError):
        dominant_eigenvalue(Operator([[0, 1], [0, 0]]))
    with pytest.raises(ValueError):
        dominant_eigenvalue(Operator(np.eye(2)), tol=0)
    rng = np.random.default_rng(0)
    h = rng.normal(size=(32, 32))
    with pytest.raises(ConvergenceError) as info:
        dominant_eigenvalue(Operator(h + h.T), tol=1e-15, max_iter=3)
    assert info.value.last_iterate is not None


def _clustered(seed, top):
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8)))
    spectrum = np.concatenate([top, rng.uniform(-1, 0.9, 8 - len(top))])
    h = q @ np.diag(spectrum) @ q.conj().T
    return Operator(0.5 * (h + h.conj().T))


@pytest.mark.parametrize('seed', range(5))
def test_clustered_top_is_accurate(seed):
    op = _clustered(seed, [1.0, 0.99, 0.95])
    expected = np.linalg.eigvalsh(op.entries)[-1]
    assert abs(dominant_eigenvalue(op, tol=1e-9) - expected) <= 1e-9


@pytest.mark.parametrize('seed', range(10))
def test_close_gap_never_silently_inaccurate(seed):
    op = _clustered(seed, [1.0, 0.999, 0.995])
    expected = np.linalg.eigvalsh(op.entries)[-1]
    try:
        value = dominant_eigenvalue(op, tol=1e-9)
    except ConvergenceError as e:
        assert e.last_iterate <= expected + 1e-9
    else:
        assert abs(value - expected) <= 1e-9


def test_tiny_gap_raises():
    op = _clustered(0, [1.0, 0.9999])
    with pytest.raises(ConvergenceError) as info:
        dominant_eigenvalue(op, tol=1e-9)
    assert info.value.last_iterate == pytest.approx(1.0, abs=1e-3)
