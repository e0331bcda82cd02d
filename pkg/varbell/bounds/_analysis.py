#!/usr/bin/env python
# -*- coding: utf-8 -*-
from collections import namedtuple
import math
import numpy as np
from varbell.errors import CapacityError, DomainError, VerificationError
from varbell.linalg import MAX_DENSE_QUBITS, dominant_eigenvalue, expectation
from varbell.mk import (
    canonical_settings, mk_bell_operator, spectral_mk, variant_operator
)
from varbell.states import (
    MAX_CLOSED_FORM_QUBITS, THETA_MAX, GhzParameter, generalized_ghz
)


LHV_BOUND = 2.0
EIGEN_CHECK_TOL = 1e-8
CURVE_TOL = 1e-10
DEFAULT_THETA_POINTS = 33

AnalyticBounds = namedtuple(
    'AnalyticBounds', ['separability', 'entanglement', 'lhv']
)
EigenCheck = namedtuple('EigenCheck', ['analytic', 'iterative'])
SpectrumBounds = namedtuple('SpectrumBounds', ['lower', 'upper'])
GhzPoint = namedtuple('GhzPoint', ['theta', 'value', 'violation'])
GhzCurve = namedtuple('GhzCurve', ['n', 'points', 'max_deviation'])


def _check_domain(n):
    if n < 2:
        raise DomainError(f'Bounds are defined for n >= 2, got {n}.')


def analytic_bounds(n):
    '''Closed forms of the separability bound ``2^(n-1)``, the maximal
    quantum value ``2^((n-1)/2) + 2^(n-1)`` and the local hidden variable
    bound ``2`` of ``<V_n>``.'''
    _check_domain(n)
    return AnalyticBounds(
        2.0 ** (n - 1), 2.0 ** ((n - 1) / 2) + 2.0 ** (n - 1), LHV_BOUND
    )


def variant_spectrum_bounds(m, tol=1e-9, seed=0):
    '''Smallest and largest eigenvalue of ``M + M^2`` for a Hermitian
    ``M``, both by power iteration.'''
    v = variant_operator(m)
    return SpectrumBounds(
        -dominant_eigenvalue(-v, tol=tol, seed=seed),
        dominant_eigenvalue(v, tol=tol, seed=seed)
    )


def max_eigen_check(n, tol=1e-9, seed=0):
    '''Compare the maximal quantum value against the dominant eigenvalue of
    the variant operator built on the rank-2 MK form.

    ``iterative`` is ``None`` beyond the dense limit.

    Raises
    ------
    ConvergenceError
        Propagated from the power iteration.
    '''
    _check_domain(n)
    analytic = analytic_bounds(n).entanglement
    if n > MAX_DENSE_QUBITS:
        return EigenCheck(analytic, None)
    iterative = dominant_eigenvalue(
        variant_operator(spectral_mk(n)), tol=tol, seed=seed
    )
    return EigenCheck(analytic, iterative)


def ghz_value(n, theta):
    '''``<V_n>`` on ``cos(theta)|0^n> + sin(theta)|1^n>`` in closed form.'''
    return 2 ** ((n - 1) / 2) * math.sin(2 * theta) + 2.0 ** (n - 1)


def default_grid(points=DEFAULT_THETA_POINTS):
    return [float(t) for t in np.linspace(0, THETA_MAX, points)]


def _violation(value, sep, tol):
    # rounding residue at the product endpoint reads as exactly zero
    excess = value - sep
    return 0.0 if abs(excess) <= tol else excess


def ghz_curve(n, grid=None, check=True, tol=CURVE_TOL):
    '''The violation curve of the generalized GHZ family.

    Every point is evaluated both in closed form and, up to the dense
    limit, as the expectation of the variant operator built from the
    canonical settings; the stored value is the dense one.

    Parameters
    ----------
    n: int
        Number of qubits, ``2 <= n <= 50``.
    grid: sequence of float
        Angles in ``[0, pi/4]``; defaults to 33 uniform points. Points are
        returned in ascending order.
    check: bool
        Raise if the two evaluations disagree by more than ``tol``.
    tol: float
        Accepted deviation between closed form and dense value.

    Returns
    -------
    curve: GhzCurve
        ``max_deviation`` is ``None`` when no dense value was computed.
    '''
    _check_domain(n)
    if n > MAX_CLOSED_FORM_QUBITS:
        raise CapacityError(
            f'The GHZ curve is capped at {MAX_CLOSED_FORM_QUBITS} qubits, '
            f'got {n}.'
        )
    grid = default_grid() if grid is None else list(grid)
    thetas = sorted(GhzParameter(t).theta for t in grid)
    sep = 2.0 ** (n - 1)

    if n <= MAX_DENSE_QUBITS and thetas:
        v = variant_operator(mk_bell_operator(canonical_settings(n)).primal)
        values = [expectation(v, generalized_ghz(n, t)) for t in thetas]
        deviation = max(
            abs(value - ghz_value(n, t)) for t, value in zip(thetas, values)
        )
    else:
        values = [ghz_value(n, t) for t in thetas]
        deviation = None

    if check and deviation is not None and deviation > tol:
        raise VerificationError(
            [f'ghz-curve (n={n}, deviation {deviation:.3e})']
        )
    return GhzCurve(
        n,
        [GhzPoint(t, value, _violation(value, sep, tol))
         for t, value in zip(thetas, values)],
        deviation
    )
