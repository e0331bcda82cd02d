#!/usr/bin/env python
# -*- coding: utf-8 -*-
from collections import namedtuple
import functools
import logging
import numpy as np
from varbell.config import TOLERANCES, RunConfig
from varbell.errors import CapacityError, DomainError, VerificationError
from varbell.linalg import (
    MAX_DENSE_QUBITS, expectation, matrix_distance, variance
)
from varbell.lhv import distribution_moments, enumerate_lhv, \
    random_lhv_distribution
from varbell.mk import (
    canonical_settings, mk_bell_operator, spectral_mk, variant_operator
)
from varbell.states import generalized_ghz, ghz_pm
from varbell.util import substream
from ._analysis import (
    LHV_BOUND, analytic_bounds, default_grid, max_eigen_check,
    variant_spectrum_bounds
)
from ._optimize import optimize_product


logger = logging.getLogger(__name__)

Claim = namedtuple(
    'Claim', ['name', 'relation', 'analytic', 'computed', 'delta', 'passed']
)
Claim.__doc__ = '''One verified statement: the closed-form value, the
numerically computed one, their difference and the verdict.'''

BoundReport = namedtuple(
    'BoundReport',
    [
        'n', 'separability_bound', 'entanglement_bound', 'lhv_bound',
        'optimizer_best', 'optimizer_witness', 'eigen_estimate',
        'enumeration', 'gap_ratio', 'separable_violates_lhv', 'claims'
    ]
)


def _claim(name, relation, analytic, computed, passed):
    analytic, computed = float(analytic), float(computed)
    return Claim(name, relation, analytic, computed, computed - analytic,
                 bool(passed))


@functools.lru_cache(maxsize=None)
def canonical_variant(n):
    '''The canonical MK operator and its variant for ``n`` qubits.'''
    m = mk_bell_operator(canonical_settings(n)).primal
    return m, variant_operator(m)


def spectral_claim(n, tol=TOLERANCES['spectral']):
    m, _ = canonical_variant(n)
    distance = matrix_distance(m, spectral_mk(n))
    return _claim('mk-spectral-form', 'spectral-identity', 0.0, distance,
                  distance <= tol)


def separability_claim(n, best, reach=TOLERANCES['optimizer_reach'],
                       slack=TOLERANCES['attainment']):
    '''The optimizer neither exceeds ``2^(n-1)`` nor falls short of it.'''
    sep = analytic_bounds(n).separability
    return _claim('product-maximum', 'separability-bound', sep, best,
                  best <= sep + slack and abs(best - sep) <= reach)


def entanglement_claim(check, tol=TOLERANCES['eigen']):
    return _claim('variant-dominant-eigenvalue', 'entanglement-bound',
                  check.analytic, check.iterative,
                  abs(check.iterative - check.analytic) <= tol)


def ghz_attainment_claim(n, tol=TOLERANCES['attainment']):
    _, v = canonical_variant(n)
    ent = analytic_bounds(n).entanglement
    value = expectation(v, ghz_pm(n, 1))
    return _claim('ghz-maximal-violation', 'ghz-attainment', ent, value,
                  abs(value - ent) <= tol)


def mean_variance_claim(n, grid=None, tol=TOLERANCES['curve']):
    '''``<V> = <M> + <M>^2 + Var(M)`` on the generalized GHZ states of
    ``grid``, which defaults to the uniform angles of the violation curve.
    The computed value is the largest deviation over the grid.'''
    m, v = canonical_variant(n)
    deviation = 0.0
    for theta in default_grid() if grid is None else grid:
        psi = generalized_ghz(n, theta)
        mean = expectation(m, psi)
        rhs = mean + mean ** 2 + variance(m, psi)
        deviation = max(deviation, abs(rhs - expectation(v, psi)))
    return _claim('ghz-mean-variance', 'mean-variance-identity', 0.0,
                  deviation, deviation <= tol)


def spectrum_claim(n, tol=TOLERANCES['eigen'], seed=0):
    '''The spectrum of the canonical variant operator lies in
    ``[-1/4, 2^((n-1)/2) + 2^(n-1)]``.'''
    m, _ = canonical_variant(n)
    ent = analytic_bounds(n).entanglement
    lower, upper = variant_spectrum_bounds(m, seed=seed)
    return _claim('variant-spectrum', 'variant-spectrum-range', ent, upper,
                  lower >= -0.25 - tol and upper <= ent + tol)


def lhv_claim(enumeration):
    '''Every deterministic MK value is exactly +1 or -1 and the largest
    variant value is exactly 2.'''
    exact = set(enumeration.m_values) <= {-1, 1}
    return _claim('lhv-maximum', 'lhv-bound', LHV_BOUND, enumeration.max_v,
                  exact and enumeration.max_v == LHV_BOUND)


def lhv_identity_claim(n, seed, samples=1000, size=16,
                       tol=TOLERANCES['lhv_identity']):
    '''The mean/variance identity on random hidden variable distributions,
    which also never exceed the deterministic maximum of 2.'''
    rng = substream(seed, 1)
    deviation = 0.0
    top = -np.inf
    for _ in range(samples):
        mean, var, v = distribution_moments(
            random_lhv_distribution(n, size=size, seed=rng)
        )
        deviation = max(deviation, abs(mean + mean ** 2 + var - v))
        top = max(top, v)
    return _claim('lhv-mean-variance', 'lhv-mean-variance-identity', 0.0,
                  deviation, deviation <= tol and top <= 2 + tol)


def gap_claim(n):
    sep, _, lhv = analytic_bounds(n)
    ratio = sep / lhv
    return _claim('separable-lhv-gap', 'gap-ratio', 2.0 ** (n - 2), ratio,
                  ratio == 2.0 ** (n - 2))


def curve_claim(curve, tol=TOLERANCES['curve']):
    positive = all(p.violation > 0 for p in curve.points if p.theta > 0)
    deviation = 0.0 if curve.max_deviation is None else curve.max_deviation
    return _claim('ghz-violation-curve', 'ghz-curve', 0.0, deviation,
                  deviation <= tol and positive)


def full_report(n, config=None):
    '''Run every bound verification for ``n`` qubits.

    The product optimizer, the power iteration and the exhaustive
    enumeration are checked against the closed forms of the separability,
    maximal quantum and hidden variable bounds.

    Parameters
    ----------
    n: int
        Number of qubits, ``2 <= n <= 10``.
    config: RunConfig
        Seed, restarts, tolerance, worker count and progress display;
        defaults to ``RunConfig(n)``.

    Returns
    -------
    report: BoundReport

    Raises
    ------
    VerificationError
        If any claim fails; the assembled report is attached.
    '''
    if n < 2:
        raise DomainError(f'Bounds are defined for n >= 2, got {n}.')
    if n > MAX_DENSE_QUBITS:
        raise CapacityError(
            f'The full report is capped at {MAX_DENSE_QUBITS} qubits, got {n}.'
        )
    config = RunConfig(n) if config is None else config

    bounds = analytic_bounds(n)
    optimum = optimize_product(
        n, restarts=config.restarts, seed=config.seed, tol=config.tol,
        progressbar=config.progressbar
    )
    check = max_eigen_check(n, tol=config.tol, seed=config.seed)
    enumeration = enumerate_lhv(
        n, workers=config.workers, progressbar=config.progressbar
    )
    claims = [
        spectral_claim(n),
        separability_claim(n, optimum.best),
        entanglement_claim(check),
        ghz_attainment_claim(n),
        mean_variance_claim(n),
        spectrum_claim(n, seed=config.seed),
        lhv_claim(enumeration),
        lhv_identity_claim(n, config.seed),
        gap_claim(n),
    ]
    report = BoundReport(
        n=n,
        separability_bound=bounds.separability,
        entanglement_bound=bounds.entanglement,
        lhv_bound=bounds.lhv,
        optimizer_best=optimum.best,
        optimizer_witness=optimum.witness,
        eigen_estimate=check.iterative,
        enumeration=enumeration,
        gap_ratio=bounds.separability / bounds.lhv,
        separable_violates_lhv=bounds.separability > bounds.lhv,
        claims=claims,
    )
    failures = [c.name for c in claims if not c.passed]
    logger.info(
        'evaluated %d claims for n=%d, %d failed', len(claims), n,
        len(failures)
    )
    if failures:
        raise VerificationError(failures, report=report)
    return report
