#!/usr/bin/env python
# -*- coding: utf-8 -*-
from collections import namedtuple
import logging
import math
import numpy as np
from scipy.optimize import minimize_scalar
from varbell.errors import CapacityError, DomainError
from varbell.states import (
    MAX_CLOSED_FORM_QUBITS, QubitBloch, ProductState, product_expectation_v,
    product_state
)
from varbell.util import as_namedtuple, progress, substream


logger = logging.getLogger(__name__)

OPTIMIZER_TOL = 1e-9
LINE_XATOL = 1e-10

AscentResult = namedtuple('AscentResult', ['value', 'witness', 'steps'])


def _objective(polar, azimuth):
    '''``<V_n>`` on the product state with the given Bloch angles, the
    closed form of ``product_expectation_v`` without building the state.'''
    n = len(polar)
    c = np.cos(0.5 * polar)
    s = np.sin(0.5 * polar)
    cross = 2 * np.prod(c) * np.prod(s) * math.cos(np.sum(azimuth))
    return float(
        2 ** ((n - 1) / 2) * cross +
        2.0 ** (n - 1) * (np.prod(c * c) + np.prod(s * s))
    )


def _line_search(f, lo, hi):
    r = minimize_scalar(
        lambda t: -f(t), bounds=(lo, hi), method='bounded',
        options=dict(xatol=LINE_XATOL)
    )
    return float(r.x), -float(r.fun)


def _ascend(polar, azimuth, tol, max_sweeps):
    '''Cyclic coordinate ascent; a move is kept only if it strictly raises
    the objective.'''
    polar, azimuth = polar.copy(), azimuth.copy()
    value = _objective(polar, azimuth)
    steps = 0
    for _ in range(max_sweeps):
        start = value
        for j in range(len(polar)):
            def along_polar(t):
                p = polar.copy()
                p[j] = t
                return _objective(p, azimuth)

            t, candidate = _line_search(along_polar, 0.0, math.pi)
            if candidate > value:
                polar[j], value = t, candidate
                steps += 1

            def along_azimuth(t):
                a = azimuth.copy()
                a[j] = t
                return _objective(polar, a)

            # window centered on the current angle, wrapped afterwards
            t, candidate = _line_search(
                along_azimuth, azimuth[j] - math.pi, azimuth[j] + math.pi
            )
            if candidate > value:
                azimuth[j], value = t % (2 * math.pi), candidate
                steps += 1
        if value - start < tol:
            break
    return polar, azimuth, steps


def _witness(polar, azimuth):
    return product_state(
        QubitBloch(
            min(max(float(p), 0.0), math.pi),
            0.0 if float(a) >= 2 * math.pi else float(a)
        )
        for p, a in zip(polar, azimuth)
    )


def _result(polar, azimuth, tol, max_sweeps):
    polar, azimuth, steps = _ascend(polar, azimuth, tol, max_sweeps)
    witness = _witness(polar, azimuth)
    return AscentResult(product_expectation_v(witness), witness, steps)


def coordinate_ascent(start: ProductState, tol=OPTIMIZER_TOL, max_sweeps=200):
    '''Maximize ``<V_n>`` over product states from a given start.

    Each of the ``2n`` Bloch angles is optimized in turn by a bounded
    scalar search; sweeps repeat until one improves the objective by less
    than ``tol`` or ``max_sweeps`` is reached.

    Returns
    -------
    result: AscentResult
        Final value, the product state attaining it, and the number of
        accepted moves.
    '''
    blochs = start.blochs()
    polar = np.array([b.polar for b in blochs])
    azimuth = np.array([b.azimuth for b in blochs])
    return _result(polar, azimuth, tol, max_sweeps)


def optimize_product(n, restarts=64, seed=42, tol=OPTIMIZER_TOL,
                     initial=None, max_sweeps=200, progressbar='default'):
    '''Multi-start maximization of ``<V_n>`` over product states.

    Parameters
    ----------
    n: int
        Number of qubits, ``2 <= n <= 50``.
    restarts: int
        Number of random starts, each uniform on the Bloch sphere per qubit.
        Restart ``k`` draws from ``substream(seed, 0, k)``.
    seed: int
        Master seed.
    tol: float
        Sweep-level improvement threshold.
    initial: ProductState
        An extra start evaluated before the random ones.
    max_sweeps: int
        Sweep budget per start.
    progressbar: 'default', None or callable
        Progress display over restarts.

    Returns
    -------
    best: float
        The largest value found.
    witness: ProductState
        A product state attaining ``best``. Ties are broken by the
        lexicographically smallest Bloch angles.
    '''
    if n < 2:
        raise DomainError(f'The variant operator needs n >= 2, got {n}.')
    if n > MAX_CLOSED_FORM_QUBITS:
        raise CapacityError(
            f'Product optimization is capped at {MAX_CLOSED_FORM_QUBITS} '
            f'qubits, got {n}.'
        )
    if restarts < 1:
        raise ValueError(f'Need at least one restart, got {restarts}.')

    results = []
    if initial is not None:
        results.append(coordinate_ascent(initial, tol, max_sweeps))
    for k in progress(progressbar, restarts, desc=f'optimize n={n}'):
        rng = substream(seed, 0, k)
        polar = np.arccos(rng.uniform(-1, 1, n))
        azimuth = rng.uniform(0, 2 * math.pi, n)
        results.append(_result(polar, azimuth, tol, max_sweeps))

    def key(r):
        return (-r.value, [(b.polar, b.azimuth) for b in r.witness.blochs()])

    best = min(results, key=key)
    logger.info(
        'product optimization for n=%d: best=%.12g over %d starts',
        n, best.value, len(results)
    )
    return as_namedtuple('ProductOptimum', best=best.value,
                         witness=best.witness)
