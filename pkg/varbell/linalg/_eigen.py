#!/usr/bin/env python
# -*- coding: utf-8 -*-
import numpy as np
from varbell.errors import ConvergenceError, HermiticityError
from varbell.util import substream
from ._operator import Operator


EIGEN_TOL = 1e-9
STALL_PATIENCE = 200


def dominant_eigenvalue(op: Operator, tol=EIGEN_TOL, max_iter=100000, seed=0,
                        patience=STALL_PATIENCE):
    '''Largest eigenvalue of a Hermitian operator by power iteration.

    The iteration runs on ``O + s I`` with ``s = ||O||_1``, which is
    positive semidefinite, so its dominant eigenvalue is ``lambda_max + s``
    even when ``O`` has large negative or highly degenerate zero
    eigenvalues.

    A value is returned only once the residual ``||(O - mu) x||`` of the
    Rayleigh quotient ``mu`` is at most ``tol``. For a Hermitian operator
    an eigenvalue then lies within ``tol`` of ``mu``.

    Parameters
    ----------
    op: Operator
        A Hermitian operator.
    tol: float
        Accuracy target for the eigenvalue.
    max_iter: int
        Iteration budget.
    seed: int
        Seed of the random complex start vector.
    patience: int
        Give up early once the smallest residual seen has not improved for
        this many iterations.

    Returns
    -------
    lambda_max: float

    Raises
    ------
    ConvergenceError
        If the residual does not reach ``tol`` within ``max_iter``
        iterations, or the iteration stalls at rounding level before; the
        exception carries the final Rayleigh quotient as ``last_iterate``.
    '''
    if not op.hermitian:
        raise HermiticityError(
            'Power iteration requires a Hermitian operator.'
        )
    if not tol > 0:
        raise ValueError(f'Tolerance must be positive, got {tol}.')
    shift = float(np.linalg.norm(op.entries, 1))
    if shift == 0:
        return 0.0
    b = op.shifted(shift).entries
    rng = substream(seed)
    x = rng.normal(size=op.dim) + 1j * rng.normal(size=op.dim)
    x /= np.linalg.norm(x)
    best = np.inf
    stalled = 0
    mu = 0.0
    for _ in range(max_iter):
        y = b @ x
        mu = float(np.vdot(x, y).real)
        residual = float(np.linalg.norm(y - mu * x))
        if residual <= tol:
            return mu - shift
        if residual < best:
            best, stalled = residual, 0
        else:
            # residual at rounding level
            stalled += 1
            if stalled >= patience:
                break
        x = y / np.linalg.norm(y)
    raise ConvergenceError(
        f'Power iteration did not reach tolerance {tol} within {max_iter} '
        'iterations.',
        last_iterate=mu - shift
    )
