#!/usr/bin/env python
# -*- coding: utf-8 -*-
from collections import namedtuple
import numpy as np
from varbell.errors import InvariantError
from varbell.util import substream


WEIGHT_TOL = 1e-12


class LhvAssignment:
    '''A deterministic local hidden variable: predetermined outcomes
    ``(v_j, v'_j)`` in ``{-1, +1}`` for both observables at every site.

    As an integer code, bit ``2j`` holds ``v_j`` and bit ``2j + 1`` holds
    ``v'_j`` (``0 -> -1``, ``1 -> +1``), with ``j`` counted from zero.
    '''

    __slots__ = ('_values',)

    def __init__(self, values):
        values = tuple((v, vp) for v, vp in values)
        if not values:
            raise InvariantError('An assignment needs at least one site.')
        for j, pair in enumerate(values):
            for v in pair:
                if v not in (1, -1):
                    raise InvariantError(
                        f'Outcome at site {j + 1} must be +1 or -1, got {v}.'
                    )
        self._values = tuple((int(v), int(vp)) for v, vp in values)

    @classmethod
    def from_code(cls, code, n):
        code = int(code)
        if not 0 <= code < 4 ** n:
            raise InvariantError(
                f'Code {code} out of range for {n} sites.'
            )
        return cls(
            (2 * ((code >> 2 * j) & 1) - 1, 2 * ((code >> 2 * j + 1) & 1) - 1)
            for j in range(n)
        )

    @property
    def values(self):
        return self._values

    @property
    def n(self):
        return len(self._values)

    @property
    def code(self):
        code = 0
        for j, (v, vp) in enumerate(self._values):
            code |= ((v + 1) // 2) << 2 * j
            code |= ((vp + 1) // 2) << 2 * j + 1
        return code

    def __eq__(self, other):
        return isinstance(other, LhvAssignment) and \
            self._values == other._values

    def __hash__(self):
        return hash(self._values)

    def __repr__(self):
        return f'{type(self).__qualname__}({list(self._values)})'


class LhvDistribution:
    '''A probability distribution over deterministic assignments.

    Parameters
    ----------
    support: sequence of (LhvAssignment, float)
        Assignments and their weights; weights are non-negative and sum to
        one within ``tol``.
    '''

    def __init__(self, support, tol=WEIGHT_TOL):
        support = [(lam, float(w)) for lam, w in support]
        if not support:
            raise InvariantError('A distribution needs a non-empty support.')
        n = support[0][0].n
        if any(lam.n != n for lam, _ in support):
            raise InvariantError(
                'All assignments of a distribution must have the same number'
                ' of sites.'
            )
        weights = np.array([w for _, w in support])
        if np.any(weights < 0) or not np.all(np.isfinite(weights)):
            raise InvariantError('Weights must be finite and non-negative.')
        if abs(weights.sum() - 1) > tol:
            raise InvariantError(
                f'Weights must sum to one, got {weights.sum()}.'
            )
        self._support = support
        self._n = n

    @property
    def support(self):
        return list(self._support)

    @property
    def n(self):
        return self._n

    @property
    def codes(self):
        return np.array([lam.code for lam, _ in self._support], np.int64)

    @property
    def weights(self):
        return np.array([w for _, w in self._support])

    def __len__(self):
        return len(self._support)

    def __repr__(self):
        return f'{type(self).__qualname__}(n={self.n}, size={len(self)})'


def mk_values(codes, n):
    '''``M_n(lambda)`` for an array of assignment codes.

    Every intermediate of the recursion is a multiple of 1/2 of magnitude
    at most 1, so the floating point result is exact.
    '''
    codes = np.asarray(codes, dtype=np.int64)
    bits = (codes[:, None] >> np.arange(2 * n, dtype=np.int64)) & 1
    signs = 2.0 * bits - 1.0
    v, vp = signs[:, 0::2], signs[:, 1::2]
    b, bp = v[:, 0], vp[:, 0]
    for k in range(1, n):
        plus = 0.5 * (v[:, k] + vp[:, k])
        minus = 0.5 * (v[:, k] - vp[:, k])
        b, bp = b * plus + bp * minus, bp * plus - b * minus
    return b


def mk_value(lam: LhvAssignment):
    '''The MK polynomial evaluated on predetermined outcomes,
    ``B_k = B_{k-1} (v_k + v'_k)/2 + B'_{k-1} (v_k - v'_k)/2``.'''
    (b, bp), rest = lam.values[0], lam.values[1:]
    b, bp = float(b), float(bp)
    for v, vp in rest:
        plus, minus = 0.5 * (v + vp), 0.5 * (v - vp)
        b, bp = b * plus + bp * minus, bp * plus - b * minus
    return b


def v_value(lam: LhvAssignment):
    '''``V(lambda) = M(lambda) + M(lambda)^2``.'''
    m = mk_value(lam)
    return m + m * m


LhvMoments = namedtuple('LhvMoments', ['mean', 'variance', 'v_expectation'])


def distribution_moments(d: LhvDistribution):
    '''Mean and variance of ``M_n`` and the expectation of ``V_n`` under a
    hidden variable distribution. The three satisfy
    ``v_expectation = mean + mean**2 + variance``.'''
    m = mk_values(d.codes, d.n)
    w = d.weights
    mean = float(np.dot(w, m))
    return LhvMoments(
        mean,
        float(np.dot(w, (m - mean) ** 2)),
        float(np.dot(w, m + m * m))
    )


def random_lhv_distribution(n, size=16, seed=0):
    '''Dirichlet-distributed weights on ``size`` uniformly drawn
    assignments.'''
    rng = seed if isinstance(seed, np.random.Generator) else substream(seed)
    codes = rng.integers(0, 4 ** n, size)
    weights = rng.dirichlet(np.ones(size))
    return LhvDistribution(
        (LhvAssignment.from_code(c, n), w) for c, w in zip(codes, weights)
    )
