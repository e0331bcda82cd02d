#!/usr/bin/env python
# -*- coding: utf-8 -*-
import functools
import math
import numbers
import numpy as np
from varbell.errors import CapacityError, DomainError, InvariantError
from varbell.linalg import MAX_DENSE_QUBITS, PureState
from varbell.util import substream


MAX_CLOSED_FORM_QUBITS = 50
NORM_TOL = 1e-12


class QubitBloch:
    '''Bloch angles of one qubit, ``alpha = cos(polar/2)`` and
    ``beta = exp(i azimuth) sin(polar/2)``.

    Parameters
    ----------
    polar: float
        In ``[0, pi]``.
    azimuth: float
        In ``[0, 2 pi)``.
    '''

    __slots__ = ('polar', 'azimuth')

    def __init__(self, polar, azimuth=0.0):
        if not (isinstance(polar, numbers.Real) and 0 <= polar <= math.pi):
            raise InvariantError(
                f'Polar angle must lie in [0, pi], got {polar}.'
            )
        if not (isinstance(azimuth, numbers.Real) and
                0 <= azimuth < 2 * math.pi):
            raise InvariantError(
                f'Azimuth must lie in [0, 2 pi), got {azimuth}.'
            )
        self.polar = float(polar)
        self.azimuth = float(azimuth)

    def amplitudes(self):
        return (
            complex(math.cos(self.polar / 2)),
            complex(np.exp(1j * self.azimuth) * math.sin(self.polar / 2))
        )

    def __repr__(self):
        return f'{type(self).__qualname__}({self.polar}, {self.azimuth})'


class ProductState:
    '''A product state ``|psi_1>...|psi_n>`` held as per-qubit amplitude
    pairs ``(alpha_j, beta_j)`` on ``|0>`` and ``|1>``.

    The global phase of every qubit is fixed so that ``alpha_j`` is real and
    non-negative; the phase lives on ``beta_j``.

    Parameters
    ----------
    qubits: sequence of (complex, complex)
        One normalized amplitude pair per qubit, qubit 1 first.
    '''

    def __init__(self, qubits, tol=NORM_TOL):
        q = np.array(qubits, dtype=np.complex128).reshape(-1, 2)
        if len(q) < 1:
            raise InvariantError('A product state needs at least one qubit.')
        if not np.all(np.isfinite(q)):
            raise InvariantError('Qubit amplitudes must be finite.')
        norms = np.sum(np.abs(q) ** 2, axis=1)
        bad = np.flatnonzero(np.abs(norms - 1) > tol)
        if len(bad):
            raise InvariantError(
                f'Qubit {bad[0] + 1} is not normalized: '
                f'|alpha|^2 + |beta|^2 = {norms[bad[0]]}.'
            )
        magnitude = np.abs(q[:, 0])
        phase = np.where(
            magnitude > 0, q[:, 0] / np.where(magnitude > 0, magnitude, 1), 1
        )
        q = q * np.conj(phase)[:, None]
        q[:, 0] = magnitude
        q.flags.writeable = False
        self._q = q

    @property
    def n(self):
        return len(self._q)

    @property
    def alpha(self):
        return self._q[:, 0]

    @property
    def beta(self):
        return self._q[:, 1]

    @property
    def qubits(self):
        return [(complex(a), complex(b)) for a, b in self._q]

    def __len__(self):
        return len(self._q)

    def __repr__(self):
        return f'{type(self).__qualname__}(n={self.n})'

    def blochs(self):
        '''The Bloch angles of each qubit.'''
        polar = 2 * np.arctan2(np.abs(self.beta), self.alpha.real)
        azimuth = np.mod(np.angle(self.beta), 2 * math.pi)
        # mod can round up to exactly 2 pi
        azimuth = np.where(azimuth >= 2 * math.pi, 0.0, azimuth)
        return [QubitBloch(float(min(p, math.pi)), float(a))
                for p, a in zip(polar, azimuth)]

    def basis_fidelities(self):
        '''Per-qubit overlap ``max(|alpha_j|^2, |beta_j|^2)`` with the
        nearest computational basis state.'''
        return np.maximum(np.abs(self.alpha) ** 2, np.abs(self.beta) ** 2)


def product_state(blochs):
    '''Build a product state from per-qubit Bloch angles.'''
    blochs = list(blochs)
    if not blochs:
        raise InvariantError('A product state needs at least one qubit.')
    return ProductState([b.amplitudes() for b in blochs])


def embed(ps: ProductState):
    '''The ``2**n`` amplitude vector of a product state.'''
    if ps.n > MAX_DENSE_QUBITS:
        raise CapacityError(
            f'Cannot embed {ps.n} qubits densely; the limit is '
            f'{MAX_DENSE_QUBITS}.'
        )
    return PureState(functools.reduce(
        np.kron, np.stack([ps.alpha, ps.beta], axis=1)
    ))


def product_expectation_v(ps: ProductState):
    '''Closed form of ``<V_n>`` on a product state,

    .. math::

        2^{(n-1)/2} \\left(\\prod_j \\alpha_j \\beta_j^*
                          + \\prod_j \\alpha_j^* \\beta_j\\right)
        + 2^{n-1} \\left(\\prod_j |\\alpha_j|^2
                   + \\prod_j |\\beta_j|^2\\right).

    Valid for ``2 <= n <= 50``; no dense operator is formed.
    '''
    n = ps.n
    if n < 2:
        raise DomainError(f'The variant operator needs n >= 2, got {n}.')
    if n > MAX_CLOSED_FORM_QUBITS:
        raise CapacityError(
            f'Closed form evaluation is capped at {MAX_CLOSED_FORM_QUBITS} '
            f'qubits, got {n}.'
        )
    a = np.prod(ps.alpha)
    b = np.prod(ps.beta)
    cross = 2 * (a * np.conj(b)).real
    diagonal = np.prod(np.abs(ps.alpha) ** 2) + np.prod(np.abs(ps.beta) ** 2)
    return float(2 ** ((n - 1) / 2) * cross + 2.0 ** (n - 1) * diagonal)


def random_product_state(n, seed=0):
    '''A product state with every qubit drawn uniformly from the Bloch
    sphere.

    Parameters
    ----------
    n: int
        Number of qubits, at least 1.
    seed: int or numpy.random.Generator
        An integer seed selects ``substream(seed)``; a generator is used
        as-is.
    '''
    if n < 1:
        raise InvariantError(f'Number of qubits must be positive, got {n}.')
    rng = seed if isinstance(seed, np.random.Generator) else substream(seed)
    polar = np.arccos(rng.uniform(-1, 1, n))
    azimuth = rng.uniform(0, 2 * math.pi, n)
    return product_state(
        QubitBloch(float(p), float(a)) for p, a in zip(polar, azimuth)
    )
