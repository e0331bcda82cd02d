#!/usr/bin/env python
# -*- coding: utf-8 -*-
import numpy as np
from varbell.errors import (
    CapacityError, HermiticityError, InvariantError, ShapeError
)


MAX_DENSE_QUBITS = 10
MAX_DENSE_DIM = 2 ** MAX_DENSE_QUBITS

HERMITIAN_TOL = 1e-12
NORM_TOL = 1e-12
IMAG_TOL = 1e-10


def _qubit_count(dim, limit=MAX_DENSE_DIM):
    if not (isinstance(dim, (int, np.integer)) and dim > 0):
        raise ShapeError(f'Dimension must be a positive integer, got {dim}.')
    if dim & (dim - 1):
        raise ShapeError(f'Dimension must be a power of 2, got {dim}.')
    if dim > limit:
        raise CapacityError(
            f'Dimension {dim} exceeds the dense limit {limit}.'
        )
    return int(dim).bit_length() - 1


def _frozen(array):
    array.flags.writeable = False
    return array


class Operator:
    '''A dense square operator on ``n`` qubits.

    The entries are copied into a read-only complex array, so an operator
    never changes after construction. Hermiticity is checked once, here,
    and carried as a flag afterwards.

    Parameters
    ----------
    entries: array_like
        A ``2**n`` by ``2**n`` matrix.
    hermitian: bool or None
        ``True`` demands a Hermitian matrix and raises
        :py:class:`HermiticityError` otherwise; ``False`` leaves the flag
        unset; ``None`` sets the flag if the matrix passes the check.
    tol: float
        Entrywise tolerance of the Hermiticity check.
    limit: int
        The largest admissible dimension.
    '''

    def __init__(self, entries, hermitian=None, tol=HERMITIAN_TOL,
                 limit=MAX_DENSE_DIM):
        entries = np.array(entries, dtype=np.complex128)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1]:
            raise ShapeError(
                f'Operator must be a square matrix, got shape '
                f'{entries.shape}.'
            )
        self._n = _qubit_count(entries.shape[0], limit)
        if not np.all(np.isfinite(entries)):
            raise InvariantError('Operator entries must be finite.')
        if hermitian is not False:
            deviation = np.max(np.abs(entries - entries.conj().T))
            if deviation > tol:
                if hermitian is True:
                    raise HermiticityError(
                        f'Operator deviates from its adjoint by {deviation}'
                        f' > {tol}.'
                    )
                hermitian = False
            else:
                hermitian = True
        self._entries = _frozen(entries)
        self._hermitian = hermitian

    @classmethod
    def _trusted(cls, entries, hermitian):
        '''Wrap an array already known to be well formed.'''
        op = cls.__new__(cls)
        op._entries = _frozen(np.asarray(entries, dtype=np.complex128))
        op._n = entries.shape[0].bit_length() - 1
        op._hermitian = bool(hermitian)
        return op

    @property
    def entries(self):
        return self._entries

    @property
    def dim(self):
        return self._entries.shape[0]

    @property
    def n(self):
        return self._n

    @property
    def hermitian(self):
        return self._hermitian

    def __repr__(self):
        return '{cls}(n={n}, hermitian={h})'.format(
            cls=type(self).__qualname__, n=self.n, h=self.hermitian
        )

    def __getitem__(self, idx):
        return self._entries[idx]

    def _check_shape(self, other):
        if self.dim != other.dim:
            raise ShapeError(
                f'Dimension mismatch: {self.dim} vs {other.dim}.'
            )

    def __add__(self, other):
        self._check_shape(other)
        return type(self)._trusted(
            self._entries + other._entries,
            self.hermitian and other.hermitian
        )

    def __sub__(self, other):
        self._check_shape(other)
        return type(self)._trusted(
            self._entries - other._entries,
            self.hermitian and other.hermitian
        )

    def __neg__(self):
        return type(self)._trusted(-self._entries, self.hermitian)

    def __mul__(self, scalar):
        return type(self)._trusted(
            scalar * self._entries,
            self.hermitian and np.imag(scalar) == 0
        )

    __rmul__ = __mul__

    def square(self):
        '''The product of the operator with itself. For a Hermitian
        operator the result is symmetrized to remove rounding asymmetry.'''
        sq = self._entries @ self._entries
        if self.hermitian:
            sq = 0.5 * (sq + sq.conj().T)
        return type(self)._trusted(sq, self.hermitian)

    def shifted(self, shift):
        '''``O + shift * I``.'''
        return type(self)._trusted(
            self._entries + shift * np.eye(self.dim),
            self.hermitian and np.imag(shift) == 0
        )


class PureState:
    '''A normalized amplitude vector of dimension ``2**n``. Qubit 1 is the
    most significant bit of the amplitude index.

    Parameters
    ----------
    amplitudes: array_like
        The state vector.
    tol: float
        Tolerance of the normalization check.
    '''

    def __init__(self, amplitudes, tol=NORM_TOL, limit=MAX_DENSE_DIM):
        amplitudes = np.array(amplitudes, dtype=np.complex128)
        if amplitudes.ndim != 1:
            raise ShapeError(
                f'State must be a vector, got shape {amplitudes.shape}.'
            )
        self._n = _qubit_count(amplitudes.shape[0], limit)
        if not np.all(np.isfinite(amplitudes)):
            raise InvariantError('State amplitudes must be finite.')
        norm = np.vdot(amplitudes, amplitudes).real
        if abs(norm - 1) > tol:
            raise InvariantError(
                f'State is not normalized: <psi|psi> = {norm}.'
            )
        self._amplitudes = _frozen(amplitudes)

    @property
    def amplitudes(self):
        return self._amplitudes

    @property
    def dim(self):
        return self._amplitudes.shape[0]

    @property
    def n(self):
        return self._n

    def __repr__(self):
        return f'{type(self).__qualname__}(n={self.n})'

    def __getitem__(self, idx):
        return self._amplitudes[idx]


def kron(a: Operator, b: Operator, limit=MAX_DENSE_DIM):
    '''Kronecker product ``a ⊗ b`` with ``a`` on the more significant
    qubits.

    Raises
    ------
    CapacityError
        If the product dimension exceeds ``limit``.
    '''
    dim = a.dim * b.dim
    if dim > limit:
        raise CapacityError(
            f'Kronecker product of dimension {dim} exceeds the dense limit '
            f'{limit}.'
        )
    return Operator._trusted(
        np.kron(a.entries, b.entries), a.hermitian and b.hermitian
    )


def _check_pair(op: Operator, psi: PureState):
    if not op.hermitian:
        raise HermiticityError(
            'Expectation values require an operator flagged Hermitian.'
        )
    if op.dim != psi.dim:
        raise ShapeError(
            f'Operator of dimension {op.dim} cannot act on a state of '
            f'dimension {psi.dim}.'
        )


def expectation(op: Operator, psi: PureState, imag_tol=IMAG_TOL):
    '''``<psi|O|psi>`` for a Hermitian ``O``.

    Raises
    ------
    HermiticityError
        If the imaginary residue of the inner product exceeds ``imag_tol``.
    '''
    _check_pair(op, psi)
    value = np.vdot(psi.amplitudes, op.entries @ psi.amplitudes)
    if abs(value.imag) > imag_tol:
        raise HermiticityError(
            f'Expectation value has imaginary residue {value.imag}.'
        )
    return float(value.real)


def variance(op: Operator, psi: PureState, imag_tol=IMAG_TOL):
    '''``<(O - <O>)^2>``, evaluated as ``||(O - <O>)psi||^2``.'''
    mean = expectation(op, psi, imag_tol)
    deviation = op.entries @ psi.amplitudes - mean * psi.amplitudes
    return max(float(np.vdot(deviation, deviation).real), 0.0)


def matrix_distance(a: Operator, b: Operator):
    '''Largest entrywise absolute difference.'''
    if a.dim != b.dim:
        raise ShapeError(f'Dimension mismatch: {a.dim} vs {b.dim}.')
    return float(np.max(np.abs(a.entries - b.entries)))
