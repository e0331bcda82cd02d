#!/usr/bin/env python
# -*- coding: utf-8 -*-
import numpy as np
from varbell.errors import CapacityError, HermiticityError
from varbell.linalg import MAX_DENSE_QUBITS, Operator, kron
from ._settings import MeasurementSettings, UnitVector3


SIGMA_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)


def pauli_observable(a: UnitVector3):
    '''The spin observable ``a_x sigma_x + a_y sigma_y + a_z sigma_z``.'''
    if not isinstance(a, UnitVector3):
        a = UnitVector3(*a)
    return Operator._trusted(
        a.x * SIGMA_X + a.y * SIGMA_Y + a.z * SIGMA_Z, True
    )


class BellOperatorPair:
    '''The MK operator ``B_n`` together with its partner ``B'_n``, which is
    built from the same settings with every ``(a_j, a'_j)`` exchanged.'''

    __slots__ = ('primal', 'swapped', 'n')

    def __init__(self, primal: Operator, swapped: Operator):
        if not (primal.hermitian and swapped.hermitian):
            raise HermiticityError('Bell operators must be Hermitian.')
        self.primal = primal
        self.swapped = swapped
        self.n = primal.n

    def __iter__(self):
        yield self.primal
        yield self.swapped

    def __repr__(self):
        return f'{type(self).__qualname__}(n={self.n})'


def mk_bell_operator(settings: MeasurementSettings):
    '''Build the Mermin-Klyshko operator by the two-term recursion

    .. math::

        B_k = B_{k-1} \\otimes \\frac{A_k + A'_k}{2}
            + B'_{k-1} \\otimes \\frac{A_k - A'_k}{2},

    with :math:`B_1 = A_1`, :math:`B'_1 = A'_1`, and :math:`B'_k` given by
    the same rule with primed and unprimed observables exchanged.

    Parameters
    ----------
    settings: MeasurementSettings
        ``n`` site pairs, ``1 <= n <= 10``.

    Returns
    -------
    pair: BellOperatorPair
    '''
    observables = [
        (pauli_observable(a), pauli_observable(ap))
        for a, ap in settings.effective()
    ]
    (b, bp), rest = observables[0], observables[1:]
    for a, ap in rest:
        plus = 0.5 * (a + ap)
        minus = 0.5 * (a - ap)
        b, bp = (
            kron(b, plus) + kron(bp, minus),
            kron(bp, plus) - kron(b, minus)
        )
    return BellOperatorPair(
        Operator(b.entries, hermitian=True),
        Operator(bp.entries, hermitian=True)
    )


def _check_qubits(n, low=2, high=MAX_DENSE_QUBITS):
    if not low <= n <= high:
        raise CapacityError(
            f'Number of qubits must lie in [{low}, {high}], got {n}.'
        )


def spectral_mk(n):
    '''The rank-2 operator ``2^((n-1)/2) (|0^n><1^n| + |1^n><0^n|)``, i.e.
    ``2^((n-1)/2) (|GHZ+><GHZ+| - |GHZ-><GHZ-|)``.'''
    _check_qubits(n)
    dim = 2 ** n
    m = np.zeros((dim, dim), dtype=np.complex128)
    m[0, -1] = m[-1, 0] = 2 ** ((n - 1) / 2)
    return Operator._trusted(m, True)


def variant_operator(m: Operator):
    '''``V = M + M^2``.'''
    if not m.hermitian:
        raise HermiticityError(
            'The variant operator is defined for Hermitian operators only.'
        )
    return m + m.square()
