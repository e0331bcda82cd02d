#!/usr/bin/env python
# -*- coding: utf-8 -*-
import math
import numbers
import numpy as np
from varbell.errors import CapacityError, InvariantError
from varbell.linalg import MAX_DENSE_QUBITS, PureState


THETA_MAX = math.pi / 4


def _check_qubits(n, low=2, high=MAX_DENSE_QUBITS):
    if not low <= n <= high:
        raise CapacityError(
            f'Number of qubits must lie in [{low}, {high}], got {n}.'
        )


class GhzParameter:
    '''The mixing angle ``theta`` of ``cos(theta)|0^n> + sin(theta)|1^n>``,
    restricted to ``0 <= theta <= pi/4``. Angles outside are rejected, not
    folded back by symmetry.'''

    __slots__ = ('_theta',)

    def __init__(self, theta):
        if isinstance(theta, GhzParameter):
            theta = theta.theta
        if not (isinstance(theta, numbers.Real) and
                0 <= theta <= THETA_MAX):
            raise InvariantError(
                f'GHZ angle must lie in [0, pi/4], got {theta}.'
            )
        self._theta = float(theta)

    @property
    def theta(self):
        return self._theta

    def __float__(self):
        return self._theta

    def __repr__(self):
        return f'{type(self).__qualname__}({self._theta})'


def generalized_ghz(n, p):
    '''``cos(theta)|0^n> + sin(theta)|1^n>``.

    Parameters
    ----------
    n: int
        ``2 <= n <= 10``.
    p: GhzParameter or float
        The angle ``theta``.
    '''
    _check_qubits(n)
    theta = GhzParameter(p).theta
    amplitudes = np.zeros(2 ** n, dtype=np.complex128)
    amplitudes[0] = math.cos(theta)
    amplitudes[-1] = math.sin(theta)
    return PureState(amplitudes)


def ghz_pm(n, sign=1):
    '''``(|0^n> ± |1^n>) / sqrt(2)``.'''
    _check_qubits(n)
    if sign not in (1, -1):
        raise InvariantError(f'GHZ sign must be +1 or -1, got {sign}.')
    amplitudes = np.zeros(2 ** n, dtype=np.complex128)
    amplitudes[0] = 1 / math.sqrt(2)
    amplitudes[-1] = sign / math.sqrt(2)
    return PureState(amplitudes)
