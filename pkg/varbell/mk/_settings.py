#!/usr/bin/env python
# -*- coding: utf-8 -*-
import math
import numbers
from varbell.errors import CapacityError, InvariantError
from varbell.linalg import MAX_DENSE_QUBITS


UNIT_TOL = 1e-12


class UnitVector3:
    '''A measurement direction in R^3.

    Parameters
    ----------
    x, y, z: float
        Direction cosines; their squares must sum to one within ``tol``.
    '''

    __slots__ = ('_xyz',)

    def __init__(self, x, y, z, tol=UNIT_TOL):
        xyz = (float(x), float(y), float(z))
        if not all(math.isfinite(c) for c in xyz):
            raise InvariantError(f'Direction {xyz} is not finite.')
        norm2 = sum(c * c for c in xyz)
        if abs(norm2 - 1) > tol:
            raise InvariantError(
                f'Direction {xyz} is not a unit vector: |a|^2 = {norm2}.'
            )
        self._xyz = xyz

    @classmethod
    def in_plane(cls, angle):
        '''The unit vector in the x-y plane at ``angle`` from the x-axis.'''
        return cls(math.cos(angle), math.sin(angle), 0.0)

    @property
    def x(self):
        return self._xyz[0]

    @property
    def y(self):
        return self._xyz[1]

    @property
    def z(self):
        return self._xyz[2]

    @property
    def azimuth(self):
        return math.atan2(self.y, self.x)

    def __iter__(self):
        return iter(self._xyz)

    def __eq__(self, other):
        return isinstance(other, UnitVector3) and self._xyz == other._xyz

    def __hash__(self):
        return hash(self._xyz)

    def __repr__(self):
        return '{}({}, {}, {})'.format(type(self).__qualname__, *self._xyz)

    def dot(self, other):
        return sum(p * q for p, q in zip(self, other))

    def rotated(self, angle):
        '''Rotation about the z-axis by ``angle``.'''
        if angle == 0:
            return self
        c, s = math.cos(angle), math.sin(angle)
        v = type(self).__new__(type(self))
        v._xyz = (c * self.x - s * self.y, s * self.x + c * self.y, self.z)
        return v


class SettingsPair:
    '''The two dichotomic observables ``(a, a')`` measured at one site.'''

    __slots__ = ('a', 'a_prime')

    def __init__(self, a: UnitVector3, a_prime: UnitVector3):
        self.a = a
        self.a_prime = a_prime

    def swapped(self):
        return type(self)(self.a_prime, self.a)

    def __eq__(self, other):
        return (isinstance(other, SettingsPair) and
                (self.a, self.a_prime) == (other.a, other.a_prime))

    def __repr__(self):
        return f'{type(self).__qualname__}({self.a!r}, {self.a_prime!r})'


class MeasurementSettings:
    '''Per-site settings ``(a_j, a'_j)``, ``j = 1..n``.

    Parameters
    ----------
    sites: sequence of SettingsPair
        One pair per qubit, qubit 1 first.
    frame: float
        Orientation of the measurement x-axis relative to the
        computational basis: every direction is rotated about z by this
        angle before its spin observable is formed. Zero for user-supplied
        settings; fixed by calibration for the canonical settings.
    signs: tuple of int or None
        The orientation ``a'_j = R(±pi/2) a_j`` chosen for canonical
        settings, kept for reporting.
    '''

    def __init__(self, sites, frame=0.0, signs=None):
        sites = tuple(sites)
        if not 1 <= len(sites) <= MAX_DENSE_QUBITS:
            raise CapacityError(
                f'Number of sites must lie in [1, {MAX_DENSE_QUBITS}], got '
                f'{len(sites)}.'
            )
        for j, s in enumerate(sites):
            if not isinstance(s, SettingsPair):
                raise TypeError(f'Site {j} is not a SettingsPair: {s!r}.')
        if not isinstance(frame, numbers.Real):
            raise TypeError(f'Frame angle must be real, got {frame!r}.')
        self._sites = sites
        self._frame = float(frame)
        self._signs = tuple(signs) if signs is not None else None

    @property
    def sites(self):
        return self._sites

    @property
    def n(self):
        return len(self._sites)

    @property
    def frame(self):
        return self._frame

    @property
    def signs(self):
        return self._signs

    def __len__(self):
        return len(self._sites)

    def __iter__(self):
        return iter(self._sites)

    def __getitem__(self, j):
        return self._sites[j]

    def __repr__(self):
        return '{}(n={}, frame={})'.format(
            type(self).__qualname__, self.n, self.frame
        )

    def swapped(self):
        '''The settings with every ``a_j`` and ``a'_j`` exchanged.'''
        return type(self)(
            [s.swapped() for s in self._sites], frame=self._frame,
            signs=None if self._signs is None else
            tuple(-d for d in self._signs)
        )

    def effective(self):
        '''The site directions expressed in the computational frame.'''
        return [
            (s.a.rotated(self._frame), s.a_prime.rotated(self._frame))
            for s in self._sites
        ]


def canonical_angles(n):
    '''Azimuths of the canonical ``a_j``: ``(j-1)(-1)^(n+1) 2 pi / (2n)``.'''
    return [
        j * (-1) ** (n + 1) * 2 * math.pi / (2 * n) for j in range(n)
    ]
