#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''Exception types raised across varbell. Each kind also derives from the
builtin exception a caller would naturally catch for it.'''


class VarbellError(Exception):
    pass


class CapacityError(VarbellError, ValueError):
    '''A dimension, qubit count or site count exceeds a configured cap.'''


class ShapeError(VarbellError, ValueError):
    '''Operands have incompatible dimensions.'''


class InvariantError(VarbellError, ValueError):
    '''A value violates the invariant of its type (unit norm, range,
    normalization, finiteness, ...).'''


class HermiticityError(InvariantError):
    '''An operator expected to be Hermitian is not, or an expectation value
    carries an imaginary residue above tolerance.'''


class DomainError(VarbellError, ValueError):
    '''The qubit count lies outside the domain where a quantity is
    defined.'''


class ConvergenceError(VarbellError, RuntimeError):
    '''An iterative method did not converge.

    Parameters
    ----------
    message: str
        Human readable description.
    last_iterate: float
        The estimate produced by the final iteration.
    '''

    def __init__(self, message, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class VerificationError(VarbellError, AssertionError):
    '''One or more verified claims failed.

    Parameters
    ----------
    failures: list of str
        Names of the failed claims.
    report: object
        The report assembled before the failure was detected, if any.
    '''

    def __init__(self, failures, report=None):
        failures = list(failures)
        super().__init__(
            'verification failed for: ' + ', '.join(failures)
        )
        self.failures = failures
        self.report = report
