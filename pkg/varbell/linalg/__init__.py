#!/usr/bin/env python
# -*- coding: utf-8 -*-
from ._operator import (
    MAX_DENSE_DIM,
    MAX_DENSE_QUBITS,
    Operator,
    PureState,
    kron,
    expectation,
    variance,
    matrix_distance,
)
from ._eigen import dominant_eigenvalue


__all__ = [
    'MAX_DENSE_DIM',
    'MAX_DENSE_QUBITS',
    'Operator',
    'PureState',
    'kron',
    'expectation',
    'variance',
    'matrix_distance',
    'dominant_eigenvalue',
]
