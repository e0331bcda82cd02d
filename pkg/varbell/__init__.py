#!/usr/bin/env python
# -*- coding: utf-8 -*-
"""varbell: variance-augmented Mermin-Klyshko Bell operators"""
from .linalg import (
    Operator, PureState, kron, expectation, variance, matrix_distance,
    dominant_eigenvalue
)
from .mk import (
    UnitVector3, SettingsPair, MeasurementSettings, BellOperatorPair,
    pauli_observable, mk_bell_operator, canonical_settings, spectral_mk,
    variant_operator
)
from .states import (
    GhzParameter, QubitBloch, ProductState, generalized_ghz, ghz_pm,
    product_state, embed, product_expectation_v, random_product_state
)
from .lhv import (
    LhvAssignment, LhvDistribution, mk_value, v_value, enumerate_lhv,
    distribution_moments
)
from .bounds import (
    analytic_bounds, optimize_product, max_eigen_check, ghz_curve,
    full_report
)


__all__ = [
    'Operator', 'PureState', 'kron', 'expectation', 'variance',
    'matrix_distance', 'dominant_eigenvalue',
    'UnitVector3', 'SettingsPair', 'MeasurementSettings', 'BellOperatorPair',
    'pauli_observable', 'mk_bell_operator', 'canonical_settings',
    'spectral_mk', 'variant_operator',
    'GhzParameter', 'QubitBloch', 'ProductState', 'generalized_ghz',
    'ghz_pm', 'product_state', 'embed', 'product_expectation_v',
    'random_product_state',
    'LhvAssignment', 'LhvDistribution', 'mk_value', 'v_value',
    'enumerate_lhv', 'distribution_moments',
    'analytic_bounds', 'optimize_product', 'max_eigen_check', 'ghz_curve',
    'full_report',
]


__version__ = '0.1.0'
__license__ = 'BSD'
