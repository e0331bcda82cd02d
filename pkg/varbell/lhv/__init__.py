#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''Deterministic local hidden variable assignments and the exhaustive
evaluation of the MK polynomial over them.'''
from ._model import (
    LhvAssignment,
    LhvDistribution,
    LhvMoments,
    mk_value,
    mk_values,
    v_value,
    distribution_moments,
    random_lhv_distribution,
)
from ._enumeration import (
    MAX_ENUM_SITES,
    LhvEnumerationReport,
    enumerate_lhv,
)

__all__ = [
    'LhvAssignment',
    'LhvDistribution',
    'LhvMoments',
    'mk_value',
    'mk_values',
    'v_value',
    'distribution_moments',
    'random_lhv_distribution',
    'MAX_ENUM_SITES',
    'LhvEnumerationReport',
    'enumerate_lhv',
]
