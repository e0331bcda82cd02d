#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''Verification of the separability, maximal quantum and local hidden
variable bounds of the variant MK operator.'''
from ._analysis import (
    LHV_BOUND,
    AnalyticBounds,
    EigenCheck,
    SpectrumBounds,
    GhzPoint,
    GhzCurve,
    analytic_bounds,
    variant_spectrum_bounds,
    max_eigen_check,
    ghz_value,
    default_grid,
    ghz_curve,
)
from ._optimize import AscentResult, coordinate_ascent, optimize_product
from ._report import (
    Claim,
    BoundReport,
    canonical_variant,
    spectral_claim,
    separability_claim,
    entanglement_claim,
    ghz_attainment_claim,
    mean_variance_claim,
    spectrum_claim,
    lhv_claim,
    lhv_identity_claim,
    gap_claim,
    curve_claim,
    full_report,
)

__all__ = [
    'LHV_BOUND',
    'AnalyticBounds',
    'EigenCheck',
    'SpectrumBounds',
    'GhzPoint',
    'GhzCurve',
    'analytic_bounds',
    'variant_spectrum_bounds',
    'max_eigen_check',
    'ghz_value',
    'default_grid',
    'ghz_curve',
    'AscentResult',
    'coordinate_ascent',
    'optimize_product',
    'Claim',
    'BoundReport',
    'canonical_variant',
    'spectral_claim',
    'separability_claim',
    'entanglement_claim',
    'ghz_attainment_claim',
    'mean_variance_claim',
    'spectrum_claim',
    'lhv_claim',
    'lhv_identity_claim',
    'gap_claim',
    'curve_claim',
    'full_report',
]
