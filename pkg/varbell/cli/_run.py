#!/usr/bin/env python
# -*- coding: utf-8 -*-
import logging
from varbell.bounds import (
    analytic_bounds, curve_claim, default_grid, full_report, ghz_curve,
    lhv_claim, lhv_identity_claim, optimize_product, separability_claim,
    spectral_claim
)
from varbell.config import RunConfig
from varbell.errors import VerificationError
from varbell.linalg import MAX_DENSE_QUBITS
from varbell.lhv import enumerate_lhv
from varbell.mk import calibration_pattern
from ._serialize import emit_report


logger = logging.getLogger(__name__)


EQUATION_LABELS = {
    'spectral-identity': 'Eq. (4)',
    'mean-variance-identity': 'Eq. (6)',
    'lhv-mean-variance-identity': 'Eq. (6)',
    'separability-bound': 'Eq. (7)',
    'entanglement-bound': 'Eq. (8)',
    'ghz-attainment': 'Eq. (8)',
    'variant-spectrum-range': 'Eq. (8)',
    'ghz-curve': 'Eq. (9)',
    'lhv-bound': 'Eq. (10)',
    'gap-ratio': 'Eqs. (7), (10)',
}


def _calibration(n):
    if not 2 <= n <= MAX_DENSE_QUBITS:
        return None
    pattern = calibration_pattern(n)
    return {
        'signs': list(pattern.signs),
        'frame': pattern.frame,
        'distance': pattern.distance,
    }


def _claims(claims):
    return [
        {
            'name': c.name,
            'relation': c.relation,
            'paper_eq': EQUATION_LABELS[c.relation],
            'analytic': c.analytic,
            'computed': c.computed,
            'delta': c.delta,
            'pass': c.passed,
        }
        for c in claims
    ]


def _product_witness(ps):
    return [{'polar': b.polar, 'azimuth': b.azimuth} for b in ps.blochs()]


def _assignment_witness(lam):
    return [list(pair) for pair in lam.values]


def _enumeration(report):
    return {
        'count': report.count,
        'm_values': {str(k): c for k, c in report.m_values.items()},
        'max_m': report.max_m,
        'min_m': report.min_m,
        'max_v': report.max_v,
        'min_v': report.min_v,
    }


def _bounds(n):
    sep, ent, lhv = analytic_bounds(n)
    return {
        'separability': sep,
        'entanglement': ent,
        'lhv': lhv,
        'gap_ratio': sep / lhv,
        'separable_violates_lhv': sep > lhv,
    }


def _curve(config):
    curve = ghz_curve(
        config.n, default_grid(config.theta_points), check=False
    )
    points = [p._asdict() for p in curve.points]
    return curve_claim(curve), {'points': points}


def _verify_spectral(config, doc):
    return [spectral_claim(config.n)]


def _optimize(config, doc):
    optimum = optimize_product(
        config.n, restarts=config.restarts, seed=config.seed,
        tol=config.tol, progressbar=config.progressbar
    )
    doc['witnesses']['product_state'] = _product_witness(optimum.witness)
    return [separability_claim(config.n, optimum.best)]


def _lhv_enum(config, doc):
    report = enumerate_lhv(
        config.n, workers=config.workers, progressbar=config.progressbar
    )
    doc['enumeration'] = _enumeration(report)
    doc['witnesses']['lhv_assignment'] = _assignment_witness(report.witness)
    return [lhv_claim(report), lhv_identity_claim(config.n, config.seed)]


def _ghz_curve(config, doc):
    claim, doc['curve'] = _curve(config)
    return [claim]


def _full(config, doc):
    try:
        report = full_report(config.n, config)
    except VerificationError as e:
        report = e.report
    doc['bounds'] = _bounds(config.n)
    doc['enumeration'] = _enumeration(report.enumeration)
    doc['witnesses']['product_state'] = _product_witness(
        report.optimizer_witness
    )
    doc['witnesses']['lhv_assignment'] = _assignment_witness(
        report.enumeration.witness
    )
    return list(report.claims)


def _all(config, doc):
    claims = _full(config, doc)
    claim, doc['curve'] = _curve(config)
    return claims + [claim]


_COMMANDS = {
    'bounds': _full,
    'ghz-curve': _ghz_curve,
    'lhv-enum': _lhv_enum,
    'optimize': _optimize,
    'verify-spectral': _verify_spectral,
    'all': _all,
}


def build_report(config: RunConfig):
    '''Execute the command of ``config`` and assemble the report
    document.'''
    doc = {
        'meta': {
            'command': config.command,
            'n': config.n,
            'seed': config.seed,
            'restarts': config.restarts,
            'theta_points': config.theta_points,
            'tolerances': config.tolerances,
            'frozen_calibration_pattern': _calibration(config.n),
        },
        'witnesses': {},
    }
    claims = _COMMANDS[config.command](config, doc)
    failures = [c.name for c in claims if not c.passed]
    doc['claims'] = _claims(claims)
    doc['failures'] = failures
    doc['status'] = 'fail' if failures else 'pass'
    logger.info(
        '%s n=%d: %d claims, %d failed', config.command, config.n,
        len(claims), len(failures)
    )
    return doc


def run(config: RunConfig):
    '''Run one verification.

    Returns
    -------
    status: int
        0 if every claim passed, 1 otherwise.
    body: bytes
        The serialized report.
    '''
    doc = build_report(config)
    status = 1 if doc['failures'] else 0
    return status, emit_report(doc, config.output_format)
