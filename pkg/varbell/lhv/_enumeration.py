#!/usr/bin/env python
# -*- coding: utf-8 -*-
from collections import Counter, namedtuple
from concurrent.futures import ProcessPoolExecutor
import functools
import logging
import numpy as np
from varbell.errors import CapacityError
from varbell.util import progress
from ._model import LhvAssignment, mk_values


logger = logging.getLogger(__name__)

MAX_ENUM_SITES = 12

LhvEnumerationReport = namedtuple(
    'LhvEnumerationReport',
    ['n', 'count', 'm_values', 'max_m', 'min_m', 'max_v', 'min_v', 'witness']
)

_Partial = namedtuple(
    '_Partial',
    ['count', 'm_values', 'max_m', 'min_m', 'max_v', 'min_v', 'witness']
)


def _partial(n, start, stop):
    '''Scan the codes ``start <= code < stop``.'''
    codes = range(start, stop)
    m = mk_values(codes, n)
    v = m + m * m
    top = v.max()
    return _Partial(
        count=len(m),
        m_values=Counter({
            (int(k) if k == int(k) else float(k)): int(c)
            for k, c in zip(*np.unique(m, return_counts=True))
        }),
        max_m=float(m.max()),
        min_m=float(m.min()),
        max_v=float(top),
        min_v=float(v.min()),
        witness=start + int((v == top).argmax()),
    )


def _merge(p, q):
    '''Associative and commutative, so the outcome does not depend on how
    the code range was partitioned or in which order chunks finished.'''
    if p.max_v > q.max_v:
        witness = p.witness
    elif q.max_v > p.max_v:
        witness = q.witness
    else:
        witness = min(p.witness, q.witness)
    return _Partial(
        count=p.count + q.count,
        m_values=p.m_values + q.m_values,
        max_m=max(p.max_m, q.max_m),
        min_m=min(p.min_m, q.min_m),
        max_v=max(p.max_v, q.max_v),
        min_v=min(p.min_v, q.min_v),
        witness=witness,
    )


def enumerate_lhv(n, workers=1, chunk_bits=16, progressbar='default'):
    '''Evaluate ``M_n`` and ``V_n`` on all ``4**n`` deterministic
    assignments.

    Parameters
    ----------
    n: int
        Number of sites, ``1 <= n <= 12``.
    workers: int
        Number of worker processes; chunks are distributed among them and
        the partial reports merged.
    chunk_bits: int
        Each chunk covers ``2**chunk_bits`` consecutive codes.
    progressbar: 'default', None or callable
        Progress display over chunks.

    Returns
    -------
    report: LhvEnumerationReport
        Extremes of ``M_n`` and ``V_n``, the multiset of ``M_n`` values,
        and the lowest-code assignment attaining ``max_v``.
    '''
    if not 1 <= n <= MAX_ENUM_SITES:
        raise CapacityError(
            f'Exhaustive enumeration supports 1 <= n <= {MAX_ENUM_SITES}, '
            f'got {n}.'
        )
    total = 4 ** n
    size = 2 ** min(chunk_bits, 2 * n)
    starts = list(range(0, total, size))
    stops = [min(s + size, total) for s in starts]

    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            partials = list(
                executor.map(_partial, [n] * len(starts), starts, stops)
            )
    else:
        partials = [
            _partial(n, starts[i], stops[i])
            for i in progress(progressbar, len(starts), desc=f'lhv n={n}')
        ]
    p = functools.reduce(_merge, partials)
    logger.info(
        'enumerated %d assignments for n=%d: max_m=%g max_v=%g',
        p.count, n, p.max_m, p.max_v
    )
    return LhvEnumerationReport(
        n=n,
        count=p.count,
        m_values=dict(sorted(p.m_values.items())),
        max_m=p.max_m,
        min_m=p.min_m,
        max_v=p.max_v,
        min_v=p.min_v,
        witness=LhvAssignment.from_code(p.witness, n),
    )
