#!/usr/bin/env python
# -*- coding: utf-8 -*-
import csv
import io
import json
from varbell.errors import InvariantError


SIGNIFICANT_DIGITS = 12
CURVE_COLUMNS = ('theta', 'value', 'violation')


def _fmt(x):
    return f'{x:.{SIGNIFICANT_DIGITS}g}'


def canonical(obj):
    '''Round every float to 12 significant digits and turn tuples into
    lists, so that equal runs serialize to equal bytes.'''
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, float):
        return float(_fmt(obj))
    if isinstance(obj, dict):
        return {str(k): canonical(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [canonical(v) for v in obj]
    # numpy scalars
    if hasattr(obj, 'item'):
        return canonical(obj.item())
    raise TypeError(f'Cannot serialize {type(obj).__name__}.')


def emit_report(report, output_format='json'):
    '''Serialize a report document.

    Parameters
    ----------
    report: dict
        The report document. For CSV it must hold a ``curve`` entry whose
        ``points`` are mappings with ``theta``, ``value`` and ``violation``.
    output_format: 'json' or 'csv'

    Returns
    -------
    body: bytes
    '''
    if output_format == 'json':
        return (
            json.dumps(canonical(report), sort_keys=True, indent=2) + '\n'
        ).encode('utf-8')
    elif output_format == 'csv':
        stream = io.StringIO()
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(CURVE_COLUMNS)
        points = sorted(report['curve']['points'], key=lambda p: p['theta'])
        for p in points:
            writer.writerow([_fmt(p[c]) for c in CURVE_COLUMNS])
        return stream.getvalue().encode('utf-8')
    else:
        raise InvariantError(f'Unknown output format {output_format!r}.')


def parse_report(body, output_format='json'):
    '''Inverse of ``emit_report``; a CSV body parses into a document with
    only the curve points.'''
    text = body.decode('utf-8') if isinstance(body, bytes) else body
    if output_format == 'json':
        return json.loads(text)
    elif output_format == 'csv':
        rows = csv.DictReader(io.StringIO(text))
        if rows.fieldnames is not None and \
                tuple(rows.fieldnames) != CURVE_COLUMNS:
            raise InvariantError(
                f'Unexpected CSV header {rows.fieldnames}.'
            )
        return {'curve': {'points': [
            {c: float(row[c]) for c in CURVE_COLUMNS} for row in rows
        ]}}
    else:
        raise InvariantError(f'Unknown output format {output_format!r}.')
