#!/usr/bin/env python
# -*- coding: utf-8 -*-
import math
import pytest
import numpy as np
from varbell.errors import InvariantError
from ._serialize import canonical, emit_report, parse_report


def _random_report(rng):
    return {
        'meta': {
            'n': int(rng.integers(2, 11)),
            'seed': int(rng.integers(0, 1000)),
            'tolerances': {'spectral': 1e-10, 'eigen': 1e-8},
        },
        'claims': [
            {
                'name': f'claim-{i}',
                'relation': 'gap-ratio',
                'analytic': float(rng.normal()),
                'computed': float(rng.normal()),
                'delta': float(rng.normal()),
                'pass': bool(rng.integers(0, 2)),
            }
            for i in range(int(rng.integers(0, 5)))
        ],
        'witnesses': {
            'lhv_assignment': [[1, -1], [-1, -1]],
            'product_state': [
                {'polar': float(rng.uniform(0, math.pi)), 'azimuth': 0.0}
            ],
        },
    }


def test_canonical_rounding():
    assert canonical(math.pi) == 3.14159265359
    assert canonical((1, 2.0)) == [1, 2.0]
    assert canonical({1: True}) == {'1': True}
    assert canonical(np.float64(0.1)) == 0.1
    assert canonical(np.int64(3)) == 3
    assert canonical(None) is None
    with pytest.raises(TypeError):
        canonical(object())


def test_json_round_trip():
    rng = np.random.default_rng(0)
    for _ in range(100):
        report = canonical(_random_report(rng))
        body = emit_report(report)
        assert parse_report(body) == report
        assert emit_report(parse_report(body)) == body


def test_json_is_sorted():
    body = emit_report({'b': 1, 'a': {'d': 2, 'c': 3}}).decode()
    assert body.index('"a"') < body.index('"b"')
    assert body.index('"c"') < body.index('"d"')
    assert body.endswith('\n')


def test_csv():
    report = {'curve': {'points': [
        {'theta': math.pi / 4, 'value': 2 + math.sqrt(2),
         'violation': math.sqrt(2)},
        {'theta': 0.0, 'value': 2.0, 'violation': 0.0},
    ]}}
    body = emit_report(report, 'csv').decode()
    lines = body.splitlines()
    assert lines[0] == 'theta,value,violation'
    assert lines[1] == '0,2,0'
    assert lines[2] == '0.785398163397,3.41421356237,1.41421356237'
    parsed = parse_report(body, 'csv')
    assert parsed['curve']['points'][1]['value'] == 3.41421356237


def test_empty_curve():
    body = emit_report({'curve': {'points': []}}, 'csv')
    assert body == b'theta,value,violation\n'
    assert parse_report(body, 'csv') == {'curve': {'points': []}}


def test_bad_format():
    with pytest.raises(InvariantError):
        emit_report({}, 'xml')
    with pytest.raises(InvariantError):
        parse_report(b'', 'xml')
    with pytest.raises(InvariantError):
        parse_report(b'a,b\n1,2\n', 'csv')
