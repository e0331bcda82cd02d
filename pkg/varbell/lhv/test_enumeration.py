#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest
from varbell.errors import CapacityError
from ._model import LhvAssignment, v_value
from ._enumeration import enumerate_lhv, _merge, _partial


def test_small_examples():
    r = enumerate_lhv(1, progressbar=None)
    assert r.count == 4
    assert r.max_m == 1
    assert r.max_v == 2

    r = enumerate_lhv(2, progressbar=None)
    assert r.count == 16
    assert r.max_m == 1.0
    assert r.max_v == 2.0

    r = enumerate_lhv(3, progressbar=None)
    assert r.m_values == {-1: 32, 1: 32}


@pytest.mark.parametrize('n', range(1, 11))
def test_exact_values(n):
    r = enumerate_lhv(n, progressbar=None)
    assert r.count == 4 ** n
    assert set(r.m_values) == {-1, 1}
    assert sum(r.m_values.values()) == 4 ** n
    assert r.max_m == 1.0
    assert r.min_m == -1.0
    assert r.max_v == 2.0
    assert r.min_v == 0.0
    assert r.max_v == r.max_m + r.max_m ** 2
    assert v_value(r.witness) == r.max_v
    assert r.witness.n == n


def test_witness_is_lowest_code():
    r = enumerate_lhv(3, progressbar=None)
    for code in range(r.witness.code):
        assert v_value(LhvAssignment.from_code(code, 3)) < r.max_v


def test_chunking_does_not_change_result():
    reference = enumerate_lhv(5, progressbar=None)
    for bits in [1, 3, 7]:
        assert enumerate_lhv(5, chunk_bits=bits, progressbar=None) == \
            reference


def test_merge_is_order_independent():
    parts = [_partial(4, s, s + 64) for s in range(0, 256, 64)]
    forward = parts[0]
    for p in parts[1:]:
        forward = _merge(forward, p)
    backward = parts[-1]
    for p in reversed(parts[:-1]):
        backward = _merge(p, backward)
    assert forward == backward
    assert forward == _partial(4, 0, 256)


def test_parallel_enumeration():
    assert enumerate_lhv(6, workers=2, chunk_bits=8) == \
        enumerate_lhv(6, progressbar=None)


def test_capacity():
    with pytest.raises(CapacityError):
        enumerate_lhv(13)
    with pytest.raises(CapacityError):
        enumerate_lhv(0)
