#!/usr/bin/env python
# -*- coding: utf-8 -*-
import pytest
from .iterable import as_namedtuple, progress


def test_as_namedtuple():
    t = as_namedtuple('point', x=1, y='a')
    assert t.x == 1
    assert t.y == 'a'
    assert type(t).__name__ == 'point'
    assert tuple(t) == (1, 'a')


@pytest.mark.parametrize('n', [0, 1, 5])
def test_progress(n):
    assert list(progress(None, n)) == list(range(n))
    assert list(progress('default', n)) == list(range(n))
    calls = []

    def bar(m):
        calls.append(m)
        return range(m)

    assert list(progress(bar, n)) == list(range(n))
    assert calls == [n]
