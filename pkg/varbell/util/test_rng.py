#!/usr/bin/env python
# -*- coding: utf-8 -*-
import numpy as np
from .rng import seed_sequence, substream


def test_substream_is_pure():
    a = substream(42, 0, 3).normal(size=8)
    b = substream(42, 0, 3).normal(size=8)
    assert np.array_equal(a, b)


def test_substreams_differ():
    root = substream(42).normal(size=8)
    child = substream(42, 0).normal(size=8)
    sibling = substream(42, 1).normal(size=8)
    other = substream(43, 0).normal(size=8)
    for x, y in [(root, child), (child, sibling), (child, other)]:
        assert not np.array_equal(x, y)


def test_seed_sequence_nesting():
    parent = seed_sequence(7, 2)
    assert parent.spawn_key == (2,)
    assert seed_sequence(parent, 5).spawn_key == (2, 5)
    assert np.array_equal(
        np.random.default_rng(seed_sequence(parent, 5)).random(4),
        substream(7, 2, 5).random(4)
    )
