#!/usr/bin/env python
# -*- coding: utf-8 -*-
import numpy as np


def seed_sequence(seed, *path):
    '''Derive the seed sequence found at ``path`` below a root seed.

    Unlike :py:meth:`numpy.random.SeedSequence.spawn`, the derivation is a
    pure function of its arguments: asking twice for the same path yields
    the same stream, and no spawn counter is shared between callers.

    Parameters
    ----------
    seed: int
        Root entropy.
    path: int...
        Position of the stream in the tree of substreams.
    '''
    if isinstance(seed, np.random.SeedSequence):
        return np.random.SeedSequence(
            seed.entropy, spawn_key=tuple(seed.spawn_key) + tuple(path)
        )
    return np.random.SeedSequence(int(seed), spawn_key=tuple(map(int, path)))


def substream(seed, *path):
    '''A :py:class:`numpy.random.Generator` over the substream at
    ``path``.'''
    return np.random.default_rng(seed_sequence(seed, *path))
