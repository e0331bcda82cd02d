#!/usr/bin/env python
# -*- coding: utf-8 -*-
from .rng import substream, seed_sequence
from .iterable import as_namedtuple, progress


__all__ = ['substream', 'seed_sequence', 'as_namedtuple', 'progress']
