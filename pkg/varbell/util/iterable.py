#!/usr/bin/env python
# -*- coding: utf-8 -*-
from collections import namedtuple
import tqdm


def as_namedtuple(title, **kwargs):
    return namedtuple(title, kwargs.keys())(*kwargs.values())


def progress(progressbar, n, desc=None):
    '''Iterate over ``range(n)`` through a progress bar.

    Parameters
    ----------
    progressbar: 'default', None or callable
        ``'default'`` draws a tqdm bar on stderr, ``None`` draws nothing,
        and any callable ``f(n)`` is used to create the iterable.
    n: int
        Number of steps.
    desc: str
        Label for the default bar.
    '''
    if progressbar == 'default':
        return tqdm.trange(
            n, miniters=None, mininterval=0.25, leave=False, desc=desc
        )
    elif progressbar is None:
        return range(n)
    else:
        return progressbar(n)
