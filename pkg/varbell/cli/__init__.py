#!/usr/bin/env python
# -*- coding: utf-8 -*-
'''Command line front end and report serialization.'''
from ._serialize import emit_report, parse_report
from ._run import build_report, run
from ._app import app, main

__all__ = [
    'emit_report',
    'parse_report',
    'build_report',
    'run',
    'app',
    'main',
]
