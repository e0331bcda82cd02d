#!/usr/bin/env python
# -*- coding: utf-8 -*-
from ._ghz import THETA_MAX, GhzParameter, generalized_ghz, ghz_pm
from ._product import (
    MAX_CLOSED_FORM_QUBITS,
    QubitBloch,
    ProductState,
    product_state,
    embed,
    product_expectation_v,
    random_product_state,
)


__all__ = [
    'THETA_MAX',
    'GhzParameter',
    'generalized_ghz',
    'ghz_pm',
    'MAX_CLOSED_FORM_QUBITS',
    'QubitBloch',
    'ProductState',
    'product_state',
    'embed',
    'product_expectation_v',
    'random_product_state',
]
