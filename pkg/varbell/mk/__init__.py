#!/usr/bin/env python
# -*- coding: utf-8 -*-
from ._settings import (
    UnitVector3, SettingsPair, MeasurementSettings, canonical_angles
)
from ._operators import (
    BellOperatorPair,
    pauli_observable,
    mk_bell_operator,
    spectral_mk,
    variant_operator,
)
from ._calibration import (
    CalibrationPattern, calibrate, calibration_pattern, canonical_settings
)


__all__ = [
    'UnitVector3',
    'SettingsPair',
    'MeasurementSettings',
    'canonical_angles',
    'BellOperatorPair',
    'pauli_observable',
    'mk_bell_operator',
    'spectral_mk',
    'variant_operator',
    'CalibrationPattern',
    'calibrate',
    'calibration_pattern',
    'canonical_settings',
]
