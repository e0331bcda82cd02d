#!/usr/bin/env python
# -*- coding: utf-8 -*-
import math
import pytest
import numpy as np
from varbell.errors import CapacityError
from varbell.linalg import (
    dominant_eigenvalue, expectation, matrix_distance, variance
)
from varbell.states import ghz_pm
from ._calibration import (
    SPECTRAL_TOL, calibrate, calibration_pattern, canonical_settings
)
from ._operators import mk_bell_operator, spectral_mk, variant_operator


@pytest.mark.parametrize('n', range(2, 9))
def test_spectral_identity(n):
    primal = mk_bell_operator(canonical_settings(n)).primal
    assert matrix_distance(primal, spectral_mk(n)) <= SPECTRAL_TOL


def test_canonical_geometry():
    s = canonical_settings(2)
    assert s[0].a.azimuth == pytest.approx(0)
    assert s[1].a.azimuth == pytest.approx(-math.pi / 2)
    s = canonical_settings(3)
    assert [p.a.azimuth for p in s] == pytest.approx(
        [0, math.pi / 3, 2 * math.pi / 3]
    )
    for n in range(2, 7):
        for p in canonical_settings(n):
            assert p.a.dot(p.a_prime) == pytest.approx(0, abs=1e-15)
            assert p.a.z == p.a_prime.z == 0


def test_frozen_pattern():
    first = calibration_pattern(4)
    assert calibration_pattern(4) is first
    assert first.n == 4
    assert len(first.signs) == 4
    assert set(first.signs) <= {1, -1}
    assert first.distance <= SPECTRAL_TOL
    s = canonical_settings(4)
    assert s.signs == first.signs
    assert s.frame == first.frame


def test_calibrate_is_deterministic():
    a, b = calibrate(3), calibrate(3)
    assert a == b


def test_calibrate_range():
    with pytest.raises(CapacityError):
        calibrate(1)
    with pytest.raises(CapacityError):
        canonical_settings(11)


@pytest.mark.parametrize('n', [2, 3, 5])
def test_canonical_variant(n):
    m = mk_bell_operator(canonical_settings(n)).primal
    v = variant_operator(m)
    top = 2 ** ((n - 1) / 2) + 2 ** (n - 1)
    assert dominant_eigenvalue(v) == pytest.approx(top, abs=1e-8)
    assert -dominant_eigenvalue(-v) >= -0.25 - 1e-9
    ghz = ghz_pm(n, 1)
    assert expectation(v, ghz) == pytest.approx(top, abs=1e-9)
    assert variance(m, ghz) == pytest.approx(0, abs=1e-10)
    assert np.isclose(expectation(m, ghz_pm(n, -1)), -2 ** ((n - 1) / 2))
