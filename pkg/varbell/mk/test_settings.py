#!/usr/bin/env python
# -*- coding: utf-8 -*-
import math
import pytest
from varbell.errors import CapacityError, InvariantError
from ._settings import (
    UnitVector3, SettingsPair, MeasurementSettings, canonical_angles
)


def test_unit_vector():
    z = UnitVector3(0, 0, 1)
    assert tuple(z) == (0.0, 0.0, 1.0)
    assert z == UnitVector3(0.0, 0.0, 1.0)
    assert hash(z) == hash(UnitVector3(0, 0, 1))
    assert z.dot(UnitVector3(1, 0, 0)) == 0
    with pytest.raises(InvariantError):
        UnitVector3(1, 1, 0)
    with pytest.raises(InvariantError):
        UnitVector3(math.nan, 0, 0)
    assert isinstance(repr(z), str)


def test_in_plane_and_rotation():
    v = UnitVector3.in_plane(math.pi / 3)
    assert v.z == 0
    assert v.azimuth == pytest.approx(math.pi / 3)
    w = v.rotated(math.pi / 6)
    assert w.azimuth == pytest.approx(math.pi / 2)
    assert v.rotated(0) is v
    assert UnitVector3(0, 0, 1).rotated(1.0).z == 1


def test_settings_pair():
    x, y = UnitVector3(1, 0, 0), UnitVector3(0, 1, 0)
    p = SettingsPair(x, y)
    assert p.swapped() == SettingsPair(y, x)
    assert p != p.swapped()


def test_measurement_settings():
    x, y = UnitVector3(1, 0, 0), UnitVector3(0, 1, 0)
    s = MeasurementSettings([SettingsPair(x, y)] * 3, signs=(1, 1, 1))
    assert s.n == len(s) == 3
    assert s.frame == 0.0
    assert s[0] == SettingsPair(x, y)
    assert list(s) == [SettingsPair(x, y)] * 3
    assert s.swapped()[1] == SettingsPair(y, x)
    assert s.swapped().signs == (-1, -1, -1)

    rotated = MeasurementSettings([SettingsPair(x, y)], frame=math.pi / 2)
    a, ap = rotated.effective()[0]
    assert a.azimuth == pytest.approx(math.pi / 2)
    assert ap.azimuth == pytest.approx(math.pi)

    with pytest.raises(CapacityError):
        MeasurementSettings([])
    with pytest.raises(CapacityError):
        MeasurementSettings([SettingsPair(x, y)] * 11)
    with pytest.raises(TypeError):
        MeasurementSettings([(x, y)])


def test_canonical_angles():
    assert canonical_angles(2) == pytest.approx([0, -math.pi / 2])
    assert canonical_angles(3) == pytest.approx(
        [0, math.pi / 3, 2 * math.pi / 3]
    )
    assert canonical_angles(4)[1] == pytest.approx(-math.pi / 4)
