import math

import pytest

from spinpair import limits
from spinpair.concurrence import concurrence_analytic
from spinpair.errors import NumericOverflow, ValidationError
from spinpair.model import ModelParams


def test_high_temperature_formula():
    assert limits.limit_high_temperature(1e300).value == 0
    assert limits.limit_high_temperature(2 * math.sqrt(2) + 1).value == pytest.approx(0, abs=1e-15)
    assert limits.limit_high_temperature(1 / 0.3).value == pytest.approx((0.3 * (2 * math.sqrt(2) + 1) - 1) / 2)
    assert limits.limit_high_temperature(1 / 0.3).value == pytest.approx(0.0743, abs=1e-4)


def test_strong_coupling_antiferromagnetic():
    lim = limits.limit_strong_coupling(ModelParams(10, 1, 1), 1.0)
    assert lim.branch == "strong_coupling_afm"
    assert lim.value == pytest.approx(1 - 4 * math.exp(-40) * (math.cosh(2) + 1), abs=1e-12)


def test_strong_coupling_small_j_clamps():
    assert limits.limit_strong_coupling(ModelParams(1e-12, 0, 1), 1.0).value == 0


def test_strong_coupling_ferromagnetic_as_derived():
    lim = limits.limit_strong_coupling(ModelParams(-10, 0, 1), 1.0)
    assert lim.branch == "strong_coupling_fm" and lim.value == 0


def test_strong_ksea():
    lim = limits.limit_strong_dm_ksea(ModelParams(0.01, 1, 20), 1.0)
    assert lim.branch == "strong_ksea"
    assert lim.value == pytest.approx(1, abs=1e-6)
    assert limits.limit_strong_dm_ksea(ModelParams(0.01, 0, 0), 1.0).value == 0


def test_strong_dm_exceeds_one():
    lim = limits.limit_strong_dm_ksea(ModelParams(0.01, 20, 1), 1.0)
    assert lim.branch == "strong_dm" and lim.value > 1


def test_overflow_guard():
    with pytest.raises(NumericOverflow):
        limits.limit_strong_coupling(ModelParams(10, 1, 1), 0.01)


def test_compare_reports_gap():
    out = limits.compare("strong-dm-ksea", ModelParams(0.01, 20, 1), 1.0)
    assert out["documented_discrepancy"] and out["limit_outside_unit_interval"]
    assert out["exact_value"] == pytest.approx(concurrence_analytic(ModelParams(0.01, 20, 1), 1.0).value)
    assert out["difference"] == pytest.approx(out["limit_value"] - out["exact_value"])
    ok = limits.compare("strong-coupling", ModelParams(10, 1, 1), 1.0)
    assert not ok["documented_discrepancy"] and ok["note"] is None


def test_unknown_case():
    with pytest.raises(ValidationError):
        limits.evaluate("nope", ModelParams(1), 1.0)
