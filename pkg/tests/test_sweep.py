import numpy as np
import pytest

from spinpair import sweep as sweep_mod
from spinpair.axes import AxisSpec
from spinpair.concurrence import concurrence
from spinpair.errors import InvalidAxis, NoEntanglement, NoVanishing, ValidationError
from spinpair.model import ModelParams
from spinpair.sweep import critical_temperature, sweep_1d, sweep_2d, worker_count


def test_axis_validation():
    for bad in (("dx", 1, 1, 5), ("dx", 0, 1, 1), ("temp", 0, 1, 5), ("nope", 0, 1, 5), ("dx", 0, np.inf, 3)):
        with pytest.raises(InvalidAxis):
            AxisSpec(*bad)


def test_endpoints_exact():
    ax = AxisSpec("dx", -6, 6, 241)
    v = ax.values()
    assert v[0] == -6 and v[-1] == 6 and len(v) == 241
    res = sweep_1d(ax, ModelParams(1, 0, 1), 1.0)
    assert res.values[0] == concurrence(ModelParams(1, -6, 1), 1.0).value
    assert res.values[-1] == concurrence(ModelParams(1, 6, 1), 1.0).value


def test_override_and_symmetry():
    res = sweep_1d(AxisSpec("dx", -6, 6, 241), ModelParams(1, 123.0, 1), 1.0)
    c = res.values
    assert np.abs(c - c[::-1]).max() <= 1e-10
    assert c[120] < c[119] and c[120] < c[121]  # local minimum at dx = 0
    assert c[0] > 0.999 and np.all((c >= 0) & (c <= 1 + 1e-9))


def test_plateau_grows_with_temperature():
    def zero_width(t):
        c = sweep_1d(AxisSpec("gx", -6, 6, 241), ModelParams(1, 1, 0), t).values
        return int(np.sum(c <= 1e-12))

    assert 0 < zero_width(5.0) < zero_width(10.0)


def test_nearly_zero_width_axis():
    res = sweep_1d(AxisSpec("j", 1 - 1e-9, 1, 2), ModelParams(1, 1, 1), 1.0)
    assert len(res.values) == 2
    assert abs(res.values[0] - res.values[1]) <= 1e-8


def test_temperature_axes():
    base = ModelParams(1, 1, 1)
    res = sweep_1d(AxisSpec("log_temp", -1, 1, 3), base)
    assert res.values[1] == concurrence(base, 1.0).value
    assert res.values[0] == concurrence(base, 0.1).value
    res = sweep_1d(AxisSpec("temp", 0.5, 2, 4), base)
    assert res.values[-1] == concurrence(base, 2.0).value


def test_missing_temperature_carries_index():
    with pytest.raises(ValidationError) as info:
        sweep_1d(AxisSpec("dx", 0, 1, 3), ModelParams(1))
    assert info.value.grid_index == 0


def test_failure_carries_grid_index(monkeypatch):
    real = sweep_mod.concurrence

    def flaky(p, t, method):
        if p.dx == 0.5:
            raise ArithmeticError("boom")
        return real(p, t, method)

    monkeypatch.setattr(sweep_mod, "concurrence", flaky)
    with pytest.raises(ArithmeticError) as info:
        sweep_1d(AxisSpec("dx", 0, 1, 5), ModelParams(1), 1.0, workers=1)
    assert info.value.grid_index == 2


def test_2d_shape_and_row_major():
    ax, ay = AxisSpec("dx", -1, 1, 3), AxisSpec("gx", 0, 2, 2)
    res = sweep_2d(ax, ay, ModelParams(1), 1.0)
    assert len(res.values) == 6 and res.shape == (2, 3)
    assert res.grid()[1, 0] == concurrence(ModelParams(1, -1, 2), 1.0).value
    assert len(sweep_2d(AxisSpec("dx", 0, 1, 2), AxisSpec("gx", 0, 1, 2), ModelParams(1), 1.0).values) == 4


def test_2d_fourfold_symmetry():
    res = sweep_2d(AxisSpec("dx", -3, 3, 21), AxisSpec("gx", -4, 4, 21), ModelParams(1), 1.0)
    g = res.grid()
    assert np.abs(g - g[::-1, :]).max() <= 1e-10
    assert np.abs(g - g[:, ::-1]).max() <= 1e-10


def test_2d_zero_region_grows_with_temperature():
    res = sweep_2d(AxisSpec("temp", 0.5, 10, 20), AxisSpec("j", -4, 4, 41), ModelParams(1, 1, 1))
    zeros = (res.grid() <= 1e-12).sum(axis=0)  # per temperature column
    assert zeros[-1] > zeros[0]
    assert np.all(np.diff(zeros) >= 0)


def test_2d_rejects_duplicate_axes():
    with pytest.raises(InvalidAxis):
        sweep_2d(AxisSpec("dx", 0, 1, 2), AxisSpec("dx", 0, 1, 2), ModelParams(1), 1.0)
    with pytest.raises(InvalidAxis):
        sweep_2d(AxisSpec("temp", 0.1, 1, 2), AxisSpec("log_temp", 0, 1, 2), ModelParams(1))


def test_parallel_is_bitwise_deterministic():
    ax, ay = AxisSpec("dx", -3, 3, 32), AxisSpec("gx", -4, 4, 20)
    serial = sweep_2d(ax, ay, ModelParams(1), 1.0, workers=1)
    parallel = sweep_2d(ax, ay, ModelParams(1), 1.0, workers=3)
    assert serial.values.tobytes() == parallel.values.tobytes()


def test_worker_count_env(monkeypatch):
    monkeypatch.setenv("SPINPAIR_THREADS", "3")
    assert worker_count() == 3
    monkeypatch.setenv("SPINPAIR_THREADS", "0")
    with pytest.raises(ValidationError):
        worker_count()
    monkeypatch.delenv("SPINPAIR_THREADS")
    assert worker_count() >= 1


def test_critical_temperature_bracket():
    p = ModelParams(1, 1, 1)
    res = critical_temperature(p, tol_t=1e-6)
    lo, hi = res.bracket
    assert hi - lo <= 1e-6 and lo < res.tc < hi
    assert concurrence(p, lo).value > 1e-12
    assert concurrence(p, hi).value <= 1e-12


def test_critical_temperature_errors():
    with pytest.raises(NoEntanglement):
        critical_temperature(ModelParams(0, 0, 0))
    with pytest.raises(NoVanishing):
        critical_temperature(ModelParams(1, 1, 1), t_max=1.0)
    with pytest.raises(ValidationError):
        critical_temperature(ModelParams(1, 1, 1), tol_t=0)
