"""Concurrence curves, heatmaps and the threshold temperature."""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import tolerances as tol
from .axes import AxisSpec
from .concurrence import ANALYTIC, concurrence
from .errors import InvalidAxis, NoEntanglement, NoVanishing, ValidationError
from .model import ModelParams
from .thermal import Temperature, as_temperature

THREADS_ENV = "SPINPAIR_THREADS"
# below this many points a worker pool costs more than it saves
PARALLEL_MIN_POINTS = 512


@dataclass(frozen=True)
class SweepResult:
    axes: tuple[AxisSpec, ...]
    base: ModelParams
    base_temp: Temperature | None
    values: np.ndarray  # 1D: (steps,); 2D: flat row-major, index iy * nx + ix
    method: str

    @property
    def shape(self) -> tuple[int, ...]:
        return tuple(ax.steps for ax in reversed(self.axes))

    def grid(self) -> np.ndarray:
        return self.values.reshape(self.shape)


@dataclass(frozen=True)
class CriticalTemperature:
    tc: float
    bracket: tuple[float, float]
    tolerance: float


def worker_count() -> int:
    raw = os.environ.get(THREADS_ENV)
    if raw is None or raw.strip() == "":
        return os.cpu_count() or 1
    try:
        n = int(raw)
    except ValueError:
        raise ValidationError(f"{THREADS_ENV} must be a positive integer, got {raw!r}") from None
    if n < 1:
        raise ValidationError(f"{THREADS_ENV} must be a positive integer, got {raw!r}")
    return n


def _point(base: ModelParams, temp: float | None, overrides, method: str) -> float:
    p = base
    t = temp
    for name, value in overrides:
        if name == "temp":
            t = value
        elif name == "log_temp":
            t = 10.0 ** value
        else:
            p = p.with_value(name, value)
    if t is None:
        raise ValidationError("no temperature given and none swept")
    return concurrence(p, t, method).value


def _chunk(args) -> list[float]:
    base, temp, points, method, start = args
    out = []
    for k, overrides in enumerate(points):
        try:
            out.append(_point(base, temp, overrides, method))
        except Exception as exc:
            exc.grid_index = start + k
            raise
    return out


def _evaluate(base, temp, points, method, workers) -> np.ndarray:
    n = len(points)
    if workers is None:
        workers = worker_count()
    if workers <= 1 or n < PARALLEL_MIN_POINTS:
        return np.array(_chunk((base, temp, points, method, 0)), dtype=float)
    size = math.ceil(n / workers)
    jobs = [(base, temp, points[i:i + size], method, i) for i in range(0, n, size)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_chunk, jobs))
    return np.array([v for part in parts for v in part], dtype=float)


def _temp_or_none(temp):
    return None if temp is None else as_temperature(temp)


def sweep_1d(axis: AxisSpec, base: ModelParams, base_temp=None, method: str = ANALYTIC,
             workers: int | None = None) -> SweepResult:
    """Concurrence along one axis; the swept value overrides *base* pointwise.

    Failures re-raise the original exception with ``grid_index`` set.
    """
    base_temp = _temp_or_none(base_temp)
    points = [((axis.param, float(x)),) for x in axis.values()]
    t = None if base_temp is None else base_temp.t
    values = _evaluate(base, t, points, method, workers)
    return SweepResult((axis,), base, base_temp, values, method)


def sweep_2d(ax: AxisSpec, ay: AxisSpec, base: ModelParams, base_temp=None, method: str = ANALYTIC,
             workers: int | None = None) -> SweepResult:
    """Concurrence heatmap on endpoint-inclusive grids, row-major (y outer, x inner)."""
    if ax.param == ay.param or {ax.param, ay.param} == {"temp", "log_temp"}:
        raise InvalidAxis(f"axes must sweep different parameters, got {ax.param!r} and {ay.param!r}")
    base_temp = _temp_or_none(base_temp)
    xs, ys = ax.values(), ay.values()
    points = [((ay.param, float(y)), (ax.param, float(x))) for y in ys for x in xs]
    t = None if base_temp is None else base_temp.t
    values = _evaluate(base, t, points, method, workers)
    return SweepResult((ax, ay), base, base_temp, values, method)


def critical_temperature(p: ModelParams, t_max: float = 100.0, tol_t: float = 1e-6,
                         method: str = ANALYTIC, scan_points: int = tol.TC_SCAN_POINTS) -> CriticalTemperature:
    """Largest temperature at which the concurrence switches off.

    A geometric scan from ``TC_T_MIN`` to *t_max* finds the last sample with
    C > 0; the interval up to the next sample is then bisected until it is at
    most *tol_t* wide. The returned bracket satisfies C(t_lo) > 0 and
    C(t_hi) = 0 (to ``ZERO_CONCURRENCE``).
    """
    if not tol_t > 0:
        raise ValidationError("tolerance must be positive")
    if not t_max > tol.TC_T_MIN:
        raise ValidationError(f"t_max must exceed {tol.TC_T_MIN}")

    def entangled(t: float) -> bool:
        return concurrence(p, t, method).value > tol.ZERO_CONCURRENCE

    ts = np.geomspace(tol.TC_T_MIN, t_max, scan_points)
    flags = [entangled(float(t)) for t in ts]
    if not any(flags):
        raise NoEntanglement(f"concurrence is zero on the whole scan [{tol.TC_T_MIN}, {t_max}]")
    last = max(i for i, f in enumerate(flags) if f)
    if last == len(ts) - 1:
        raise NoVanishing(f"concurrence still positive at t_max={t_max}; raise t_max")
    lo, hi = float(ts[last]), float(ts[last + 1])
    while hi - lo > tol_t:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if entangled(mid):
            lo = mid
        else:
            hi = mid
    return CriticalTemperature(0.5 * (lo + hi), (lo, hi), tol_t)
