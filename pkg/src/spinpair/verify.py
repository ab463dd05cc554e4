"""Randomized agreement check between the analytic and oracle concurrence.

Samples come from numpy's PCG64 bit generator seeded with the given integer:
one ``uniform(-5, 5, size=(n, 3))`` draw for (J, Dx, Gx), then one
``uniform(log 0.05, log 50, size=n)`` draw for log T. Both the algorithm and
the draw order are fixed, so a seed pins the sample set on every platform.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .concurrence import concurrence_analytic, concurrence_oracle
from .errors import SpinPairError
from .model import ModelParams

PARAM_BOUND = 5.0
T_RANGE = (0.05, 50.0)


@dataclass
class VerifyReport:
    samples: int
    seed: int
    tol: float
    max_abs_dev: float
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict:
        return {
            "kind": "verify",
            "generator": "PCG64",
            "samples": self.samples,
            "seed": self.seed,
            "tol": self.tol,
            "max_abs_dev": self.max_abs_dev if math.isfinite(self.max_abs_dev) else None,
            "failures": self.failures,
        }


def draw_samples(samples: int, seed: int) -> tuple[np.ndarray, np.ndarray]:
    rng = np.random.Generator(np.random.PCG64(seed))
    params = rng.uniform(-PARAM_BOUND, PARAM_BOUND, size=(samples, 3))
    temps = np.exp(rng.uniform(math.log(T_RANGE[0]), math.log(T_RANGE[1]), size=samples))
    return params, temps


def run_verify(samples: int = 10_000, seed: int = 42, tol: float = 1e-9) -> VerifyReport:
    if samples < 1:
        raise ValueError("samples must be >= 1")
    params, temps = draw_samples(samples, seed)
    worst = 0.0
    failures = []
    for (j, dx, gx), t in zip(params, temps):
        p = ModelParams(float(j), float(dx), float(gx))
        t = float(t)
        record = {"j": p.j, "dx": p.dx, "gx": p.gx, "temp": t}
        try:
            ca = concurrence_analytic(p, t).value
            co = concurrence_oracle(p, t).value
        except SpinPairError as exc:
            worst = math.inf
            failures.append({**record, "c_analytic": None, "c_oracle": None, "error": f"{type(exc).__name__}: {exc}"})
            continue
        dev = abs(ca - co)
        worst = max(worst, dev)
        if dev > tol:
            failures.append({**record, "c_analytic": ca, "c_oracle": co, "abs_dev": dev})
    return VerifyReport(samples, seed, tol, worst, failures)
