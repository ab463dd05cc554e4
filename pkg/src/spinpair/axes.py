from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidAxis

MODEL_PARAMS = ("j", "dx", "gx")
TEMP_PARAMS = ("temp", "log_temp")
AXIS_PARAMS = TEMP_PARAMS + MODEL_PARAMS


@dataclass(frozen=True)
class AxisSpec:
    """A uniform axis over one parameter.

    ``log_temp`` ranges are in log10(T) units.
    """

    param: str
    lo: float
    hi: float
    steps: int

    def __post_init__(self):
        if self.param not in AXIS_PARAMS:
            raise InvalidAxis(f"unknown axis parameter {self.param!r}; expected one of {AXIS_PARAMS}")
        lo, hi = float(self.lo), float(self.hi)
        if not (math.isfinite(lo) and math.isfinite(hi)):
            raise InvalidAxis("axis bounds must be finite")
        if not lo < hi:
            raise InvalidAxis(f"axis {self.param}: need lo < hi, got [{lo}, {hi}]")
        if self.param == "temp" and lo <= 0:
            raise InvalidAxis("temperature axis must start above zero")
        if int(self.steps) != self.steps or self.steps < 2:
            raise InvalidAxis(f"axis {self.param}: steps must be an integer >= 2")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        object.__setattr__(self, "steps", int(self.steps))

    def values(self) -> np.ndarray:
        """Endpoint-inclusive grid; first and last entries are exactly lo and hi."""
        v = np.linspace(self.lo, self.hi, self.steps)
        v[0], v[-1] = self.lo, self.hi
        return v

    def cell_centers(self) -> np.ndarray:
        width = (self.hi - self.lo) / self.steps
        return self.lo + width * (np.arange(self.steps) + 0.5)

    @property
    def is_temperature(self) -> bool:
        return self.param in TEMP_PARAMS

    def temperature_of(self, value: float) -> float:
        return 10.0 ** value if self.param == "log_temp" else value

    def to_dict(self) -> dict:
        return {"param": self.param, "lo": self.lo, "hi": self.hi, "steps": self.steps}
