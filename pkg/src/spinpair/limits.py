"""Asymptotic closed forms for the concurrence.

These are approximations valid in a corner of parameter space and are kept
exactly as derived, including two branches that disagree with the exact
result. They never replace :func:`spinpair.concurrence.concurrence`; use
:func:`compare` to see the gap.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from . import tolerances as tol
from .concurrence import concurrence_analytic
from .errors import NumericOverflow, ValidationError
from .model import ModelParams
from .thermal import as_temperature

CASES = ("high-temperature", "strong-coupling", "strong-dm-ksea")

KNOWN_DISCREPANCIES = {
    "strong_coupling_fm": (
        "the ferromagnetic strong-coupling expression is negative for every J < 0 and so "
        "always returns 0, while the exact low-temperature state is maximally entangled"
    ),
    "strong_dm": (
        "the strong-DM expression uses doubled hyperbolic arguments compared with the "
        "strong-KSEA branch and exceeds 1 for large Dx"
    ),
}

SQRT2 = math.sqrt(2.0)


class LimitValue(NamedTuple):
    value: float
    branch: str


def _guard(*args: float) -> None:
    worst = max(abs(x) for x in args)
    if worst > tol.EXP_GUARD:
        raise NumericOverflow(f"exponent argument {worst:.4g} exceeds {tol.EXP_GUARD:g}")


def limit_high_temperature(temp) -> LimitValue:
    """Leading order in beta at J = Dx = Gx = 1: max(0, ((2 sqrt2 + 1) beta - 1) / 2)."""
    beta = as_temperature(temp).beta
    return LimitValue(max(0.0, 0.5 * ((2 * SQRT2 + 1) * beta - 1)), "high_temperature")


def limit_strong_coupling(p: ModelParams, temp) -> LimitValue:
    """|J| much larger than |Dx| and |Gx|; the branch follows the sign of J."""
    beta = as_temperature(temp).beta
    _guard(4 * beta * p.j, 2 * beta * p.gx)
    x = math.exp(4 * beta * p.j)
    den = 2 * math.cosh(2 * beta * p.gx) + x + 1
    if p.j >= 0:
        return LimitValue(max(0.0, (x - 3) / den), "strong_coupling_afm")
    return LimitValue(max(0.0, -(x + 1) / den), "strong_coupling_fm")


def limit_strong_dm_ksea(p: ModelParams, temp) -> LimitValue:
    """Dx and Gx much larger than |J|; branch on whether Gx or Dx dominates."""
    beta = as_temperature(temp).beta
    d, g = p.dx, p.gx
    _guard(2 * beta * d, 2 * beta * g)
    root = math.sqrt(math.cosh(2 * beta * d) + math.cosh(2 * beta * g))
    if g >= d:
        num = SQRT2 * (math.sinh(beta * g) - math.cosh(beta * d))
        return LimitValue(max(0.0, num / root), "strong_ksea")
    num = SQRT2 * (math.sinh(2 * beta * d) - math.cosh(2 * beta * g))
    return LimitValue(max(0.0, num / root), "strong_dm")


def evaluate(case: str, p: ModelParams, temp) -> LimitValue:
    if case == "high-temperature":
        return limit_high_temperature(temp)
    if case == "strong-coupling":
        return limit_strong_coupling(p, temp)
    if case == "strong-dm-ksea":
        return limit_strong_dm_ksea(p, temp)
    raise ValidationError(f"unknown limit case {case!r}; expected one of {CASES}")


def compare(case: str, p: ModelParams, temp) -> dict:
    """Limit value next to the exact concurrence.

    The high-temperature form is tied to J = Dx = Gx = 1, so its exact
    counterpart is evaluated there regardless of *p*.
    """
    lim = evaluate(case, p, temp)
    exact_params = ModelParams(1.0, 1.0, 1.0) if case == "high-temperature" else p
    exact = concurrence_analytic(exact_params, temp).value
    note = KNOWN_DISCREPANCIES.get(lim.branch)
    return {
        "case": case,
        "branch": lim.branch,
        "limit_value": lim.value,
        "exact_value": exact,
        "difference": lim.value - exact,
        "limit_outside_unit_interval": not (0.0 <= lim.value <= 1.0),
        "documented_discrepancy": note is not None,
        "note": note,
    }
