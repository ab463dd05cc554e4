"""Two-qubit Heisenberg XXX Hamiltonian with x-axis DM and KSEA couplings.

    H = J (sx sx + sy sy + sz sz)
        + Dx (sy sz - sz sy)
        + Gx (sy sz + sz sy)

Units: k_B = hbar = 1. ``J > 0`` is antiferromagnetic, ``J < 0`` ferromagnetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import tolerances as tol
from .axes import AxisSpec, MODEL_PARAMS
from .errors import InvalidAxis, ValidationError

LABELS = ("Phi1", "Phi2", "Phi3", "Phi4")
BOUNDARY = "DegenerateBoundary"


@dataclass(frozen=True)
class ModelParams:
    """Exchange coupling ``j``, DM x-component ``dx``, KSEA x-component ``gx``."""

    j: float
    dx: float = 0.0
    gx: float = 0.0

    def __post_init__(self):
        for name in ("j", "dx", "gx"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValidationError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    def with_value(self, name: str, value: float) -> "ModelParams":
        if name not in MODEL_PARAMS:
            raise InvalidAxis(f"{name!r} is not a model parameter")
        kw = {"j": self.j, "dx": self.dx, "gx": self.gx, name: value}
        return ModelParams(**kw)

    @property
    def eta(self) -> float:
        return math.hypot(self.dx, self.j)


class Spectrum(NamedTuple):
    """Closed-form spectrum.

    ``energies[l]`` and ``eigenvectors[:, l]`` belong to level ``l + 1`` in
    the labeling eps_{1,2} = J +/- 2 Gx, eps_{3,4} = -J +/- 2 eta.
    """

    energies: np.ndarray
    eta: float
    theta1: float
    theta2: float
    eigenvectors: np.ndarray


@dataclass(frozen=True)
class GroundStateClass:
    label: str
    energy: float
    degenerate_with: tuple[str, ...] = ()

    @property
    def is_boundary(self) -> bool:
        return self.label == BOUNDARY


def build_hamiltonian(p: ModelParams) -> np.ndarray:
    j, d, g = p.j, p.dx, p.gx
    i = 1j
    return np.array(
        [
            [j, -i * g + i * d, -i * g - i * d, 0],
            [i * g - i * d, -j, 2 * j, i * g + i * d],
            [i * g + i * d, 2 * j, -j, i * g - i * d],
            [0, -i * g - i * d, -i * g + i * d, j],
        ],
        dtype=complex,
    )


def mixing_angles(p: ModelParams) -> tuple[float, float]:
    """Return ``(theta1, theta2) = arctan(Dx / (eta -/+ J))``.

    Evaluated as ``atan2(Dx, eta -/+ J)``, with the cancelling denominator
    rewritten as ``Dx * (Dx / (eta +/- J))`` (no underflow of Dx^2). On ``Dx = 0`` a vanishing
    denominator takes the limit pi/2; at ``J = Dx = 0`` both angles take the
    ``J = 0`` line limit pi/4 so the two eigenvectors stay orthogonal.
    """
    scale = max(abs(p.j), abs(p.dx))
    if scale == 0.0:
        return math.pi / 4, math.pi / 4
    # the angles depend only on the ratio J : Dx; normalizing keeps subnormal inputs exact
    j, d = p.j / scale, p.dx / scale
    eta = math.hypot(d, j)
    den_minus = eta - j if j <= 0.0 else d * (d / (eta + j))
    den_plus = eta + j if j >= 0.0 else d * (d / (eta - j))
    theta1 = math.pi / 2 if (d == 0.0 and den_minus == 0.0) else math.atan2(d, den_minus)
    theta2 = math.pi / 2 if (d == 0.0 and den_plus == 0.0) else math.atan2(d, den_plus)
    return theta1, theta2


def analytic_energies(p: ModelParams) -> np.ndarray:
    eta = p.eta
    return np.array([p.j + 2 * p.gx, p.j - 2 * p.gx, -p.j + 2 * eta, -p.j - 2 * eta])


def analytic_spectrum(p: ModelParams) -> Spectrum:
    """Closed-form energies, mixing angles and eigenvectors.

    The vectors keep the familiar amplitude pattern (1/2 and 1/sqrt(2)
    prefactors, sin/cos of the mixing angles) in the phase convention for
    which ``H |phi_l> = eps_l |phi_l>`` holds for the matrix built by
    :func:`build_hamiltonian`.
    """
    theta1, theta2 = mixing_angles(p)
    h = 1 / math.sqrt(2)
    s1, c1 = math.sin(theta1), math.cos(theta1)
    s2, c2 = math.sin(theta2), math.cos(theta2)
    vecs = np.array(
        [
            [0.5, 0.5j, 0.5j, 0.5],
            [0.5, -0.5j, -0.5j, 0.5],
            [-h * s1, 1j * h * c1, -1j * h * c1, h * s1],
            [-h * s2, -1j * h * c2, 1j * h * c2, h * s2],
        ],
        dtype=complex,
    ).T
    return Spectrum(analytic_energies(p), p.eta, theta1, theta2, vecs)


def classify_ground_state(p: ModelParams) -> GroundStateClass:
    """Zero-temperature ground state from the sign of Gx.

    Gx > 0 competes |phi2> against |phi4| (crossing at Gx = J + eta),
    Gx < 0 competes |phi1> against |phi4> (crossing at Gx = -J - eta), and
    Gx = 0 competes the degenerate pair |phi1>, |phi2> against |phi4>
    (crossing at J + eta = 0, reachable only for Dx = 0, J <= 0). Points
    within ``BOUNDARY_TOL`` of a crossing are reported as
    ``DegenerateBoundary`` carrying every level involved.
    """
    j, g = p.j, p.gx
    eta = p.eta
    e = analytic_energies(p)
    emin = float(e.min())
    if g > 0:
        margin = g - (j + eta)
        if abs(margin) <= tol.BOUNDARY_TOL:
            return GroundStateClass(BOUNDARY, emin, ("Phi2", "Phi4"))
        return GroundStateClass("Phi2" if margin > 0 else "Phi4", emin)
    if g < 0:
        margin = -j - eta - g
        if abs(margin) <= tol.BOUNDARY_TOL:
            return GroundStateClass(BOUNDARY, emin, ("Phi1", "Phi4"))
        return GroundStateClass("Phi1" if margin > 0 else "Phi4", emin)
    if abs(j + eta) <= tol.BOUNDARY_TOL:
        return GroundStateClass(BOUNDARY, emin, ("Phi1", "Phi2", "Phi4"))
    return GroundStateClass("Phi4", emin)


def phase_diagram_raster(x_axis: AxisSpec, y_axis: AxisSpec, fixed: ModelParams) -> list[list[GroundStateClass]]:
    """Ground-state classes sampled at cell centers.

    ``x_axis.steps`` columns by ``y_axis.steps`` rows; ``grid[iy][ix]``.
    """
    for ax in (x_axis, y_axis):
        if ax.param not in MODEL_PARAMS:
            raise InvalidAxis(f"phase diagram axes must be model parameters, got {ax.param!r}")
    if x_axis.param == y_axis.param:
        raise InvalidAxis("both axes name the same parameter")
    xs = x_axis.cell_centers()
    ys = y_axis.cell_centers()
    grid = []
    for y in ys:
        row_base = fixed.with_value(y_axis.param, float(y))
        grid.append([classify_ground_state(row_base.with_value(x_axis.param, float(x))) for x in xs])
    return grid
