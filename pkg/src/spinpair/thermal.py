"""Gibbs states rho = exp(-beta H) / Z of the two-qubit model."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

import numpy as np

from . import tolerances as tol
from .errors import InvalidTemperature, NumericOverflow
from .linalg import hermitian_eig
from .model import ModelParams, analytic_spectrum, build_hamiltonian


@dataclass(frozen=True)
class Temperature:
    t: float

    def __post_init__(self):
        t = float(self.t)
        if not math.isfinite(t) or t <= 0.0:
            raise InvalidTemperature(f"temperature must be finite and > 0, got {self.t!r}")
        object.__setattr__(self, "t", t)

    @property
    def beta(self) -> float:
        return 1.0 / self.t


def as_temperature(temp) -> Temperature:
    return temp if isinstance(temp, Temperature) else Temperature(temp)


class Elements(NamedTuple):
    """Unnormalized matrix elements; rho = (1/Z) * pattern(a, b, c, d, mu, nu)."""

    a: float
    b: float
    c: float
    d: float
    mu: float
    nu: float


@dataclass(frozen=True)
class ThermalState:
    """A normalized Gibbs state.

    ``z`` is the partition sum of the (possibly shifted) Boltzmann weights
    the elements were built from; the true partition function is
    ``z * exp(log_scale)``. ``log_scale`` is zero unless an exponent left the
    safe range and the weights were shifted by the ground energy.
    """

    rho: np.ndarray
    z: float
    elements: Elements
    log_scale: float = 0.0
    method: str = "analytic"
    populations: Optional[np.ndarray] = field(default=None, repr=False)
    basis: Optional[np.ndarray] = field(default=None, repr=False)

    @property
    def log_z(self) -> float:
        return math.log(self.z) + self.log_scale

    @property
    def normalized_elements(self) -> Elements:
        return Elements(*(x / self.z for x in self.elements))


def _boltzmann(energies, beta: float) -> tuple[np.ndarray, float]:
    """Weights exp(-beta e), shifted by the ground energy when needed."""
    e = np.asarray(energies, dtype=float)
    if np.max(np.abs(beta * e)) <= tol.EXP_GUARD:
        return np.exp(-beta * e), 0.0
    shift = float(e.min())
    return np.exp(-beta * (e - shift)), -beta * shift


def _check_exponents(p: ModelParams, beta: float) -> None:
    worst = beta * float(np.max(np.abs(analytic_spectrum(p).energies)))
    if worst > tol.EXP_GUARD:
        raise NumericOverflow(
            f"|beta * energy| = {worst:.4g} exceeds {tol.EXP_GUARD:g}; use log_partition_function"
        )


def partition_function(p: ModelParams, temp) -> float:
    """Z = 2 e^{beta J} cosh(2 beta eta) + 2 e^{-beta J} cosh(2 beta Gx).

    Raises NumericOverflow when some |beta * eps_l| exceeds ``EXP_GUARD``.
    """
    beta = as_temperature(temp).beta
    _check_exponents(p, beta)
    return (
        2.0 * math.exp(beta * p.j) * math.cosh(2.0 * beta * p.eta)
        + 2.0 * math.exp(-beta * p.j) * math.cosh(2.0 * beta * p.gx)
    )


def log_partition_function(p: ModelParams, temp) -> float:
    beta = as_temperature(temp).beta
    e = analytic_spectrum(p).energies
    shift = float(e.min())
    return -beta * shift + math.log(float(np.sum(np.exp(-beta * (e - shift)))))


def density_matrix_from_elements(el: Elements, z: float) -> np.ndarray:
    a, b, c, d, mu, nu = el
    i = 1j
    return np.array(
        [
            [a, i * mu, i * nu, c],
            [-i * mu, b, d, -i * nu],
            [-i * nu, d, b, -i * mu],
            [c, i * nu, i * mu, a],
        ],
        dtype=complex,
    ) / z


def thermal_state_analytic(p: ModelParams, temp) -> ThermalState:
    """Gibbs state assembled from the closed-form matrix elements."""
    beta = as_temperature(temp).beta
    spectrum = analytic_spectrum(p)
    w, log_scale = _boltzmann(spectrum.energies, beta)
    e1, e2, e3, e4 = (float(x) for x in w)
    s1, c1 = math.sin(spectrum.theta1) ** 2, math.cos(spectrum.theta1) ** 2
    s2, c2 = math.sin(spectrum.theta2) ** 2, math.cos(spectrum.theta2) ** 2
    t1, t2 = math.sin(2 * spectrum.theta1), math.sin(2 * spectrum.theta2)
    el = Elements(
        a=(2 * e3 * s1 + 2 * e4 * s2 + e1 + e2) / 4,
        b=(2 * e3 * c1 + 2 * e4 * c2 + e1 + e2) / 4,
        c=(-2 * e3 * s1 - 2 * e4 * s2 + e1 + e2) / 4,
        d=(-2 * e3 * c1 - 2 * e4 * c2 + e1 + e2) / 4,
        mu=-(-e3 * t1 + e4 * t2 + e1 - e2) / 4,
        nu=-(e3 * t1 - e4 * t2 + e1 - e2) / 4,
    )
    z = partition_function(p, temp) if log_scale == 0.0 else e1 + e2 + e3 + e4
    return ThermalState(density_matrix_from_elements(el, z), z, el, log_scale, "analytic")


def thermal_state_oracle(p: ModelParams, temp) -> ThermalState:
    """Gibbs state sum_l exp(-beta eps_l) |phi_l><phi_l| / Z from numeric eigenpairs."""
    beta = as_temperature(temp).beta
    dec = hermitian_eig(build_hamiltonian(p))
    w, log_scale = _boltzmann(dec.eigenvalues, beta)
    z = float(np.sum(w))
    pops = w / z
    v = dec.eigenvectors
    rho = (v * pops) @ v.conj().T
    rho = 0.5 * (rho + rho.conj().T)
    el = Elements(
        a=rho[0, 0].real * z,
        b=rho[1, 1].real * z,
        c=rho[0, 3].real * z,
        d=rho[1, 2].real * z,
        mu=rho[0, 1].imag * z,
        nu=rho[0, 2].imag * z,
    )
    return ThermalState(rho, z, el, log_scale, "oracle", pops, v)
