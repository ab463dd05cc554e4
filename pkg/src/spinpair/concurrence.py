"""Wootters concurrence of the thermal state, two independent ways.

``concurrence_analytic`` works from the closed-form matrix elements and the
closed-form square roots of the eigenvalues of ``R = rho S rho* S``.
``concurrence_oracle`` diagonalizes the Hamiltonian numerically and extracts
the same roots by singular values, without using any of the model's
structure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import tolerances as tol
from .errors import NegativeRadicand
from .linalg import SPIN_FLIP, HermitianEigenDecomposition, as_matrix4, eigvals_sqrt_of_product
from .model import BOUNDARY, LABELS, ModelParams, analytic_spectrum, classify_ground_state
from .thermal import Elements, ThermalState, thermal_state_analytic, thermal_state_oracle

ANALYTIC = "analytic"
ORACLE = "oracle"
GROUND_STATE = "ground_state"


@dataclass(frozen=True)
class ConcurrenceResult:
    lambdas: np.ndarray  # descending
    value: float
    path: str


def concurrence_from_lambdas(lambdas) -> float:
    lam = np.asarray(lambdas, dtype=float)
    return max(0.0, 2.0 * float(lam.max()) - float(lam.sum()))


def _result(lambdas, path: str) -> ConcurrenceResult:
    lam = np.sort(np.asarray(lambdas, dtype=float))[::-1].copy()
    return ConcurrenceResult(lam, concurrence_from_lambdas(lam), path)


def r_matrix(state: ThermalState) -> np.ndarray:
    """``R = rho S rho* S`` assembled from the closed-form components."""
    a, b, c, d, mu, nu = state.normalized_elements
    r11 = a * a + c * c + mu * mu + nu * nu
    r22 = b * b + d * d + mu * mu + nu * nu
    r14 = 2 * a * c + 2 * mu * nu
    r12 = 1j * (mu * (a + b) + nu * (c + d))
    r13 = 1j * (nu * (a + b) + mu * (c + d))
    r23 = 2 * b * d + 2 * mu * nu
    return np.array(
        [
            [r11, r12, r13, r14],
            [np.conj(r12), r22, r23, np.conj(r13)],
            [np.conj(r13), r23, r22, np.conj(r12)],
            [r14, r13, r12, r11],
        ],
        dtype=complex,
    )


def r_matrix_product(rho) -> np.ndarray:
    rho = as_matrix4(rho)
    return rho @ SPIN_FLIP @ rho.conj() @ SPIN_FLIP


def _root_pair(u: float, v: float, w: float) -> tuple[float, float]:
    # roots of one 2x2 block of R; u, v, w already divided by Z
    big = u * u + v * v + 2 * w * w
    spread = abs(u + v) * math.sqrt((u - v) ** 2 + 4 * w * w)
    for rad in ((big - spread) / 2, (big + spread) / 2):
        if rad < -tol.NEGATIVE_CLAMP:
            raise NegativeRadicand(f"radicand {rad:.3e} is negative")
    plus = math.sqrt(max((big + spread) / 2, 0.0))
    # minus * plus = |u v - w^2| exactly; dividing avoids the cancellation in big - spread
    minus = abs(u * v - w * w) / plus if plus > 0.0 else 0.0
    return minus, plus


def closed_form_lambdas(el: Elements) -> np.ndarray:
    """Square roots of the eigenvalues of R from normalized elements.

    Returned in the closed-form order (lambda1..lambda4): the two roots of the
    ``(a-c, b-d, mu-nu)`` block, then the two of the ``(a+c, b+d, mu+nu)``
    block, smaller root first within each block.
    """
    a, b, c, d, mu, nu = el
    l1, l2 = _root_pair(a - c, b - d, mu - nu)
    l3, l4 = _root_pair(a + c, b + d, mu + nu)
    return np.array([l1, l2, l3, l4])


def concurrence_analytic(p: ModelParams, temp) -> ConcurrenceResult:
    state = thermal_state_analytic(p, temp)
    return _result(closed_form_lambdas(state.normalized_elements), ANALYTIC)


def concurrence_oracle(p: ModelParams, temp) -> ConcurrenceResult:
    state = thermal_state_oracle(p, temp)
    spectral = HermitianEigenDecomposition(state.populations, state.basis)
    return _result(eigvals_sqrt_of_product(state.rho, spectral), ORACLE)


def concurrence_of_density_matrix(rho) -> ConcurrenceResult:
    """Concurrence of an arbitrary two-qubit density matrix."""
    return _result(eigvals_sqrt_of_product(rho), ORACLE)


def concurrence(p: ModelParams, temp, method: str = ANALYTIC) -> ConcurrenceResult:
    if method == ANALYTIC:
        return concurrence_analytic(p, temp)
    if method == ORACLE:
        return concurrence_oracle(p, temp)
    raise ValueError(f"unknown method {method!r}; expected 'analytic' or 'oracle'")


def ground_state_density_matrix(p: ModelParams) -> np.ndarray:
    """Zero-temperature state: the ground projector, or the equal mixture on a level crossing."""
    gs = classify_ground_state(p)
    labels = gs.degenerate_with if gs.label == BOUNDARY else (gs.label,)
    vecs = analytic_spectrum(p).eigenvectors
    rho = np.zeros((4, 4), dtype=complex)
    for label in labels:
        v = vecs[:, LABELS.index(label)]
        rho += np.outer(v, v.conj())
    return rho / len(labels)


def ground_state_concurrence(p: ModelParams) -> ConcurrenceResult:
    res = concurrence_of_density_matrix(ground_state_density_matrix(p))
    return ConcurrenceResult(res.lambdas, res.value, GROUND_STATE)
