"""Dense complex linear algebra on 4x4 matrices.

Matrices are plain ``numpy`` arrays of shape ``(4, 4)`` and dtype
``complex128``; rows and columns are indexed in the computational basis
``|00>, |01>, |10>, |11>``.

The eigensolver is a cyclic Jacobi iteration written out in scalar Python.
At a fixed 4x4 size it is fast enough, and with no BLAS/LAPACK dispatch its
output is reproducible bit for bit across platforms.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from . import tolerances as tol
from .errors import NegativeEigenvalue, NoConvergence, NotHermitian, ValidationError

SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SPIN_FLIP = np.kron(SIGMA_Y, SIGMA_Y).real.astype(complex)
IDENTITY = np.eye(4, dtype=complex)


class HermitianEigenDecomposition(NamedTuple):
    """Ascending eigenvalues and the matching eigenvectors as columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def as_matrix4(a) -> np.ndarray:
    """Coerce *a* to a finite complex 4x4 array (copy)."""
    m = np.array(a, dtype=complex)
    if m.shape != (4, 4):
        raise ValidationError(f"expected a 4x4 matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix has non-finite entries")
    return m


def mat_mul(a, b) -> np.ndarray:
    return as_matrix4(a) @ as_matrix4(b)


def conj_elementwise(a) -> np.ndarray:
    """Entrywise complex conjugate (no transpose)."""
    return as_matrix4(a).conj()


def dagger(a) -> np.ndarray:
    return as_matrix4(a).conj().T


def trace(a) -> complex:
    return complex(np.trace(as_matrix4(a)))


def hermiticity_defect(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a - a.conj().T)))


def _jacobi_angle(app: float, aqq: float, r: float) -> tuple[float, float]:
    # smaller root of t^2 + 2 tau t - 1 = 0, tau = (aqq - app) / 2r
    tau = (aqq - app) / (2.0 * r)
    if tau == 0.0:
        t = 1.0
    else:
        t = math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
    c = 1.0 / math.sqrt(1.0 + t * t)
    return t, c


def hermitian_eig(a) -> HermitianEigenDecomposition:
    """Eigendecomposition of a Hermitian 4x4 matrix by cyclic Jacobi rotations.

    Sweeps visit the pairs (0,1), (0,2), (0,3), (1,2), (1,3), (2,3) in that
    order until the off-diagonal Frobenius norm drops below
    ``JACOBI_OFF_TOL * ||A||_F``. Eigenvalues come back ascending; the sort
    is stable so exact ties keep the solver's order.

    Raises
    ------
    NotHermitian
        If some entry of ``a - a^H`` exceeds ``HERMITIAN_TOL`` in modulus.
    NoConvergence
        If ``JACOBI_MAX_SWEEPS`` sweeps do not reach the threshold.
    """
    m = as_matrix4(a)
    defect = hermiticity_defect(m)
    if defect > tol.HERMITIAN_TOL:
        raise NotHermitian(f"max |a - a^H| = {defect:.3e} exceeds {tol.HERMITIAN_TOL:g}")
    m = 0.5 * (m + m.conj().T)

    n = 4
    A = [[complex(m[i, k]) for k in range(n)] for i in range(n)]
    for i in range(n):
        A[i][i] = complex(A[i][i].real, 0.0)
    V = [[1.0 + 0j if i == k else 0j for k in range(n)] for i in range(n)]

    norm2 = sum(abs(A[i][k]) ** 2 for i in range(n) for k in range(n))
    thresh2 = (tol.JACOBI_OFF_TOL ** 2) * norm2

    for _ in range(tol.JACOBI_MAX_SWEEPS):
        off2 = sum(abs(A[i][k]) ** 2 for i in range(n) for k in range(n) if i != k)
        if off2 <= thresh2:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p][q]
                r = abs(apq)
                if r == 0.0:
                    continue
                app = A[p][p].real
                aqq = A[q][q].real
                t, c = _jacobi_angle(app, aqq, r)
                s = t * c
                ph = apq / r
                sph = s * ph
                sphc = sph.conjugate()
                # A <- A U, columns p and q
                for k in range(n):
                    akp, akq = A[k][p], A[k][q]
                    A[k][p] = c * akp - sphc * akq
                    A[k][q] = sph * akp + c * akq
                # A <- U^H A, rows p and q
                for k in range(n):
                    apk, aqk = A[p][k], A[q][k]
                    A[p][k] = c * apk - sph * aqk
                    A[q][k] = sphc * apk + c * aqk
                A[p][q] = 0j
                A[q][p] = 0j
                A[p][p] = complex(app - t * r, 0.0)
                A[q][q] = complex(aqq + t * r, 0.0)
                for k in range(n):
                    vkp, vkq = V[k][p], V[k][q]
                    V[k][p] = c * vkp - sphc * vkq
                    V[k][q] = sph * vkp + c * vkq
    else:
        off2 = sum(abs(A[i][k]) ** 2 for i in range(n) for k in range(n) if i != k)
        if off2 > thresh2:
            raise NoConvergence(
                f"Jacobi did not converge in {tol.JACOBI_MAX_SWEEPS} sweeps "
                f"(off-diagonal norm {math.sqrt(off2):.3e})"
            )

    evals = [A[i][i].real for i in range(n)]
    order = sorted(range(n), key=evals.__getitem__)
    values = np.array([evals[i] for i in order])
    vectors = np.array([[V[k][i] for i in order] for k in range(n)], dtype=complex)
    return HermitianEigenDecomposition(values, vectors)


def singular_values(y) -> np.ndarray:
    """Singular values of a complex 4x4 matrix, descending.

    One-sided (Hestenes) Jacobi: columns are rotated pairwise until mutually
    orthogonal, then their norms are the singular values. Small singular
    values come out with small *absolute* error, unlike the square roots of
    eigenvalues of ``Y^H Y``.
    """
    m = as_matrix4(y)
    n = 4
    cols = [[complex(m[i, k]) for i in range(n)] for k in range(n)]

    for _ in range(tol.JACOBI_MAX_SWEEPS):
        rotated = False
        for p in range(n - 1):
            for q in range(p + 1, n):
                yp, yq = cols[p], cols[q]
                # hypot norms: squaring columns near 1e-160 would underflow to zero
                na = math.hypot(*(abs(z) for z in yp))
                nb = math.hypot(*(abs(z) for z in yq))
                gamma = sum(u.conjugate() * v for u, v in zip(yp, yq))
                r = abs(gamma)
                if r == 0.0 or r <= tol.SVD_ORTH_TOL * na * nb:
                    continue
                t, c = _jacobi_angle(na * na, nb * nb, r)
                if t == 0.0:
                    continue
                rotated = True
                s = t * c
                ph = gamma / r
                sph = s * ph
                sphc = sph.conjugate()
                cols[p] = [c * u - sphc * v for u, v in zip(yp, yq)]
                cols[q] = [sph * u + c * v for u, v in zip(yp, yq)]
        if not rotated:
            break
    else:
        raise NoConvergence(f"one-sided Jacobi did not converge in {tol.JACOBI_MAX_SWEEPS} sweeps")

    sv = sorted((math.sqrt(sum(abs(z) ** 2 for z in col)) for col in cols), reverse=True)
    return np.array(sv)


def eigvals_sqrt_of_product(rho, spectral: HermitianEigenDecomposition | None = None) -> np.ndarray:
    """Square roots of the eigenvalues of ``R = rho S rho* S``, descending.

    With ``rho = V diag(w) V^H`` and ``S`` the two-qubit spin flip, the
    eigenvalues of ``R`` are the squared singular values of
    ``diag(sqrt w) (V^H S V*) diag(sqrt w)``. Working through that product
    keeps every eigenproblem Hermitian and the roots accurate near zero.

    Parameters
    ----------
    rho : (4, 4) array_like
        Density matrix.
    spectral : HermitianEigenDecomposition, optional
        A known eigendecomposition of *rho* (e.g. Gibbs populations and the
        Hamiltonian eigenbasis). When omitted, *rho* is diagonalized here.

    Raises
    ------
    NegativeEigenvalue
        If *rho* has an eigenvalue below ``-NEGATIVE_CLAMP``.
    """
    if spectral is None:
        spectral = hermitian_eig(rho)
    w = np.asarray(spectral.eigenvalues, dtype=float)
    if np.any(w < -tol.NEGATIVE_CLAMP):
        raise NegativeEigenvalue(f"density matrix eigenvalue {w.min():.3e} is negative")
    s = np.sqrt(np.clip(w, 0.0, None))
    v = spectral.eigenvectors
    mid = v.conj().T @ SPIN_FLIP @ v.conj()
    return singular_values(s[:, None] * mid * s[None, :])
