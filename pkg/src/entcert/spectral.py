"""Dense Hermitian linear algebra for matrices up to dimension 64.

The eigensolver is a cyclic Jacobi iteration on complex Hermitian
matrices: each rotation zeroes one off-diagonal pair through a phased
Givens rotation, sweeps repeat until the off-diagonal Frobenius norm
drops below 1e-14 (at most 100 sweeps).  At the dimensions used here
(2..64) this is robust and accurate to ~1e-13, and a numba-compiled
kernel keeps it fast enough for million-call audit workloads; a plain
Python kernel with identical arithmetic serves as fallback.

All functions are pure and thread-safe.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    BadDimsError,
    DomainError,
    NegativeEigenvalueError,
    NoConvergenceError,
    NonHermitianError,
)

HERMITICITY_TOL = 1e-10
EIGENVALUE_CLAMP = -1e-10
OFF_DIAGONAL_TOL = 1e-14
MAX_SWEEPS = 100
MAX_DIM = 64


def _jacobi_kernel(a, v, tol, max_sweeps):
    """Diagonalize Hermitian ``a`` in place, accumulating rotations in ``v``.

    Returns the number of sweeps used, or -1 if the off-diagonal norm is
    still above ``tol`` after ``max_sweeps`` sweeps.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i, j].real ** 2 + a[i, j].imag ** 2
        if (2.0 * off) ** 0.5 < tol:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag == 0.0:
                    continue
                ph = apq / mag
                tau = (a[q, q].real - a[p, p].real) / (2.0 * mag)
                if tau >= 0.0:
                    t = 1.0 / (tau + (1.0 + tau * tau) ** 0.5)
                else:
                    t = -1.0 / (-tau + (1.0 + tau * tau) ** 0.5)
                c = 1.0 / (1.0 + t * t) ** 0.5
                s = t * c
                sp = s * ph
                spc = s * ph.conjugate()
                cpc = c * ph.conjugate()
                cp = c * ph
                for i in range(n):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - spc * aiq
                    a[i, q] = s * aip + cpc * aiq
                for i in range(n):
                    api = a[p, i]
                    aqi = a[q, i]
                    a[p, i] = c * api - sp * aqi
                    a[q, i] = s * api + cp * aqi
                for i in range(n):
                    vip = v[i, p]
                    viq = v[i, q]
                    v[i, p] = c * vip - spc * viq
                    v[i, q] = s * vip + cpc * viq
    off = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            off += a[i, j].real ** 2 + a[i, j].imag ** 2
    if (2.0 * off) ** 0.5 < tol:
        return max_sweeps
    return -1


try:  # pragma: no cover - exercised indirectly
    from numba import njit

    _jacobi_kernel = njit(cache=True)(_jacobi_kernel)
except ImportError:  # pragma: no cover
    pass


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues (descending) with matching unitary eigenvector columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    def reconstruct(self) -> np.ndarray:
        """Return V diag(w) V^dagger."""
        v = self.eigenvectors
        return (v * self.eigenvalues) @ v.conj().T


def _as_square_complex(m) -> np.ndarray:
    a = np.asarray(m, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise BadDimsError(f"expected a square matrix, got shape {a.shape}")
    if a.shape[0] > MAX_DIM:
        raise BadDimsError(f"dimension {a.shape[0]} exceeds the {MAX_DIM} cap")
    if not np.all(np.isfinite(a.view(np.float64))):
        raise DomainError("matrix entries must be finite")
    return a


def hermiticity_defect(m) -> float:
    """Max-norm distance of ``m`` from its own conjugate transpose."""
    a = np.asarray(m, dtype=np.complex128)
    return float(np.abs(a - a.conj().T).max()) if a.size else 0.0


def eig_hermitian(m, tol: float = HERMITICITY_TOL) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix.

    The input is checked against ``tol`` in max-norm, symmetrized as
    (m + m^dagger)/2, then diagonalized by cyclic Jacobi sweeps.
    Eigenvalues come back sorted descending with eigenvector columns in
    matching order.
    """
    a = _as_square_complex(m)
    if hermiticity_defect(a) > tol:
        raise NonHermitianError(
            f"matrix is not Hermitian within {tol:g} (defect {hermiticity_defect(a):.3e})"
        )
    work = (a + a.conj().T) / 2.0
    vecs = np.eye(work.shape[0], dtype=np.complex128)
    sweeps = _jacobi_kernel(work, vecs, OFF_DIAGONAL_TOL, MAX_SWEEPS)
    if sweeps < 0:
        raise NoConvergenceError(
            f"Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
        )
    w = np.real(np.diag(work)).copy()
    order = np.argsort(-w, kind="stable")
    return EigenDecomposition(w[order], np.ascontiguousarray(vecs[:, order]))


def clamp_psd_eigenvalues(w: np.ndarray) -> np.ndarray:
    """Clamp round-off negatives in ``[-1e-10, 0)`` to zero.

    Raises when an eigenvalue is genuinely negative (below the band).
    """
    w = np.asarray(w, dtype=np.float64)
    if w.size and float(w.min()) < EIGENVALUE_CLAMP:
        raise NegativeEigenvalueError(
            f"eigenvalue {w.min():.3e} below the PSD clamp band {EIGENVALUE_CLAMP:g}"
        )
    return np.where(w < 0.0, 0.0, w)


def power_trace_from_eigenvalues(w, q: float) -> float:
    """Sum of clamped eigenvalues raised to the q-th power.

    ``0**0`` is treated as 0, so at q = 0 only strictly positive
    eigenvalues contribute (the result is the rank).
    """
    if q < 0:
        raise DomainError(f"power q must be nonnegative, got {q}")
    w = clamp_psd_eigenvalues(np.asarray(w, dtype=np.float64))
    positive = w[w > 0.0]
    if q == 0:
        return float(positive.size)
    return float(np.sum(positive**q))


def matrix_power_trace(m, q: float) -> float:
    """tr(m^q) for a Hermitian PSD matrix via its spectrum."""
    return power_trace_from_eigenvalues(eig_hermitian(m).eigenvalues, q)


def matrix_sqrt_psd(m) -> np.ndarray:
    """Principal square root of a Hermitian PSD matrix.

    The result r is Hermitian PSD and satisfies r @ r == m within 1e-9
    in max-norm.
    """
    dec = eig_hermitian(m)
    w = np.sqrt(clamp_psd_eigenvalues(dec.eigenvalues))
    v = dec.eigenvectors
    root = (v * w) @ v.conj().T
    return (root + root.conj().T) / 2.0
