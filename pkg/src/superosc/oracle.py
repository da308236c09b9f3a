"""Independent verification back-ends.

An implicit-shift QL eigensolver for symmetric tridiagonal matrices and an
exact rational evaluator for small Krawtchouk cases. Nothing here touches
the analytic formulas or polynomial tables used elsewhere in the package;
the point of this module is that a bug shared with the code under test
would be invisible, so it must share none of it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import copysign, sqrt

import numpy as np

__all__ = [
    "EigenResult",
    "tridiag_eigen",
    "hermitian_tridiag_eigen",
    "krawtchouk_exact",
]

# Deflation: an off-diagonal entry counts as zero once it is below unit
# roundoff relative to its diagonal neighbours.
_MACHEP = 2.0**-52
_MAX_SWEEPS = 30


@dataclass(frozen=True)
class EigenResult:
    """Eigenvalues ascending, orthonormal eigenvectors in matching columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    iterations: int
    residual: float


def tridiag_eigen(offdiag, diag, tol: float = 1e-9) -> EigenResult:
    """Diagonalize a symmetric tridiagonal matrix by implicit-shift QL.

    Plane rotations with Wilkinson shifts, accumulated into the eigenvector
    matrix; deterministic for fixed input. Eigenvalues are returned in
    ascending order (stable sort) with eigenvector signs left as the
    iteration produces them, for the caller to align.

    Parameters
    ----------
    offdiag, diag : array_like
        Off-diagonal (length m-1) and diagonal (length m) of the matrix.
    tol : float
        Bound the final residual and orthonormality defect must meet.

    Raises
    ------
    RuntimeError
        If an eigenvalue fails to converge within 30 sweeps, or the
        verified residual exceeds ``tol``.
    """
    if tol <= 0.0:
        raise ValueError(f"need tol > 0, got {tol}")
    d = [float(v) for v in diag]
    m = len(d)
    if m == 0:
        raise ValueError("empty matrix")
    e = [float(v) for v in offdiag] + [0.0]
    if len(e) != m:
        raise ValueError(f"off-diagonal length must be {m - 1}, got {len(e) - 1}")
    if not all(np.isfinite(d)) or not all(np.isfinite(e)):
        raise ValueError("inputs must be finite")
    z = np.eye(m)
    iterations = 0
    for low in range(m):
        sweeps = 0
        while True:
            for split in range(low, m):
                if split == m - 1:
                    break
                if abs(e[split]) <= _MACHEP * (abs(d[split]) + abs(d[split + 1])):
                    break
            shift = d[low]
            if split == low:
                break
            if sweeps == _MAX_SWEEPS:
                raise RuntimeError(f"eigenvalue {low} failed to converge "
                                   f"after {_MAX_SWEEPS} sweeps")
            sweeps += 1
            iterations += 1
            g = (d[low + 1] - shift) / (2.0 * e[low])
            r = sqrt(g * g + 1.0)
            g = d[split] - shift + e[low] / (g + copysign(r, g))
            s = c = 1.0
            shift = 0.0
            for i in range(split - 1, low - 1, -1):
                f = s * e[i]
                b = c * e[i]
                if abs(f) >= abs(g):
                    c = g / f
                    r = sqrt(c * c + 1.0)
                    e[i + 1] = f * r
                    s = 1.0 / r
                    c *= s
                else:
                    s = f / g
                    r = sqrt(s * s + 1.0)
                    e[i + 1] = g * r
                    c = 1.0 / r
                    s *= c
                g = d[i + 1] - shift
                r = (d[i] - g) * s + 2.0 * c * b
                shift = s * r
                d[i + 1] = g + shift
                g = c * r - b
                col = z[:, i + 1].copy()
                z[:, i + 1] = s * z[:, i] + c * col
                z[:, i] = c * z[:, i] - s * col
            d[low] -= shift
            e[low] = g
            e[split] = 0.0
    values = np.array(d)
    order = np.argsort(values, kind="stable")
    values = values[order]
    vectors = z[:, order]

    dense = np.zeros((m, m))
    dense[np.arange(m), np.arange(m)] = [float(v) for v in diag]
    idx = np.arange(m - 1)
    off = np.asarray([float(v) for v in offdiag])
    dense[idx, idx + 1] = off
    dense[idx + 1, idx] = off
    residual = float(np.max(np.abs(dense @ vectors - vectors * values[None, :])))
    defect = float(np.max(np.abs(vectors.T @ vectors - np.eye(m))))
    if residual > tol or defect > tol:
        raise RuntimeError(f"result outside tolerance: residual={residual:.3e} "
                           f"orthonormality defect={defect:.3e} tol={tol:.1e}")
    return EigenResult(values, vectors, iterations, residual)


def hermitian_tridiag_eigen(matrix, tol: float = 1e-9) -> EigenResult:
    """Diagonalize a Hermitian tridiagonal matrix via phase reduction.

    A diagonal unitary turns the matrix into a real symmetric tridiagonal
    one with the same spectrum (|off-diagonals|, real diagonal); the real
    problem goes through :func:`tridiag_eigen` and the eigenvectors are
    re-phased. The reported residual is measured against the original
    complex matrix.
    """
    mat = np.asarray(matrix, dtype=complex)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError(f"need a square matrix, got shape {mat.shape}")
    m = mat.shape[0]
    band = np.tri(m, m, 1) * np.tri(m, m, 1).T
    if np.any(mat[band == 0] != 0):
        raise ValueError("matrix has entries outside the tridiagonal band")
    if np.any(mat.conj().T != mat):
        raise ValueError("matrix is not Hermitian")
    upper = np.array([mat[i, i + 1] for i in range(m - 1)])
    diag = np.array([mat[i, i].real for i in range(m)])
    phases = np.ones(m, dtype=complex)
    for i in range(m - 1):
        entry = upper[i]
        phases[i + 1] = phases[i] * (abs(entry) / entry if entry != 0 else 1.0)
    base = tridiag_eigen(np.abs(upper), diag, tol=tol)
    vectors = phases[:, None] * base.eigenvectors
    residual = float(np.max(np.abs(mat @ vectors - vectors * base.eigenvalues[None, :])))
    if residual > tol:
        raise RuntimeError(f"re-phased residual {residual:.3e} exceeds tol {tol:.1e}")
    return EigenResult(base.eigenvalues, vectors, base.iterations, residual)


def krawtchouk_exact(n: int, x: int, p_num: int, p_den: int, N: int) -> Fraction:
    """Exact rational Krawtchouk value K_n(x; p_num/p_den, N), N <= 12.

    Terminating-series evaluation entirely in rational arithmetic; referee
    for shift identities and suspected floating-point cancellation. The
    size cap keeps the rationals small.
    """
    if N > 12:
        raise ValueError(f"size limit exceeded: N={N} > 12")
    if not (0 <= n <= N and 0 <= x <= N):
        raise ValueError(f"need 0 <= n, x <= N, got n={n}, x={x}, N={N}")
    if not 0 < p_num < p_den:
        raise ValueError(f"need 0 < p_num < p_den, got {p_num}/{p_den}")
    p = Fraction(p_num, p_den)
    total = Fraction(1)
    term = Fraction(1)
    for s in range(n):
        numerator = Fraction(-n + s) * Fraction(-x + s)
        if numerator == 0:
            break
        term = term * numerator / (Fraction(-N + s) * Fraction(1 + s)) / p
        total += term
    return total
