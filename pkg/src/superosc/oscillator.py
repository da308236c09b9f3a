"""Position and momentum operators of the finite oscillator model.

The position operator on the (2j+1)-dimensional module is a symmetric
tridiagonal matrix whose off-diagonals alternate between sqrt(p(j+1-k))
and sqrt((1-p)k); the momentum operator carries the same magnitudes with
phases +-i. Both share the p-independent spectrum -sqrt(j) .. sqrt(j) of
square roots of integers. The analytic eigenvector matrices are assembled
from orthonormal Krawtchouk functions with families (p, j) on even rows
and (p, j-1) on odd rows.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import representation
from .specfun import krawtchouk_table

__all__ = [
    "ModelParams",
    "SymTridiagonal",
    "position_matrix",
    "momentum_matrix",
    "hamiltonian_matrix",
    "position_spectrum",
    "analytic_U",
    "analytic_V",
    "sign_variant",
    "limit_U",
]

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class ModelParams:
    """Model inputs: non-negative integer j and mixing parameter p in (0,1)."""

    j: int
    p: float

    def __post_init__(self) -> None:
        if self.j < 0 or self.j != int(self.j):
            raise ValueError(f"need integer j >= 0, got j={self.j!r}")
        if not 0.0 < self.p < 1.0:
            raise ValueError(f"need 0 < p < 1, got p={self.p!r}")

    @property
    def dim(self) -> int:
        return 2 * self.j + 1


@dataclass(frozen=True)
class SymTridiagonal:
    """Zero-diagonal symmetric tridiagonal matrix held as its off-diagonal."""

    offdiag: np.ndarray

    @property
    def dim(self) -> int:
        return len(self.offdiag) + 1

    def dense(self) -> np.ndarray:
        n = self.dim
        mat = np.zeros((n, n))
        idx = np.arange(n - 1)
        mat[idx, idx + 1] = self.offdiag
        mat[idx + 1, idx] = self.offdiag
        return mat


def _position_offdiag(j: int, p: float) -> np.ndarray:
    off = np.empty(2 * j)
    for k in range(1, j + 1):
        off[2 * k - 2] = math.sqrt(p) * math.sqrt(j + 1 - k)
        off[2 * k - 1] = math.sqrt(1.0 - p) * math.sqrt(k)
    return off


def position_matrix(params: ModelParams) -> SymTridiagonal:
    """Position operator: off-diagonals alternate sqrt(p(j+1-k)), sqrt((1-p)k).

    Equals the combination sqrt(p) F+ + sqrt(1-p) G+ - sqrt(1-p) F- - sqrt(p) G-
    of generator matrices; that identity is exercised by the test suite rather
    than assumed here.
    """
    return SymTridiagonal(_position_offdiag(params.j, params.p))


def momentum_matrix(params: ModelParams) -> np.ndarray:
    """Momentum operator, assembled from the odd generator matrices.

    Returns the dense Hermitian matrix
    i (sqrt(p) F+ + sqrt(1-p) G+ + sqrt(1-p) F- + sqrt(p) G-); structurally
    its superdiagonal is +i t and subdiagonal -i t with t the position
    off-diagonals, which the tests check as a postcondition.
    """
    j, p = params.j, params.p
    sp, s1p = math.sqrt(p), math.sqrt(1.0 - p)
    combo = (sp * representation.generator_matrix("F+", j)
             + s1p * representation.generator_matrix("G+", j)
             + s1p * representation.generator_matrix("F-", j)
             + sp * representation.generator_matrix("G-", j))
    return 1j * combo


def hamiltonian_matrix(j: int) -> np.ndarray:
    """Oscillator Hamiltonian 2H + (j + 1/2) I: diagonal entry 2j - r + 1/2.

    As a set the spectrum is the equidistant ladder {n + 1/2 : n = 0..2j}.
    """
    if j < 0:
        raise ValueError(f"need j >= 0, got j={j}")
    return np.diag(2.0 * j - np.arange(2 * j + 1) + 0.5)


def position_spectrum(j: int) -> np.ndarray:
    """Shared eigenvalue grid (-sqrt(j), ..., -1, 0, 1, ..., sqrt(j))."""
    if j < 0:
        raise ValueError(f"need j >= 0, got j={j}")
    k = np.arange(-j, j + 1)
    return np.sign(k) * np.sqrt(np.abs(k))


def analytic_U(params: ModelParams) -> np.ndarray:
    """Closed-form orthogonal eigenvector matrix of the position operator.

    Column c holds the eigenvector for the c-th ascending eigenvalue of
    :func:`position_spectrum`. Even rows 2n are built from the orthonormal
    Krawtchouk family with parameters (p, j), odd rows 2n+1 from (p, j-1);
    row 2n carries (-1)^n K~_k(n)/sqrt(2) at columns j-+k with the center
    column unhalved, and odd rows are antisymmetric with zero center.
    """
    j, p = params.j, params.p
    dim = params.dim
    table_j = krawtchouk_table(p, j)
    mat = np.zeros((dim, dim))
    even = np.arange(j + 1)
    sign_even = np.where(even % 2 == 0, 1.0, -1.0)
    mat[2 * even, j] = sign_even * table_j[0, even]
    for k in range(1, j + 1):
        mat[2 * even, j - k] = mat[2 * even, j + k] = sign_even * _INV_SQRT2 * table_j[k, even]
    if j >= 1:
        table_j1 = krawtchouk_table(p, j - 1)
        odd = np.arange(j)
        sign_odd = np.where(odd % 2 == 0, 1.0, -1.0)
        for k in range(1, j + 1):
            col = sign_odd * _INV_SQRT2 * table_j1[k - 1, odd]
            mat[2 * odd + 1, j - k] = -col
            mat[2 * odd + 1, j + k] = col
    return mat


def _row_phases(j: int) -> np.ndarray:
    # Phase -i(-1)^k on row 2k, (-1)^k on row 2k+1; equals -i * i^r at row r.
    r = np.arange(2 * j + 1)
    half = r // 2
    phase = np.where(half % 2 == 0, 1.0, -1.0).astype(complex)
    phase[r % 2 == 0] *= -1j
    return phase


def analytic_V(params: ModelParams) -> np.ndarray:
    """Unitary eigenvector matrix of the momentum operator's phase convention.

    V is the position eigenvector matrix with row 2k multiplied by -i(-1)^k
    and row 2k+1 by (-1)^k, i.e. V = J U for the diagonal fourth-root-of-unity
    matrix J. V is unitary and V^T V is the anti-diagonal of -1.
    """
    return _row_phases(params.j)[:, None] * analytic_U(params)


def sign_variant(params: ModelParams) -> tuple[SymTridiagonal, np.ndarray]:
    """Signed variant: conjugate the position operator by D1 = diag(1,1,-1,-1,...).

    Returns (position matrix with the sqrt((1-p)k) entries negated, D1 U).
    The variant has the same spectrum, with eigenvectors D1 U.
    """
    j = params.j
    off = _position_offdiag(j, params.p)
    off[1::2] *= -1.0
    r = np.arange(2 * j + 1)
    d1 = np.where(r % 4 < 2, 1.0, -1.0)
    return SymTridiagonal(off), d1[:, None] * analytic_U(params)


# Truncation scale for the p -> 1 limit: entries of analytic_U at
# p = 1 - _LIMIT_EPS are either O(1) or O(_LIMIT_EPS^(1/2)); the threshold
# _LIMIT_EPS^(1/4) = 1e-3 separates the two groups by ~9 decades.
_LIMIT_EPS = 1e-12


def limit_U(j: int, side: str) -> np.ndarray:
    """Limit of the position eigenvector matrix as p reaches an endpoint.

    ``side="toward-zero"``: the exact limit matrix. Row 0 has a single 1 at
    the center column; row 2n has +1/sqrt(2) at columns j-+n; row 2n+1 has
    -1/sqrt(2) at column j-(n+1) and +1/sqrt(2) at column j+(n+1).

    ``side="toward-one"``: evaluated at p = 1 - 1e-12 with entries below
    1e-3 (the quarter power of the offset) rounded to zero; the surviving
    entries are stable to ~1e-11 and the result is orthogonal.
    """
    if j < 0:
        raise ValueError(f"need j >= 0, got j={j}")
    dim = 2 * j + 1
    if side == "toward-zero":
        mat = np.zeros((dim, dim))
        mat[0, j] = 1.0
        for n in range(1, j + 1):
            mat[2 * n, j - n] = mat[2 * n, j + n] = _INV_SQRT2
        for n in range(j):
            mat[2 * n + 1, j - (n + 1)] = -_INV_SQRT2
            mat[2 * n + 1, j + (n + 1)] = _INV_SQRT2
        return mat
    if side == "toward-one":
        if j == 0:
            return np.array([[1.0]])
        mat = analytic_U(ModelParams(j, 1.0 - _LIMIT_EPS)).copy()
        mat[np.abs(mat) < _LIMIT_EPS**0.25] = 0.0
        return mat
    raise ValueError(f"side must be 'toward-zero' or 'toward-one', got {side!r}")
