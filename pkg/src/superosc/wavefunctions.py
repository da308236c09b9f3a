"""Discrete wave functions on the sqrt(k) grid and their limits.

A position wave function at level n is row n of the analytic position
eigenvector matrix read against the grid -sqrt(j)..sqrt(j); the momentum
wave function is the corresponding row of the unitary momentum eigenvector
matrix. Every row is independently recomputable from a closed 2F1 form,
which also yields exact sign sequences for node counting. The large-j and
large-parameter limits connect the discrete rows to the even paraboson
wave function through normalized dual Hahn functions on a quadratic
lattice.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import gammaln

from .fourier import FourierMatrix
from .oscillator import ModelParams, analytic_U, analytic_V, position_spectrum
from .specfun import (
    _hyp2f1_rational,
    dual_hahn_normalized,
    krawtchouk_normalized,
    paraboson_even_wavefunction,
)

__all__ = [
    "WaveTable",
    "position_wavefunction",
    "position_wavefunction_closed",
    "momentum_wavefunction",
    "apply_fourier",
    "node_count",
    "paraboson_limit_table",
]

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class WaveTable:
    """One discrete wave function: grid points with their amplitudes.

    ``kind`` is "position" (real amplitudes) or "momentum" (complex);
    ``grid`` holds the 2j+1 points sign(k) sqrt(|k|) in ascending order and
    ``amplitudes`` the matching row entries, which form a unit vector. The
    displayed energy label is n + 1/2.
    """

    kind: str
    j: int
    p: float
    n: int
    grid: np.ndarray
    amplitudes: np.ndarray

    @property
    def energy(self) -> float:
        return self.n + 0.5


def _check_level(params: ModelParams, n: int) -> None:
    if not 0 <= n <= 2 * params.j:
        raise IndexError(f"level must lie in 0..{2 * params.j}, got n={n}")


def position_wavefunction(params: ModelParams, n: int) -> WaveTable:
    """Level-n position wave function: row n of the position eigenvectors."""
    _check_level(params, n)
    return WaveTable("position", params.j, params.p, n,
                     position_spectrum(params.j), analytic_U(params)[n, :].copy())


def momentum_wavefunction(params: ModelParams, n: int) -> WaveTable:
    """Level-n momentum wave function: row n of the momentum eigenvectors."""
    _check_level(params, n)
    return WaveTable("momentum", params.j, params.p, n,
                     position_spectrum(params.j), analytic_V(params)[n, :].copy())


def _closed_row(j: int, p: float, level: int) -> tuple[np.ndarray, list[int]]:
    # Row `level` from its closed 2F1 form, together with the exact sign of
    # each entry (0 for exact zeros). Magnitudes combine a log-gamma
    # prefactor with the absolute value of the exact rational 2F1; signs
    # come from the rational value, immune to underflow.
    dim = 2 * j + 1
    values = np.zeros(dim)
    signs = [0] * dim
    pf = Fraction(p).limit_denominator(10**15)
    z = 1 / pf
    log_p, log_1p = math.log(p), math.log1p(-p)
    if level % 2 == 0:
        n = level // 2
        lead = gammaln(j + 1)
        s0 = (-1) ** n
        values[j] = s0 * math.exp(0.5 * (lead - gammaln(n + 1) - gammaln(j - n + 1)
                                         + n * log_p + (j - n) * log_1p))
        signs[j] = s0
        for k in range(1, j + 1):
            hyp = _hyp2f1_rational(k, n, j, z)
            if hyp == 0:
                continue
            log_mag = lead + 0.5 * ((n + k) * log_p + (j - n - k) * log_1p
                                    - gammaln(n + 1) - gammaln(j - n + 1)
                                    - gammaln(k + 1) - gammaln(j - k + 1))
            sign = 1 if hyp > 0 else -1
            value = s0 * sign * _INV_SQRT2 * math.exp(log_mag) * abs(float(hyp))
            values[j - k] = values[j + k] = value
            signs[j - k] = signs[j + k] = s0 * sign
    else:
        n = (level - 1) // 2
        lead = gammaln(j)
        s0 = (-1) ** n
        for k in range(1, j + 1):
            hyp = _hyp2f1_rational(k - 1, n, j - 1, z)
            if hyp == 0:
                continue
            log_mag = lead + 0.5 * ((n + k - 1) * log_p + (j - n - k) * log_1p
                                    - gammaln(n + 1) - gammaln(j - n)
                                    - gammaln(k) - gammaln(j - k + 1))
            sign = 1 if hyp > 0 else -1
            value = s0 * sign * _INV_SQRT2 * math.exp(log_mag) * abs(float(hyp))
            values[j + k] = value
            values[j - k] = -value
            signs[j + k] = s0 * sign
            signs[j - k] = -s0 * sign
    return values, signs


def position_wavefunction_closed(params: ModelParams, n: int) -> np.ndarray:
    """Closed-form route to the level-n position amplitudes.

    Built without the eigenvector matrix, from terminating 2F1 values and
    log-space normalization; agrees with :func:`position_wavefunction`.
    """
    _check_level(params, n)
    values, _ = _closed_row(params.j, params.p, n)
    return values


def node_count(params: ModelParams, n: int) -> int:
    """Number of sign changes of the level-n position wave function.

    Exact: signs are evaluated in rational arithmetic and entries that are
    exactly zero are skipped, so near-underflow tails cannot distort the
    count. Equals n across the grid.
    """
    _check_level(params, n)
    _, signs = _closed_row(params.j, params.p, n)
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def apply_fourier(phi_stack: np.ndarray, transform: FourierMatrix | np.ndarray) -> np.ndarray:
    """Map stacked position wave vectors through the discrete transform.

    Rows of ``phi_stack`` are position wave functions sampled on the grid;
    returns the matching stack of momentum wave vectors (stack @ F). With
    the full eigenvector matrix as the stack this realizes V = U F.
    """
    phi = np.asarray(phi_stack)
    mat = transform.data if isinstance(transform, FourierMatrix) else np.asarray(transform)
    if phi.ndim != 2 or phi.shape[1] != mat.shape[0]:
        raise ValueError(f"shape mismatch: stack {phi.shape} vs transform {mat.shape}")
    return phi @ mat


def paraboson_limit_table(j: int, p: float, alpha: float, n: int,
                          grid_count: int) -> np.ndarray:
    """Compare the scaled discrete level-2n row with its paraboson limit.

    Returns an array of rows (x_k, discrete, continuum, limit_gap) for
    k = 1..grid_count, where x_k = sqrt(lambda(k)/j) on the quadratic
    lattice lambda(k) = k(k+2*alpha+1), the discrete value is
    (-1)^n/sqrt(2) j^(1/4) R~_n(lambda(k); 2p*alpha, 2(1-p)*alpha, j),
    the continuum value is the even paraboson wave function with parameter
    2p*alpha at x_k, and limit_gap = |R~_n - K~_n(k; p, j)| tracks the
    large-alpha collapse of the dual Hahn family onto the Krawtchouk one.

    Raises
    ------
    ValueError
        If the request exhausts the grid (grid_count > j) or alpha <= 0.
    """
    if j < 1:
        raise ValueError(f"need j >= 1, got j={j}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"need 0 < p < 1, got p={p}")
    if alpha <= 0:
        raise ValueError(f"need alpha > 0, got alpha={alpha}")
    if not 0 <= n <= j:
        raise ValueError(f"need 0 <= n <= j, got n={n}")
    if grid_count > j:
        raise ValueError(f"grid exhausted: grid_count={grid_count} exceeds j={j}")
    if grid_count < 1:
        raise ValueError(f"need grid_count >= 1, got {grid_count}")
    gamma, delta = 2.0 * p * alpha, 2.0 * (1.0 - p) * alpha
    sign = (-1.0) ** n
    rows = np.empty((grid_count, 4))
    for idx, k in enumerate(range(1, grid_count + 1)):
        lam = k * (k + 2.0 * alpha + 1.0)
        x_k = math.sqrt(lam / j)
        normalized = dual_hahn_normalized(n, k, gamma, delta, j)
        discrete = sign * _INV_SQRT2 * j**0.25 * normalized
        continuum = paraboson_even_wavefunction(n, gamma, x_k)
        gap = abs(normalized - krawtchouk_normalized(n, k, p, j))
        rows[idx] = (x_k, discrete, continuum, gap)
    return rows
