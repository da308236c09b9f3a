"""Full invariant suite across a (j, p) sweep, used by the verify command.

Collects every library-level invariant into one report: algebra and star
relations, eigen-equations for both observables, Fourier matrix properties
by both routes, wave-function normalization, parity, node counts and route
agreement, oracle cross-checks, orthogonality of the polynomial tables,
endpoint limits, shift identities and the paraboson limits.

One deliberate nuance: V as constructed satisfies M_p conj(V) = conj(V) D,
not M_p V = V D - the row phases +-i select the conjugate. The suite
verifies the diagonalization through the conjugated form (together with
unitarity, V = J U, and the anti-diagonal Gram identity), so a passing run
means the momentum eigensystem is genuinely correct.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import representation
from .fourier import J_matrix, fourier_eigensystem_report
from .oracle import hermitian_tridiag_eigen, krawtchouk_exact, tridiag_eigen
from .oscillator import (
    ModelParams,
    analytic_U,
    analytic_V,
    hamiltonian_matrix,
    limit_U,
    momentum_matrix,
    position_matrix,
    position_spectrum,
    sign_variant,
)
from .report import VerificationReport
from .specfun import (
    dual_hahn_normalized,
    dual_hahn_table,
    krawtchouk,
    krawtchouk_normalized,
    krawtchouk_table,
)
from .wavefunctions import node_count, paraboson_limit_table, position_wavefunction_closed

__all__ = ["run_suite", "DEFAULT_P_LIST"]

DEFAULT_P_LIST = (0.1, 0.3, 0.5, 0.7, 0.9)

# Level cap for the closed-route and node-count checks inside the sweep;
# their exact rational signs dominate runtime at large j.
_CLOSED_ROUTE_J_CAP = 12


def _antidiagonal(dim: int) -> np.ndarray:
    mat = np.zeros((dim, dim))
    mat[np.arange(dim), dim - 1 - np.arange(dim)] = -1.0
    return mat


def _sweep_checks(report: VerificationReport, j: int, p: float, tol: float) -> None:
    params = ModelParams(j, p)
    dim = params.dim
    label = f"j={j} p={p}"
    spectrum = position_spectrum(j)
    u = analytic_U(params)
    v = analytic_V(params)
    mq = position_matrix(params).dense()
    mp = momentum_matrix(params)
    identity = np.eye(dim)

    assembled = (math.sqrt(p) * representation.generator_matrix("F+", j)
                 + math.sqrt(1 - p) * representation.generator_matrix("G+", j)
                 - math.sqrt(1 - p) * representation.generator_matrix("F-", j)
                 - math.sqrt(p) * representation.generator_matrix("G-", j))
    report.add(f"{label} position assembly consistency",
               float(np.max(np.abs(mq - assembled))), 1e-12)

    report.add(f"{label} position eigen-equation",
               float(np.max(np.abs(mq @ u - u * spectrum[None, :]))), tol)
    report.add(f"{label} position eigenvectors orthogonal",
               float(np.max(np.abs(u.T @ u - identity))), tol)

    report.add(f"{label} momentum eigen-equation (conjugated)",
               float(np.max(np.abs(mp @ v.conj() - v.conj() * spectrum[None, :]))), tol)
    report.add(f"{label} momentum eigenvectors unitary",
               float(np.max(np.abs(v.conj().T @ v - identity))), tol)
    report.add(f"{label} V = J U",
               float(np.max(np.abs(v - J_matrix(j) @ u))), tol)
    report.add(f"{label} V^T V anti-diagonal",
               float(np.max(np.abs(v.T @ v - _antidiagonal(dim)))), tol)

    hamiltonian = hamiltonian_matrix(j)
    report.add(f"{label} Heisenberg position equation",
               float(np.max(np.abs(hamiltonian @ mq - mq @ hamiltonian + 1j * mp))), tol)
    report.add(f"{label} Heisenberg momentum equation",
               float(np.max(np.abs(hamiltonian @ mp - mp @ hamiltonian - 1j * mq))), tol)

    variant, u_variant = sign_variant(params)
    report.add(f"{label} sign variant eigen-equation",
               float(np.max(np.abs(variant.dense() @ u_variant
                                   - u_variant * spectrum[None, :]))), tol)

    fourier_report, _ = fourier_eigensystem_report(params, tol=tol)
    report.extend(fourier_report)

    table = krawtchouk_table(p, j)
    report.add(f"{label} Krawtchouk table orthogonal",
               float(np.max(np.abs(table @ table.T - np.eye(j + 1)))), tol)

    report.add(f"{label} wave function normalization",
               float(np.max(np.abs(np.sum(u * u, axis=1) - 1.0))), 1e-12)
    parity_dev = 0.0
    for level in range(dim):
        row = u[level, :]
        mirrored = row[::-1] if level % 2 == 0 else -row[::-1]
        parity_dev = max(parity_dev, float(np.max(np.abs(row - mirrored))))
    report.add(f"{label} wave function parity", parity_dev, 0.0)

    if j <= _CLOSED_ROUTE_J_CAP:
        closed_dev = 0.0
        node_misses = 0
        for level in range(dim):
            closed = position_wavefunction_closed(params, level)
            closed_dev = max(closed_dev, float(np.max(np.abs(closed - u[level, :]))))
            if node_count(params, level) != level:
                node_misses += 1
        report.add(f"{label} closed-form route agreement", closed_dev, tol)
        report.add(f"{label} node counts", float(node_misses), 0.0)

    oracle_q = tridiag_eigen(position_matrix(params).offdiag, np.zeros(dim))
    report.add(f"{label} oracle position eigenvalues",
               float(np.max(np.abs(oracle_q.eigenvalues - spectrum))), 1e-9)
    aligned = oracle_q.eigenvectors * np.where(
        np.sum(oracle_q.eigenvectors * u, axis=0) < 0, -1.0, 1.0)[None, :]
    report.add(f"{label} oracle eigenvectors vs analytic",
               float(np.max(np.abs(aligned - u))), 1e-8)
    oracle_p = hermitian_tridiag_eigen(mp)
    report.add(f"{label} oracle momentum eigenvalues",
               float(np.max(np.abs(oracle_p.eigenvalues - spectrum))), 1e-9)


def _fixed_checks(report: VerificationReport, tol: float) -> None:
    for j in range(0, 11):
        algebra = representation.verify_superalgebra(j)
        report.add(f"j={j} superalgebra relations", algebra.max_residual, 1e-12)
        star = representation.verify_star(j)
        report.add(f"j={j} star conditions", star.max_residual, 1e-12)

    for j in range(0, 7):
        toward_zero = limit_U(j, "toward-zero")
        expected = _limit_zero_pattern(j)
        report.add(f"j={j} p->0 limit pattern",
                   float(np.max(np.abs(toward_zero - expected))), 1e-12)
        report.add(f"j={j} p->0 limit orthogonal",
                   float(np.max(np.abs(toward_zero.T @ toward_zero - np.eye(2 * j + 1)))),
                   1e-12)
        toward_one = limit_U(j, "toward-one")
        report.add(f"j={j} p->1 limit orthogonal",
                   float(np.max(np.abs(toward_one.T @ toward_one - np.eye(2 * j + 1)))),
                   1e-9)

    exact_misses = 0
    for p_num, p_den in ((1, 3), (1, 2), (7, 10)):
        pf = Fraction(p_num, p_den)
        for j in range(1, 9):
            for k in range(1, j + 1):
                for n in range(j):
                    lhs = (krawtchouk_exact(k, n + 1, p_num, p_den, j)
                           - krawtchouk_exact(k, n, p_num, p_den, j))
                    rhs = -Fraction(k) / (pf * j) * krawtchouk_exact(k - 1, n, p_num, p_den, j - 1)
                    exact_misses += lhs != rhs
                for n in range(j + 1):
                    down = (krawtchouk_exact(k - 1, n - 1, p_num, p_den, j - 1)
                            if n >= 1 else Fraction(0))
                    # Both shifted values sit outside the n <= j-1 grid at the
                    # edges, where their coefficients vanish exactly.
                    up = (krawtchouk_exact(k - 1, n, p_num, p_den, j - 1)
                          if n <= j - 1 else Fraction(0))
                    lhs = (j - n) * up - n * (1 - pf) / pf * down
                    rhs = j * krawtchouk_exact(k, n, p_num, p_den, j)
                    exact_misses += lhs != rhs
    report.add("shift identities exact (j <= 8)", float(exact_misses), 0.0)

    scaled = 0.0
    for p in (0.1, 0.5, 0.9):
        for j in (17, 30):
            for k in range(1, j + 1):
                for n in range(j):
                    lhs = krawtchouk(k, n + 1, p, j) - krawtchouk(k, n, p, j)
                    rhs = -(k / (p * j)) * krawtchouk(k - 1, n, p, j - 1)
                    # Backward-error scale: each value is a sum whose terms
                    # can dwarf the result (peak ~1e13 against an O(1) value
                    # at p=1/2, k=j=30), so rounding noise is proportional to
                    # the absolute term sums, not to the outputs.
                    cond = max(1.0,
                               _krawtchouk_term_sum(k, n + 1, p, j),
                               _krawtchouk_term_sum(k, n, p, j),
                               (k / (p * j)) * _krawtchouk_term_sum(k - 1, n, p, j - 1))
                    scaled = max(scaled, abs(lhs - rhs) / cond)
    report.add("forward shift identity, rounding-scaled (j <= 30)", scaled, 1e-12)

    for gamma, delta in ((0.5, 0.5), (3.0, 7.0)):
        table = dual_hahn_table(gamma, delta, 40)
        report.add(f"dual Hahn table orthogonal (gamma={gamma}, delta={delta}, N=40)",
                   float(np.max(np.abs(table @ table.T - np.eye(41)))), tol)

    alpha, j_limit, p_half = 1e6, 20, 0.5
    gamma, delta = 2 * p_half * alpha, 2 * (1 - p_half) * alpha
    gap = max(abs(dual_hahn_normalized(n, k, gamma, delta, j_limit)
                  - krawtchouk_normalized(n, k, p_half, j_limit))
              for n in range(j_limit + 1) for k in range(j_limit + 1))
    report.add("large-alpha dual Hahn -> Krawtchouk (alpha=1e6, j=20)", gap, 1e-4)

    alpha = 10.0
    errors = []
    for j_big in (200, 400):
        worst = 0.0
        for n in (0, 1, 2):
            rows = paraboson_limit_table(j_big, 0.5, alpha, n, 15)
            worst = max(worst, float(np.max(np.abs(rows[:, 1] - rows[:, 2]))))
        errors.append(worst)
    report.add("paraboson comparison error decreases (j=200 -> 400)",
               0.0 if errors[1] < errors[0] else 1.0, 0.0)


def _krawtchouk_term_sum(n: int, x: int, p: float, N: int) -> float:
    # Sum of absolute values of the defining series' terms, mirrored from
    # the hyp2f1_terminating recurrence; bounds the rounding noise of the
    # evaluated polynomial.
    total = 1.0
    term = 1.0
    for s in range(n):
        numerator = (n - s) * (x - s)
        if numerator == 0:
            break
        term *= abs(numerator) / ((N - s) * (s + 1) * p)
        total += term
    return total


def _limit_zero_pattern(j: int) -> np.ndarray:
    inv2 = 1.0 / math.sqrt(2.0)
    mat = np.zeros((2 * j + 1, 2 * j + 1))
    mat[0, j] = 1.0
    for n in range(1, j + 1):
        mat[2 * n, j - n] = mat[2 * n, j + n] = inv2
    for n in range(j):
        mat[2 * n + 1, j - (n + 1)] = -inv2
        mat[2 * n + 1, j + (n + 1)] = inv2
    return mat


def run_suite(j_max: int = 10, p_list: tuple[float, ...] = DEFAULT_P_LIST,
              tol: float = 1e-10) -> VerificationReport:
    """Run every invariant check over j = 1..j_max and the given p values.

    ``tol`` is the base tolerance for matrix residuals; checks with
    stricter intrinsic accuracy (algebra relations, normalization,
    exact-arithmetic identities) keep their own tighter bounds.
    """
    if j_max < 1:
        raise ValueError(f"need j_max >= 1, got {j_max}")
    for p in p_list:
        if not 0.0 < p < 1.0:
            raise ValueError(f"need 0 < p < 1 throughout p_list, got {p}")
    report = VerificationReport()
    for p in p_list:
        for j in range(1, j_max + 1):
            _sweep_checks(report, j, float(p), tol)
    _fixed_checks(report, tol)
    return report
