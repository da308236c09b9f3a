"""Terminating hypergeometric series and discrete orthogonal polynomials.

Provides the Krawtchouk, dual Hahn and Laguerre families together with the
even paraboson wave function. Weights and norms are evaluated in log-space
(via the log-gamma function) so that grids of a few hundred points stay
inside double range. Orthonormal tables are produced from the symmetric
Jacobi (three-term recurrence) matrix of each family, whose eigenvectors
are the normalized polynomial values on the grid; column signs are fixed
by anchor rows, falling back to exact rational sign evaluation when the
anchor entries are too small to trust.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from math import comb

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

__all__ = [
    "hyp2f1_terminating",
    "krawtchouk",
    "krawtchouk_weight",
    "krawtchouk_norm",
    "krawtchouk_normalized",
    "krawtchouk_table",
    "dual_hahn",
    "dual_hahn_normalized",
    "dual_hahn_table",
    "laguerre",
    "paraboson_even_wavefunction",
]

# Anchor entries below this are considered sign-unreliable (solver noise
# is ~1e-14, genuine entries we accept are >= 1e-8).
_ANCHOR_FLOOR = 1e-8


def hyp2f1_terminating(n: int, b: float, c: float, z: float) -> float:
    """Evaluate the terminating series 2F1(-n, b; c; z).

    The sum has n+1 terms; each term is obtained from the previous one by a
    ratio update, so the cost is O(n) and no Pochhammer symbol is ever
    recomputed from scratch.

    Parameters
    ----------
    n : int
        Non-negative series degree.
    b, c, z : float
        Remaining numerator parameter, denominator parameter and argument.

    Raises
    ------
    ValueError
        If n is negative, or a denominator factor c+s vanishes before the
        numerator terminates the series.
    """
    if n < 0 or n != int(n):
        raise ValueError(f"degree must be a non-negative integer, got {n!r}")
    total = 1.0
    term = 1.0
    for s in range(int(n)):
        num = (-n + s) * (b + s)
        if num == 0.0:
            break
        den = (c + s) * (s + 1.0)
        if den == 0.0:
            raise ValueError(
                f"2F1(-{n}, {b}; {c}; {z}): denominator vanished at term {s + 1}"
            )
        term *= num / den * z
        total += term
        if term == 0.0:
            break
    return total


def krawtchouk(n: int, x: float, p: float, N: int) -> float:
    """Krawtchouk polynomial K_n(x; p, N) = 2F1(-n, -x; -N; 1/p).

    Symmetric in (n, x) when both are grid integers.
    """
    if not 0 <= n <= N:
        raise ValueError(f"need 0 <= n <= N, got n={n}, N={N}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"need 0 < p < 1, got p={p}")
    return hyp2f1_terminating(n, -x, -N, 1.0 / p)


def krawtchouk_weight(x: int, p: float, N: int) -> float:
    """Binomial weight w(x; p, N) = C(N, x) p^x (1-p)^(N-x), log-space."""
    if not 0 <= x <= N:
        raise ValueError(f"need 0 <= x <= N, got x={x}, N={N}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"need 0 < p < 1, got p={p}")
    lbinom = gammaln(N + 1) - gammaln(x + 1) - gammaln(N - x + 1)
    return math.exp(lbinom + x * math.log(p) + (N - x) * math.log1p(-p))


def krawtchouk_norm(n: int, p: float, N: int) -> float:
    """Squared norm h(n; p, N) = n!(N-n)!/N! ((1-p)/p)^n, log-space."""
    if not 0 <= n <= N:
        raise ValueError(f"need 0 <= n <= N, got n={n}, N={N}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"need 0 < p < 1, got p={p}")
    lg = gammaln(n + 1) + gammaln(N - n + 1) - gammaln(N + 1)
    return math.exp(lg + n * (math.log1p(-p) - math.log(p)))


def _krawtchouk_sign(n: int, x: int, pf: Fraction, N: int) -> int:
    # Exact sign of K_n(x; pf, N) from the integer-coefficient form of the
    # three-term recurrence: A_n = (pq)^n n! K_n with p = P/Q.
    P, Q = pf.numerator, pf.denominator
    if n == 0:
        return 1
    a_prev, a = 1, P * N - x * Q
    for m in range(1, n):
        a_prev, a = a, (P * (N - m) + m * (Q - P) - x * Q) * a \
            - m * (Q - P) * P * (N - m + 1) * a_prev
    return (a > 0) - (a < 0)


@lru_cache(maxsize=None)
def _krawtchouk_table(p: float, N: int) -> np.ndarray:
    if N == 0:
        table = np.array([[1.0]])
        table.flags.writeable = False
        return table
    pf = Fraction(p).limit_denominator(10**15)
    n = np.arange(N, dtype=float)
    nn = np.arange(N + 1, dtype=float)
    diag = p * (N - nn) + nn * (1.0 - p)
    off = -np.sqrt(p * (1.0 - p) * (n + 1.0) * (N - n))
    _, vecs = eigh_tridiagonal(diag, off)
    # Column x carries K~_n(x) up to an overall sign. Two anchors with known
    # true sign: row 0 is sqrt(w(x)) > 0, row N is (-1)^x sqrt(w(x)h(N))|...|
    # with sign (-1)^x. Use whichever is larger; if both are below the noise
    # floor, resolve the sign of the largest-magnitude row exactly.
    sx = np.where(np.arange(N + 1) % 2 == 0, 1.0, -1.0)
    a0 = vecs[0, :]
    aN = vecs[N, :] * sx
    anchor = np.where(np.abs(a0) >= np.abs(aN), a0, aN)
    flip = np.where(anchor < 0, -1.0, 1.0)
    weak = np.abs(anchor) < _ANCHOR_FLOOR
    if np.any(weak):
        for x in np.nonzero(weak)[0]:
            ns = int(np.argmax(np.abs(vecs[:, x])))
            true_sign = _krawtchouk_sign(ns, int(x), pf, N)
            flip[x] = true_sign if vecs[ns, x] > 0 else -true_sign
    table = vecs * flip[None, :]
    table.flags.writeable = False
    return table


def krawtchouk_table(p: float, N: int) -> np.ndarray:
    """Orthonormal Krawtchouk table T[n, x] = K~_n(x; p, N), 0 <= n, x <= N.

    The table is an orthogonal (N+1)x(N+1) matrix, symmetric in (n, x).
    Returned arrays are cached and marked read-only; copy before mutating.
    """
    if N < 0:
        raise ValueError(f"need N >= 0, got N={N}")
    if not 0.0 < p < 1.0:
        raise ValueError(f"need 0 < p < 1, got p={p}")
    return _krawtchouk_table(float(p), int(N))


def krawtchouk_normalized(n: int, x: int, p: float, N: int) -> float:
    """Orthonormal Krawtchouk function K~_n(x) = sqrt(w(x)/h(n)) K_n(x)."""
    if not 0 <= n <= N or not 0 <= x <= N:
        raise ValueError(f"need 0 <= n, x <= N, got n={n}, x={x}, N={N}")
    return float(krawtchouk_table(p, N)[n, x])


def dual_hahn(n: int, x: int, gamma: float, delta: float, N: int) -> float:
    """Dual Hahn polynomial R_n(lambda(x); gamma, delta, N).

    Evaluates the terminating series
    3F2(-n, -x, x+gamma+delta+1; -N, gamma+1; 1) by term recurrence on the
    quadratic lattice lambda(x) = x(x+gamma+delta+1). Direct summation is
    reliable for small degrees; for the full orthonormal family use
    :func:`dual_hahn_normalized`, which avoids the large-n cancellation.
    """
    if not 0 <= n <= N or not 0 <= x <= N:
        raise ValueError(f"need 0 <= n, x <= N, got n={n}, x={x}, N={N}")
    if gamma <= -1 or delta <= -1:
        raise ValueError(f"need gamma, delta > -1, got ({gamma}, {delta})")
    total = 1.0
    term = 1.0
    for s in range(min(n, x)):
        den = (-N + s) * (gamma + 1 + s) * (s + 1)
        if den == 0.0:
            raise ValueError(f"dual Hahn series: denominator vanished at term {s + 1}")
        term *= (-n + s) * (-x + s) * (x + gamma + delta + 1 + s) / den
        total += term
    return total


def _dual_hahn_sign(n: int, x: int, gf: Fraction, df: Fraction, N: int) -> int:
    # Exact rational sign of R_n(lambda(x); gf, df, N).
    total = Fraction(1)
    term = Fraction(1)
    for s in range(min(n, x)):
        term = term * Fraction(-n + s) * Fraction(-x + s) * (x + gf + df + 1 + s) \
            / (Fraction(-N + s) * (gf + 1 + s) * Fraction(s + 1))
        total += term
    return (total > 0) - (total < 0)


def _dual_hahn_log_weight(x: int, gamma: float, delta: float, N: int) -> float:
    pre = 0.0 if x == 0 else math.log((2 * x + gamma + delta + 1) / (x + gamma + delta + 1))
    return (pre + gammaln(gamma + 1 + x) - gammaln(gamma + 1) + 2 * gammaln(N + 1)
            - (gammaln(x + gamma + delta + 2 + N) - gammaln(x + gamma + delta + 2))
            - (gammaln(delta + 1 + x) - gammaln(delta + 1))
            - gammaln(x + 1) - gammaln(N - x + 1))


def _dual_hahn_log_norm(n: int, gamma: float, delta: float, N: int) -> float:
    return (gammaln(n + 1) + gammaln(N - n + 1) + gammaln(gamma + 1) + gammaln(delta + 1)
            - gammaln(gamma + n + 1) - gammaln(delta + N - n + 1))


@lru_cache(maxsize=None)
def _dual_hahn_table(gamma: float, delta: float, N: int) -> np.ndarray:
    if N == 0:
        table = np.array([[1.0]])
        table.flags.writeable = False
        return table
    gf = Fraction(gamma).limit_denominator(10**12)
    df = Fraction(delta).limit_denominator(10**12)
    n = np.arange(N, dtype=float)
    nn = np.arange(N + 1, dtype=float)
    diag = (nn + gamma + 1) * (N - nn) + nn * (delta + N - nn + 1)
    off = -np.sqrt((n + 1) * (n + gamma + 1) * (N - n) * (N - n + delta))
    _, vecs = eigh_tridiagonal(diag, off)
    # Same anchoring scheme as the Krawtchouk table: row 0 positive,
    # row N carries sign (-1)^x, exact rational sign as the fallback.
    sx = np.where(np.arange(N + 1) % 2 == 0, 1.0, -1.0)
    a0 = vecs[0, :]
    aN = vecs[N, :] * sx
    anchor = np.where(np.abs(a0) >= np.abs(aN), a0, aN)
    flip = np.where(anchor < 0, -1.0, 1.0)
    weak = np.abs(anchor) < _ANCHOR_FLOOR
    if np.any(weak):
        for x in np.nonzero(weak)[0]:
            ns = int(np.argmax(np.abs(vecs[:, x])))
            true_sign = _dual_hahn_sign(ns, int(x), gf, df, N)
            flip[x] = true_sign if vecs[ns, x] > 0 else -true_sign
    table = vecs * flip[None, :]
    table.flags.writeable = False
    return table


def dual_hahn_table(gamma: float, delta: float, N: int) -> np.ndarray:
    """Orthonormal dual Hahn table T[n, x] = R~_n(lambda(x)), 0 <= n, x <= N.

    Rows are indexed by degree, columns by the lattice point x of
    lambda(x) = x(x+gamma+delta+1) in increasing order. The table is an
    orthogonal matrix; cached and read-only like :func:`krawtchouk_table`.
    """
    if N < 0:
        raise ValueError(f"need N >= 0, got N={N}")
    if gamma <= -1 or delta <= -1:
        raise ValueError(f"need gamma, delta > -1, got ({gamma}, {delta})")
    return _dual_hahn_table(float(gamma), float(delta), int(N))


def dual_hahn_normalized(n: int, x: int, gamma: float, delta: float, N: int) -> float:
    """Orthonormal dual Hahn function sqrt(w(x)/h(n)) R_n(lambda(x))."""
    if not 0 <= n <= N or not 0 <= x <= N:
        raise ValueError(f"need 0 <= n, x <= N, got n={n}, x={x}, N={N}")
    return float(dual_hahn_table(gamma, delta, N)[n, x])


def _hyp1f1_series(n: int, a: float, x: float) -> float:
    # Terminating sum 1F1(-n; a+1; x) by term recurrence.
    total = 1.0
    term = 1.0
    for s in range(n):
        term *= (-n + s) / ((a + 1 + s) * (s + 1)) * x
        total += term
    return total


def laguerre(n: int, a: float, x: float) -> float:
    """Generalized Laguerre polynomial L_n^(a)(x) via terminating 1F1.

    L_n^(a)(x) = ((a+1)_n / n!) 1F1(-n; a+1; x); the Pochhammer prefactor
    goes through log-gamma so large a (paraboson parameters) is safe.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got n={n}")
    if a <= -1:
        raise ValueError(f"need a > -1, got a={a}")
    prefactor = math.exp(gammaln(a + 1 + n) - gammaln(a + 1) - gammaln(n + 1))
    return prefactor * _hyp1f1_series(n, a, x)


def paraboson_even_wavefunction(n: int, c: float, x: float) -> float:
    """Even paraboson oscillator wave function at level 2n, parameter c.

    Returns (-1)^n sqrt(n!/Gamma(n+c+1)) |x|^(c+1/2) exp(-x^2/2) L_n^(c)(x^2),
    which vanishes at x = 0 for c > 0 and is normalized over the real line.
    The magnitude is assembled entirely in log space: at large c the bare
    |x|^(c+1/2) factor overflows long before the gamma prefactor can cancel
    it, so the factors must never be exponentiated separately.
    """
    if n < 0:
        raise ValueError(f"need n >= 0, got n={n}")
    if c <= 0:
        raise ValueError(f"need c > 0, got c={c}")
    if x == 0.0:
        return 0.0
    series = _hyp1f1_series(n, c, x * x)
    if series == 0.0:
        return 0.0
    log_mag = (0.5 * gammaln(n + c + 1) - 0.5 * gammaln(n + 1) - gammaln(c + 1)
               + (c + 0.5) * math.log(abs(x)) - x * x / 2.0
               + math.log(abs(series)))
    sign = (-1.0) ** n * (1.0 if series > 0 else -1.0)
    return sign * math.exp(log_mag)


def _hyp2f1_rational(k: int, l: int, j: int, z: Fraction) -> Fraction:
    # Exact value of 2F1(-k, -l; -j; z) for integers 0 <= k, l <= j.
    total = Fraction(0)
    for s in range(min(k, l) + 1):
        t = Fraction(comb(k, s) * comb(l, s), comb(j, s)) * z**s
        total += -t if s % 2 else t
    return total
