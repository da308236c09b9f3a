import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from superosc.specfun import (
    dual_hahn,
    dual_hahn_normalized,
    dual_hahn_table,
    hyp2f1_terminating,
    krawtchouk,
    krawtchouk_norm,
    krawtchouk_normalized,
    krawtchouk_table,
    krawtchouk_weight,
    laguerre,
    paraboson_even_wavefunction,
)


def test_hyp2f1_degree_zero_is_one():
    assert hyp2f1_terminating(0, -5.0, -7.0, 2.0) == 1.0


def test_hyp2f1_degree_one_closed_form():
    for x, p, N in ((1, 0.5, 1), (2, 0.3, 4), (0, 0.7, 9)):
        got = hyp2f1_terminating(1, -float(x), -float(N), 1.0 / p)
        assert got == pytest.approx(1.0 - x / (p * N), abs=1e-15)


def test_hyp2f1_zero_numerator_truncates():
    # b=0 kills every s >= 1 term before the denominator can vanish
    assert hyp2f1_terminating(3, 0.0, -3.0, 1.0) == 1.0


def test_hyp2f1_rejects_negative_degree():
    with pytest.raises(ValueError):
        hyp2f1_terminating(-1, 1.0, 1.0, 1.0)


def test_hyp2f1_reports_vanishing_denominator():
    with pytest.raises(ValueError, match="denominator vanished"):
        hyp2f1_terminating(3, -5.0, -2.0, 1.0)


def test_krawtchouk_degree_zero():
    for x in range(6):
        assert krawtchouk(0, x, 0.3, 5) == 1.0


def test_krawtchouk_at_origin():
    for n in range(6):
        assert krawtchouk(n, 0, 0.7, 5) == 1.0


def test_krawtchouk_hand_value():
    # 1 - x/(pN) at x=1, p=1/2, N=1
    assert krawtchouk(1, 1, 0.5, 1) == -1.0


def test_krawtchouk_domain_checks():
    with pytest.raises(ValueError):
        krawtchouk(4, 1, 0.5, 3)
    with pytest.raises(ValueError):
        krawtchouk(1, 1, 0.0, 3)
    with pytest.raises(ValueError):
        krawtchouk(1, 1, 1.0, 3)


@given(
    N=st.integers(min_value=0, max_value=25),
    data=st.data(),
    p=st.floats(min_value=0.05, max_value=0.95),
)
@settings(deadline=None)
def test_krawtchouk_degree_grid_symmetry(N, data, p):
    n = data.draw(st.integers(min_value=0, max_value=N))
    x = data.draw(st.integers(min_value=0, max_value=N))
    a = krawtchouk(n, x, p, N)
    b = krawtchouk(x, n, p, N)
    assert a == pytest.approx(b, rel=1e-9, abs=1e-9)


def test_weight_at_zero():
    for p, N in ((0.5, 2), (0.3, 7)):
        assert krawtchouk_weight(0, p, N) == pytest.approx((1 - p) ** N, rel=1e-14)


def test_norm_degree_zero():
    assert krawtchouk_norm(0, 0.42, 9) == pytest.approx(1.0, rel=1e-14)


def test_weighted_sum_matches_norm():
    # brute-force 3-term sum at p=1/2, N=2
    total = sum(
        krawtchouk_weight(x, 0.5, 2) * krawtchouk(1, x, 0.5, 2) ** 2 for x in range(3)
    )
    assert total == pytest.approx(0.5, rel=1e-14)
    assert krawtchouk_norm(1, 0.5, 2) == pytest.approx(0.5, rel=1e-14)


def test_normalized_corner_values():
    assert krawtchouk_normalized(0, 0, 0.3, 4) == pytest.approx(0.7 ** 2, rel=1e-12)
    assert krawtchouk_normalized(1, 0, 0.5, 1) == pytest.approx(1 / math.sqrt(2), rel=1e-12)


def test_normalized_matches_weight_norm_product():
    p, N = 0.35, 9
    for n in range(N + 1):
        for x in range(N + 1):
            direct = math.sqrt(
                krawtchouk_weight(x, p, N) / krawtchouk_norm(n, p, N)
            ) * krawtchouk(n, x, p, N)
            assert krawtchouk_normalized(n, x, p, N) == pytest.approx(
                direct, rel=1e-9, abs=1e-12
            )


@given(
    N=st.integers(min_value=0, max_value=40),
    p=st.floats(min_value=0.05, max_value=0.95),
)
@settings(deadline=None, max_examples=40)
def test_krawtchouk_table_orthogonal(N, p):
    table = krawtchouk_table(p, N)
    gram = table @ table.T
    assert np.abs(gram - np.eye(N + 1)).max() < 1e-10


def test_krawtchouk_table_symmetric_and_readonly():
    table = krawtchouk_table(0.25, 12)
    assert np.abs(table - table.T).max() < 1e-12
    assert not table.flags.writeable
    with pytest.raises(ValueError):
        table[0, 0] = 0.0


def test_krawtchouk_table_row_zero_positive():
    # row 0 is sqrt(w(x)), strictly positive
    table = krawtchouk_table(0.6, 15)
    assert (table[0] > 0).all()


def test_dual_hahn_degree_zero_and_origin():
    for x in range(5):
        assert dual_hahn(0, x, 1.5, 2.5, 6) == 1.0
    for n in range(4):
        assert dual_hahn(n, 0, 1.5, 2.5, 6) == 1.0


def test_dual_hahn_table_orthogonal():
    for gamma, delta in ((0.5, 0.5), (3.0, 7.0)):
        table = dual_hahn_table(gamma, delta, 25)
        assert np.abs(table @ table.T - np.eye(26)).max() < 1e-10


def test_dual_hahn_normalized_matches_series_at_small_degree():
    # pointwise float series is reliable at low degree; the table must agree
    gamma, delta, N = 2.0, 3.0, 10
    from superosc.specfun import _dual_hahn_log_norm, _dual_hahn_log_weight

    for n in range(3):
        for x in range(N + 1):
            direct = dual_hahn(n, x, gamma, delta, N) * math.exp(
                0.5 * (_dual_hahn_log_weight(x, gamma, delta, N)
                       - _dual_hahn_log_norm(n, gamma, delta, N))
            )
            assert dual_hahn_normalized(n, x, gamma, delta, N) == pytest.approx(
                direct, rel=1e-8, abs=1e-10
            )


def test_large_alpha_collapses_to_krawtchouk():
    alpha, j, p = 1e6, 20, 0.5
    gamma, delta = 2 * p * alpha, 2 * (1 - p) * alpha
    gap = max(
        abs(dual_hahn_normalized(n, k, gamma, delta, j) - krawtchouk_normalized(n, k, p, j))
        for n in range(j + 1)
        for k in range(j + 1)
    )
    assert gap <= 1e-4


def test_laguerre_low_degrees():
    assert laguerre(0, 1.7, 3.2) == 1.0
    for a, x in ((0.5, 0.0), (2.0, 1.5), (7.3, 4.0)):
        assert laguerre(1, a, x) == pytest.approx(a + 1 - x, rel=1e-13)


def test_laguerre_kummer_identity():
    # 1F1(-n; 2pa+1; x^2) = n!/(2pa+1)_n L_n^(2pa)(x^2)
    p, alpha = 0.4, 3.0
    a = 2 * p * alpha
    for n in range(6):
        for x in (0.3, 1.1, 2.7):
            series = 1.0
            term = 1.0
            for s in range(n):
                term *= (-n + s) / ((a + 1 + s) * (s + 1)) * x * x
                series += term
            poch = math.exp(math.lgamma(a + 1 + n) - math.lgamma(a + 1))
            assert series == pytest.approx(
                math.factorial(n) / poch * laguerre(n, a, x * x), rel=1e-12
            )


def test_laguerre_domain_checks():
    with pytest.raises(ValueError):
        laguerre(-1, 1.0, 0.0)
    with pytest.raises(ValueError):
        laguerre(2, -1.0, 0.0)


def test_paraboson_vanishes_at_origin():
    for n in range(3):
        assert paraboson_even_wavefunction(n, 0.8, 0.0) == 0.0


def test_paraboson_ground_state_closed_form():
    c = 1.4
    for x in (0.2, 1.0, 2.5, -1.3):
        expected = (
            math.sqrt(1.0 / math.gamma(c + 1))
            * abs(x) ** (c + 0.5)
            * math.exp(-x * x / 2)
        )
        assert paraboson_even_wavefunction(0, c, x) == pytest.approx(expected, rel=1e-12)


def test_paraboson_normalized_on_real_line():
    xs = np.linspace(-10.0, 10.0, 20001)
    for n, c in ((0, 0.6), (1, 1.4), (2, 3.0), (3, 0.9)):
        vals = np.array([paraboson_even_wavefunction(n, c, x) for x in xs])
        integral = np.trapezoid(vals * vals, xs)
        assert integral == pytest.approx(1.0, abs=1e-6)


def test_paraboson_large_parameter_stays_finite():
    # |x|^(c+1/2) alone overflows here; the log-space route must not
    v = paraboson_even_wavefunction(2, 1e6, 316.0)
    assert math.isfinite(v)


def test_paraboson_domain_checks():
    with pytest.raises(ValueError):
        paraboson_even_wavefunction(-1, 1.0, 0.5)
    with pytest.raises(ValueError):
        paraboson_even_wavefunction(0, 0.0, 0.5)
