import math

import numpy as np
import pytest

from superosc import (
    ModelParams,
    analytic_U,
    analytic_V,
    apply_fourier,
    fourier_analytic,
    momentum_wavefunction,
    node_count,
    paraboson_limit_table,
    position_spectrum,
    position_wavefunction,
    position_wavefunction_closed,
)


def test_wave_table_fields():
    params = ModelParams(j=3, p=0.4)
    table = position_wavefunction(params, 2)
    assert table.kind == "position"
    assert (table.j, table.p, table.n) == (3, 0.4, 2)
    assert table.energy == 2.5
    assert np.array_equal(table.grid, position_spectrum(3))
    assert len(table.amplitudes) == 7


def test_level_range_is_enforced():
    params = ModelParams(j=2, p=0.5)
    with pytest.raises(IndexError):
        position_wavefunction(params, 5)
    with pytest.raises(IndexError):
        position_wavefunction(params, -1)


def test_rows_are_normalized():
    params = ModelParams(j=9, p=0.35)
    for n in range(19):
        amps = position_wavefunction(params, n).amplitudes
        assert np.sum(amps * amps) == pytest.approx(1.0, abs=1e-12)


def test_position_parity_is_exact():
    params = ModelParams(j=10, p=0.9)
    for n in range(21):
        amps = position_wavefunction(params, n).amplitudes
        mirrored = amps[::-1]
        if n % 2 == 0:
            assert np.array_equal(amps, mirrored)
        else:
            assert np.array_equal(amps, -mirrored)


def test_ground_state_center_value():
    for j, p in ((4, 0.3), (7, 0.62)):
        amps = position_wavefunction(ModelParams(j=j, p=p), 0).amplitudes
        assert amps[j] == pytest.approx((1 - p) ** (j / 2), rel=1e-12)


def test_odd_levels_vanish_at_center():
    params = ModelParams(j=8, p=0.27)
    for n in range(0, 8):
        amps = position_wavefunction(params, 2 * n + 1).amplitudes
        assert amps[8] == 0.0


def test_tables_copy_out_of_cache():
    params = ModelParams(j=3, p=0.5)
    table = position_wavefunction(params, 0)
    table.amplitudes[0] = 99.0
    fresh = position_wavefunction(params, 0)
    assert fresh.amplitudes[0] != 99.0


def test_momentum_amplitudes_share_magnitudes():
    params = ModelParams(j=6, p=0.4)
    for n in range(13):
        phi = position_wavefunction(params, n).amplitudes
        psi = momentum_wavefunction(params, n).amplitudes
        assert np.abs(np.abs(psi) - np.abs(phi)).max() < 1e-14


def test_momentum_row_norms():
    params = ModelParams(j=8, p=0.4)
    for n in range(17):
        psi = momentum_wavefunction(params, n).amplitudes
        assert np.sum(np.abs(psi) ** 2) == pytest.approx(1.0, abs=1e-12)


def test_momentum_phases_follow_row_rule():
    # row r of the momentum table is (-i * i^r) times the position row
    params = ModelParams(j=2, p=0.5)
    u = analytic_U(params)
    phases = -1j * 1j ** np.arange(5)
    for n in range(5):
        psi = momentum_wavefunction(params, n).amplitudes
        assert np.abs(psi - phases[n] * u[n]).max() == 0.0


def test_closed_route_equals_matrix_rows():
    for j, p in ((5, 0.2), (10, 0.5), (12, 0.8)):
        params = ModelParams(j=j, p=p)
        u = analytic_U(params)
        for n in range(2 * j + 1):
            closed = position_wavefunction_closed(params, n)
            assert np.abs(closed - u[n]).max() <= 1e-10


def test_node_counts_match_level():
    for j, p in ((12, 0.3), (30, 0.5)):
        params = ModelParams(j=j, p=p)
        for n in range(2 * j + 1):
            assert node_count(params, n) == n


def test_apply_fourier_reproduces_momentum_rows():
    for j, p in ((1, 0.5), (5, 0.2)):
        params = ModelParams(j=j, p=p)
        u = analytic_U(params)
        v = analytic_V(params)
        mapped = apply_fourier(u, fourier_analytic(params))
        assert np.abs(mapped - v).max() <= 1e-10


def test_apply_fourier_identity_passthrough():
    params = ModelParams(j=3, p=0.4)
    u = analytic_U(params)
    assert np.array_equal(apply_fourier(u, np.eye(7)), u)


def test_apply_fourier_shape_check():
    with pytest.raises(ValueError):
        apply_fourier(np.ones((2, 4)), np.eye(3))


def test_limit_table_shape_and_lattice():
    j, p, alpha, n = 25, 0.4, 7.0, 1
    rows = paraboson_limit_table(j, p, alpha, n, 10)
    assert rows.shape == (10, 4)
    for idx, k in enumerate(range(1, 11)):
        lam = k * (k + 2 * alpha + 1)
        assert rows[idx, 0] == pytest.approx(math.sqrt(lam / j), rel=1e-15)


def test_limit_table_large_alpha_gap_column():
    rows = paraboson_limit_table(20, 0.5, 1e6, 2, 15)
    assert rows[:, 3].max() <= 1e-4


def test_limit_table_ground_row_is_single_signed():
    rows = paraboson_limit_table(60, 0.5, 10.0, 0, 15)
    assert (rows[:, 1] > 0).all()
    assert (rows[:, 2] >= 0).all()


def test_limit_table_validation():
    with pytest.raises(ValueError):
        paraboson_limit_table(5, 0.5, 10.0, 0, 6)
    with pytest.raises(ValueError):
        paraboson_limit_table(5, 0.5, -1.0, 0, 3)
    with pytest.raises(ValueError):
        paraboson_limit_table(5, 0.5, 10.0, 6, 3)
    with pytest.raises(ValueError):
        paraboson_limit_table(5, 1.2, 10.0, 0, 3)


def test_limit_table_converges_in_j():
    worst = []
    for j in (200, 400):
        rows = paraboson_limit_table(j, 0.5, 10.0, 1, 15)
        worst.append(np.abs(rows[:, 1] - rows[:, 2]).max())
    assert worst[1] < worst[0]
