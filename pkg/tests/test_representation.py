import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from superosc import (
    GENERATORS,
    ODD_GENERATORS,
    generator_matrix,
    generator_parity,
    parity,
    superbracket,
    verify_star,
    verify_superalgebra,
)


def test_parity_examples():
    assert parity(0) == (1, 0)
    assert parity(3) == (0, 1)
    assert parity(-2) == (1, 0)


@given(st.integers(min_value=-10**9, max_value=10**9))
def test_parity_flags_sum_to_one(n):
    even, odd = parity(n)
    assert even + odd == 1
    assert even == (n % 2 == 0)


def test_generator_parity_grading():
    for name in GENERATORS:
        expected = "odd" if name in ODD_GENERATORS else "even"
        assert generator_parity(name) == expected
    with pytest.raises(ValueError):
        generator_parity("X")


def test_lowering_action_at_j1():
    # G- sends |1,1> (column 0) to -|1,0> (row 1) and kills the other columns:
    # |1,0> by the parity gate, |1,-1> by the range cut
    expected = np.zeros((3, 3))
    expected[1, 0] = -1.0
    assert np.array_equal(generator_matrix("G-", 1), expected)


def test_cartan_matrix_is_half_weight_diagonal():
    for j in (0, 1, 3, 5):
        h = generator_matrix("H", j)
        expected = np.diag([(j - r) / 2.0 for r in range(2 * j + 1)])
        assert np.array_equal(h, expected)


def test_raising_annihilates_highest_weight():
    for j in range(6):
        fp = generator_matrix("F+", j)
        assert not fp[:, 0].any()


def test_generator_matrix_rejects_bad_input():
    with pytest.raises(ValueError):
        generator_matrix("Q", 2)
    with pytest.raises(ValueError):
        generator_matrix("H", -1)


def test_superbracket_odd_square_doubles():
    a = generator_matrix("F+", 3)
    assert np.array_equal(superbracket(a, a, "odd", "odd"), 2 * (a @ a))


def test_superbracket_identity_commutes():
    b = generator_matrix("E+", 2)
    assert not superbracket(np.eye(5), b, "even", "even").any()


def test_superbracket_validates_arguments():
    with pytest.raises(ValueError):
        superbracket(np.eye(2), np.eye(3), "even", "even")
    with pytest.raises(ValueError):
        superbracket(np.eye(2), np.eye(2), "even", "middle")


def test_odd_odd_bracket_closes_on_cartan():
    # {F+,G-} = Z - H in every module
    for j in range(11):
        lhs = superbracket(generator_matrix("F+", j), generator_matrix("G-", j),
                           "odd", "odd")
        rhs = generator_matrix("Z", j) - generator_matrix("H", j)
        assert np.abs(lhs - rhs).max() <= 1e-12


def test_relations_hold_in_every_small_module():
    for j in range(11):
        report = verify_superalgebra(j)
        assert report.passed, report.failures()


def test_one_dimensional_module_is_exact():
    report = verify_superalgebra(0)
    assert report.max_residual == 0.0


def test_odd_generator_squares_vanish_exactly():
    # strictly alternating parity shifts: one factor is zero at every slot
    fp = generator_matrix("F+", 3)
    assert not (fp @ fp).any()


def test_even_ladder_bracket_gives_twice_cartan():
    lhs = superbracket(generator_matrix("E+", 5), generator_matrix("E-", 5),
                       "even", "even")
    assert np.abs(lhs - 2 * generator_matrix("H", 5)).max() <= 1e-12


def test_star_conditions():
    for j in range(11):
        report = verify_star(j)
        assert report.passed, report.failures()


def test_cartan_is_self_adjoint_exactly():
    h = generator_matrix("H", 4)
    assert np.array_equal(h.T, h)


def test_adjoint_pairs_at_j4():
    assert np.abs(generator_matrix("F+", 4).T + generator_matrix("G-", 4)).max() <= 1e-12
    assert np.abs(generator_matrix("E+", 4).T - generator_matrix("E-", 4)).max() <= 1e-12
