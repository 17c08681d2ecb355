from fractions import Fraction
from itertools import permutations

import pytest

from hextiling.exact import SingularParameterError
from hextiling.formulas import (
    arcsine_limit,
    axis_sum,
    central_axis_closed_form,
    central_axis_sum,
    central_sum_recurrence_residue,
    fixed_count_even,
    fixed_count_odd,
    hyp_chain_check,
    lower_weighted_closed_form,
    macmahon_count,
    proportion,
    proportion_balanced_form,
    proportion_nm,
    proportion_series_form,
    reduced_poly_value,
    upper_count_closed_form,
)
from hextiling.hexagon import HexagonSpec, normalize
from hextiling.matrices import (
    determinant,
    extract_reduced_polynomial,
    lower_weighted_matrix,
    upper_count_matrix,
)

F = Fraction


def test_macmahon_values():
    assert macmahon_count(1, 1, 1) == 2
    assert macmahon_count(2, 2, 2) == 20
    assert macmahon_count(3, 3, 4) == 4116
    assert macmahon_count(3, 3, 3) == 980
    assert macmahon_count(0, 7, 9) == 1


def test_macmahon_symmetric_in_all_axes():
    for a in range(0, 6):
        for b in range(a, 6):
            for c in range(b, 6):
                vals = {macmahon_count(*perm) for perm in permutations((a, b, c))}
                assert len(vals) == 1


def test_axis_sum_values():
    assert axis_sum(1, 1, 1) == F(1, 2)
    assert axis_sum(2, 1, 1) == F(2, 3)
    assert axis_sum(2, 2, 1) == F(1, 4)


def test_axis_sum_validation():
    with pytest.raises(ValueError):
        axis_sum(2, 0, 1)
    with pytest.raises(ValueError):
        axis_sum(2, 1, 3)


def test_fixed_count_even_values():
    assert fixed_count_even(1, 1, 1) == 1
    assert fixed_count_even(2, 1, 1) == 8
    assert fixed_count_even(3, 2, 2) == 1372
    assert macmahon_count(3, 3, 4) == 3 * 1372


def test_fixed_count_odd_values():
    assert fixed_count_odd(2, 2, 1) == 252
    assert fixed_count_odd(2, 2, 2) == 252
    assert macmahon_count(3, 3, 3) == 980


def test_proportion_values():
    assert proportion_nm(2, 1, 1) == F(2, 5)
    assert proportion_nm(2, 2, 1) == F(9, 35)
    for n in range(1, 5):
        assert proportion_nm(2 * n - 1, n, n) == F(1, 3)


def test_proportion_same_for_both_parities():
    even = proportion(normalize(HexagonSpec(3, 4)), 2)
    odd = proportion(normalize(HexagonSpec(4, 3)), 2)
    assert even == odd == F(1, 3)


def test_proportion_lands_in_unit_interval():
    for n in range(1, 6):
        for m in range(1, 5):
            for l in range(1, n + 1):
                p = proportion_nm(n, m, l)
                assert 0 <= p <= 1


def test_fixed_counts_symmetric_under_reflection():
    for n in range(1, 6):
        for m in range(1, 4):
            for l in range(1, n + 1):
                assert fixed_count_even(n, m, l) == fixed_count_even(n, m, n + 1 - l)


def test_upper_count_closed_form():
    assert upper_count_closed_form(1, 2) == 3
    assert upper_count_closed_form(2, 1) == 5
    assert upper_count_closed_form(3, 0) == 1
    for n in range(1, 9):
        for m in range(0, 9):
            det = determinant(upper_count_matrix(n, m))
            assert det == upper_count_closed_form(n, m), (n, m)


def test_lower_weighted_closed_form():
    for m in (1, 2, 5):
        assert lower_weighted_closed_form(1, m, 1) == 1
    assert lower_weighted_closed_form(2, 1, 1) == determinant(lower_weighted_matrix(2, 1, 1))
    assert lower_weighted_closed_form(4, 3, 2) == determinant(lower_weighted_matrix(4, 3, 2))


def test_lower_weighted_closed_form_grid():
    for n in range(1, 7):
        for m in range(1, 5):
            for l in range(1, n + 1):
                det = determinant(lower_weighted_matrix(n, m, l))
                assert det == lower_weighted_closed_form(n, m, l), (n, m, l)


def test_reduced_poly_value_base():
    assert reduced_poly_value(0, 1, 1) == 1


def test_reduced_poly_value_matches_interpolation():
    for n in range(1, 7):
        for l in range(1, n + 1):
            poly = extract_reduced_polynomial(n, l)
            for m_val in range(-(n // 2), 1):
                assert poly(m_val) == reduced_poly_value(m_val, n, l), (n, l, m_val)


def test_reduced_poly_value_validation():
    with pytest.raises(ValueError):
        reduced_poly_value(-3, 4, 1)
    with pytest.raises(ValueError):
        reduced_poly_value(1, 4, 1)
    with pytest.raises(ValueError):
        reduced_poly_value(0, 4, 5)


def test_central_sum_values():
    assert central_axis_sum(1) == F(1, 2)
    assert central_axis_sum(2) == F(7, 20)
    # closed form at n = 2: 2 * 2! * 1! * 9!! / (6! * 5!!) = 7/20
    assert central_axis_closed_form(2) == F(2 * 2 * 945, 720 * 15)


def test_central_sum_identity_and_recurrence():
    for n in range(1, 11):
        assert central_axis_sum(n) == central_axis_closed_form(n)
        assert central_sum_recurrence_residue(n) == 0


def test_hyp_chain_values():
    assert hyp_chain_check(3, 2, 2)
    assert proportion_nm(3, 2, 2) == F(1, 3)
    assert hyp_chain_check(2, 1, 1)
    assert proportion_nm(2, 1, 1) == F(2, 5)
    for l in range(1, 6):
        assert hyp_chain_check(5, 3, l)


def test_hyp_chain_singular_cells():
    # even n with l >= n/2 + 2 drives a lower parameter of the series form
    # through zero; nothing upstream of it is singular
    with pytest.raises(SingularParameterError):
        proportion_series_form(4, 2, 4)
    assert proportion_balanced_form(4, 2, 4) == proportion_nm(4, 2, 4)


def test_arcsine_limit_values():
    assert abs(arcsine_limit(0.5, 0.5) - 1 / 3) < 1e-14
    assert arcsine_limit(0.0, 0.5) == 1.0
    assert arcsine_limit(3.0, 1e-9) < 1e-4
    with pytest.raises(ValueError):
        arcsine_limit(0.5, 0.0)
    with pytest.raises(ValueError):
        arcsine_limit(-0.1, 0.5)


def test_integrality_guard():
    # every grid point must produce an integer count; a formula typo would
    # raise ArithmeticError here
    for n in range(1, 5):
        for m in range(1, 4):
            for l in range(1, n + 1):
                fixed_count_even(n, m, l)
                fixed_count_odd(n, m, l)
