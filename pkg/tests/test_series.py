import pytest

from loopcalc.errors import DomainError, UsageError
from loopcalc.series import (
    TruncatedSeries,
    geometric_factor,
    loop_sphere_series,
    polynomial_two_var_series,
    tensor_algebra_series,
)


def S(cap, *coeffs):
    return TruncatedSeries.from_coeffs(cap, coeffs)


def test_mul_difference_of_squares():
    a = S(3, 1, 1)
    b = S(3, 1, -1)
    assert a.mul(b) == S(3, 1, 0, -1)


def test_mul_truncates_at_cap():
    a = S(3, 1, 1, 1, 1)
    b = S(3, 1, 0, 1)
    assert a.mul(b) == S(3, 1, 1, 2, 2)


def test_mul_cap_mismatch_rejected():
    with pytest.raises(UsageError):
        S(2, 1).mul(S(3, 1))
    with pytest.raises(UsageError):
        S(2, 1).add(S(3, 1))


def test_invert_geometric():
    assert S(5, 1, -1).invert() == S(5, 1, 1, 1, 1, 1, 1)


def test_invert_fibonacci():
    got = S(6, 1, -1, -1).invert()
    assert got == S(6, 1, 1, 2, 3, 5, 8, 13)


def test_invert_nonunit_constant_rejected():
    with pytest.raises(DomainError):
        S(4, 2, 1).invert()


def test_invert_two_sided():
    s = S(8, -1, 3, -2, 5, 0, 1, 7, -4, 2)
    one = TruncatedSeries.one(8)
    assert s.mul(s.invert()) == one
    assert s.invert().mul(s) == one


def test_tensor_algebra_two_generators():
    g = S(6, 0, 1, 1)
    assert tensor_algebra_series(g) == S(6, 1, 1, 2, 3, 5, 8, 13)


def test_tensor_algebra_single_generator():
    assert tensor_algebra_series(S(4, 0, 1)) == S(4, 1, 1, 1, 1, 1)


def test_tensor_algebra_no_generators():
    assert tensor_algebra_series(TruncatedSeries.zero(4)) == TruncatedSeries.one(4)


def test_tensor_algebra_rejects_constant_term():
    with pytest.raises(DomainError):
        tensor_algebra_series(S(3, 1, 1))


def test_loop_sphere_series_low():
    assert loop_sphere_series(2, 4) == S(4, 1, 1, 1, 1, 1)
    assert loop_sphere_series(5, 8) == S(8, 1, 0, 0, 0, 1, 0, 0, 0, 1)


def test_loop_sphere_series_rejects_m_one():
    with pytest.raises(DomainError):
        loop_sphere_series(1, 4)


def test_polynomial_two_var_examples():
    assert polynomial_two_var_series(1, 2, 5) == S(5, 1, 1, 2, 2, 3, 3)
    assert polynomial_two_var_series(2, 4, 6) == S(6, 1, 0, 1, 0, 2, 0, 2)
    assert polynomial_two_var_series(1, 1, 3) == S(3, 1, 2, 3, 4)


def test_geometric_factor_counts_multisets():
    # (1 - t^2)^(-3): coefficient at 2j is C(j+2, 2)
    got = geometric_factor(2, 3, 8)
    assert got == S(8, 1, 0, 3, 0, 6, 0, 10, 0, 15)


def test_shift_round_trip():
    s = S(5, 0, 0, 1, 2, 3, 4)
    assert s.shift_down().shift_up(1) == s
    assert S(5, 1, 1).shift_up(2) == S(5, 0, 0, 1, 1)


def test_coefficients_stay_exact_past_word_size():
    # (1 - t)^(-80) at degree 30 is C(109, 30), far past 2^63
    s = geometric_factor(1, 80, 30)
    from math import comb

    assert s[30] == comb(109, 30)
    assert s[30] > 1 << 63
