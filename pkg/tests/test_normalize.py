import pytest

from loopcalc.errors import DomainError, UnsupportedExpressionError, UsageError
from loopcalc.expr import (
    SphereWedge,
    loop,
    product,
    sphere,
    suspension,
    wedge,
)
from loopcalc.hilton import FactorList
from loopcalc.normalize import (
    factor_series,
    half_smash_split,
    james_split,
    normal_form,
    smash_desuspendables,
)
from loopcalc.series import TruncatedSeries


def S(cap, *coeffs):
    return TruncatedSeries.from_coeffs(cap, coeffs)


def test_james_split_examples():
    assert james_split(2, 4).as_dict() == {2: 1, 3: 1, 4: 1, 5: 1}
    assert james_split(3, 8).as_dict() == {3: 1, 5: 1, 7: 1, 9: 1}
    assert james_split(2, 0).is_point()


def test_james_split_rejects_low_sphere():
    with pytest.raises(DomainError):
        james_split(1, 5)


def test_smash_of_sphere_wedges():
    a = S(5, 0, 0, 1, 1)
    b = S(5, 0, 0, 1)
    assert smash_desuspendables(a, b).as_dict() == {4: 1, 5: 1}


def test_smash_against_loop_product_series():
    a = S(7, 0, 0, 1, 1)
    # reduced series of Omega(S^2 x S^3) up to degree 7
    full = factor_series(normal_form(loop(product(sphere(2), sphere(3))), 7))
    got = smash_desuspendables(a, full.reduced())
    assert got.as_dict() == {3: 1, 4: 3, 5: 4, 6: 5, 7: 6}


def test_smash_with_point():
    assert smash_desuspendables(S(4), S(4, 0, 1)).is_point()


def test_smash_rejects_constant_terms():
    with pytest.raises(DomainError):
        smash_desuspendables(S(4, 1), S(4, 0, 1))


def test_half_smash_empty_wedge():
    q = normal_form(loop(product(sphere(2), sphere(3))), 7)
    assert half_smash_split(q, SphereWedge.empty(), 7).is_point()


def test_half_smash_splitting_wedge():
    q = normal_form(loop(product(sphere(2), sphere(3))), 7)
    got = half_smash_split(q, SphereWedge.from_dict({2: 1, 3: 1}), 7)
    assert got.as_dict() == {2: 1, 3: 2, 4: 3, 5: 4, 6: 5, 7: 6}


def test_half_smash_below_smash_range():
    q = normal_form(loop(product(sphere(3), sphere(3))), 6)
    got = half_smash_split(q, SphereWedge.from_dict({5: 2}), 6)
    assert got.as_dict() == {5: 2}


def test_half_smash_needs_wide_enough_factors():
    q = normal_form(loop(product(sphere(2), sphere(3))), 5)
    with pytest.raises(UsageError):
        half_smash_split(q, SphereWedge.from_dict({2: 1}), 7)


def test_normal_form_loop_of_product():
    got = normal_form(loop(product(sphere(2), sphere(3))), 10)
    assert got.loop_sphere_dict() == {2: 1, 3: 1}
    assert got.circles == 0 and not got.truncated


def test_normal_form_circle_factor():
    got = normal_form(product(sphere(1), loop(sphere(5))), 10)
    assert got.circles == 1
    assert got.loop_sphere_dict() == {5: 1}


def test_normal_form_even_loop_splits():
    got = normal_form(loop(sphere(4)), 10)
    assert got.sphere_dict() == {3: 1}
    assert got.loop_sphere_dict() == {7: 1}
    got8 = normal_form(loop(sphere(8)), 20)
    assert got8.sphere_dict() == {7: 1}
    assert got8.loop_sphere_dict() == {15: 1}


def test_normal_form_odd_spheres_stay():
    got = normal_form(product(sphere(3), loop(sphere(3))), 10)
    assert got.sphere_dict() == {3: 1}
    assert got.loop_sphere_dict() == {3: 1}


def test_normal_form_wedge_uses_hilton_milnor():
    got = normal_form(loop(wedge(sphere(2), sphere(3))), 4)
    # Hilton-Milnor factors are loops on S^2, S^3, S^4, S^5; the even
    # S^4 factor splits as S^3 x (loops on S^7) and the S^7 part falls
    # outside the cap
    assert got.loop_sphere_dict() == {2: 1, 3: 1, 5: 1}
    assert got.sphere_dict() == {3: 1}
    assert got.truncated


def test_normal_form_canonical_under_permutation():
    a = product(sphere(1), loop(sphere(5)), loop(product(sphere(2), sphere(3))))
    b = product(loop(product(sphere(3), sphere(2))), sphere(1), loop(sphere(5)))
    assert normal_form(a, 12) == normal_form(b, 12)


def test_normal_form_rejects_plain_even_sphere():
    with pytest.raises(UnsupportedExpressionError):
        normal_form(sphere(2), 10)


def test_normal_form_rejects_suspension():
    with pytest.raises(UnsupportedExpressionError):
        normal_form(suspension(sphere(2)), 10)


def test_factor_series_circle_times_loop():
    f = FactorList.build(8, circles=1, loop_spheres={5: 1})
    assert factor_series(f) == S(8, 1, 1, 0, 0, 1, 1, 0, 0, 1)


def test_factor_series_squared_loop():
    f = FactorList.build(4, loop_spheres={2: 2})
    assert factor_series(f) == S(4, 1, 2, 3, 4, 5)


def test_factor_series_empty():
    assert factor_series(FactorList.empty(6)) == TruncatedSeries.one(6)


def test_factor_series_plain_sphere():
    # (1 + t^3)(1 + t^6) up to degree 9
    f = FactorList.build(9, spheres={3: 1}, loop_spheres={7: 1})
    assert factor_series(f) == S(9, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1)
