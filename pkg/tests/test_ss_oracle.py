import pytest

from loopcalc.decompose import PDSpec
from loopcalc.errors import OracleError, OutOfScopeError, ValidationError
from loopcalc.expr import SphereWedge
from loopcalc.series import TruncatedSeries
from loopcalc.ss_oracle import (
    GradedModule,
    IntersectionForm,
    SSInput,
    _path_loop_collapse,
    fiber_e_infinity,
    five_complex_from_form,
    pairing_witness,
    path_loop_series_check,
)


def series_coeffs(module):
    s = module.series()
    return [s[d] for d in range(s.cap + 1)]


# ---------------------------------------------------------------------------
# intersection forms and the pairing witness


def test_form_requires_square_symmetric_unimodular():
    with pytest.raises(ValidationError):
        IntersectionForm([[1, 0]])
    with pytest.raises(ValidationError):
        IntersectionForm([[1, 2], [3, 1]])
    with pytest.raises(ValidationError):
        IntersectionForm([[2, 0], [0, 1]])
    assert IntersectionForm([]).rank == 0
    assert IntersectionForm([[0, 1], [1, 0]]).rank == 2


def test_witness_hyperbolic():
    assert pairing_witness(IntersectionForm([[0, 1], [1, 0]])) == (1, 0)


def test_witness_rank_one():
    assert pairing_witness(IntersectionForm([[1]])) == (1,)


def test_witness_mixed_form():
    assert pairing_witness(IntersectionForm([[2, 1], [1, 1]])) == (0, 1)


def test_witness_rejects_empty_form():
    with pytest.raises(OutOfScopeError):
        pairing_witness(IntersectionForm([]))


def test_witness_pairs_to_one():
    form = IntersectionForm([[2, 1, 0], [1, 1, 0], [0, 0, -1]])
    w = pairing_witness(form)
    assert sum(a * b for a, b in zip(form.entries[-1], w)) == 1


# ---------------------------------------------------------------------------
# five-dimensional top-cell replay


def test_five_complex_rank_one_is_sphere():
    assert five_complex_from_form(IntersectionForm([[1]])) == "S^5"
    assert five_complex_from_form(IntersectionForm([[-1]])) == "S^5"


def test_five_complex_rank_two_has_no_middle():
    got = five_complex_from_form(IntersectionForm([[0, 1], [1, 0]]))
    assert got == PDSpec(2, 5, SphereWedge.empty())


def test_five_complex_rank_three():
    form = IntersectionForm([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    got = five_complex_from_form(form)
    assert got == PDSpec(2, 5, SphereWedge.from_dict({2: 1, 3: 1}))


def test_five_complex_rejects_rank_zero():
    with pytest.raises(OutOfScopeError):
        five_complex_from_form(IntersectionForm([]))


# ---------------------------------------------------------------------------
# fiber replay oracle


def test_fiber_no_middle_cells_is_trivial():
    ssin = SSInput((2, 3), 2, 5, (0, 1), (1, 0), 6)
    got = fiber_e_infinity(ssin)
    assert series_coeffs(got) == [1, 0, 0, 0, 0, 0, 0]


def test_fiber_separated_case():
    ssin = SSInput((2, 2, 3, 3), 2, 5, (0, 1, -2, 1), (1, 4, -1, 0), 6)
    got = fiber_e_infinity(ssin)
    assert series_coeffs(got) == [1, 0, 1, 2, 3, 4, 5]
    assert got.labels


def test_fiber_balanced_case():
    ssin = SSInput((3, 3, 3), 3, 6, (0, 2, 1), (-1, 5, 0), 6)
    got = fiber_e_infinity(ssin)
    assert series_coeffs(got) == [1, 0, 0, 1, 0, 2, 0]


def test_fiber_result_independent_of_middle_column_values():
    a = SSInput((2, 2, 3, 3), 2, 5, (0, 1, -2, 1), (1, 4, -1, 0), 8)
    b = SSInput((2, 2, 3, 3), 2, 5, (0, -3, 0, 1), (1, 0, 2, 0), 8)
    assert fiber_e_infinity(a).series() == fiber_e_infinity(b).series()


def test_ss_input_validation():
    with pytest.raises(ValidationError):
        SSInput((3, 2), 2, 5, (0, 1), (1, 0), 6)  # degrees out of order
    with pytest.raises(ValidationError):
        SSInput((2, 3), 2, 5, (1, 1), (1, 0), 6)  # first column starts nonzero
    with pytest.raises(ValidationError):
        SSInput((2, 3), 2, 5, (0, 1), (-1, 0), 6)  # wrong duality sign
    with pytest.raises(ValidationError):
        SSInput((3, 2), 3, 5, (0, 1), (1, 0), 6)  # m above n - m
    with pytest.raises(ValidationError):
        SSInput((2,), 2, 4, (0,), (1,), 6)  # fewer than two columns


# ---------------------------------------------------------------------------
# path-loop replay oracle


def test_path_loop_examples():
    s = path_loop_series_check(2, 5, 5)
    assert [s[d] for d in range(6)] == [1, 1, 2, 2, 3, 3]
    s = path_loop_series_check(3, 6, 6)
    assert [s[d] for d in range(7)] == [1, 0, 2, 0, 3, 0, 4]
    s = path_loop_series_check(2, 4, 4)
    assert [s[d] for d in range(5)] == [1, 2, 3, 4, 5]


def test_path_loop_rejects_bad_dimensions():
    with pytest.raises(ValidationError):
        path_loop_series_check(1, 4, 5)
    with pytest.raises(ValidationError):
        path_loop_series_check(4, 6, 5)


def test_path_loop_replay_is_falsifiable():
    # the correct fiber degrees for (m, n) = (2, 5) are (1, 3); anything
    # else must fail the transgression bookkeeping
    with pytest.raises(OracleError):
        _path_loop_collapse(2, 5, 2, 2, 10)
    with pytest.raises(OracleError):
        _path_loop_collapse(2, 5, 1, 3, 10)
    with pytest.raises(OracleError):
        _path_loop_collapse(3, 6, 1, 3, 10)


# ---------------------------------------------------------------------------
# graded modules


def test_graded_module_series_and_json():
    g = GradedModule(6, {0: 1, 3: 2, 5: 1})
    assert g.series() == TruncatedSeries.from_coeffs(6, (1, 0, 0, 2, 0, 1))
    assert g.to_json() == {"cap": 6, "ranks": {"0": 1, "3": 2, "5": 1}}
    assert g.rank(3) == 2 and g.rank(4) == 0


def test_graded_module_validation():
    with pytest.raises(ValidationError):
        GradedModule(4, {7: 1})
    with pytest.raises(ValidationError):
        GradedModule(4, ((2, 0),))
    # zero entries given as a dict are dropped, not rejected
    assert GradedModule(4, {2: 0}).ranks == ()
