import pytest

from loopcalc.errors import UsageError
from loopcalc.expr import SphereWedge
from loopcalc.hilton import (
    FactorList,
    WeightedAlphabet,
    hilton_milnor,
    lyndon_multiplicities,
    lyndon_multiplicities_by_enumeration,
    lyndon_words,
    witt_counts,
)


def test_two_letter_counts():
    got = lyndon_multiplicities((1, 1), 5)
    assert got == {1: 2, 2: 1, 3: 2, 4: 3, 5: 6}


def test_single_letter_counts():
    assert lyndon_multiplicities((4,), 12) == {4: 1}
    assert witt_counts((1,), 5) == {1: 1}


def test_mixed_weight_counts():
    assert lyndon_multiplicities((1, 2), 4) == {1: 1, 2: 1, 3: 1, 4: 1}


def test_weights_one_and_three():
    # words up to weight 4: a, b, ab
    assert lyndon_multiplicities((1, 3), 4) == {1: 1, 3: 1, 4: 1}


def test_three_letter_necklaces():
    assert witt_counts((1, 1, 1), 3) == {1: 3, 2: 3, 3: 8}


def test_counts_for_doubled_wedge():
    # weights of S^3 v S^3 v S^4 v S^4; checked by peeling the Witt
    # identity against 1/(1 - 2t^2 - 2t^3) by hand through degree 6
    got = lyndon_multiplicities((2, 2, 3, 3), 6)
    assert got == {2: 2, 3: 2, 4: 1, 5: 4, 6: 3}


def test_witt_agrees_with_enumeration_small():
    for ws in ((1,), (1, 1), (1, 2), (2, 3), (1, 1, 2)):
        cap = 8
        assert witt_counts(ws, cap) == lyndon_multiplicities_by_enumeration(ws, cap)
        assert witt_counts(ws, cap) == lyndon_multiplicities(ws, cap)


def test_word_enumeration_two_letters():
    words = lyndon_words(WeightedAlphabet.from_weights((1, 3)), 4)
    assert sorted(words) == [(0,), (0, 1), (1,)]


def test_hilton_milnor_two_spheres():
    got = hilton_milnor(SphereWedge.from_dict({2: 2}), 5)
    assert got.loop_sphere_dict() == {2: 2, 3: 1, 4: 2, 5: 3, 6: 6}
    assert got.truncated
    assert got.circles == 0 and not got.sphere_dict()


def test_hilton_milnor_single_sphere():
    got = hilton_milnor(SphereWedge.from_dict({6: 1}), 10)
    assert got.loop_sphere_dict() == {6: 1}
    assert not got.truncated


def test_hilton_milnor_mixed_wedge():
    got = hilton_milnor(SphereWedge.from_dict({2: 1, 3: 1}), 4)
    assert got.loop_sphere_dict() == {2: 1, 3: 1, 4: 1, 5: 1}
    assert got.truncated


def test_hilton_milnor_empty_wedge():
    got = hilton_milnor(SphereWedge.empty(), 10)
    assert got == FactorList.empty(10)
    assert not got.truncated


def test_factor_effect_truncation():
    # a factor is kept iff its dimension minus one is at most the cap
    got = hilton_milnor(SphereWedge.from_dict({5: 1, 9: 1}), 6)
    assert 9 not in got.loop_sphere_dict()
    assert got.loop_sphere_dict()[5] == 1
    assert got.truncated


def test_factor_list_merge_and_json():
    a = FactorList.build(10, circles=1, loop_spheres={5: 1})
    b = FactorList.build(10, spheres={3: 1}, loop_spheres={5: 2, 7: 1})
    merged = a.merge(b)
    assert merged.circles == 1
    assert merged.sphere_dict() == {3: 1}
    assert merged.loop_sphere_dict() == {5: 3, 7: 1}
    assert FactorList.from_json(merged.to_json()) == merged


def test_factor_list_merge_requires_equal_caps():
    with pytest.raises(UsageError):
        FactorList.empty(10).merge(FactorList.empty(12))
