from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from dedekind.criteria import (
    classify_values,
    congruence_eq2_check,
    corollary_classify,
    criterion_mod_2z,
    criterion_mod_4z,
    criterion_mod_z,
    delta_classify,
    inversion_criterion,
)
from dedekind.exact import InvalidModulus, NotCoprime, mod_inverse
from dedekind.permutation import inversion_table
from dedekind.sums import dedekind_sum_fast
from oracles import brute_dedekind, brute_multiplier_inversions, unit_list


@pytest.mark.parametrize("fn,args,expected", [
    (criterion_mod_z, (37, 33, 40), True),
    (criterion_mod_z, (7, 7, 40), True),
    (criterion_mod_z, (2, 3, 7), False),
    (criterion_mod_2z, (37, 33, 40), True),
    (criterion_mod_2z, (9, 9, 40), True),
    (criterion_mod_2z, (1, 6, 25), True),
    (criterion_mod_4z, (37, 33, 40), False),
    (criterion_mod_4z, (1, 6, 25), True),
    (criterion_mod_4z, (1, 25, 48), True),
])
def test_divisibility_criteria(fn, args, expected):
    assert fn(*args) is expected


@pytest.mark.parametrize("fn", [criterion_mod_z, criterion_mod_2z, criterion_mod_4z])
def test_criteria_reject_non_units(fn):
    with pytest.raises(NotCoprime):
        fn(2, 3, 4)


@pytest.mark.parametrize("args,expected", [
    ((37, 33, 40, 1), True),
    ((37, 33, 40, 2), True),
    ((37, 33, 40, 4), False),
    ((11, 11, 40, 4), True),
    ((1, 6, 25, 4), True),
    ((2, 3, 7, 1), False),
])
def test_inversion_criterion(args, expected):
    assert inversion_criterion(*args) is expected


def test_inversion_criterion_level():
    with pytest.raises(ValueError):
        inversion_criterion(1, 3, 7, 3)


@pytest.mark.parametrize("args", [(3, 3, 7, 7), (37, 33, 40, 160), (2, 3, 7, 28), (2, 3, 7, 14)])
def test_eq2_examples(args):
    assert congruence_eq2_check(*args)


def test_eq2_invalid_modulus():
    with pytest.raises(InvalidModulus):
        congruence_eq2_check(2, 3, 7, 21)


def test_eq2_small_sweep():
    for b in range(1, 41):
        for a1 in unit_list(b):
            for a2 in unit_list(b):
                for m in (b, 2 * b, 4 * b):
                    assert congruence_eq2_check(a1, a2, b, m)


@pytest.mark.parametrize("a1,a2,b,delta,levels", [
    (33, 37, 40, 6, (True, True, False)),
    (37, 33, 40, -6, (True, True, False)),
    (1, 6, 25, 24, (True, True, True)),
    (1, 25, 48, 36, (True, True, True)),
    (3, 3, 40, 0, (True, True, True)),
])
def test_delta_classify_examples(a1, a2, b, delta, levels):
    r = delta_classify(a1, a2, b)
    assert r.delta12s == delta
    assert (r.in_Z, r.in_2Z, r.in_4Z) == levels
    assert r.crit_c == levels and r.crit_a == levels
    assert r.sums_equal is (delta == 0)
    assert r.consistent


def test_delta_classify_non_integral():
    r = delta_classify(2, 3, 7)
    assert r.delta12s == 12 * (brute_dedekind(2, 7) - brute_dedekind(3, 7))
    assert r.delta12s.denominator != 1
    assert (r.in_Z, r.in_2Z, r.in_4Z) == (False, False, False)
    assert r.consistent


def test_delta_classify_reduces_inputs():
    assert delta_classify(73, 77, 40) == delta_classify(33, 37, 40)


def test_report_json_shape():
    d = delta_classify(33, 37, 40).to_dict()
    assert d == {
        "a1": 33, "a2": 37, "b": 40, "delta12s": "6",
        "in_Z": True, "in_2Z": True, "in_4Z": False,
        "crit_c": [True, True, False], "crit_a": [True, True, False],
        "sums_equal": False, "consistent": True,
    }


def test_classify_values_detects_inconsistency():
    # wrong inversion counts must surface as consistent=False
    r = classify_values(33, 37, 40, Fraction(-5, 16), Fraction(-13, 16), 408, 407)
    assert not r.consistent


def test_level_equivalences_with_brute_oracles():
    for b in range(1, 31):
        us = unit_list(b)
        sums = {a: brute_dedekind(a, b) for a in us}
        invs = {a: brute_multiplier_inversions(a, b) for a in us}
        for a1 in us:
            for a2 in us:
                delta = 12 * (sums[a1] - sums[a2])
                r = delta_classify(a1, a2, b)
                assert r.delta12s == delta
                assert r.in_Z == (delta.denominator == 1)
                assert r.in_2Z == ((delta / 2).denominator == 1)
                assert r.in_4Z == ((delta / 4).denominator == 1)
                assert r.crit_c == (criterion_mod_z(a1, a2, b), criterion_mod_2z(a1, a2, b),
                                    criterion_mod_4z(a1, a2, b))
                assert r.crit_a == tuple(
                    (4 // lvl) * (invs[a1] - invs[a2]) % b == 0 for lvl in (1, 2, 4))
                assert r.consistent


@given(st.integers(2, 10**12), st.integers(1, 10**12), st.integers(1, 10**12))
def test_classify_consistent_large(b, a1, a2):
    if gcd(a1, b) != 1 or gcd(a2, b) != 1:
        return
    r = delta_classify(a1, a2, b)
    assert r.consistent
    assert r.in_Z or not r.in_2Z
    assert r.in_2Z or not r.in_4Z
    assert r.in_4Z or not r.sums_equal


@given(st.integers(2, 500), st.integers(1, 500), st.integers(1, 500), st.integers(0, 5), st.integers(0, 5))
def test_criteria_residue_invariant(b, a1, a2, k1, k2):
    if gcd(a1, b) != 1 or gcd(a2, b) != 1:
        return
    for fn in (criterion_mod_z, criterion_mod_2z, criterion_mod_4z):
        assert fn(a1, a2, b) == fn(a1 + k1 * b, a2 + k2 * b, b)


def test_inverse_pairs_have_equal_sums():
    for b in range(1, 201):
        for a in unit_list(b):
            assert delta_classify(a, mod_inverse(a, b), b).sums_equal


@pytest.mark.parametrize("b,decomposition", [(7, (0, 7)), (40, (3, 5)), (3, (0, 3)), (24, (3, 3)),
                                             (1, None), (2, None)])
def test_corollary_holds(b, decomposition):
    v = corollary_classify(b)
    assert v.holds
    assert v.offending_pairs == []
    assert v.decomposition == decomposition


def test_corollary_outside_hypothesis_25():
    # 25 = 5^2: equal sums without a2 = a1^{+-1}, e.g. s(4,25) = s(9,25) = 4/25
    v = corollary_classify(25)
    assert v.decomposition is None
    assert not v.holds
    assert v.offending_pairs == [(4, 9), (4, 14), (6, 11), (6, 16), (9, 19), (11, 21), (14, 19), (16, 21)]
    assert brute_dedekind(4, 25) == brute_dedekind(9, 25) == Fraction(4, 25)


def test_corollary_at_48_and_96():
    # e = 4: no offending pair exists at 48; e = 5 at 96 does have some
    assert corollary_classify(48).holds
    v = corollary_classify(96)
    assert v.offending_pairs == [(17, 65), (31, 79)]
    assert dedekind_sum_fast(17, 96).value == dedekind_sum_fast(65, 96).value


def test_corollary_to_dict():
    assert corollary_classify(40).to_dict() == {
        "b": 40, "decomposition": {"e": 3, "p": 5}, "holds": True, "offending_pairs": []}
    assert corollary_classify(25).to_dict()["offending_pairs"][0] == [4, 9]


def test_corollary_matches_brute_grouping():
    for b in range(1, 80):
        us = unit_list(b)
        sums = {a: brute_dedekind(a, b) for a in us}
        expected = sorted((x, y) for x in us for y in us
                          if x < y and sums[x] == sums[y] and x * y % b != 1)
        assert corollary_classify(b).offending_pairs == expected
        assert set(inversion_table(b)) == set(us)
