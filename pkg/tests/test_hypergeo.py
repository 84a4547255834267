from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from supercong.arith import pochhammer
from supercong.hypergeo import (
    HALF,
    HypergeometricSpec,
    ZeroLowerPochhammer,
    check_chaundy_bullard,
    check_transform,
    convolution_direct,
    convolution_hyper_spec,
    convolution_via_id1,
    convolution_via_sun,
    evaluate_truncated,
    sample_points,
)
from supercong.outcome import PreconditionViolated

from conftest import rationals


def series_by_definition(spec):
    # each term rebuilt from scratch with pochhammer; no term ratios
    total = Fraction(0)
    for k in range(spec.truncation + 1):
        num = Fraction(1)
        for x in spec.upper:
            num *= pochhammer(x, k)
        den = pochhammer(1, k)
        for y in spec.lower:
            den *= pochhammer(y, k)
        total += num / den * spec.argument**k
    return total


def naive_S(n):
    return sum(comb(2 * k, k) ** 2 * comb(2 * n - 2 * k, n - k) ** 2 for k in range(n + 1))


def test_truncation_zero_is_one():
    spec = HypergeometricSpec([Fraction(3, 7), 5, -2], [Fraction(1, 3), 9], Fraction(-4, 5), 0)
    assert evaluate_truncated(spec) == 1


def test_truncated_example_two_terms():
    spec = HypergeometricSpec([HALF, HALF, -1, -1], [1, -HALF, -HALF], 1, 1)
    # 1 + (1/2)(1/2)(-1)(-1) / (1 (-1/2)(-1/2) 1!) = 1 + 1
    assert evaluate_truncated(spec) == 2
    assert evaluate_truncated(spec) == Fraction(naive_S(1), comb(2, 1) ** 2)


def test_terminating_upper_parameter():
    short = HypergeometricSpec([-3, HALF], [Fraction(5, 2)], Fraction(2, 3), 3)
    long = HypergeometricSpec([-3, HALF], [Fraction(5, 2)], Fraction(2, 3), 12)
    assert evaluate_truncated(short) == evaluate_truncated(long)


def test_spec_validation():
    with pytest.raises(ValueError):
        HypergeometricSpec([1, 2], [1, 2], 1, 3)
    with pytest.raises(ZeroLowerPochhammer):
        HypergeometricSpec([1, 2], [-2], 1, 3)
    # (-2)_k only vanishes from k = 3 on
    HypergeometricSpec([1, 2], [-2], 1, 2)
    bypass = HypergeometricSpec([1, 2], [-2], 1, 3, check=False)
    with pytest.raises(ZeroLowerPochhammer):
        evaluate_truncated(bypass)


@settings(max_examples=60)
@given(st.lists(rationals(50, 9), min_size=3, max_size=3), st.lists(rationals(50, 9), min_size=2, max_size=2),
       rationals(20, 7), st.integers(0, 12))
def test_incremental_matches_definition(upper, lower, z, m):
    try:
        spec = HypergeometricSpec(upper, lower, z, m)
    except ZeroLowerPochhammer:
        return
    assert evaluate_truncated(spec) == series_by_definition(spec)


@pytest.mark.parametrize("n, expected", [(0, 1), (1, 8), (2, 88)])
def test_convolution_examples(n, expected):
    assert convolution_direct(n) == expected
    assert convolution_via_id1(n) == expected
    assert convolution_via_sun(n) == expected


def test_three_way_agreement():
    for n in range(101):
        s = naive_S(n)
        assert convolution_direct(n) == s
        assert convolution_via_id1(n) == s
        assert convolution_via_sun(n) == s


def test_hypergeometric_form():
    for n in range(41):
        assert comb(2 * n, n) ** 2 * evaluate_truncated(convolution_hyper_spec(n)) == naive_S(n)


def test_transform_trivial_n0():
    out = check_transform(0, Fraction(2, 3), Fraction(1, 5), Fraction(7, 2), Fraction(1, 3),
                          Fraction(5, 4), Fraction(2, 3) + Fraction(1, 5) + Fraction(7, 2) + 1 - Fraction(1, 3) - Fraction(5, 4))
    assert out.passed and out.lhs == out.rhs == 1


def test_transform_paper_specialization_n2():
    out = check_transform(2, HALF, -2, HALF, 1, HALF - 2, HALF - 2)
    assert out.passed
    assert out.lhs == out.rhs == Fraction(88, 36) == Fraction(22, 9)


def test_transform_specialization_closed_form():
    for n in range(26):
        out = check_transform(n, HALF, -n, HALF, 1, HALF - n, HALF - n)
        assert out.passed
        assert out.lhs * comb(2 * n, n) ** 2 == naive_S(n)
        prefactor = (pochhammer(-n, n) / pochhammer(HALF - n, n)) ** 2
        assert prefactor == Fraction(16**n, comb(2 * n, n) ** 2)


def _admissible(n, a, b, c, d, e):
    f = a + b + c - n + 1 - d - e
    try:
        return check_transform(n, a, b, c, d, e, f)
    except PreconditionViolated:
        return None


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 8), *[rationals(30, 7)] * 5)
def test_transform_random_admissible(n, a, b, c, d, e):
    out = _admissible(n, a, b, c, d, e)
    if out is not None:
        assert out.passed


def test_transform_found_by_search():
    # first admissible integer tuple for n = 1 in a small box
    found = None
    for a in range(1, 4):
        for b in range(1, 4):
            for c in range(1, 4):
                for d in range(1, 4):
                    for e in range(1, 4):
                        out = _admissible(1, a, b, c, d, e)
                        if out is not None and a + b + c - d - e > 0:
                            found = out
                            break
                    if found: break
                if found: break
            if found: break
        if found: break
    assert found is not None and found.passed


def test_transform_rejects_bad_parameters():
    with pytest.raises(PreconditionViolated):
        check_transform(2, 1, 1, 1, 1, 1, 1)  # condition fails
    with pytest.raises(PreconditionViolated):
        check_transform(2, 0, 1, 1, -1, 3, 0)  # d = -1 vanishes at k = 2


def test_sample_points_distinct_and_fixed_prefix():
    pts = sample_points()
    first = [next(pts) for _ in range(200)]
    assert first[:6] == [2, -1, Fraction(1, 3), Fraction(3, 7), 5, Fraction(-2, 9)]
    assert len(set(first)) == 200


@pytest.mark.parametrize("n, m", [(0, 0), (1, 0), (3, 2)])
def test_chaundy_bullard_examples(n, m):
    assert check_chaundy_bullard(n, m).passed


def test_chaundy_bullard_one_zero_by_hand():
    for x in (Fraction(2), Fraction(-1, 3)):
        assert (1 - x) ** 2 + x * (1 + (1 - x)) == 1


def test_chaundy_bullard_grid():
    assert all(check_chaundy_bullard(n, m).passed for n in range(13) for m in range(13))
