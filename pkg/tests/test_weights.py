from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from kummergaps.curves import KummerCurve
from kummergaps.errors import InvalidInputError, ProfileError, RatioUndefinedError
from kummergaps.gapsets import gap_set_reference
from kummergaps.weights import (
    LimitProfile,
    asymptotic_limit,
    bw,
    bw_ratio,
    convergence_sweep,
    coprime_residues,
    limit_bounds,
    place_weights,
    profile_of_curve,
    weight,
)

MAXIMAL_EXAMPLE_GAPS = (1, 2, 3, 4, 5, 7, 10, 11, 13, 19)


@pytest.mark.parametrize(
    "gaps, genus, expected",
    [
        ((1,), 1, 0),
        (MAXIMAL_EXAMPLE_GAPS, 10, 20),
        ((1, 2, 4, 7), 4, 4),
    ],
)
def test_weight(gaps, genus, expected):
    assert weight(gaps, genus) == expected


def test_weight_requires_genus_many_gaps():
    with pytest.raises(InvalidInputError):
        weight((1, 2), 3)


def test_bw():
    assert bw(KummerCurve(2, (1, 1, 1))) == 0
    # the six classical Weierstrass points of a genus-2 curve
    assert bw(KummerCurve(2, (1, 1, 1, 1, 1))) == 6
    # independently: sum the oracle gap sets place by place
    curve = KummerCurve(9, (1, 1, 3, 3))
    expected = sum(
        weight(gap_set_reference(curve, s), curve.genus)
        for s in curve.totally_ramified_places()
    )
    assert bw(curve) == expected == 60
    assert set(place_weights(curve)) == {0, 1, 2}


def test_bw_ratio():
    assert bw_ratio(KummerCurve(2, (1, 1, 1, 1, 1))) == 1
    assert bw_ratio(KummerCurve(2, (1,) * 7)) == 1
    with pytest.raises(RatioUndefinedError):
        bw_ratio(KummerCurve(3, (1, 1)))


def test_profile_of_curve():
    profile = profile_of_curve(KummerCurve(3, (1, 1, 2, 2)))
    assert profile.densities == ((1, Fraction(1, 2)), (2, Fraction(1, 2)))
    profile = profile_of_curve(KummerCurve(5, (1, 2, 1, 2)))
    assert profile.density(1) == profile.density(2) == Fraction(1, 2)
    assert profile.density(3) == profile.density(4) == 0
    with pytest.raises(ProfileError):
        profile_of_curve(KummerCurve(4, (1, 2, 1)))


def test_limit_profile_validation():
    with pytest.raises(ProfileError):
        LimitProfile.from_densities(4, {2: 1})
    with pytest.raises(InvalidInputError):
        LimitProfile.from_densities(3, {1: Fraction(1, 2)})  # does not sum to 1
    with pytest.raises(InvalidInputError):
        LimitProfile.from_densities(3, {1: 2, 2: -1})


@pytest.mark.parametrize(
    "m, densities, expected",
    [
        (3, {1: 1}, Fraction(1, 3)),  # the concentrated upper-bound case
        (3, {1: Fraction(1, 2), 2: Fraction(1, 2)}, Fraction(1, 4)),
        (5, {1: Fraction(1, 2), 2: Fraction(1, 2)}, Fraction(3, 32)),
        (2, {1: 1}, Fraction(1)),
    ],
)
def test_asymptotic_limit(m, densities, expected):
    profile = LimitProfile.from_densities(m, densities)
    value = asymptotic_limit(profile)
    assert value == expected
    lower, upper = limit_bounds(m)
    assert lower <= value <= upper


@pytest.mark.parametrize(
    "m, lower, upper",
    [
        (2, Fraction(1), Fraction(1)),
        (3, Fraction(1, 4), Fraction(1, 3)),
        (5, Fraction(1, 16), Fraction(1, 8)),
    ],
)
def test_limit_bounds(m, lower, upper):
    assert limit_bounds(m) == (lower, upper)


def test_limit_bounds_rejects_small_m():
    with pytest.raises(InvalidInputError):
        limit_bounds(1)


def test_convergence_sweep_hyperelliptic():
    rows, notices = convergence_sweep(2, (1,), [5, 7, 9])
    assert notices == []
    assert [row.r for row in rows] == [5, 7, 9]
    assert all(row.ratio == 1 and row.difference == 0 for row in rows)


def test_convergence_sweep_trigonal():
    rows, notices = convergence_sweep(3, (1, 2), [4, 8, 16])
    assert [row.r for row in rows] == [8, 16, 32]
    assert all(row.limit == Fraction(1, 4) for row in rows)
    diffs = [row.difference for row in rows]
    assert diffs == sorted(diffs, reverse=True)


def test_convergence_sweep_quintic():
    rows, _ = convergence_sweep(5, (1, 2), [4, 8, 16, 32])
    assert all(row.limit == Fraction(3, 32) for row in rows)
    assert [row.r for row in rows] == [8, 16, 32, 64]


def test_convergence_sweep_skips_degenerate_rows():
    rows, notices = convergence_sweep(3, (1, 2), [1, 4])
    assert len(rows) == 1 and rows[0].repeats == 4
    assert any("genus" in note for note in notices)


def test_convergence_sweep_rejects_bad_pattern():
    with pytest.raises(ProfileError):
        convergence_sweep(4, (1, 2), [4])
    with pytest.raises(InvalidInputError):
        convergence_sweep(3, (), [4])


@st.composite
def profiles(draw):
    m = draw(st.integers(min_value=2, max_value=10))
    admissible = coprime_residues(m)
    raw = draw(
        st.lists(
            st.integers(min_value=0, max_value=5),
            min_size=len(admissible),
            max_size=len(admissible),
        ).filter(lambda ws: sum(ws) > 0)
    )
    total = sum(raw)
    return LimitProfile.from_densities(
        m, {j: Fraction(w, total) for j, w in zip(admissible, raw)}
    )


@given(profiles())
@settings(max_examples=200, deadline=None)
def test_limit_always_within_bounds(profile):
    value = asymptotic_limit(profile)
    lower, upper = limit_bounds(profile.m)
    assert lower <= value <= upper
    concentrated = any(k == 1 for _, k in profile.densities)
    assert (value == upper) == concentrated
    if all(
        profile.density(j) == profile.density(profile.m - j)
        for j, _ in profile.densities
    ):
        assert value == lower


@given(st.integers(min_value=3, max_value=40).filter(lambda r: r % 2 == 1))
@settings(max_examples=20, deadline=None)
def test_hyperelliptic_ratio_is_one(r):
    curve = KummerCurve(2, (1,) * r)
    if curve.genus >= 2:
        assert bw_ratio(curve) == 1
