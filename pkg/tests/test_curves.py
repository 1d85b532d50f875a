import math

import pytest
from hypothesis import given, settings, strategies as st

from kummergaps.curves import KummerCurve
from kummergaps.errors import InvalidInputError, NotTotallyRamifiedError


@st.composite
def curves(draw, max_m=12, max_r=5):
    m = draw(st.integers(min_value=2, max_value=max_m))
    lams = draw(
        st.lists(st.integers(min_value=1, max_value=m - 1), min_size=1, max_size=max_r)
    )
    if math.gcd(m, *lams) != 1:
        lams.append(1)
    return KummerCurve(m, tuple(lams))


@pytest.mark.parametrize(
    "m, lams, genus",
    [
        (3, (1, 2), 0),
        (2, (1, 1, 1), 1),
        (9, (1, 1, 3, 3), 10),
        (3, (1, 1), 1),
        (4, (1, 2, 1), 1),
        (6, (2, 2, 3, 3), 4),
        (2, (1, 1, 1, 1, 1), 2),
    ],
)
def test_genus(m, lams, genus):
    assert KummerCurve(m, lams).genus == genus


def test_validation():
    with pytest.raises(InvalidInputError):
        KummerCurve(1, (1,))
    with pytest.raises(InvalidInputError):
        KummerCurve(3, ())
    with pytest.raises(InvalidInputError):
        KummerCurve(3, (0, 1))
    with pytest.raises(InvalidInputError):
        KummerCurve(3, (3,))
    # defining equation would be a square
    with pytest.raises(InvalidInputError):
        KummerCurve(4, (2,))
    with pytest.raises(InvalidInputError):
        KummerCurve(4, (2, 2))


def test_derived_fields():
    curve = KummerCurve(9, (1, 1, 3, 3))
    assert curve.r == 4
    assert curve.lambda0 == 8
    assert curve.branch_multiplicity(0) == 8
    assert curve.branch_multiplicity(3) == 3
    assert curve.fiber_size(0) == 1
    assert curve.fiber_size(3) == 3
    assert curve.totally_ramified_places() == (0, 1, 2)


@pytest.mark.parametrize(
    "m, lams, place, i, expected",
    [
        (9, (1, 1, 3, 3), 0, 1, 1),
        (5, (4, 2, 2), 1, 3, 2),
        (3, (1, 1), 1, 2, 2),
        (4, (1, 2, 1), 2, 2, 0),  # non-coprime place, residue may be 0
        (4, (1, 2, 1), 0, 1, 4),  # residue can reach m over infinity
    ],
)
def test_gap_residue(m, lams, place, i, expected):
    assert KummerCurve(m, lams).gap_residue(place, i) == expected


@pytest.mark.parametrize(
    "m, lams, i, expected",
    [
        (9, (1, 1, 3, 3), 1, 3),
        (9, (1, 1, 3, 3), 8, 0),
        (3, (1, 1), 2, 0),
        (5, (4, 2, 2), 3, 2),
    ],
)
def test_gap_class_count(m, lams, i, expected):
    assert KummerCurve(m, lams).gap_class_count(i) == expected


def test_residue_gap_count():
    curve = KummerCurve(5, (4, 2, 2))
    # transport: count at the image residue matches the family count
    assert curve.residue_gap_count(1, curve.gap_residue(1, 2)) == curve.gap_class_count(2)
    assert KummerCurve(3, (1, 1)).residue_gap_count(1, 1) == 1
    assert KummerCurve(9, (1, 1, 3, 3)).residue_gap_count(1, 1) == 3
    with pytest.raises(NotTotallyRamifiedError):
        KummerCurve(4, (1, 2, 1)).residue_gap_count(2, 1)
    with pytest.raises(InvalidInputError):
        curve.residue_gap_count(0, 1)


def test_index_validation():
    curve = KummerCurve(5, (4, 2, 2))
    with pytest.raises(InvalidInputError):
        curve.gap_residue(4, 1)
    with pytest.raises(InvalidInputError):
        curve.gap_residue(0, 0)
    with pytest.raises(InvalidInputError):
        curve.gap_residue(0, 5)
    with pytest.raises(InvalidInputError):
        curve.gap_class_count(0)


@given(curves())
@settings(max_examples=200, deadline=None)
def test_class_count_sum_is_genus(curve):
    total = sum(curve.gap_class_count(i) for i in range(1, curve.m))
    if curve.totally_ramified_places():
        assert total == curve.genus
        assert all(
            0 <= curve.gap_class_count(i) <= curve.r - 1 for i in range(1, curve.m)
        )


@given(curves())
@settings(max_examples=200, deadline=None)
def test_residue_bijection_and_transport(curve):
    for s in curve.totally_ramified_places():
        image = {curve.gap_residue(s, i) for i in range(1, curve.m)}
        assert image == set(range(1, curve.m))
        if s >= 1:
            for i in range(1, curve.m):
                assert curve.residue_gap_count(
                    s, curve.gap_residue(s, i)
                ) == curve.gap_class_count(i)
