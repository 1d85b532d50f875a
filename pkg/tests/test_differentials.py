import math

import pytest
from hypothesis import given, settings, strategies as st

from kummergaps.curves import KummerCurve
from kummergaps.differentials import (
    EXTRA_FIBER,
    Divisor,
    basis_divisors,
    differential_divisor,
    divisor_degree,
)
from kummergaps.errors import InvalidInputError
from kummergaps.gapsets import gap_set, partial_gap_set


@st.composite
def curves(draw, max_m=10, max_r=4):
    m = draw(st.integers(min_value=2, max_value=max_m))
    lams = draw(
        st.lists(st.integers(min_value=1, max_value=m - 1), min_size=1, max_size=max_r)
    )
    if math.gcd(m, *lams) != 1:
        lams.append(1)
    return KummerCurve(m, tuple(lams))


def test_zero_divisor_on_elliptic_cover():
    divisor = differential_divisor(KummerCurve(3, (1, 1)), 1, 0, anchor=1)
    assert divisor.is_zero()
    assert divisor_degree(KummerCurve(3, (1, 1)), divisor) == 0


def test_anchor_coefficient_is_gap_minus_one():
    curve = KummerCurve(9, (1, 1, 3, 3))
    divisor = differential_divisor(curve, 1, 2, anchor=1)
    assert divisor.coefficient(1) == 9 * 2 + curve.gap_residue(1, 1) - 1 == 18
    assert 19 in gap_set(curve, 1)


def test_generic_anchor_degree():
    curve = KummerCurve(2, (1, 1, 1))
    divisor = differential_divisor(curve, 1, 0)
    assert divisor.is_effective()
    assert divisor_degree(curve, divisor) == 0 == 2 * curve.genus - 2


def test_extra_fiber_tracks_offset():
    curve = KummerCurve(9, (1, 1, 3, 3))
    divisor = differential_divisor(curve, 1, 2)
    assert divisor.coefficient(EXTRA_FIBER) == 2
    assert divisor_degree(curve, divisor) == 2 * curve.genus - 2


def test_index_validation():
    curve = KummerCurve(9, (1, 1, 3, 3))
    with pytest.raises(InvalidInputError):
        differential_divisor(curve, 0, 0)
    with pytest.raises(InvalidInputError):
        differential_divisor(curve, 9, 0)
    with pytest.raises(InvalidInputError):
        differential_divisor(curve, 1, 3)  # family 1 holds offsets 0..2
    with pytest.raises(InvalidInputError):
        differential_divisor(curve, 8, 0)  # family 8 is empty
    with pytest.raises(InvalidInputError):
        differential_divisor(curve, 1, 0, anchor=5)


def test_divisor_helpers():
    divisor = Divisor.from_coefficients({2: 3, 1: 0, 0: 1})
    assert divisor.entries == ((0, 1), (2, 3))
    assert divisor.coefficient(1) == 0
    assert divisor.support() == (0, 2)
    assert not Divisor.from_coefficients({1: -1}).is_effective()


def test_basis_certifies_gap_sets():
    curve = KummerCurve(9, (1, 1, 3, 3))
    for s in curve.totally_ramified_places():
        anchor = s if s >= 1 else None
        triples = list(basis_divisors(curve, anchor))
        assert len(triples) == curve.genus
        valuations = sorted(d.coefficient(s) + 1 for _, _, d in triples)
        assert tuple(valuations) == gap_set(curve, s)


def test_basis_certifies_partial_gaps_at_non_coprime_anchor():
    curve = KummerCurve(4, (1, 2, 1))
    divisors = [d for _, _, d in basis_divisors(curve, anchor=2)]
    recovered = {d.coefficient(2) + 1 for d in divisors}
    assert recovered == set(partial_gap_set(curve, 2).values)


@given(curves(), st.booleans())
@settings(max_examples=150, deadline=None)
def test_basis_always_effective_with_right_degree(curve, use_anchor):
    anchor = 1 if use_anchor else None
    count = 0
    for _i, _j, divisor in basis_divisors(curve, anchor):
        count += 1
        assert divisor.is_effective()
        assert divisor_degree(curve, divisor) == 2 * curve.genus - 2
    assert count == curve.genus
