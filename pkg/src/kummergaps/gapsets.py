"""Gap sets and Weierstrass semigroup structure at places of the cover.

The compact description computes the gap set at a totally ramified
place directly from the per-family residues and counts of
:class:`~kummergaps.curves.KummerCurve`.  A literal transcription of
the older set-builder descriptions is kept alongside as an independent
oracle (:func:`gap_set_reference`), and the numerical-semigroup kernel
provides a second, brute-force route to every derived invariant.

At places that are not totally ramified only a subset of the gaps is
known; those results are flagged as partial (complete for m = 2, where
the two descriptions together cover every place of the cover).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import semigroups
from .curves import KummerCurve, _ceil_div
from .errors import (
    GenusZeroError,
    NotTotallyRamifiedError,
    TotallyRamifiedError,
)
from .semigroups import AperyTuple, NumericalSemigroup

__all__ = [
    "GapSubset",
    "CoincidenceReport",
    "SymmetryVerdict",
    "gap_set",
    "gap_set_reference",
    "partial_gap_set",
    "generic_gap_set",
    "weierstrass_apery",
    "weierstrass_semigroup",
    "multiplicity",
    "frobenius",
    "symmetry_predict",
    "gap_sets_coincide",
]


@dataclass(frozen=True)
class GapSubset:
    """Sorted gaps known at a place, with a completeness flag."""

    values: tuple[int, ...]
    complete: bool


class SymmetryVerdict(Enum):
    SYMMETRIC = "Symmetric"
    NOT_SYMMETRIC = "NotSymmetric"
    SUFFICIENT_CONDITION_HOLDS = "SufficientConditionHolds"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class CoincidenceReport:
    """Outcome of comparing the gap sets at two totally ramified places.

    ``criterion`` names the structural reason for equality when one of
    the known sufficient conditions applies, None otherwise.
    """

    equal: bool
    criterion: str | None = None


def _require_totally_ramified(curve: KummerCurve, place: int) -> None:
    if not curve.is_totally_ramified(place):
        raise NotTotallyRamifiedError(
            f"place not totally ramified: gcd({curve.m}, "
            f"{curve.branch_multiplicity(place)}) != 1"
        )


def gap_set(curve: KummerCurve, place: int) -> tuple[int, ...]:
    """Gap set at a totally ramified place, sorted.

    Family i contributes the gaps m*j + gap_residue(place, i) for
    0 <= j < gap_class_count(i); the families land in distinct residue
    classes mod m, so the values are pairwise distinct and there are
    exactly genus of them.
    """
    _require_totally_ramified(curve, place)
    m = curve.m
    gaps = []
    for i in range(1, m):
        t = curve.gap_residue(place, i)
        gaps.extend(m * j + t for j in range(curve.gap_class_count(i)))
    gaps.sort()
    if len(set(gaps)) != len(gaps) or len(gaps) != curve.genus:
        raise RuntimeError("internal error: gap set size mismatch")
    return tuple(gaps)


def gap_set_reference(curve: KummerCurve, place: int) -> tuple[int, ...]:
    """Oracle gap set from the literal set-builder descriptions.

    Computed independently of :func:`gap_set`: the fiber at infinity
    uses the m*j - i*lambda_0 enumeration, affine places the
    m*j + i enumeration through the inverse multiplicity.  Same
    preconditions as :func:`gap_set`.
    """
    _require_totally_ramified(curve, place)
    m = curve.m
    lam0 = curve.lambda0
    values: set[int] = set()
    if place == 0:
        for i in range(1, m):
            lo = (i * lam0) // m + 1
            hi = sum(_ceil_div(i * lam, m) for lam in curve.lambdas) - 1
            values.update(m * j - i * lam0 for j in range(lo, hi + 1))
    else:
        inv = pow(curve.lambdas[place - 1], -1, m)
        for i in range(1, m):
            hi = sum(_ceil_div(i * inv * lam, m) for lam in curve.lambdas)
            hi -= (i * inv * lam0) // m + 2
            values.update(m * j + i for j in range(hi + 1))
    return tuple(sorted(values))


def partial_gap_set(curve: KummerCurve, place: int) -> GapSubset:
    """Known gaps at a place that is not totally ramified.

    The set applies uniformly to every place of the fiber.  It is a
    subset of the true gap set, complete only for m = 2.
    """
    if curve.is_totally_ramified(place):
        raise TotallyRamifiedError(
            "place is totally ramified: use gap_set for the complete set"
        )
    m = curve.m
    d = curve.fiber_size(place)
    values: set[int] = set()
    # m and the residues below are multiples of d, so the divisions are exact.
    if place == 0:
        for i in range(1, m):
            t = m - (i * curve.lambda0) % m
            values.update(
                (m * j + t) // d for j in range(curve.gap_class_count(i))
            )
    else:
        lam = curve.lambdas[place - 1]
        for i in range(1, m):
            t = (i * lam) % m
            # Correction term vanishes unless m divides i*lambda.
            extra = (m // d) * (1 + (i * lam) // m - _ceil_div(i * lam, m))
            values.update(
                (m * j + t) // d + extra for j in range(curve.gap_class_count(i))
            )
    return GapSubset(tuple(sorted(values)), complete=curve.m == 2)


def generic_gap_set(curve: KummerCurve) -> GapSubset:
    """Gaps 1..max gap_class_count at any place off the branch fibers."""
    top = max(curve.gap_class_count(i) for i in range(1, curve.m))
    if any(curve.is_totally_ramified(s) for s in range(curve.r + 1)):
        if top < _ceil_div(curve.genus, curve.m - 1):
            raise RuntimeError("internal error: generic gap run too short")
    return GapSubset(tuple(range(1, top + 1)), complete=curve.m == 2)


def weierstrass_apery(curve: KummerCurve, place: int) -> AperyTuple:
    """Apery tuple of the Weierstrass semigroup at the place, base m.

    The nonzero value in residue class gap_residue(place, i) is
    m * gap_class_count(i) + gap_residue(place, i).
    """
    _require_totally_ramified(curve, place)
    m = curve.m
    values = [0] * m
    seen = [False] * m
    seen[0] = True
    for i in range(1, m):
        t = curve.gap_residue(place, i)
        if seen[t]:
            raise RuntimeError("internal error: residue map not injective")
        seen[t] = True
        values[t] = m * curve.gap_class_count(i) + t
    return AperyTuple(m, tuple(values))


def weierstrass_semigroup(curve: KummerCurve, place: int) -> NumericalSemigroup:
    """Weierstrass semigroup at a totally ramified place.

    Built from the generating set {m} union the nonzero Apery values;
    equals the complement of :func:`gap_set` as a set.
    """
    ap = weierstrass_apery(curve, place)
    return semigroups.from_generators([curve.m, *(w for w in ap.values if w)])


def multiplicity(curve: KummerCurve, place: int) -> int:
    """Least nonzero member of the Weierstrass semigroup, in closed form."""
    _require_totally_ramified(curve, place)
    m = curve.m
    low = min(curve.gap_class_count(i) for i in range(1, m))
    best = m
    for i in range(1, m):
        if curve.gap_class_count(i) == low:
            best = min(best, m * low + curve.gap_residue(place, i))
    return best


def frobenius(curve: KummerCurve, place: int) -> int:
    """Largest gap of the Weierstrass semigroup, in closed form."""
    _require_totally_ramified(curve, place)
    if curve.genus == 0:
        raise GenusZeroError("frobenius undefined: the curve has genus 0")
    m = curve.m
    high = max(curve.gap_class_count(i) for i in range(1, m))
    return max(
        m * (high - 1) + curve.gap_residue(place, i)
        for i in range(1, m)
        if curve.gap_class_count(i) == high
    )


def _all_coprime(curve: KummerCurve) -> bool:
    return all(math.gcd(curve.m, lam) == 1 for lam in curve.lambdas) and (
        math.gcd(curve.m, curve.lambda0) == 1
    )


def symmetry_predict(curve: KummerCurve, place: int) -> SymmetryVerdict:
    """Symmetry of the Weierstrass semigroup from the multiplicity data.

    When every branch multiplicity (lambda_0 included) is coprime to m
    the verdict is exact: symmetry holds at the fiber over infinity iff
    all multiplicities agree, and at an affine place iff the other
    multiplicities share a common value lambda with
    lambda_0 + lambda == 0 mod m.  Otherwise only sufficient conditions
    (divisibility patterns of the multiplicities) are evaluated.
    """
    _require_totally_ramified(curve, place)
    m = curve.m
    if _all_coprime(curve):
        if place == 0:
            symmetric = len(set(curve.lambdas)) == 1
        else:
            others = [
                lam for k, lam in enumerate(curve.lambdas, start=1) if k != place
            ]
            if not others:
                symmetric = True
            else:
                symmetric = (
                    len(set(others)) == 1
                    and (curve.lambda0 + others[0]) % m == 0
                )
        return (
            SymmetryVerdict.SYMMETRIC if symmetric else SymmetryVerdict.NOT_SYMMETRIC
        )
    if place == 0:
        if all(m % lam == 0 for lam in curve.lambdas):
            return SymmetryVerdict.SUFFICIENT_CONDITION_HOLDS
        if all(m % (m - lam) == 0 for lam in curve.lambdas):
            return SymmetryVerdict.SUFFICIENT_CONDITION_HOLDS
    else:
        others = [lam for k, lam in enumerate(curve.lambdas, start=1) if k != place]
        lam0_mod = curve.lambda0 % m
        if all(m % lam == 0 for lam in others) and m % (m - lam0_mod) == 0:
            return SymmetryVerdict.SUFFICIENT_CONDITION_HOLDS
        if all(m % (m - lam) == 0 for lam in others) and (
            lam0_mod == 0 or m % lam0_mod == 0
        ):
            return SymmetryVerdict.SUFFICIENT_CONDITION_HOLDS
    return SymmetryVerdict.INCONCLUSIVE


def gap_sets_coincide(
    curve: KummerCurve, first: int, second: int
) -> CoincidenceReport:
    """Compare the gap sets at two totally ramified places.

    The boolean is decided by direct comparison; the criterion field
    records which known sufficient condition, if any, explains an
    equality.
    """
    gaps_first = gap_set(curve, first)
    gaps_second = gap_set(curve, second)
    equal = gaps_first == gaps_second
    criterion = None
    if first == second:
        criterion = "same_place"
    elif first >= 1 and second >= 1:
        if curve.lambdas[first - 1] == curve.lambdas[second - 1]:
            criterion = "equal_multiplicities"
        elif curve.m == 3:
            ones = curve.lambdas.count(1)
            twos = curve.lambdas.count(2)
            if 0 <= ones - twos + curve.lambda0 % 3 <= 2:
                criterion = "trigonal_balance"
    else:
        affine = first or second
        if (curve.lambda0 + curve.lambdas[affine - 1]) % curve.m == 0:
            criterion = "lambda_sum_zero_mod_m"
    if criterion is not None and not equal:
        raise RuntimeError(f"internal error: criterion {criterion} misfired")
    return CoincidenceReport(equal, criterion)
