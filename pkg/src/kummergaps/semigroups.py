"""General numerical-semigroup kernel.

A numerical semigroup is a subset of the nonnegative integers that
contains 0, is closed under addition, and has finite complement.  The
complement elements are the *gaps*; the largest gap is the *Frobenius
number* and the number of gaps is the *genus*.  Everything in this
module is computed by direct dynamic programming over a membership
table, so it doubles as the brute-force oracle against which the
closed-form curve results elsewhere in the package are verified.

All values are immutable; operations are pure functions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .errors import (
    ClosureViolationError,
    InvalidBaseError,
    InvalidInputError,
    NotASemigroupError,
)

__all__ = [
    "NumericalSemigroup",
    "AperyTuple",
    "from_generators",
    "from_gap_set",
    "invariants",
    "apery",
    "generators_via_apery",
    "minimal_generators",
    "is_symmetric",
]


@dataclass(frozen=True)
class NumericalSemigroup:
    """A numerical semigroup, represented by its sorted gap tuple.

    The gap tuple determines the semigroup completely: n is a member
    iff n >= 0 and n is not a gap.  Use :func:`from_generators` or
    :func:`from_gap_set` to build validated instances; the raw
    constructor checks only the shape of the tuple, not additive
    closure of the complement.
    """

    gaps: tuple[int, ...]

    def __post_init__(self) -> None:
        gaps = tuple(self.gaps)
        object.__setattr__(self, "gaps", gaps)
        if any(g < 1 for g in gaps):
            raise InvalidInputError("gaps must be positive integers")
        if any(a >= b for a, b in zip(gaps, gaps[1:])):
            raise InvalidInputError("gaps must be strictly increasing")

    @property
    def genus(self) -> int:
        return len(self.gaps)

    @property
    def frobenius(self) -> int:
        """Largest gap, or -1 for the full semigroup N0."""
        return self.gaps[-1] if self.gaps else -1

    @cached_property
    def multiplicity(self) -> int:
        """Least nonzero member."""
        n = 1
        while n in self._gap_lookup:
            n += 1
        return n

    @cached_property
    def _gap_lookup(self) -> frozenset[int]:
        return frozenset(self.gaps)

    def is_member(self, n: int) -> bool:
        return n >= 0 and n not in self._gap_lookup

    def members(self, stop: int) -> list[int]:
        """Members in [0, stop)."""
        return [n for n in range(stop) if n not in self._gap_lookup]


@dataclass(frozen=True)
class AperyTuple:
    """Least members of a semigroup in each residue class mod ``base``.

    ``values[i]`` is the least member congruent to i modulo ``base``;
    in particular ``values[0] == 0``.
    """

    base: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if self.base < 1 or len(self.values) != self.base:
            raise InvalidInputError("Apery tuple must have one value per residue")
        if self.values[0] != 0:
            raise InvalidInputError("Apery value at residue 0 must be 0")
        for i, w in enumerate(self.values):
            if w % self.base != i:
                raise InvalidInputError(f"Apery value {w} is not congruent to {i}")


def _closure_mask(gens: list[int], bound: int) -> int:
    """Bitmask of all N0-combinations of ``gens`` up to ``bound``.

    Bit n is set iff n is representable.  Each generator is closed over
    by doubling shift strides, so the whole table costs
    O(len(gens) * log(bound)) big-integer operations.
    """
    window = (1 << (bound + 1)) - 1
    mask = 1
    for g in gens:
        step = g
        while step <= bound:
            mask |= (mask << step) & window
            step <<= 1
    return mask


def _stable_start(mask: int, mult: int) -> int | None:
    """Smallest p >= 1 with bits p..p+mult-1 all set, or None.

    A run of ``mult`` consecutive members certifies that every integer
    >= p is a member, since adding the generator ``mult`` extends the
    run indefinitely.
    """
    runs = mask
    for shift in range(1, mult):
        runs &= mask >> shift
    runs &= ~1
    if runs == 0:
        return None
    return (runs & -runs).bit_length() - 1


def from_generators(gens: Iterable[int]) -> NumericalSemigroup:
    """Semigroup of all N0-combinations of ``gens``.

    Requires gcd(gens) == 1; otherwise the complement is infinite and
    no numerical semigroup exists.
    """
    gens = sorted(set(gens))
    if not gens:
        raise InvalidInputError("generator list is empty")
    if gens[0] < 1:
        raise InvalidInputError("generators must be positive integers")
    d = math.gcd(*gens)
    if d != 1:
        raise NotASemigroupError(
            f"not a numerical semigroup: generators share the factor {d}"
        )
    mult = gens[0]
    if mult == 1:
        return NumericalSemigroup(())
    # Classical sizing: when the two smallest generators are coprime the
    # Frobenius number is below their product.  The run-of-consecutive-
    # members certificate below keeps the answer correct even when they
    # are not, doubling the table as needed.
    bound = gens[0] * gens[1]
    while True:
        mask = _closure_mask(gens, bound)
        start = _stable_start(mask, mult)
        if start is not None:
            gaps = tuple(n for n in range(1, start) if not (mask >> n) & 1)
            return NumericalSemigroup(gaps)
        bound *= 2


def from_gap_set(gaps: Iterable[int]) -> NumericalSemigroup:
    """Semigroup whose gap set is exactly ``gaps``.

    Verifies that the complement is closed under addition; on failure
    raises :class:`ClosureViolationError` carrying a witnessing pair of
    members whose sum is a gap.
    """
    vals = sorted(gaps)
    if any(g < 1 for g in vals):
        raise InvalidInputError("gaps must be positive integers")
    if any(a == b for a, b in zip(vals, vals[1:])):
        raise InvalidInputError("gap set contains duplicates")
    if not vals:
        return NumericalSemigroup(())
    top = vals[-1]
    gapset = set(vals)
    mask = 0
    for n in range(top + 1):
        if n not in gapset:
            mask |= 1 << n
    window = (1 << (top + 1)) - 1
    # Sums exceeding the largest gap are members automatically, so
    # checking all member pairs with sum <= top settles closure.
    for a in range(1, top + 1):
        if (mask >> a) & 1:
            violations = ((mask << a) & window) & ~mask
            if violations:
                c = (violations & -violations).bit_length() - 1
                raise ClosureViolationError(
                    f"complement not a semigroup: {a} + {c - a} = {c} is a gap",
                    (a, c - a),
                )
    return NumericalSemigroup(tuple(vals))


def invariants(semigroup: NumericalSemigroup) -> tuple[int, int, int]:
    """(genus, Frobenius number, multiplicity)."""
    return semigroup.genus, semigroup.frobenius, semigroup.multiplicity


def apery(semigroup: NumericalSemigroup, base: int) -> AperyTuple:
    """Apery tuple of the semigroup with respect to a nonzero member."""
    if base < 1 or not semigroup.is_member(base):
        raise InvalidBaseError(f"invalid base: {base} is not a nonzero member")
    values = []
    for residue in range(base):
        n = residue
        while not semigroup.is_member(n):
            n += base
        values.append(n)
    return AperyTuple(base, tuple(values))


def generators_via_apery(semigroup: NumericalSemigroup, base: int) -> tuple[int, ...]:
    """Generating set {base} union (Apery values minus 0), sorted."""
    ap = apery(semigroup, base)
    return tuple(sorted({base, *(w for w in ap.values if w)}))


def minimal_generators(semigroup: NumericalSemigroup) -> tuple[int, ...]:
    """Members that are not sums of two nonzero members, sorted.

    Candidates are bounded by frobenius + multiplicity: anything larger
    decomposes as (member beyond the Frobenius number) + multiplicity.
    """
    if semigroup.genus == 0:
        return (1,)
    mult = semigroup.multiplicity
    top = semigroup.frobenius + mult
    gens = []
    for n in range(mult, top + 1):
        if not semigroup.is_member(n):
            continue
        decomposable = any(
            semigroup.is_member(a) and semigroup.is_member(n - a)
            for a in range(mult, n - mult + 1)
        )
        if not decomposable:
            gens.append(n)
    return tuple(gens)


def is_symmetric(semigroup: NumericalSemigroup) -> bool:
    """Whether frobenius == 2*genus - 1.

    The full semigroup N0 is symmetric under this convention
    (frobenius -1, genus 0).  The result is cross-checked against the
    Apery pairing criterion at the multiplicity base: for sorted Apery
    values a_0 < ... < a_{n-1}, symmetry holds iff
    a_i + a_{n-1-i} == a_{n-1} for every i.
    """
    symmetric = semigroup.frobenius == 2 * semigroup.genus - 1
    ap = sorted(apery(semigroup, semigroup.multiplicity).values)
    paired = all(ap[i] + ap[-1 - i] == ap[-1] for i in range(len(ap)))
    if paired != symmetric:
        raise RuntimeError("internal error: symmetry cross-check disagreed")
    return symmetric
