"""Ramification datum of a cyclic cover of the projective line.

A cover of degree m branched over r affine points with multiplicities
lambda_1..lambda_r (each in 1..m-1) is described purely by those
integers; the branch point over infinity carries the derived
multiplicity lambda_0 = sum(lambda_k).  Places are referred to by index:
0 is the fiber over the pole of the base coordinate, 1..r are the
fibers over the affine branch points.  A place index s is *totally
ramified* when gcd(m, lambda_s) = 1, in which case a single place sits
over the base point.

Everything downstream (gap sets, semigroups, weights) is a function of
this datum alone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property

from .errors import InvalidInputError, NotTotallyRamifiedError

__all__ = ["KummerCurve"]


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


@dataclass(frozen=True)
class KummerCurve:
    """Degree and branch multiplicities (m; lambda_1..lambda_r)."""

    m: int
    lambdas: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        if self.m < 2:
            raise InvalidInputError("cover degree m must be at least 2")
        if not self.lambdas:
            raise InvalidInputError("at least one branch multiplicity is required")
        for lam in self.lambdas:
            if not 1 <= lam <= self.m - 1:
                raise InvalidInputError(
                    f"branch multiplicity {lam} outside 1..{self.m - 1}"
                )
        d = math.gcd(self.m, *self.lambdas)
        if d != 1:
            # Otherwise the defining equation is a d-th power and the
            # extension degenerates; the genus formula would go negative.
            raise InvalidInputError(
                f"degenerate cover: m and all branch multiplicities share {d}"
            )

    @property
    def r(self) -> int:
        """Number of affine branch points."""
        return len(self.lambdas)

    @cached_property
    def lambda0(self) -> int:
        """Multiplicity carried by the fiber over infinity."""
        return sum(self.lambdas)

    def branch_multiplicity(self, place: int) -> int:
        """lambda_s for 1 <= s <= r, lambda_0 for s = 0."""
        self._check_place(place)
        return self.lambda0 if place == 0 else self.lambdas[place - 1]

    def fiber_size(self, place: int) -> int:
        """Number of places over the base point P_s: gcd(m, lambda_s)."""
        return math.gcd(self.m, self.branch_multiplicity(place))

    def is_totally_ramified(self, place: int) -> bool:
        return self.fiber_size(place) == 1

    def totally_ramified_places(self) -> tuple[int, ...]:
        return tuple(s for s in range(self.r + 1) if self.is_totally_ramified(s))

    @cached_property
    def genus(self) -> int:
        """Riemann-Hurwitz genus of the cover."""
        total = self.m * (self.r - 1) + 2
        total -= sum(math.gcd(self.m, lam) for lam in self.lambdas)
        total -= math.gcd(self.m, self.lambda0)
        if total % 2 or total < 0:
            raise RuntimeError(f"internal error: genus numerator {total} invalid")
        return total // 2

    def gap_residue(self, place: int, i: int) -> int:
        """Residue class (mod m, representative in 0..m) of the i-th gap family.

        For s >= 1 this is (i * lambda_s) mod m; for the fiber over
        infinity it is m - ((i * lambda_0) mod m).  At a totally
        ramified place the map i -> gap_residue(place, i) permutes
        1..m-1 and every gap congruent to it belongs to family i.
        """
        self._check_place(place)
        self._check_index(i)
        if place == 0:
            return self.m - (i * self.lambda0) % self.m
        return (i * self.lambdas[place - 1]) % self.m

    def gap_class_count(self, i: int) -> int:
        """Number of gaps contributed by family i at any totally ramified place."""
        self._check_index(i)
        return self._class_counts[i - 1]

    @cached_property
    def _class_counts(self) -> tuple[int, ...]:
        m = self.m
        lam0 = self.lambda0
        counts = []
        for i in range(1, m):
            value = sum(_ceil_div(i * lam, m) for lam in self.lambdas)
            value -= (i * lam0) // m + 1
            counts.append(value)
        if any(self.is_totally_ramified(s) for s in range(self.r + 1)):
            # Guaranteed range whenever some place is totally ramified.
            if not all(0 <= c <= self.r - 1 for c in counts):
                raise RuntimeError("internal error: gap class count out of range")
        return tuple(counts)

    def residue_gap_count(self, place: int, residue: int) -> int:
        """Number of gaps at Q_place congruent to ``residue`` mod m.

        Defined for affine places (1 <= place <= r) that are totally
        ramified; computed through the inverse of lambda_place mod m.
        """
        if not 1 <= place <= self.r:
            raise InvalidInputError(f"place index {place} outside 1..{self.r}")
        self._check_index(residue)
        lam = self.lambdas[place - 1]
        if math.gcd(self.m, lam) != 1:
            raise NotTotallyRamifiedError(
                f"place not totally ramified: gcd({self.m}, {lam}) != 1"
            )
        inv = pow(lam, -1, self.m)
        m = self.m
        value = sum(_ceil_div(residue * inv * lk, m) for lk in self.lambdas)
        value -= (residue * inv * self.lambda0) // m + 1
        return value

    def _check_place(self, place: int) -> None:
        if not 0 <= place <= self.r:
            raise InvalidInputError(f"place index {place} outside 0..{self.r}")

    def _check_index(self, i: int) -> None:
        if not 1 <= i <= self.m - 1:
            raise InvalidInputError(f"index {i} outside 1..{self.m - 1}")
