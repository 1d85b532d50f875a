"""Divisors of the holomorphic differentials attached to gap families.

Each family index i (1..m-1) and offset j (0..gap_class_count(i)-1)
carries a holomorphic differential whose divisor is supported on the
branch fibers, the fiber over infinity, and optionally the fiber over
one extra non-branch point used as an anchor.  All places of a fiber
share one coefficient, so a divisor is stored fiberwise; the fiber over
P_s has gcd(m, lambda_s) places and the extra fiber has m.

The valuations of these differentials certify the gap sets: at a
totally ramified anchor place the coefficient is m*j + residue - 1, and
coefficient + 1 runs exactly over the gap set as (i, j) varies.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Mapping

from .curves import KummerCurve, _ceil_div
from .errors import InvalidInputError

__all__ = [
    "EXTRA_FIBER",
    "INFINITY_FIBER",
    "Divisor",
    "differential_divisor",
    "divisor_degree",
    "basis_divisors",
]

# Fiber keys: 0 is the fiber over infinity, 1..r the affine branch
# fibers, EXTRA_FIBER the fiber over the generic anchor point.
INFINITY_FIBER = 0
EXTRA_FIBER = -1


@dataclass(frozen=True)
class Divisor:
    """Fiberwise divisor: (fiber key, coefficient) pairs, zeros dropped."""

    entries: tuple[tuple[int, int], ...]

    @staticmethod
    def from_coefficients(coefficients: Mapping[int, int]) -> "Divisor":
        return Divisor(
            tuple(sorted((k, c) for k, c in coefficients.items() if c != 0))
        )

    def coefficient(self, fiber: int) -> int:
        for key, value in self.entries:
            if key == fiber:
                return value
        return 0

    def support(self) -> tuple[int, ...]:
        return tuple(key for key, _ in self.entries)

    def is_effective(self) -> bool:
        return all(value >= 0 for _, value in self.entries)

    def is_zero(self) -> bool:
        return not self.entries


def _fiber_size(curve: KummerCurve, fiber: int) -> int:
    if fiber == EXTRA_FIBER:
        return curve.m
    return curve.fiber_size(fiber)


def _exact_div(a: int, b: int) -> int:
    quotient, remainder = divmod(a, b)
    if remainder:
        raise RuntimeError(f"internal error: {a} not divisible by {b}")
    return quotient


def divisor_degree(curve: KummerCurve, divisor: Divisor) -> int:
    """Degree, counting every place of each fiber."""
    return sum(
        value * _fiber_size(curve, fiber) for fiber, value in divisor.entries
    )


def differential_divisor(
    curve: KummerCurve, i: int, j: int, anchor: int | None = None
) -> Divisor:
    """Divisor of the (i, j) holomorphic differential.

    ``anchor`` selects the extra point: an affine branch index 1..r
    pins it to that branch point (merging the extra fiber into the
    branch fiber), None uses a generic non-branch point.  The result is
    always effective of degree 2*genus - 2.
    """
    m = curve.m
    if not 1 <= i <= m - 1:
        raise InvalidInputError(f"index {i} outside 1..{m - 1}")
    if not 0 <= j <= curve.gap_class_count(i) - 1:
        raise InvalidInputError(
            f"offset {j} outside 0..{curve.gap_class_count(i) - 1} for family {i}"
        )
    if anchor is not None and not 1 <= anchor <= curve.r:
        raise InvalidInputError(f"anchor {anchor} outside 1..{curve.r}")

    coefficients: dict[int, int] = {}
    for k, lam in enumerate(curve.lambdas, start=1):
        d = curve.fiber_size(k)
        residue = (i * lam) % m
        value = _exact_div(
            m * (1 + (i * lam) // m - _ceil_div(i * lam, m)) + residue, d
        ) - 1
        if k == anchor:
            value += _exact_div(m * j, d)
        coefficients[k] = value
    if anchor is None:
        coefficients[EXTRA_FIBER] = j
    d0 = curve.fiber_size(0)
    t0 = m - (i * curve.lambda0) % m
    coefficients[INFINITY_FIBER] = (
        _exact_div(m * (curve.gap_class_count(i) - 1 - j) + t0, d0) - 1
    )

    divisor = Divisor.from_coefficients(coefficients)
    if not divisor.is_effective():
        raise RuntimeError("internal error: differential divisor not effective")
    if divisor_degree(curve, divisor) != 2 * curve.genus - 2:
        raise RuntimeError("internal error: differential divisor degree mismatch")
    return divisor


def basis_divisors(
    curve: KummerCurve, anchor: int | None = None
) -> Iterator[tuple[int, int, Divisor]]:
    """All (i, j, divisor) triples, ordered by family then offset.

    There are exactly genus of them; they form a basis of the
    holomorphic differentials of the cover.
    """
    for i in range(1, curve.m):
        for j in range(curve.gap_class_count(i)):
            yield i, j, differential_divisor(curve, i, j, anchor)
