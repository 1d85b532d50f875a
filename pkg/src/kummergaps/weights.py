"""Weierstrass weights at ramified places and their large-r asymptotics.

The weight of a place is the excess of its gap sum over the ordinary
gap sum 1 + 2 + ... + genus.  Summing the weights over all totally
ramified places of the cover gives the quantity whose ratio against
genus**3 - genus approaches, as the number of branch points grows with
fixed multiplicity frequencies, an explicit rational in the frequency
profile.  Everything here is exact: ratios and limits are
:class:`fractions.Fraction` values, never floats.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .curves import KummerCurve
from .errors import InvalidInputError, ProfileError, RatioUndefinedError
from .gapsets import gap_set

__all__ = [
    "LimitProfile",
    "SweepRow",
    "coprime_residues",
    "weight",
    "place_weights",
    "bw",
    "bw_ratio",
    "profile_of_curve",
    "asymptotic_limit",
    "limit_bounds",
    "convergence_sweep",
]


def coprime_residues(m: int) -> tuple[int, ...]:
    """Residues in 1..m-1 coprime to m (the admissible multiplicities)."""
    return tuple(j for j in range(1, m) if math.gcd(j, m) == 1)


def weight(gaps: Sequence[int], genus: int) -> int:
    """Weierstrass weight: sum(gaps) - genus*(genus+1)/2.

    Requires exactly ``genus`` gaps; nonnegative for every gap set of a
    numerical semigroup of that genus.
    """
    if len(gaps) != genus:
        raise InvalidInputError(
            f"gap set has {len(gaps)} elements, expected genus {genus}"
        )
    return sum(gaps) - genus * (genus + 1) // 2


def place_weights(curve: KummerCurve) -> dict[int, int]:
    """Weight at every totally ramified place, keyed by place index."""
    genus = curve.genus
    by_multiplicity: dict[int, int] = {}
    result = {}
    for s in curve.totally_ramified_places():
        if s == 0:
            result[s] = weight(gap_set(curve, s), genus)
            continue
        lam = curve.lambdas[s - 1]
        if lam not in by_multiplicity:
            by_multiplicity[lam] = weight(gap_set(curve, s), genus)
        result[s] = by_multiplicity[lam]
    return result


def bw(curve: KummerCurve) -> int:
    """Total Weierstrass weight of the totally ramified places.

    Places on fibers with gcd(m, lambda_s) != 1 contribute nothing;
    with no totally ramified place the sum is 0.
    """
    return sum(place_weights(curve).values())


def bw_ratio(curve: KummerCurve) -> Fraction:
    """Exact ratio bw / (genus**3 - genus); needs genus >= 2."""
    genus = curve.genus
    if genus < 2:
        raise RatioUndefinedError(f"ratio undefined: genus {genus} < 2")
    return Fraction(bw(curve), genus**3 - genus)


@dataclass(frozen=True)
class LimitProfile:
    """Density of each admissible multiplicity among the branch points.

    ``densities`` lists (multiplicity j, fraction k_j) for every j in
    1..m-1 coprime to m, in increasing j; the fractions are in [0, 1]
    and sum to 1.
    """

    m: int
    densities: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        if self.m < 2:
            raise InvalidInputError("profile degree m must be at least 2")
        expected = coprime_residues(self.m)
        keys = tuple(j for j, _ in self.densities)
        if keys != expected:
            raise InvalidInputError(
                f"profile must list every admissible multiplicity {expected}"
            )
        values = [k for _, k in self.densities]
        if any(k < 0 or k > 1 for k in values):
            raise InvalidInputError("densities must lie in [0, 1]")
        if sum(values) != 1:
            raise InvalidInputError("densities must sum to 1")

    @staticmethod
    def from_densities(
        m: int, densities: Mapping[int, Fraction | int]
    ) -> "LimitProfile":
        """Build a profile, filling unmentioned admissible j with 0."""
        admissible = coprime_residues(m)
        extra = set(densities) - set(admissible)
        if extra:
            raise ProfileError(
                f"limit theorem hypothesis violated: multiplicities {sorted(extra)} "
                f"not coprime to {m}"
            )
        entries = tuple(
            (j, Fraction(densities.get(j, 0))) for j in admissible
        )
        return LimitProfile(m, entries)

    def density(self, j: int) -> Fraction:
        for key, value in self.densities:
            if key == j:
                return value
        return Fraction(0)


def profile_of_curve(curve: KummerCurve) -> LimitProfile:
    """Frequency profile of the branch multiplicities.

    Requires every lambda_k coprime to m (the hypothesis under which
    the asymptotic formula is proven).
    """
    bad = sorted({lam for lam in curve.lambdas if math.gcd(curve.m, lam) != 1})
    if bad:
        raise ProfileError(
            f"limit theorem hypothesis violated: multiplicities {bad} "
            f"not coprime to {curve.m}"
        )
    counts = Counter(curve.lambdas)
    return LimitProfile.from_densities(
        curve.m, {j: Fraction(counts[j], curve.r) for j in counts}
    )


def asymptotic_limit(profile: LimitProfile) -> Fraction:
    """Limiting value of bw / (genus**3 - genus) for the profile.

    Exact rational: (4 / (m (m-1)^3)) * sum over i of
    (sum over j of ((i*j) mod m) * k_j)^2, minus 1/(m-1).
    """
    m = profile.m
    total = Fraction(0)
    for i in range(1, m):
        row = sum((((i * j) % m) * k for j, k in profile.densities), Fraction(0))
        total += row * row
    return Fraction(4, m * (m - 1) ** 3) * total - Fraction(1, m - 1)


def limit_bounds(m: int) -> tuple[Fraction, Fraction]:
    """(lower, upper) bounds for the asymptotic ratio at degree m.

    Lower bound 1/(m-1)^2 is attained when k_j = k_{m-j} for all j;
    upper bound (m+1)/(3 (m-1)^2) exactly when a single k_j equals 1.
    """
    if m < 2:
        raise InvalidInputError("degree m must be at least 2")
    return Fraction(1, (m - 1) ** 2), Fraction(m + 1, 3 * (m - 1) ** 2)


@dataclass(frozen=True)
class SweepRow:
    repeats: int
    r: int
    ratio: Fraction
    limit: Fraction
    difference: Fraction


def convergence_sweep(
    m: int, pattern: Sequence[int], repeats: Iterable[int]
) -> tuple[list[SweepRow], list[str]]:
    """Exact ratio against the limit for pattern-repetition curves.

    Each row repeats ``pattern`` n times so the multiplicity
    frequencies equal the profile at every r.  Rows whose curve has
    genus < 2 are skipped with a notice.  Returns (rows sorted by r,
    notices).
    """
    if not pattern:
        raise InvalidInputError("pattern must be nonempty")
    bad = sorted({lam for lam in pattern if math.gcd(m, lam) != 1})
    if bad:
        raise ProfileError(
            f"limit theorem hypothesis violated: pattern entries {bad} "
            f"not coprime to {m}"
        )
    counts = Counter(pattern)
    profile = LimitProfile.from_densities(
        m, {j: Fraction(counts[j], len(pattern)) for j in counts}
    )
    limit = asymptotic_limit(profile)
    rows = []
    notices = []
    for n in sorted(set(repeats)):
        if n < 1:
            notices.append(f"skipped repeats={n}: not a positive count")
            continue
        curve = KummerCurve(m, tuple(pattern) * n)
        if curve.genus < 2:
            notices.append(
                f"skipped repeats={n}: genus {curve.genus} < 2, ratio undefined"
            )
            continue
        ratio = bw_ratio(curve)
        rows.append(SweepRow(n, curve.r, ratio, limit, abs(ratio - limit)))
    return rows, notices
