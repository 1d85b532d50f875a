"""Cross-checking suite: every closed form against its brute-force twin.

Each check runs over a built-in corpus plus a seeded random corpus and
reports one :class:`CheckResult`.  The checks mirror the package's
design: the compact gap-set description is compared with the literal
set-builder oracle, semigroup structure derived in closed form is
compared with dynamic-programming recomputation, and the weight
asymptotics are boxed by their proven bounds.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from . import semigroups
from .curves import KummerCurve
from .differentials import basis_divisors, divisor_degree
from .errors import InvalidInputError
from .gapsets import (
    SymmetryVerdict,
    frobenius,
    gap_set,
    gap_set_reference,
    generic_gap_set,
    multiplicity,
    partial_gap_set,
    symmetry_predict,
    weierstrass_apery,
    weierstrass_semigroup,
)
from .semigroups import NumericalSemigroup, from_gap_set, from_generators
from .weights import (
    LimitProfile,
    asymptotic_limit,
    bw,
    bw_ratio,
    coprime_residues,
    limit_bounds,
)

__all__ = ["CheckResult", "run_all", "builtin_curves", "builtin_semigroups"]

DEFAULT_SEED = 94853


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    details: str


def builtin_curves() -> list[KummerCurve]:
    """Hand-picked covers exercising every ramification pattern."""
    data = [
        (2, (1, 1, 1)),
        (2, (1, 1, 1, 1, 1)),
        (2, (1,) * 7),
        (3, (1, 1)),
        (3, (1, 2)),
        (3, (1, 1, 2)),
        (3, (2, 2, 2, 1)),
        (4, (1, 1, 1)),
        (4, (1, 2, 1)),
        (5, (4, 2, 2)),
        (6, (1, 2, 3)),
        (6, (2, 2, 3, 3)),  # no totally ramified place
        (7, (1, 2, 3, 4, 5, 6)),
        (8, (2, 4, 1, 3)),
        (9, (1, 1, 3, 3)),
        (10, (2, 5, 1, 4)),
        (12, (1, 2, 3, 6, 6)),
    ]
    return [KummerCurve(m, lams) for m, lams in data]


def builtin_semigroups() -> list[NumericalSemigroup]:
    return [
        from_generators([2, 3]),
        from_generators([3, 5]),
        from_generators([6, 8, 9]),
        from_generators([4, 6, 25]),  # two smallest minimal generators not coprime
        from_generators([5, 7, 11]),
        from_gap_set([]),
        from_gap_set([1, 3]),
        from_gap_set([1, 2, 5]),
        from_gap_set([1, 2, 4]),
    ]


def random_curves(rng: random.Random, count: int) -> list[KummerCurve]:
    curves = []
    while len(curves) < count:
        m = rng.randint(2, 20)
        r = rng.randint(1, 6)
        lams = tuple(rng.randint(1, m - 1) for _ in range(r))
        try:
            curves.append(KummerCurve(m, lams))
        except InvalidInputError:
            continue
    return curves


def random_semigroups(rng: random.Random, count: int) -> list[NumericalSemigroup]:
    semis = []
    while len(semis) < count:
        gens = [rng.randint(2, 20) for _ in range(rng.randint(2, 4))]
        if math.gcd(*gens) != 1:
            continue
        semis.append(from_generators(gens))
    return semis


def random_profiles(rng: random.Random, count: int) -> list[LimitProfile]:
    profiles = []
    for index in range(count):
        m = rng.randint(2, 12)
        admissible = coprime_residues(m)
        if index % 3 == 0:
            chosen = rng.choice(admissible)
            weights = {chosen: 1}
        elif index % 3 == 1:
            # Mirror-symmetric profile: k_j == k_{m-j}.
            weights = {}
            for j in admissible:
                if j <= m - j:
                    w = rng.randint(0, 4)
                    weights[j] = weights.get(j, 0) + w
                    weights[m - j] = weights.get(m - j, 0) + w
            if sum(weights.values()) == 0:
                weights = {admissible[0]: 1, admissible[-1]: 1}
        else:
            weights = {j: rng.randint(0, 4) for j in admissible}
            if sum(weights.values()) == 0:
                weights[rng.choice(admissible)] = 1
        total = sum(weights.values())
        profiles.append(
            LimitProfile.from_densities(
                m, {j: Fraction(w, total) for j, w in weights.items() if w}
            )
        )
    return profiles


def _all_coprime_affine(curve: KummerCurve) -> bool:
    return all(math.gcd(curve.m, lam) == 1 for lam in curve.lambdas)


def _all_coprime(curve: KummerCurve) -> bool:
    return _all_coprime_affine(curve) and math.gcd(curve.m, curve.lambda0) == 1


def _result(name: str, failures: list[str], cases: int) -> CheckResult:
    if failures:
        return CheckResult(name, False, f"{len(failures)} failures; first: {failures[0]}")
    return CheckResult(name, True, f"{cases} cases")


# ---------------------------------------------------------------------------
# semigroup kernel checks


def check_complement_closure(semis: Sequence[NumericalSemigroup]) -> CheckResult:
    failures, cases = [], 0
    for H in semis:
        cases += 1
        try:
            from_gap_set(H.gaps)
        except InvalidInputError as exc:
            failures.append(f"gaps {H.gaps}: {exc}")
    return _result("complement closed under addition", failures, cases)


def check_round_trip(semis: Sequence[NumericalSemigroup]) -> CheckResult:
    failures, cases = [], 0
    for H in semis:
        cases += 1
        if from_gap_set(H.gaps) != H:
            failures.append(f"gaps {H.gaps}")
    return _result("gap-set round trip", failures, cases)


def check_apery_structure(semis: Sequence[NumericalSemigroup]) -> CheckResult:
    failures, cases = [], 0
    for H in semis:
        bases = [n for n in range(1, H.frobenius + 2) if H.is_member(n)]
        if not bases:
            bases = [H.multiplicity]
        for base in bases:
            cases += 1
            ap = semigroups.apery(H, base)
            residues = {w % base for w in ap.values}
            if len(residues) != base:
                failures.append(f"{H.gaps} base {base}: residues collide")
                continue
            if not all(
                H.is_member(w) and (w < base or not H.is_member(w - base))
                for w in ap.values
            ):
                failures.append(f"{H.gaps} base {base}: value not minimal member")
    return _result("apery values cover residues minimally", failures, cases)


def check_symmetry_all_bases(semis: Sequence[NumericalSemigroup]) -> CheckResult:
    failures, cases = [], 0
    for H in semis:
        expected = H.frobenius == 2 * H.genus - 1
        bases = [n for n in range(1, H.frobenius + 2) if H.is_member(n)] or [1]
        for base in bases:
            cases += 1
            ap = sorted(semigroups.apery(H, base).values)
            paired = all(ap[i] + ap[-1 - i] == ap[-1] for i in range(len(ap)))
            if paired != expected:
                failures.append(f"{H.gaps} base {base}")
    return _result("symmetry agrees with apery pairing at every base", failures, cases)


def check_frobenius_bound(semis: Sequence[NumericalSemigroup]) -> CheckResult:
    # Classical bound: F < g1*g2 for the two smallest minimal generators,
    # valid whenever they are coprime.
    failures, cases = [], 0
    for H in semis:
        gens = semigroups.minimal_generators(H)
        if len(gens) < 2 or math.gcd(gens[0], gens[1]) != 1:
            continue
        cases += 1
        if H.frobenius >= gens[0] * gens[1]:
            failures.append(f"{H.gaps}: F={H.frobenius} gens={gens[:2]}")
    return _result("Frobenius below product of coprime smallest generators", failures, cases)


# ---------------------------------------------------------------------------
# curve checks


def _ramified_places(curve: KummerCurve) -> tuple[int, ...]:
    return curve.totally_ramified_places()


def check_oracle_equality(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        for s in _ramified_places(curve):
            cases += 1
            if gap_set(curve, s) != gap_set_reference(curve, s):
                failures.append(f"m={curve.m} lambdas={curve.lambdas} place {s}")
    return _result("gap set equals set-builder oracle", failures, cases)


def check_gap_count(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        for s in _ramified_places(curve):
            cases += 1
            if len(gap_set(curve, s)) != curve.genus:
                failures.append(f"m={curve.m} lambdas={curve.lambdas} place {s}")
    return _result("gap count equals genus", failures, cases)


def check_gap_complement_closed(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        for s in _ramified_places(curve):
            cases += 1
            try:
                from_gap_set(gap_set(curve, s))
            except InvalidInputError as exc:
                failures.append(f"m={curve.m} lambdas={curve.lambdas} place {s}: {exc}")
    return _result("gap-set complement is a semigroup", failures, cases)


def check_count_transport(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        for s in _ramified_places(curve):
            if s == 0:
                continue
            for i in range(1, curve.m):
                cases += 1
                moved = curve.residue_gap_count(s, curve.gap_residue(s, i))
                if moved != curve.gap_class_count(i):
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s} i={i}"
                    )
    return _result("class counts transport along residues", failures, cases)


def check_residue_sum(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        if not _all_coprime_affine(curve):
            continue
        for i in range(1, curve.m):
            cases += 1
            total = sum(curve.gap_residue(k, i) for k in range(curve.r + 1))
            if total != curve.m * (curve.r - curve.gap_class_count(i)):
                failures.append(f"m={curve.m} lambdas={curve.lambdas} i={i}")
    return _result("residue sums determine class counts", failures, cases)


def check_count_reflection(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        if not _all_coprime(curve):
            continue
        for i in range(1, curve.m):
            cases += 1
            total = curve.gap_class_count(i) + curve.gap_class_count(curve.m - i)
            if total != curve.r - 1:
                failures.append(f"m={curve.m} lambdas={curve.lambdas} i={i}")
    return _result("class counts reflect to r-1", failures, cases)


def check_apery_pair_sum(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        if not _all_coprime(curve):
            continue
        for s in _ramified_places(curve):
            values = sorted(weierstrass_apery(curve, s).values)
            for i in range(1, curve.m):
                cases += 1
                if values[i] + values[curve.m - i] != curve.m * curve.r:
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s} i={i}"
                    )
    return _result("sorted apery values pair to m*r", failures, cases)


def check_apery_against_scan(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        for s in _ramified_places(curve):
            cases += 1
            H = from_gap_set(gap_set(curve, s))
            if weierstrass_apery(curve, s) != semigroups.apery(H, curve.m):
                failures.append(f"m={curve.m} lambdas={curve.lambdas} place {s}")
                continue
            if weierstrass_semigroup(curve, s) != H:
                failures.append(
                    f"m={curve.m} lambdas={curve.lambdas} place {s}: regeneration"
                )
    return _result("closed-form apery and generators match brute force", failures, cases)


def check_invariant_formulas(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        counts = [curve.gap_class_count(i) for i in range(1, curve.m)]
        for s in _ramified_places(curve):
            cases += 1
            H = from_gap_set(gap_set(curve, s))
            if multiplicity(curve, s) != H.multiplicity:
                failures.append(f"m={curve.m} lambdas={curve.lambdas} place {s}: mult")
                continue
            if curve.genus > 0 and frobenius(curve, s) != H.frobenius:
                failures.append(f"m={curve.m} lambdas={curve.lambdas} place {s}: frob")
                continue
            # Multiplicity hits m exactly when every family is occupied.
            if (multiplicity(curve, s) == curve.m) != all(c >= 1 for c in counts):
                failures.append(
                    f"m={curve.m} lambdas={curve.lambdas} place {s}: occupancy"
                )
                continue
            if _all_coprime(curve):
                expected = min(curve.m, curve.m * (curve.r - 1) - H.frobenius)
                if H.multiplicity != expected:
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s}: mult-frob"
                    )
                    continue
                if curve.m <= curve.r and H.multiplicity != curve.m:
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s}: m<=r"
                    )
    return _result("multiplicity and Frobenius formulas match brute force", failures, cases)


def check_symmetry_verdicts(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        for s in _ramified_places(curve):
            cases += 1
            verdict = symmetry_predict(curve, s)
            H = from_gap_set(gap_set(curve, s))
            actual = semigroups.is_symmetric(H)
            if _all_coprime(curve):
                expected = (
                    SymmetryVerdict.SYMMETRIC if actual else SymmetryVerdict.NOT_SYMMETRIC
                )
                if verdict is not expected:
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s}: verdict"
                    )
                    continue
                if actual:
                    span = from_generators([curve.m, curve.r])
                    if H != span:
                        failures.append(
                            f"m={curve.m} lambdas={curve.lambdas} place {s}: not <m,r>"
                        )
            else:
                if verdict is SymmetryVerdict.SUFFICIENT_CONDITION_HOLDS and not actual:
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s}: sufficient"
                    )
                if verdict in (SymmetryVerdict.SYMMETRIC, SymmetryVerdict.NOT_SYMMETRIC):
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s}: exact verdict "
                        "outside the all-coprime case"
                    )
    return _result("symmetry verdicts", failures, cases)


def check_residue_bijection(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        for s in _ramified_places(curve):
            if s == 0:
                continue
            cases += 1
            image = {curve.gap_residue(s, i) for i in range(1, curve.m)}
            if image != set(range(1, curve.m)):
                failures.append(f"m={curve.m} lambdas={curve.lambdas} place {s}")
    return _result("gap residues permute 1..m-1", failures, cases)


def check_differentials(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        target = 2 * curve.genus - 2
        for s in _ramified_places(curve):
            cases += 1
            anchor = s if s >= 1 else None
            valuations = []
            for _i, _j, divisor in basis_divisors(curve, anchor):
                if not divisor.is_effective():
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s}: not effective"
                    )
                    break
                if divisor_degree(curve, divisor) != target:
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s}: degree"
                    )
                    break
                valuations.append(divisor.coefficient(s))
            else:
                if tuple(sorted(v + 1 for v in valuations)) != gap_set(curve, s):
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s}: gap recovery"
                    )
    return _result("differential divisors certify gap sets", failures, cases)


def check_partial_and_generic(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        cases += 1
        generic = generic_gap_set(curve)
        top = len(generic.values)
        if generic.values != tuple(range(1, top + 1)):
            failures.append(f"m={curve.m} lambdas={curve.lambdas}: generic shape")
            continue
        if generic.complete != (curve.m == 2):
            failures.append(f"m={curve.m} lambdas={curve.lambdas}: generic flag")
            continue
        for s in range(curve.r + 1):
            if curve.is_totally_ramified(s):
                continue
            cases += 1
            subset = partial_gap_set(curve, s)
            if any(v < 1 for v in subset.values) or list(subset.values) != sorted(
                set(subset.values)
            ):
                failures.append(f"m={curve.m} lambdas={curve.lambdas} place {s}: shape")
                continue
            if curve.m == 2:
                ordinary = tuple(range(1, curve.genus + 1))
                if not subset.complete or subset.values != ordinary:
                    failures.append(
                        f"m={curve.m} lambdas={curve.lambdas} place {s}: hyperelliptic"
                    )
    return _result("partial and generic gap subsets well formed", failures, cases)


# ---------------------------------------------------------------------------
# weight checks


def check_limit_bounds(profiles: Sequence[LimitProfile]) -> CheckResult:
    failures, cases = [], 0
    for profile in profiles:
        cases += 1
        value = asymptotic_limit(profile)
        lower, upper = limit_bounds(profile.m)
        if not lower <= value <= upper:
            failures.append(f"profile m={profile.m}: out of bounds")
            continue
        concentrated = any(k == 1 for _, k in profile.densities)
        if concentrated != (value == upper):
            failures.append(f"profile m={profile.m}: upper equality misfire")
            continue
        mirrored = all(
            profile.density(j) == profile.density(profile.m - j)
            for j, _ in profile.densities
        )
        if mirrored and value != lower:
            failures.append(f"profile m={profile.m}: lower equality misfire")
    return _result("asymptotic limit boxed by its bounds", failures, cases)


def check_limit_reflection(profiles: Sequence[LimitProfile]) -> CheckResult:
    failures, cases = [], 0
    for profile in profiles:
        cases += 1
        m = profile.m
        total = Fraction(0)
        for i in range(1, m):
            row = sum(
                ((m - (i * j) % m) * k for j, k in profile.densities), Fraction(0)
            )
            total += row * row
        reflected = Fraction(4, m * (m - 1) ** 3) * total - Fraction(1, m - 1)
        if reflected != asymptotic_limit(profile):
            failures.append(f"profile m={profile.m}")
    return _result("limit invariant under residue reflection", failures, cases)


def check_weights(curves: Sequence[KummerCurve]) -> CheckResult:
    failures, cases = [], 0
    for curve in curves:
        cases += 1
        if bw(curve) < 0:
            failures.append(f"m={curve.m} lambdas={curve.lambdas}: negative weight sum")
    for r in (5, 7, 9):
        cases += 1
        if bw_ratio(KummerCurve(2, (1,) * r)) != 1:
            failures.append(f"hyperelliptic r={r}: ratio not 1")
    return _result("weight sums nonnegative; hyperelliptic ratio 1", failures, cases)


# ---------------------------------------------------------------------------
# driver


def run_all(
    seed: int = DEFAULT_SEED,
    curve_count: int = 120,
    semigroup_count: int = 40,
    profile_count: int = 90,
) -> list[CheckResult]:
    """Run every check over the built-in plus seeded random corpora."""
    rng = random.Random(seed)
    curves = builtin_curves() + random_curves(rng, curve_count)
    semis = builtin_semigroups() + random_semigroups(rng, semigroup_count)
    for curve in curves[: len(builtin_curves())]:
        for s in _ramified_places(curve):
            semis.append(weierstrass_semigroup(curve, s))
    profiles = random_profiles(rng, profile_count)

    checks: list[Callable[[], CheckResult]] = [
        lambda: check_complement_closure(semis),
        lambda: check_round_trip(semis),
        lambda: check_apery_structure(semis),
        lambda: check_symmetry_all_bases(semis),
        lambda: check_frobenius_bound(semis),
        lambda: check_oracle_equality(curves),
        lambda: check_gap_count(curves),
        lambda: check_gap_complement_closed(curves),
        lambda: check_count_transport(curves),
        lambda: check_residue_sum(curves),
        lambda: check_count_reflection(curves),
        lambda: check_apery_pair_sum(curves),
        lambda: check_apery_against_scan(curves),
        lambda: check_invariant_formulas(curves),
        lambda: check_symmetry_verdicts(curves),
        lambda: check_residue_bijection(curves),
        lambda: check_differentials(curves),
        lambda: check_partial_and_generic(curves),
        lambda: check_limit_bounds(profiles),
        lambda: check_limit_reflection(profiles),
        lambda: check_weights(curves),
    ]
    return [check() for check in checks]
