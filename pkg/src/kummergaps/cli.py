"""Command-line front end.

Subcommands map one-to-one onto library operations and emit a
deterministic JSON report on stdout; domain errors exit 1 with a
machine-readable code on stderr, usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import IO

from . import gapsets, semigroups, verification, weights
from .curves import KummerCurve
from .differentials import EXTRA_FIBER, basis_divisors, divisor_degree
from .errors import InvalidInputError, KummerGapsError

DOMAIN_ERROR = 1


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InvalidInputError(f"{flag} expects a comma-separated integer list")


def _parse_densities(text: str) -> dict[int, Fraction]:
    densities: dict[int, Fraction] = {}
    for part in text.split(","):
        if "=" not in part:
            raise InvalidInputError("--k expects entries like 1=1/2,2=1/2")
        key, _, value = part.partition("=")
        try:
            j = int(key)
            densities[j] = Fraction(value)
        except (ValueError, ZeroDivisionError):
            raise InvalidInputError(f"--k entry {part!r} is not j=p/q")
    return densities


def _fraction_str(value: Fraction) -> str:
    return str(value)


def _decimal_str(value: Fraction, digits: int) -> str:
    scaled = round(value * 10**digits)
    sign = "-" if scaled < 0 else ""
    body = str(abs(scaled)).rjust(digits + 1, "0")
    if digits == 0:
        return sign + body
    return f"{sign}{body[:-digits]}.{body[-digits:]}"


def _rational(value: Fraction, args: argparse.Namespace) -> object:
    if getattr(args, "decimal", None) is not None:
        return {"exact": _fraction_str(value), "decimal": _decimal_str(value, args.decimal)}
    return _fraction_str(value)


def _load_curve(args: argparse.Namespace, warnings: list[str]) -> KummerCurve:
    m = args.m
    lambdas = _parse_int_list(args.lambdas, "--lambdas") if args.lambdas else None
    if args.curve:
        with open(args.curve, "r", encoding="utf-8") as handle:
            data = json.load(handle)
        if not isinstance(data, dict) or "m" not in data or "lambdas" not in data:
            raise InvalidInputError('curve file must contain {"m": ..., "lambdas": [...]}')
        if m is None:
            m = data["m"]
        elif m != data["m"]:
            warnings.append("--m overrides the curve file")
        if lambdas is None:
            lambdas = tuple(data["lambdas"])
        elif tuple(lambdas) != tuple(data["lambdas"]):
            warnings.append("--lambdas overrides the curve file")
    if m is None or lambdas is None:
        raise InvalidInputError("a curve is required: pass --m and --lambdas or --curve FILE")
    return KummerCurve(int(m), tuple(int(x) for x in lambdas))


def _curve_echo(curve: KummerCurve) -> dict:
    return {"m": curve.m, "lambdas": list(curve.lambdas)}


def _fiber_label(key: int) -> str:
    if key == EXTRA_FIBER:
        return "extra"
    if key == 0:
        return "infinity"
    return f"fiber_{key}"


def _add_curve_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--m", type=int, help="cover degree")
    parser.add_argument("--lambdas", help="comma-separated branch multiplicities")
    parser.add_argument("--curve", help='JSON file {"m": 9, "lambdas": [1,1,3,3]}')


def _add_place_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--place", type=int, default=0, help="place index (default 0)")
    parser.add_argument(
        "--all-places", action="store_true", help="iterate every totally ramified place"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kummergaps",
        description="Gap sets, Weierstrass semigroups and weights on cyclic covers",
    )
    parser.add_argument("--decimal", type=int, help="also render rationals with N digits")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gapset", help="gap set at a place")
    _add_curve_flags(p)
    _add_place_flags(p)
    p.add_argument("--reference", action="store_true", help="use the set-builder oracle")
    p.add_argument("--partial", action="store_true", help="known subset at a non-totally-ramified place")
    p.add_argument("--generic", action="store_true", help="known gaps at a generic place")

    for name, help_text in [
        ("semigroup", "Weierstrass semigroup at a place"),
        ("apery", "Apery tuple (base m) at a place"),
        ("invariants", "genus, Frobenius number and multiplicity at a place"),
        ("symmetry", "symmetry verdict plus direct check at a place"),
    ]:
        p = sub.add_parser(name, help=help_text)
        _add_curve_flags(p)
        _add_place_flags(p)

    p = sub.add_parser("coincide", help="compare gap sets at two places")
    _add_curve_flags(p)
    p.add_argument("--places", required=True, help="two place indices, e.g. 0,1")

    p = sub.add_parser("divisors", help="divisors of the differential basis")
    _add_curve_flags(p)
    p.add_argument(
        "--anchor",
        default="generic",
        help="'generic' or an affine branch index 1..r (default generic)",
    )

    p = sub.add_parser("weights", help="per-place weights, their sum, and the exact ratio")
    _add_curve_flags(p)

    p = sub.add_parser("limit", help="asymptotic ratio for a density profile")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", required=True, help="densities, e.g. 1=1/2,2=1/2")

    p = sub.add_parser("sweep", help="convergence table for pattern-repetition curves")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--pattern", required=True, help="comma-separated multiplicities")
    p.add_argument("--repeats", required=True, help="comma-separated repeat counts")

    p = sub.add_parser("verify", help="run the full invariant suite")
    p.add_argument("--seed", type=int, default=verification.DEFAULT_SEED)
    p.add_argument("--curves", type=int, default=120, help="random curve count")
    p.add_argument("--semigroups", type=int, default=40, help="random semigroup count")
    p.add_argument("--profiles", type=int, default=90, help="random profile count")
    return parser


def _places_for(curve: KummerCurve, args: argparse.Namespace) -> list[int]:
    if args.all_places:
        return list(curve.totally_ramified_places())
    return [args.place]


def _cmd_gapset(args: argparse.Namespace, warnings: list[str]) -> dict:
    curve = _load_curve(args, warnings)
    if sum(map(bool, (args.reference, args.partial, args.generic))) > 1:
        raise InvalidInputError("--reference, --partial and --generic are exclusive")
    results: dict = {"genus": curve.genus}
    if args.generic:
        subset = gapsets.generic_gap_set(curve)
        results["gaps"] = list(subset.values)
        results["complete"] = subset.complete
        if not subset.complete:
            warnings.append("partial gap set: completeness not guaranteed")
        return {"input": _curve_echo(curve), "results": results}
    if args.partial:
        if args.all_places:
            places = [s for s in range(curve.r + 1) if not curve.is_totally_ramified(s)]
        else:
            places = [args.place]
        per_place = {}
        complete = True
        for s in places:
            subset = gapsets.partial_gap_set(curve, s)
            per_place[str(s)] = list(subset.values)
            complete = complete and subset.complete
        results["gaps"] = per_place if args.all_places else per_place[str(places[0])]
        results["complete"] = complete
        if not complete:
            warnings.append("partial gap set: completeness not guaranteed")
        return {"input": {**_curve_echo(curve), "places": places}, "results": results}
    places = _places_for(curve, args)
    if args.reference:
        if args.all_places:
            results["gaps"] = {
                str(s): list(gapsets.gap_set_reference(curve, s)) for s in places
            }
        else:
            results["gaps"] = list(gapsets.gap_set_reference(curve, places[0]))
        return {"input": {**_curve_echo(curve), "places": places}, "results": results}
    if args.all_places:
        results["gaps"] = {str(s): list(gapsets.gap_set(curve, s)) for s in places}
    elif curve.is_totally_ramified(places[0]):
        results["gaps"] = list(gapsets.gap_set(curve, places[0]))
    else:
        # Closed form needs total ramification; report the known subset
        # instead, flagged loudly.
        subset = gapsets.partial_gap_set(curve, places[0])
        results["gaps"] = list(subset.values)
        results["complete"] = subset.complete
        if not subset.complete:
            warnings.append("partial gap set: completeness not guaranteed")
    return {"input": {**_curve_echo(curve), "places": places}, "results": results}


def _semigroup_payload(curve: KummerCurve, place: int) -> dict:
    semigroup = gapsets.weierstrass_semigroup(curve, place)
    ap = gapsets.weierstrass_apery(curve, place)
    return {
        "generators": list(semigroups.generators_via_apery(semigroup, curve.m)),
        "minimal_generators": list(semigroups.minimal_generators(semigroup)),
        "gaps": list(semigroup.gaps),
        "genus": semigroup.genus,
        "frobenius": semigroup.frobenius,
        "multiplicity": semigroup.multiplicity,
        "apery": list(ap.values),
    }


def _cmd_semigroup(args: argparse.Namespace, warnings: list[str]) -> dict:
    curve = _load_curve(args, warnings)
    places = _places_for(curve, args)
    if args.all_places:
        results = {"places": {str(s): _semigroup_payload(curve, s) for s in places}}
    else:
        results = _semigroup_payload(curve, places[0])
    return {"input": {**_curve_echo(curve), "places": places}, "results": results}


def _cmd_apery(args: argparse.Namespace, warnings: list[str]) -> dict:
    curve = _load_curve(args, warnings)
    places = _places_for(curve, args)
    payload = {}
    for s in places:
        ap = gapsets.weierstrass_apery(curve, s)
        scan = semigroups.apery(
            semigroups.from_gap_set(gapsets.gap_set(curve, s)), curve.m
        )
        payload[str(s)] = {
            "base": ap.base,
            "values": list(ap.values),
            "matches_brute_force": ap == scan,
        }
    results = payload if args.all_places else payload[str(places[0])]
    return {"input": {**_curve_echo(curve), "places": places}, "results": results}


def _invariants_payload(curve: KummerCurve, place: int) -> dict:
    semigroup = gapsets.weierstrass_semigroup(curve, place)
    closed_multiplicity = gapsets.multiplicity(curve, place)
    closed_frobenius = (
        gapsets.frobenius(curve, place) if curve.genus > 0 else None
    )
    return {
        "genus": semigroup.genus,
        "frobenius": semigroup.frobenius,
        "multiplicity": semigroup.multiplicity,
        "closed_form": {
            "multiplicity": closed_multiplicity,
            "frobenius": closed_frobenius,
        },
        "agrees": closed_multiplicity == semigroup.multiplicity
        and (closed_frobenius is None or closed_frobenius == semigroup.frobenius),
    }


def _cmd_invariants(args: argparse.Namespace, warnings: list[str]) -> dict:
    curve = _load_curve(args, warnings)
    places = _places_for(curve, args)
    if args.all_places:
        results = {"places": {str(s): _invariants_payload(curve, s) for s in places}}
    else:
        results = _invariants_payload(curve, places[0])
    return {"input": {**_curve_echo(curve), "places": places}, "results": results}


def _cmd_symmetry(args: argparse.Namespace, warnings: list[str]) -> dict:
    curve = _load_curve(args, warnings)
    places = _places_for(curve, args)
    payload = {}
    consistent_when_true = (
        gapsets.SymmetryVerdict.SYMMETRIC,
        gapsets.SymmetryVerdict.SUFFICIENT_CONDITION_HOLDS,
        gapsets.SymmetryVerdict.INCONCLUSIVE,
    )
    consistent_when_false = (
        gapsets.SymmetryVerdict.NOT_SYMMETRIC,
        gapsets.SymmetryVerdict.INCONCLUSIVE,
    )
    for s in places:
        verdict = gapsets.symmetry_predict(curve, s)
        direct = semigroups.is_symmetric(
            semigroups.from_gap_set(gapsets.gap_set(curve, s))
        )
        payload[str(s)] = {
            "verdict": verdict.value,
            "symmetric": direct,
            "consistent": verdict
            in (consistent_when_true if direct else consistent_when_false),
        }
    results = payload if args.all_places else payload[str(places[0])]
    return {"input": {**_curve_echo(curve), "places": places}, "results": results}


def _cmd_coincide(args: argparse.Namespace, warnings: list[str]) -> dict:
    curve = _load_curve(args, warnings)
    places = _parse_int_list(args.places, "--places")
    if len(places) != 2:
        raise InvalidInputError("--places expects exactly two indices")
    first, second = places
    report = gapsets.gap_sets_coincide(curve, first, second)
    results = {
        "equal": report.equal,
        "criterion": report.criterion,
        "gap_sets": {
            str(first): list(gapsets.gap_set(curve, first)),
            str(second): list(gapsets.gap_set(curve, second)),
        },
    }
    return {"input": {**_curve_echo(curve), "places": [first, second]}, "results": results}


def _cmd_divisors(args: argparse.Namespace, warnings: list[str]) -> dict:
    curve = _load_curve(args, warnings)
    if args.anchor == "generic":
        anchor = None
    else:
        try:
            anchor = int(args.anchor)
        except ValueError:
            raise InvalidInputError("--anchor expects 'generic' or an integer 1..r")
    entries = []
    target = 2 * curve.genus - 2
    all_effective = True
    all_degree = True
    for i, j, divisor in basis_divisors(curve, anchor):
        degree = divisor_degree(curve, divisor)
        all_effective = all_effective and divisor.is_effective()
        all_degree = all_degree and degree == target
        entries.append(
            {
                "i": i,
                "j": j,
                "coefficients": {_fiber_label(k): c for k, c in divisor.entries},
                "degree": degree,
            }
        )
    results: dict = {
        "anchor": "generic" if anchor is None else anchor,
        "count": len(entries),
        "genus": curve.genus,
        "all_effective": all_effective,
        "all_degree_2g_minus_2": all_degree,
        "divisors": entries,
    }
    certified = anchor if anchor is not None else 0
    if curve.is_totally_ramified(certified):
        recovered = sorted(
            entry["coefficients"].get(_fiber_label(certified), 0) + 1
            for entry in entries
        )
        results["certified_place"] = certified
        results["recovered_gap_set"] = recovered
        results["matches_gap_set"] = tuple(recovered) == gapsets.gap_set(curve, certified)
    return {"input": _curve_echo(curve), "results": results}


def _cmd_weights(args: argparse.Namespace, warnings: list[str]) -> dict:
    curve = _load_curve(args, warnings)
    per_place = weights.place_weights(curve)
    results: dict = {
        "genus": curve.genus,
        "place_weights": {str(s): w for s, w in sorted(per_place.items())},
        "bw": weights.bw(curve),
    }
    if curve.genus >= 2:
        results["ratio"] = _rational(weights.bw_ratio(curve), args)
    else:
        results["ratio"] = None
        warnings.append("ratio undefined: genus < 2")
    return {"input": _curve_echo(curve), "results": results}


def _cmd_limit(args: argparse.Namespace, warnings: list[str]) -> dict:
    densities = _parse_densities(args.k)
    profile = weights.LimitProfile.from_densities(args.m, densities)
    value = weights.asymptotic_limit(profile)
    lower, upper = weights.limit_bounds(args.m)
    results = {
        "limit": _rational(value, args),
        "lower_bound": _rational(lower, args),
        "upper_bound": _rational(upper, args),
        "attains_upper": value == upper,
        "attains_lower": value == lower,
    }
    echo = {"m": args.m, "k": {str(j): _fraction_str(k) for j, k in profile.densities}}
    return {"input": echo, "results": results}


def _cmd_sweep(args: argparse.Namespace, warnings: list[str]) -> dict:
    pattern = _parse_int_list(args.pattern, "--pattern")
    repeats = _parse_int_list(args.repeats, "--repeats")
    rows, notices = weights.convergence_sweep(args.m, pattern, repeats)
    warnings.extend(notices)
    results = {
        "rows": [
            {
                "repeats": row.repeats,
                "r": row.r,
                "ratio": _rational(row.ratio, args),
                "limit": _rational(row.limit, args),
                "difference": _rational(row.difference, args),
            }
            for row in rows
        ]
    }
    echo = {"m": args.m, "pattern": list(pattern), "repeats": sorted(set(repeats))}
    return {"input": echo, "results": results}


def _cmd_verify(args: argparse.Namespace, warnings: list[str]) -> dict:
    checks = verification.run_all(
        seed=args.seed,
        curve_count=args.curves,
        semigroup_count=args.semigroups,
        profile_count=args.profiles,
    )
    results = {
        "seed": args.seed,
        "checks": [
            {"name": c.name, "passed": c.passed, "details": c.details} for c in checks
        ],
        "all_passed": all(c.passed for c in checks),
    }
    return {"input": {"seed": args.seed}, "results": results}


_HANDLERS = {
    "gapset": _cmd_gapset,
    "semigroup": _cmd_semigroup,
    "apery": _cmd_apery,
    "invariants": _cmd_invariants,
    "symmetry": _cmd_symmetry,
    "coincide": _cmd_coincide,
    "divisors": _cmd_divisors,
    "weights": _cmd_weights,
    "limit": _cmd_limit,
    "sweep": _cmd_sweep,
    "verify": _cmd_verify,
}


def run(argv: list[str], out: IO[str] = sys.stdout, err: IO[str] = sys.stderr) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    warnings: list[str] = []
    try:
        body = _HANDLERS[args.command](args, warnings)
    except KummerGapsError as exc:
        payload = {"error": {"code": exc.code, "message": str(exc)}}
        err.write(json.dumps(payload, indent=2) + "\n")
        return DOMAIN_ERROR
    report = {"command": args.command, **body, "warnings": warnings}
    out.write(json.dumps(report, indent=2) + "\n")
    if args.command == "verify" and not report["results"]["all_passed"]:
        return 1
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
