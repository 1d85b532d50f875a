"""Exact gap sets, Weierstrass semigroups and weights on cyclic covers.

The package computes, from the ramification datum (m; lambda_1..lambda_r)
of a cyclic cover of the projective line, the gap set and Weierstrass
semigroup at every totally ramified place, partial gap data elsewhere,
divisors of a certifying basis of holomorphic differentials, and the
exact asymptotics of the totally-ramified Weierstrass weight sum.
Every closed form is paired with an independent brute-force check in
:mod:`kummergaps.semigroups` and :mod:`kummergaps.verification`.
"""

from .curves import KummerCurve
from .differentials import (
    EXTRA_FIBER,
    INFINITY_FIBER,
    Divisor,
    basis_divisors,
    differential_divisor,
    divisor_degree,
)
from .errors import (
    ClosureViolationError,
    GenusZeroError,
    InvalidBaseError,
    InvalidInputError,
    KummerGapsError,
    NotASemigroupError,
    NotTotallyRamifiedError,
    ProfileError,
    RatioUndefinedError,
    TotallyRamifiedError,
)
from .gapsets import (
    CoincidenceReport,
    GapSubset,
    SymmetryVerdict,
    frobenius,
    gap_set,
    gap_set_reference,
    gap_sets_coincide,
    generic_gap_set,
    multiplicity,
    partial_gap_set,
    symmetry_predict,
    weierstrass_apery,
    weierstrass_semigroup,
)
from .semigroups import (
    AperyTuple,
    NumericalSemigroup,
    apery,
    from_gap_set,
    from_generators,
    generators_via_apery,
    invariants,
    is_symmetric,
    minimal_generators,
)
from .weights import (
    LimitProfile,
    SweepRow,
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

__version__ = "0.1.0"
