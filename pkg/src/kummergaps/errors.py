"""Exception types shared across the package.

Every domain error carries a stable machine-readable ``code`` so the CLI
can surface failures without string matching.
"""

from __future__ import annotations


class KummerGapsError(ValueError):
    """Base class for all domain errors raised by this package."""

    code = "domain_error"


class InvalidInputError(KummerGapsError):
    code = "invalid_input"


class NotASemigroupError(KummerGapsError):
    """Generators with gcd != 1 cannot define a numerical semigroup."""

    code = "not_a_numerical_semigroup"


class ClosureViolationError(KummerGapsError):
    """Complement of the proposed gap set is not closed under addition."""

    code = "complement_not_a_semigroup"

    def __init__(self, message: str, witness: tuple[int, int]):
        super().__init__(message)
        self.witness = witness


class InvalidBaseError(KummerGapsError):
    """Apery base must be a nonzero member of the semigroup."""

    code = "invalid_apery_base"


class NotTotallyRamifiedError(KummerGapsError):
    """Requested closed form needs gcd(m, lambda_s) = 1 at the place."""

    code = "not_totally_ramified"


class TotallyRamifiedError(KummerGapsError):
    """Partial gap data was requested at a totally ramified place."""

    code = "totally_ramified"


class GenusZeroError(KummerGapsError):
    """The requested invariant is undefined for genus 0."""

    code = "genus_zero"


class RatioUndefinedError(KummerGapsError):
    """BW/(g^3 - g) needs genus >= 2."""

    code = "ratio_undefined"


class ProfileError(KummerGapsError):
    """Density profile violates the limit theorem hypothesis."""

    code = "limit_hypothesis_violated"
