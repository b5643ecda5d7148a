"""Exception hierarchy for kgvacuum.

Every error carries the process exit code the CLI maps it to:
0 success, 1 usage/configuration, 2 divergent integral,
3 non-convergent quadrature, 4 verification failure.
"""

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DIVERGENT = 2
EXIT_NON_CONVERGENT = 3
EXIT_VERIFICATION_FAILED = 4


class KgVacuumError(Exception):
    """Base class for all kgvacuum errors."""

    exit_code = EXIT_USAGE


class ConfigurationError(KgVacuumError, ValueError):
    """Invalid parameters or an incomplete evaluation context."""


class DivergentIntegral(KgVacuumError):
    """A spectral integral (or the kernel at m = 0) has no finite value."""

    exit_code = EXIT_DIVERGENT


class NonConvergent(KgVacuumError):
    """Quadrature or extrapolation did not reach the requested tolerance."""

    exit_code = EXIT_NON_CONVERGENT


class DegenerateTestFunction(KgVacuumError):
    """A test-function norm underflowed, so ratios involving it are undefined."""


class EnvelopeFailure(KgVacuumError):
    """Rejection sampling accepted too rarely; the envelope does not fit the density."""


class InsufficientSamples(KgVacuumError):
    """Too few samples for the asymptotic statistic to be meaningful."""


class HermitianSymmetryError(KgVacuumError, AssertionError):
    """A field configuration is not the transform of a real field."""


class VerificationFailed(KgVacuumError):
    """At least one acceptance check failed."""

    exit_code = EXIT_VERIFICATION_FAILED


__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_DIVERGENT",
    "EXIT_NON_CONVERGENT",
    "EXIT_VERIFICATION_FAILED",
    "KgVacuumError",
    "ConfigurationError",
    "DivergentIntegral",
    "NonConvergent",
    "DegenerateTestFunction",
    "EnvelopeFailure",
    "InsufficientSamples",
    "HermitianSymmetryError",
    "VerificationFailed",
]
