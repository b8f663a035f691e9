"""Custom exceptions for spectral computations and verification."""


class SpectralError(Exception):
    """Base exception for all spectral operations."""

    pass


class InvalidInputError(SpectralError, ValueError):
    """Precondition violations.

    Examples:
    - n outside the range an operation accepts
    - Unknown family or vertex class
    - Empty verification range
    """

    pass


class ConfigurationError(InvalidInputError):
    """Invalid environment configuration (UACG_TOL, UACG_JOBS)."""

    pass


class MatrixTooLargeError(InvalidInputError):
    """Matrix order above the dense guard."""

    pass


class DisconnectedGraphError(SpectralError):
    """Distance query on a graph with unreachable vertex pairs."""

    pass


class NoClosedFormError(SpectralError):
    """No closed-form branch applies to the requested (family, n)."""

    pass


class NoConvergenceError(SpectralError):
    """Eigensolver hit its sweep cap.

    Symmetric Jacobi always converges, so this signals a bug.
    """

    pass
