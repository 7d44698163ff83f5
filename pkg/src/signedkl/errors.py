"""Exception types shared across the package."""


class SignedKLError(Exception):
    """Base class for all package errors."""


class ConfigError(SignedKLError):
    """Unsupported Cartan type/rank or malformed configuration."""


class DomainError(SignedKLError):
    """Argument outside an operation's mathematical domain."""


class DegenerateWeightError(SignedKLError):
    """Weight lies on an affine hyperplane where a regular weight is required."""


class ResourceLimitError(SignedKLError):
    """Enumeration would exceed the configured size cap."""


class PathError(SignedKLError):
    """A segment or gallery does not cross walls the way the caller claimed."""


class UnsupportedLambdaError(SignedKLError):
    """Lambda violates the regular antidominant hypothesis."""
