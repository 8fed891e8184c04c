"""Exception types shared across the package."""


class TrustrelError(Exception):
    """Base class for every error this package raises deliberately."""


class SchemaError(TrustrelError):
    """A document could not be parsed into the expected shape."""


class ValidationError(TrustrelError):
    """Structurally well-formed input violates a domain invariant."""
