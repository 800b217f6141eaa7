"""Exception types shared across the package."""


class ConfigurationError(ValueError):
    """Unsupported group type, rank, or option combination."""


class DomainError(ValueError):
    """Input outside the domain of an operation (bad index, wrong coset, ...)."""


class ResourceError(RuntimeError):
    """A computation would exceed a configured size cap."""


class NotSupported(NotImplementedError):
    """The operation exists but is not provided for this family."""
