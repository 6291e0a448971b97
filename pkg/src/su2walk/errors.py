class DomainError(ValueError):
    """An argument lies outside the domain an operation is defined on."""


class ResourceError(MemoryError):
    """A request would exceed the configured memory budget."""
