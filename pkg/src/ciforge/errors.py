"""Exception hierarchy shared across the package."""


class CiforgeError(Exception):
    """Base class for all domain errors raised by this package."""


class ConceptSyntaxError(CiforgeError):
    """Malformed concept text; carries the offset of the offending token."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ValidationError(CiforgeError):
    """A value violates a structural invariant (bad ids, empty domain, ...)."""


class ResourceCapError(CiforgeError):
    """A computation exceeded a configured size cap instead of thrashing."""
