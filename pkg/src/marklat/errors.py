"""Exception types shared across the package."""


class LatticeError(Exception):
    """Base class for every error raised by this package."""


class DomainError(LatticeError):
    """An argument lies outside the domain of the requested operation."""


class ValidationError(DomainError):
    """Structured input (a string form, a valuation, a JSON document) failed
    validation.  The message names the violated rule."""


class ResourceLimitError(LatticeError):
    """A configured cap or size guard was exceeded.

    ``count`` carries partial progress when the limit was hit mid-run
    (e.g. how many maps were produced before an enumeration cap fired).
    """

    def __init__(self, message, count=None):
        super().__init__(message)
        self.count = count
