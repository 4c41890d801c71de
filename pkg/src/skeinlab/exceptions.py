"""Exception types shared across the package."""


class SkeinlabError(Exception):
    """Base class for domain errors raised by skeinlab."""


class InadmissibleError(SkeinlabError, ValueError):
    """A coordinate vector violates the admissibility constraints."""


class NotContainedError(SkeinlabError, ValueError):
    """A lattice is not contained in the lattice it was compared against."""


class ResourceLimitError(SkeinlabError, RuntimeError):
    """An enumeration would exceed the configured size cap."""


class UnsupportedError(SkeinlabError, NotImplementedError):
    """The requested computation is not available for this input kind."""
