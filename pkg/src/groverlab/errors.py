"""Exception types shared across the toolkit."""


class CapacityError(ValueError):
    """A requested problem size exceeds a configured resource cap."""


class ShapeMismatchError(ValueError):
    """Operands live in spaces of different dimension."""


class NormalizationError(ValueError):
    """A vector or matrix violates its unit-norm or unitarity precondition."""


class DegeneratePlaneError(ValueError):
    """The solution / non-solution plane is undefined for this problem."""


class ConfigError(ValueError):
    """Invalid experiment configuration. Messages name the offending field."""
