"""Exception types shared across the toolkit."""


class LatsecError(Exception):
    """Base class for all toolkit errors."""


class InvalidLattice(LatsecError):
    """Generator matrix is singular or otherwise not a lattice basis."""


class EnumerationLimit(LatsecError):
    """Dimension or point budget exceeds the exact-enumeration regime."""


class TailToleranceError(LatsecError):
    """A certified theta-series tail bound could not be pushed below tolerance."""


class NotSmoothEnough(LatsecError):
    """Flatness-factor precondition of a smoothing-based lemma is violated."""


class NestingError(LatsecError):
    """Requested nested-lattice rates are not realizable for the base lattice."""

    def __init__(self, message, nearest_rate=None):
        super().__init__(message)
        self.nearest_rate = nearest_rate


class ConsistencyError(LatsecError):
    """Algebraic input (order basis, ideal basis) fails its consistency checks."""


class ConfigError(LatsecError):
    """Malformed experiment config or exchange file."""
