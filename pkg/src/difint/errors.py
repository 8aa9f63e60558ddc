"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ShapeError(ValueError):
    """A composition cannot be represented: net s power outside {-1, 0, +1}
    or mismatched factor multiplicities."""


class EpsilonRangeError(ValueError):
    """A ripple offset lies outside (or was required but missing from) the
    admissible half-open interval of the one-point design methods."""

    def __init__(self, epsilon, lower, upper):
        self.epsilon = epsilon
        self.lower = lower
        self.upper = upper
        if epsilon is None:
            detail = "epsilon is required"
        else:
            detail = f"epsilon={epsilon!r} is out of range"
        super().__init__(
            f"{detail}; admissible interval is ({lower!r}, {upper!r}] dB"
        )


class ConditioningError(ValueError):
    """A partial-fraction expansion hit coincident poles from different
    factor pairs."""


class NotRealizableError(ValueError):
    """The summation form is not the driving-point impedance of a passive
    series RC network."""
