"""Exception types shared across the package."""


class OutOfDisk(ValueError):
    """A coefficient lies on or outside the unit circle."""

    def __init__(self, index, value):
        self.index = index
        self.value = value
        super().__init__(f"coefficient at index {index} has |value| >= 1: {value!r}")


class BadDecay(ValueError):
    """Decay ratio of a geometric sequence is outside (0, 1)."""


class NoConvergence(RuntimeError):
    """Quadrature failed to reach the requested tolerance at the maximum grid."""


class UnsupportedOrder(ValueError):
    """Requested order is outside the implemented/budgeted range."""


class NotNonnegative(ValueError):
    """Trigonometric polynomial dips below zero; spectral factorization undefined."""


class FactorizationUnstable(RuntimeError):
    """Spectral factorization failed its pointwise residual gate."""
