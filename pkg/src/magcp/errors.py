"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the physical domain of an operation."""


class QuadratureError(RuntimeError):
    """A quadrature failed to reach its tolerance within the node budget.

    Carries the last value and error estimate so callers can inspect how
    close the integration got before giving up.
    """

    def __init__(self, message, value=None, estimate=None, nodes=None):
        super().__init__(message)
        self.value = value
        self.estimate = estimate
        self.nodes = nodes


class TruncationError(RuntimeError):
    """The Matsubara truncation criterion was not met within the term cap."""

    def __init__(self, message, n_terms=None, ratio=None):
        super().__init__(message)
        self.n_terms = n_terms
        self.ratio = ratio


class PoleProximityError(ValueError):
    """A real-axis polarizability evaluation landed too close to a resonance."""


class ConvergenceError(RuntimeError):
    """Successive refinement estimates failed to settle (finite differences)."""


class UnknownPresetError(KeyError):
    """Requested figure preset name is not registered."""


class ConfigError(ValueError):
    """A scan configuration failed validation."""
