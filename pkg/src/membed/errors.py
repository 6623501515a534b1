"""Exception hierarchy used across the package.

Every error raised on a contract violation derives from :class:`MembedError`
so callers (in particular the CLI) can distinguish configuration problems
from genuine numerical failures.
"""


class MembedError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(MembedError):
    """Invalid or unparsable user configuration."""


class InvalidParams(MembedError):
    """Parameter values violate a builder precondition (e.g. delta*lambda = 0)."""


class RegimeViolation(MembedError):
    """Requested limiting regime outside its validity bounds."""


class OverdampedUnsupported(RegimeViolation):
    """omega0 <= gamma0 requested for a regime that needs a real oscillation
    frequency; the overdamped limit is only reachable through the Debye form."""


class MissingProvenance(MembedError):
    """Operation needs the originating physical parameters, but the model
    carries only bare exponential pairs."""


class BasisUnsupported(MembedError):
    """Unknown response-function basis tag."""


class DimensionMismatch(MembedError):
    """Operator or state shape incompatible with the declared layout."""


class ZeroWeight(MembedError):
    """A diagonal frame rescaling received a zero weight."""


class TruncationTooSmall(MembedError):
    """Fock-space cutoff insufficient for the requested construction."""


class SingularTransform(MembedError):
    """Frame transformation numerically non-invertible at this truncation."""


class StepSizeUnderflow(MembedError):
    """Adaptive integrator step fell below the representable minimum
    (stiffness); consider the strong-damping reduction or a shorter span."""


class NonFiniteState(MembedError):
    """Extended state overflowed to inf/nan during integration.

    Attributes
    ----------
    t_bad : float
        First grid time at which a non-finite amplitude was detected.
    """

    def __init__(self, message, t_bad=None):
        super().__init__(message)
        self.t_bad = t_bad


class NoStationaryState(MembedError):
    """Stationary auxiliary state required but not available for this
    embedding variant."""


class QuadratureFailure(MembedError):
    """Adaptive quadrature failed to converge to the requested tolerance."""


class GridMismatch(MembedError):
    """Trajectories compared on different time grids."""
