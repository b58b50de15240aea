"""Exception types shared across the package."""


class IsicapError(Exception):
    """Base class for all package-specific errors."""


class SingularChannel(IsicapError):
    """The circulant channel matrix is numerically singular (some |f(2*pi*k/N)| ~ 0)."""


class DimensionMismatch(IsicapError):
    """A vector argument does not have the block length N."""


class NotDiagonallyDominant(IsicapError):
    """The analytic energy formula was requested on a channel whose Gram inverse
    is not diagonally dominant."""


class NoConvergence(IsicapError):
    """The dual QP solver exhausted its iteration budget before certifying the
    duality gap.  Carries the best achieved gap."""

    def __init__(self, message, gap=None):
        super().__init__(message)
        self.gap = gap


class TooLarge(IsicapError):
    """Block length exceeds the cap for an exhaustive or dense computation."""


class InfeasiblePower(IsicapError):
    """The power budget lies below the minimum-energy floor.  Carries the floor
    per channel use so callers can report the feasibility threshold."""

    def __init__(self, message, floor_per_use=None):
        super().__init__(message)
        self.floor_per_use = floor_per_use


class QuadratureFailure(IsicapError):
    """The periodic trapezoid rule could not meet its tolerance within the grid
    budget."""
