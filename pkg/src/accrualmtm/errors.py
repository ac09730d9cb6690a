class DomainError(ValueError):
    """A pricing precondition does not hold (bad phase, non-positive 1 + z*dt, ...)."""


class PhaseError(DomainError):
    """The trade is in the wrong life-cycle phase for the requested operation."""
