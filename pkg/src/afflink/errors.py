"""Exception hierarchy shared by the whole library.

Every error raised on a bad input derives from DomainError so that the
service and CLI layers can report it uniformly (exit code 1 / HTTP 400)
with a stable machine-readable name.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""

    @property
    def name(self) -> str:
        return type(self).__name__


class InvalidCartanType(DomainError):
    """Series/rank combination outside the admissible ranges."""


class ImaginaryRootError(DomainError):
    """A coroot-based operation was applied to an imaginary root."""


class NotInBox(DomainError):
    """A weight required to lie in the finite box does not."""


class DepthTooSmall(DomainError):
    """The box depth does not reach the data the operation needs."""


class NonCriticalWeight(DomainError):
    """A critical-level-only operation was given a non-critical weight."""


class UnsupportedFiber(DomainError):
    """The requested deformation fiber carries no algorithm for this operation."""


class NotDominantIntegral(DomainError):
    """The truncated Weyl-Kac character needs a dominant integral weight."""
