"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class WindTreeError(Exception):
    """Base class for all package errors."""


class MalformedPermutation(WindTreeError, ValueError):
    pass


class SizeMismatch(WindTreeError, ValueError):
    pass


class NonIntegralGenus(WindTreeError, ValueError):
    pass


class NotAutomorphism(WindTreeError, ValueError):
    pass


class NotFixedPointFree(WindTreeError, ValueError):
    pass


class DisconnectedOrigami(WindTreeError, ValueError):
    pass


class OrbitBudgetExceeded(WindTreeError, RuntimeError):
    def __init__(self, budget: int) -> None:
        super().__init__(f"orbit exceeds budget of {budget} surfaces")
        self.budget = budget


class GenusPlusNotOne(WindTreeError, ValueError):
    pass


class OddRamification(WindTreeError, ValueError):
    pass


class GenusNotZero(WindTreeError, ValueError):
    pass


class DomainViolation(WindTreeError, ValueError):
    pass


class AsymmetricObstacle(WindTreeError, ValueError):
    pass


class CornerCountMismatch(WindTreeError, ValueError):
    pass


class DisconnectedFreeRegion(WindTreeError, ValueError):
    pass


class ObstacleTouchesBoundary(WindTreeError, ValueError):
    pass


class PatternNotSublatticeInvariant(WindTreeError, ValueError):
    pass


class SymmetryNotFound(WindTreeError, RuntimeError):
    pass


class CornerHit(WindTreeError, RuntimeError):
    """A trajectory met an obstacle corner; the run stops there.

    ``partial`` carries whatever the caller had accumulated (e.g. a
    truncated displacement series) so campaigns can still report it.
    """

    def __init__(self, message: str, partial: object = None) -> None:
        super().__init__(message)
        self.partial = partial
