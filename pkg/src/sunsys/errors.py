"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SunSystemError(Exception):
    """Base class for all errors raised by sunsys."""


class InvalidEdge(SunSystemError):
    pass


class DegenerateSun(SunSystemError):
    """A 3-sun whose vertices (or edges) are not pairwise distinct."""


class NotTwoFactor(SunSystemError):
    """Difference u/2 yields a 1-factor, not a union of cycles."""


class PreconditionViolated(SunSystemError):
    """A lemma constructor was called outside its admissible parameters."""


class NotAdmissible(SunSystemError):
    """Order is not congruent to 0, 1, 4 or 9 modulo 12."""


class NonExistent(SunSystemError):
    """Order is congruent-admissible but no system exists (order 4)."""


class BoundViolated(SunSystemError):
    """Embedding target order is below the counting bound."""

    def __init__(self, message: str, bound: int):
        super().__init__(message)
        self.bound = bound


class NoCaseMatch(SunSystemError):
    """Internal: the dispatch table has no case for an admissible pair."""


class UnsupportedBase(SunSystemError):
    pass
