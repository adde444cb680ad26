"""Exception types raised across the package."""

from __future__ import annotations


class LatticeHahnError(Exception):
    """Base class for every error raised by this package."""


class NotALattice(LatticeHahnError):
    def __init__(self, pair, kind="glb", detail=""):
        self.pair = tuple(pair)
        self.kind = kind
        msg = f"elements {self.pair} have no unique {kind}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class CycleDetected(LatticeHahnError):
    pass


class MissingBounds(LatticeHahnError):
    pass


class GroundSetTooLarge(LatticeHahnError):
    pass


class SizeTooLargeForExhaustive(LatticeHahnError):
    pass


class DomainMismatch(LatticeHahnError):
    pass


class NotAMember(LatticeHahnError):
    pass


class PreconditionViolated(LatticeHahnError):
    pass


class InvalidMeasure(LatticeHahnError):
    """Raised when a measure fails validation; ``report`` holds the clause verdicts."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ParseError(LatticeHahnError):
    pass


class ReferentialError(LatticeHahnError):
    pass
