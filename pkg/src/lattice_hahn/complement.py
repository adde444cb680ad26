"""Unary complement operators and the laws (L5)-(L8)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .lattice import AxiomVerdict, FiniteLattice, PowersetLattice

AXIOMS = ("L5", "L6", "L7", "L8")
# The working profile: everything but non-contradiction.
PAPER_PROFILE = ("L5", "L7", "L8")


@dataclass(frozen=True)
class ComplementMap:
    lattice: FiniteLattice
    table: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        n = self.lattice.size
        if len(self.table) != n:
            raise ValueError(f"complement table has {len(self.table)} entries, lattice has {n}")
        for x, c in enumerate(self.table):
            if isinstance(c, bool) or not isinstance(c, int) or not 0 <= c < n:
                raise ValueError(f"complement of element {x} is out of range: {c!r}")

    def __call__(self, x: int) -> int:
        return self.table[x]


def set_complement(lattice: PowersetLattice) -> ComplementMap:
    return ComplementMap(lattice, [lattice.set_complement(x) for x in lattice.elements()])


@dataclass(frozen=True)
class AxiomReport:
    l5: AxiomVerdict
    l6: AxiomVerdict
    l7: AxiomVerdict
    l8: AxiomVerdict
    derived_de_morgan: AxiomVerdict

    def verdicts(self) -> dict[str, AxiomVerdict]:
        return {
            "L5": self.l5,
            "L6": self.l6,
            "L7": self.l7,
            "L8": self.l8,
            "de_morgan": self.derived_de_morgan,
        }

    def holds(self, axiom: str) -> bool:
        return self.verdicts()[axiom].holds

    def to_dict(self) -> dict:
        return {k: v.to_dict() for k, v in self.verdicts().items()}


def check_l5(c: ComplementMap) -> AxiomVerdict:
    lat = c.lattice
    for x in lat.elements():
        if lat.join(x, c(x)) != lat.top:
            return AxiomVerdict("L5", False, (x,), "x ∨ x^C ≠ top")
    return AxiomVerdict("L5", True)


def check_l6(c: ComplementMap) -> AxiomVerdict:
    lat = c.lattice
    for x in lat.elements():
        if lat.meet(x, c(x)) != lat.bottom:
            return AxiomVerdict("L6", False, (x,), "x ∧ x^C ≠ bottom")
    return AxiomVerdict("L6", True)


def check_l7(c: ComplementMap) -> AxiomVerdict:
    lat = c.lattice
    for x, y in itertools.product(lat.elements(), repeat=2):
        if lat.le(x, y) and not lat.le(c(y), c(x)):
            return AxiomVerdict("L7", False, (x, y), "x ≤ y but not y^C ≤ x^C")
    return AxiomVerdict("L7", True)


def check_l8(c: ComplementMap) -> AxiomVerdict:
    for x in c.lattice.elements():
        if c(c(x)) != x:
            return AxiomVerdict("L8", False, (x,), "(x^C)^C ≠ x")
    return AxiomVerdict("L8", True)


def check_de_morgan(c: ComplementMap) -> AxiomVerdict:
    lat = c.lattice
    for x, y in itertools.product(lat.elements(), repeat=2):
        if c(lat.join(x, y)) != lat.meet(c(x), c(y)):
            return AxiomVerdict("de_morgan", False, (x, y), "(x∨y)^C ≠ x^C ∧ y^C")
    return AxiomVerdict("de_morgan", True)


def check_axioms(complement: ComplementMap) -> AxiomReport:
    """Evaluate each complement law independently, with witnesses on failure."""
    return AxiomReport(
        l5=check_l5(complement),
        l6=check_l6(complement),
        l7=check_l7(complement),
        l8=check_l8(complement),
        derived_de_morgan=check_de_morgan(complement),
    )


def violates(complement: ComplementMap, axiom: str, witness: tuple) -> bool:
    """Re-evaluate ``axiom`` at ``witness`` alone; True when it is a genuine violation."""
    lat, c = complement.lattice, complement
    if axiom == "L5":
        (x,) = witness
        return lat.join(x, c(x)) != lat.top
    if axiom == "L6":
        (x,) = witness
        return lat.meet(x, c(x)) != lat.bottom
    if axiom == "L7":
        x, y = witness
        return lat.le(x, y) and not lat.le(c(y), c(x))
    if axiom == "L8":
        (x,) = witness
        return c(c(x)) != x
    if axiom == "de_morgan":
        x, y = witness
        return c(lat.join(x, y)) != lat.meet(c(x), c(y))
    raise KeyError(axiom)


@dataclass(frozen=True)
class ProfileVerdict:
    accepted: bool
    l6_holds: bool
    failed: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.accepted

    def to_dict(self) -> dict:
        return {"accepted": self.accepted, "l6_holds": self.l6_holds, "failed": list(self.failed)}


def require_paper_profile(report: AxiomReport) -> ProfileVerdict:
    """Accept iff L5, L7 and L8 hold; L6 is left free but recorded."""
    failed = tuple(a for a in PAPER_PROFILE if not report.holds(a))
    return ProfileVerdict(not failed, report.l6.holds, failed)
