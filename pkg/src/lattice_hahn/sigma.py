"""Generated lattice σ-algebras on finite models.

Countable joins reduce to binary joins on a finite lattice.  Members are
also closed under binary meet so that modularity can be evaluated on them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable

from .complement import ComplementMap
from .lattice import AxiomVerdict, FiniteLattice


@dataclass(frozen=True)
class SigmaAlgebra:
    lattice: FiniteLattice
    complement: ComplementMap
    members: tuple[int, ...]
    generators: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        object.__setattr__(self, "generators", tuple(self.generators))

    def __contains__(self, x: int) -> bool:
        return x in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def below(self, x: int) -> list[int]:
        """Members E with E ≤ x, in index order."""
        lat = self.lattice
        return [e for e in self.members if lat.meet(e, x) == e]


def generate(lattice: FiniteLattice, complement: ComplementMap, generators: Iterable[int]) -> SigmaAlgebra:
    """Least family containing the generators and both bounds, closed under ^C, ∨, ∧."""
    gens = tuple(generators)
    for g in gens:
        if not 0 <= g < lattice.size:
            raise IndexError(f"generator {g} is not an element of the lattice")
    members = set(gens) | {lattice.bottom, lattice.top}
    frontier = set(members)
    while frontier:
        new = set()
        for x in frontier:
            new.add(complement(x))
            for y in members:
                new.add(lattice.join(x, y))
                new.add(lattice.meet(x, y))
        new -= members
        members |= new
        frontier = new
    return SigmaAlgebra(lattice, complement, tuple(members), gens)


def is_closed(lattice: FiniteLattice, complement: ComplementMap, members: Iterable[int]) -> AxiomVerdict:
    """Closure under complement, join and meet; witness names the operation and operands."""
    ms = sorted(set(members))
    mset = set(ms)
    for bound, label in ((lattice.bottom, "bottom"), (lattice.top, "top")):
        if bound not in mset:
            return AxiomVerdict("closed", False, (label, bound), f"{label} missing")
    for h in ms:
        if complement(h) not in mset:
            return AxiomVerdict("closed", False, ("complement", h), "complement missing")
    for h in ms:
        for g in ms:
            if lattice.join(h, g) not in mset:
                return AxiomVerdict("closed", False, ("join", h, g), "join missing")
            if lattice.meet(h, g) not in mset:
                return AxiomVerdict("closed", False, ("meet", h, g), "meet missing")
    return AxiomVerdict("closed", True)
