"""Finite bounded lattices: construction, law checks and lattice maps.

Elements are the integers ``0..size-1``; names are labels only.  Order,
meet and join are stored as total tables, except for power-set lattices
whose operations are bitwise and whose tables are built on first use.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .errors import CycleDetected, GroundSetTooLarge, MissingBounds, NotALattice

MAX_POWERSET_LABELS = 16
MAX_EXHAUSTIVE_FRAME = 12
FRAME_SAMPLES = 4096


@dataclass(frozen=True)
class AxiomVerdict:
    """Outcome of checking one law; ``witness`` reproduces a failure."""

    name: str
    holds: bool
    witness: tuple | None = None
    note: str = ""

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "holds": self.holds,
            "witness": list(self.witness) if self.witness is not None else None,
            "note": self.note,
        }


@dataclass(frozen=True)
class HomomorphismVerdict(AxiomVerdict):
    bijective: bool = False

    @property
    def isomorphism(self) -> bool:
        return self.holds and self.bijective

    def to_dict(self) -> dict:
        d = super().to_dict()
        d["bijective"] = self.bijective
        d["isomorphism"] = self.isomorphism
        return d


class FiniteLattice:
    """A finite bounded lattice given by its order and operation tables."""

    def __init__(self, names, leq, meet, join, bottom: int, top: int):
        self.names = tuple(names)
        self._leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self._meet = tuple(tuple(row) for row in meet)
        self._join = tuple(tuple(row) for row in join)
        self.bottom = bottom
        self.top = top

    @classmethod
    def from_leq(cls, names: Sequence[str], leq) -> "FiniteLattice":
        """Build a lattice from a partial order matrix, computing meet and join."""
        n = len(names)
        if n == 0:
            raise MissingBounds("a lattice needs at least one element")
        leq = [list(map(bool, row)) for row in leq]
        if len(leq) != n or any(len(row) != n for row in leq):
            raise ValueError("order matrix must be square and match the names")
        for x in range(n):
            if not leq[x][x]:
                raise ValueError(f"order is not reflexive at {x}")
        for x, y in itertools.combinations(range(n), 2):
            if leq[x][y] and leq[y][x]:
                raise CycleDetected(f"{names[x]!r} and {names[y]!r} lie below each other")
        for x, y, z in itertools.product(range(n), repeat=3):
            if leq[x][y] and leq[y][z] and not leq[x][z]:
                raise ValueError(f"order is not transitive at {(x, y, z)}")

        bottoms = [b for b in range(n) if all(leq[b])]
        tops = [t for t in range(n) if all(leq[x][t] for x in range(n))]
        if not bottoms or not tops:
            missing = "bottom" if not bottoms else "top"
            raise MissingBounds(f"no {missing} element")

        meet = [[0] * n for _ in range(n)]
        join = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(x, n):
                meet[x][y] = meet[y][x] = _extremal_bound(leq, x, y, lower=True)
                join[x][y] = join[y][x] = _extremal_bound(leq, x, y, lower=False)
        return cls(names, leq, meet, join, bottoms[0], tops[0])

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def leq_table(self):
        return self._leq

    @property
    def meet_table(self):
        return self._meet

    @property
    def join_table(self):
        return self._join

    def le(self, x: int, y: int) -> bool:
        return self._leq[x][y]

    def meet(self, x: int, y: int) -> int:
        return self._meet[x][y]

    def join(self, x: int, y: int) -> int:
        return self._join[x][y]

    def join_all(self, xs: Iterable[int]) -> int:
        return reduce(self.join, xs, self.bottom)

    def meet_all(self, xs: Iterable[int]) -> int:
        return reduce(self.meet, xs, self.top)

    def elements(self) -> range:
        return range(self.size)

    def down_set(self, x: int) -> list[int]:
        return [y for y in self.elements() if self.le(y, x)]

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(x, y)`` with ``x < y`` and nothing strictly between."""
        out = []
        for x in self.elements():
            for y in self.elements():
                if x == y or not self.le(x, y):
                    continue
                if not any(
                    z != x and z != y and self.le(x, z) and self.le(z, y)
                    for z in self.elements()
                ):
                    out.append((x, y))
        return out

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise KeyError(name) from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return (
            self.names == other.names
            and self.leq_table == other.leq_table
            and self.meet_table == other.meet_table
            and self.join_table == other.join_table
        )

    def __hash__(self) -> int:
        return hash((self.names, self.leq_table))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(size={self.size}, names={list(self.names)})"


class PowersetLattice(FiniteLattice):
    """Subsets of a ground set, element ``i`` being the subset with bitmask ``i``."""

    def __init__(self, labels: Sequence[str]):
        self.labels = tuple(labels)
        n = 1 << len(self.labels)
        self.names = tuple(self._subset_name(mask) for mask in range(n))
        self.bottom = 0
        self.top = n - 1

    def _subset_name(self, mask: int) -> str:
        if mask == 0:
            return "∅"
        return "{" + ",".join(l for i, l in enumerate(self.labels) if mask >> i & 1) + "}"

    @cached_property
    def leq_table(self):
        n = self.size
        return tuple(tuple(x & ~y == 0 for y in range(n)) for x in range(n))

    @cached_property
    def meet_table(self):
        n = self.size
        return tuple(tuple(x & y for y in range(n)) for x in range(n))

    @cached_property
    def join_table(self):
        n = self.size
        return tuple(tuple(x | y for y in range(n)) for x in range(n))

    def le(self, x: int, y: int) -> bool:
        return x & ~y == 0

    def meet(self, x: int, y: int) -> int:
        return x & y

    def join(self, x: int, y: int) -> int:
        return x | y

    def set_complement(self, x: int) -> int:
        return self.top & ~x


def _extremal_bound(leq, x: int, y: int, lower: bool) -> int:
    n = len(leq)
    if lower:
        bounds = [z for z in range(n) if leq[z][x] and leq[z][y]]
        best = [b for b in bounds if all(leq[c][b] for c in bounds)]
    else:
        bounds = [z for z in range(n) if leq[x][z] and leq[y][z]]
        best = [b for b in bounds if all(leq[b][c] for c in bounds)]
    if len(best) != 1:
        raise NotALattice((x, y), "glb" if lower else "lub")
    return best[0]


def _resolve(names: Sequence[str], ref) -> int:
    if isinstance(ref, bool):
        raise TypeError(f"bad element reference {ref!r}")
    if isinstance(ref, int):
        if not 0 <= ref < len(names):
            raise IndexError(f"element index {ref} out of range")
        return ref
    return list(names).index(ref)


def build_from_covers(names: Sequence[str], cover_pairs) -> FiniteLattice:
    """Build a lattice from Hasse-diagram edges ``(lower, upper)``.

    Edges may name elements by index or by label.  Redundant (transitive)
    edges are tolerated; the order is the reflexive-transitive closure.
    """
    names = list(names)
    n = len(names)
    if len(set(names)) != n:
        raise ValueError("element names must be unique")
    leq = [[i == j for j in range(n)] for i in range(n)]
    for lo, hi in cover_pairs:
        i, j = _resolve(names, lo), _resolve(names, hi)
        if i == j:
            raise CycleDetected(f"cover edge from {names[i]!r} to itself")
        leq[i][j] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row_k = leq[k]
                row_i = leq[i]
                for j in range(n):
                    if row_k[j]:
                        row_i[j] = True
    for i, j in itertools.combinations(range(n), 2):
        if leq[i][j] and leq[j][i]:
            raise CycleDetected(f"cover relation has a cycle through {names[i]!r} and {names[j]!r}")
    return FiniteLattice.from_leq(names, leq)


def build_powerset(ground_set_labels: Sequence[str]) -> PowersetLattice:
    labels = list(ground_set_labels)
    if len(labels) > MAX_POWERSET_LABELS:
        raise GroundSetTooLarge(
            f"{len(labels)} labels given, at most {MAX_POWERSET_LABELS} supported"
        )
    if len(set(labels)) != len(labels):
        raise ValueError("ground set labels must be unique")
    return PowersetLattice(labels)


def check_lattice_laws(lattice: FiniteLattice) -> dict[str, AxiomVerdict]:
    """Exhaustively check (L1)-(L3), order/operation consistency and the bounds."""
    el = lattice.elements()
    meet, join, le = lattice.meet, lattice.join, lattice.le
    out = {}

    def first(name, pred, tuples):
        for t in tuples:
            if not pred(*t):
                return AxiomVerdict(name, False, t)
        return AxiomVerdict(name, True)

    pairs = list(itertools.product(el, repeat=2))
    triples = itertools.product(el, repeat=3)
    out["L1"] = first(
        "L1", lambda x, y: meet(x, y) == meet(y, x) and join(x, y) == join(y, x), pairs
    )
    out["L2"] = first(
        "L2",
        lambda x, y, z: meet(x, meet(y, z)) == meet(meet(x, y), z)
        and join(x, join(y, z)) == join(join(x, y), z),
        triples,
    )
    out["L3"] = first(
        "L3", lambda x, y: join(x, meet(y, x)) == x and meet(x, join(y, x)) == x, pairs
    )
    out["order"] = first(
        "order", lambda x, y: le(x, y) == (meet(x, y) == x) == (join(x, y) == y), pairs
    )
    out["bounds"] = first(
        "bounds", lambda x: le(lattice.bottom, x) and le(x, lattice.top), [(x,) for x in el]
    )
    return out


def check_distributive(lattice: FiniteLattice) -> AxiomVerdict:
    """(L4): both distributive laws over every triple; witness is the first failing triple."""
    meet, join = lattice.meet, lattice.join
    el = lattice.elements()
    for x, y, z in itertools.product(el, repeat=3):
        if meet(x, join(y, z)) != join(meet(x, y), meet(x, z)):
            return AxiomVerdict("L4", False, (x, y, z), "x∧(y∨z) ≠ (x∧y)∨(x∧z)")
    for x, y, z in itertools.product(el, repeat=3):
        if join(x, meet(y, z)) != meet(join(x, y), join(x, z)):
            return AxiomVerdict("L4", False, (x, y, z), "x∨(y∧z) ≠ (x∨y)∧(x∨z)")
    return AxiomVerdict("L4", True)


def is_frame(lattice: FiniteLattice, seed: int = 0) -> AxiomVerdict:
    """Check that binary meet distributes over the join of every subset.

    Subsets are enumerated exhaustively up to ``MAX_EXHAUSTIVE_FRAME``
    elements; beyond that ``FRAME_SAMPLES`` random subsets are drawn.
    """
    n = lattice.size
    if n <= MAX_EXHAUSTIVE_FRAME:
        masks: Iterable[int] = range(1 << n)
        note = f"exhaustive over all {1 << n} subsets"
    else:
        rng = random.Random(seed)
        masks = [rng.getrandbits(n) for _ in range(FRAME_SAMPLES)]
        note = f"sampled {FRAME_SAMPLES} subsets (seed={seed})"
    for mask in masks:
        subset = [x for x in range(n) if mask >> x & 1]
        sup = lattice.join_all(subset)
        for y in lattice.elements():
            lhs = lattice.join_all(lattice.meet(x, y) for x in subset)
            if lhs != lattice.meet(sup, y):
                return AxiomVerdict("frame", False, (tuple(subset), y), note)
    return AxiomVerdict("frame", True, None, note)


@dataclass(frozen=True)
class LatticeMap:
    source: FiniteLattice
    target: FiniteLattice
    table: tuple[int, ...] = field()

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.source.size:
            raise ValueError("map table must cover every source element")
        if any(not 0 <= v < self.target.size for v in self.table):
            raise ValueError("map table points outside the target lattice")

    def __call__(self, x: int) -> int:
        return self.table[x]


def is_homomorphism(h: LatticeMap) -> HomomorphismVerdict:
    src, dst = h.source, h.target
    bijective = src.size == dst.size and len(set(h.table)) == dst.size
    for x, y in itertools.product(src.elements(), repeat=2):
        if h(src.meet(x, y)) != dst.meet(h(x), h(y)):
            return HomomorphismVerdict("homomorphism", False, (x, y), "meet not preserved", bijective)
        if h(src.join(x, y)) != dst.join(h(x), h(y)):
            return HomomorphismVerdict("homomorphism", False, (x, y), "join not preserved", bijective)
    return HomomorphismVerdict("homomorphism", True, None, "", bijective)
