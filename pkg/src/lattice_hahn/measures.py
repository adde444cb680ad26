"""Lattice measures and signed lattice measures with exact rational values.

Every clause check is an exact comparison of ``Fraction`` values.  The
continuity clause is specialised to finite chains: each maximal chain of
members must attain its join, and the value there must equal the value at
the chain's last element.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from .errors import DomainMismatch, InvalidMeasure, PreconditionViolated
from .lattice import AxiomVerdict, PowersetLattice
from .sigma import SigmaAlgebra

SIGNED = "signed"
UNSIGNED = "unsigned"
KINDS = (SIGNED, UNSIGNED)

# Chains of a large Boolean algebra explode factorially.
CHAIN_LIMIT = 50_000


def to_rational(value) -> Fraction:
    """Parse ``"p/q"``, integer strings, ints or Fractions; floats are refused."""
    if isinstance(value, float):
        raise TypeError(f"refusing inexact float value {value!r}")
    if isinstance(value, bool):
        raise TypeError(f"refusing boolean value {value!r}")
    if isinstance(value, str):
        value = value.strip()
        if not value or any(c in value for c in ".eE"):
            raise ValueError(f"not an exact rational: {value!r}")
    return Fraction(value)


def format_rational(value: Fraction) -> str:
    return str(Fraction(value))


@dataclass(frozen=True)
class ClauseReport:
    kind: str
    clauses: dict[str, AxiomVerdict]
    note: str = ""

    @property
    def ok(self) -> bool:
        return all(v.holds for v in self.clauses.values())

    def __bool__(self) -> bool:
        return self.ok

    def failed(self) -> list[AxiomVerdict]:
        return [v for v in self.clauses.values() if not v.holds]

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "ok": self.ok,
            "clauses": {k: v.to_dict() for k, v in self.clauses.items()},
            "note": self.note,
        }


@dataclass(frozen=True)
class SignedMeasure:
    algebra: SigmaAlgebra
    values: Mapping[int, Fraction]
    kind: str = SIGNED
    validation: ClauseReport | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown measure kind {self.kind!r}")
        values = {int(k): to_rational(v) for k, v in self.values.items()}
        missing = [m for m in self.algebra.members if m not in values]
        extra = [k for k in values if k not in self.algebra]
        if missing:
            raise DomainMismatch(f"no value given for members {missing}")
        if extra:
            raise DomainMismatch(f"values given for non-members {extra}")
        object.__setattr__(self, "values", values)

    def __call__(self, x: int) -> Fraction:
        return self.values[x]

    @property
    def lattice(self):
        return self.algebra.lattice

    def with_kind(self, kind: str) -> "SignedMeasure":
        return dataclasses.replace(self, kind=kind, validation=None)

    def validated(self) -> "SignedMeasure":
        """Return a copy carrying its clause report."""
        if self.kind == SIGNED:
            report = validate_signed_measure(self)
        else:
            report = validate_measure(self)
        return dataclasses.replace(self, validation=report)


def additive_measure(algebra: SigmaAlgebra, weights: Sequence, kind: str = SIGNED) -> SignedMeasure:
    """Valuation on a power-set algebra that sums the given atom weights."""
    lat = algebra.lattice
    if not isinstance(lat, PowersetLattice):
        raise TypeError("atom weights need a power-set lattice")
    if len(weights) != len(lat.labels):
        raise ValueError("one weight per ground-set label is required")
    ws = [to_rational(w) for w in weights]
    values = {m: sum((w for i, w in enumerate(ws) if m >> i & 1), Fraction(0)) for m in algebra.members}
    return SignedMeasure(algebra, values, kind)


def _plain(values: Mapping[int, Fraction]) -> dict:
    # Integer-valued Fractions compare faster as ints; equality semantics are unchanged.
    return {k: (v.numerator if v.denominator == 1 else v) for k, v in values.items()}


def _order_pairs(algebra: SigmaAlgebra) -> list[tuple[int, int]]:
    lat = algebra.lattice
    return [(h, g) for h in algebra.members for g in algebra.members if lat.le(h, g)]


def _check_bottom(algebra, v) -> AxiomVerdict:
    b = algebra.lattice.bottom
    if v[b] != 0:
        return AxiomVerdict("1", False, (b,), "value at bottom is not 0")
    return AxiomVerdict("1", True)


def _check_monotone(name, pairs, v) -> AxiomVerdict:
    for h, g in pairs:
        vh, vg = v[h], v[g]
        if vh >= 0 and vg >= 0 and vh > vg:
            return AxiomVerdict(name, False, (h, g), "h ≤ g, both ≥ 0, but value(h) > value(g)")
    return AxiomVerdict(name, True)


def _check_antitone(name, pairs, v) -> AxiomVerdict:
    for h, g in pairs:
        vh, vg = v[h], v[g]
        if vh <= 0 and vg <= 0 and vg > vh:
            return AxiomVerdict(name, False, (h, g), "h ≤ g, both ≤ 0, but value(g) > value(h)")
    return AxiomVerdict(name, True)


def _check_modular(algebra, v) -> AxiomVerdict:
    lat = algebra.lattice
    ms = algebra.members
    for i, h in enumerate(ms):
        vh = v[h]
        for g in ms[i:]:
            if v[lat.join(h, g)] + v[lat.meet(h, g)] != vh + v[g]:
                return AxiomVerdict("3", False, (h, g), "value(h∨g) + value(h∧g) ≠ value(h) + value(g)")
    return AxiomVerdict("3", True)


def maximal_chains(algebra: SigmaAlgebra, limit: int = CHAIN_LIMIT):
    """Yield maximal chains of members, bottom first, following member covers."""
    lat = algebra.lattice
    ms = algebra.members
    up = {}
    for h in ms:
        above = [g for g in ms if g != h and lat.le(h, g)]
        up[h] = [g for g in above if not any(k != g and lat.le(k, g) for k in above)]
    count = 0
    stack = [(lat.bottom,)]
    while stack and count < limit:
        chain = stack.pop()
        nxt = up[chain[-1]]
        if not nxt:
            count += 1
            yield chain
            continue
        for g in reversed(nxt):
            stack.append(chain + (g,))


def _check_chains(algebra, v, limit=CHAIN_LIMIT) -> AxiomVerdict:
    lat = algebra.lattice
    seen = 0
    for chain in maximal_chains(algebra, limit):
        seen += 1
        acc = lat.bottom
        for i, h in enumerate(chain):
            acc = lat.join(acc, h)
            if acc not in algebra or v[acc] != v[h]:
                return AxiomVerdict(
                    "4", False, chain[: i + 1], "value at the chain's join differs from its last value"
                )
    note = f"{seen} maximal chains"
    if seen >= limit:
        note += f" (truncated at {limit})"
    return AxiomVerdict("4", True, None, note)


def _require_kind(measure: SignedMeasure, kind: str):
    if measure.kind != kind:
        raise PreconditionViolated(f"expected a {kind} candidate, got {measure.kind}")


def validate_measure(measure: SignedMeasure) -> ClauseReport:
    """Clauses (1)-(4) of an unsigned lattice measure."""
    _require_kind(measure, UNSIGNED)
    alg = measure.algebra
    v = _plain(measure.values)
    pairs = _order_pairs(alg)
    clauses = {
        "1": _check_bottom(alg, v),
        "2": _check_monotone("2", pairs, v),
        "3": _check_modular(alg, v),
        "4": _check_chains(alg, v),
    }
    return ClauseReport(UNSIGNED, clauses)


def validate_signed_measure(measure: SignedMeasure) -> ClauseReport:
    """Clauses (1), (2a), (2b), (3), (4) of a signed lattice measure.

    Pairs of mixed sign are left unconstrained by clause (2).
    """
    _require_kind(measure, SIGNED)
    alg = measure.algebra
    v = _plain(measure.values)
    pairs = _order_pairs(alg)
    clauses = {
        "1": _check_bottom(alg, v),
        "2a": _check_monotone("2a", pairs, v),
        "2b": _check_antitone("2b", pairs, v),
        "3": _check_modular(alg, v),
        "4": _check_chains(alg, v),
    }
    return ClauseReport(SIGNED, clauses)


def _ensure_valid_unsigned(m: SignedMeasure, label: str) -> None:
    report = m.validation or validate_measure(m.with_kind(UNSIGNED) if m.kind != UNSIGNED else m)
    if not report.ok:
        raise InvalidMeasure(f"{label} is not a lattice measure", report)


def difference_measure(m1: SignedMeasure, m2: SignedMeasure) -> SignedMeasure:
    """Pointwise ``m1 - m2`` as an unvalidated signed candidate."""
    a1, a2 = m1.algebra, m2.algebra
    if a1.members != a2.members or a1.lattice != a2.lattice:
        raise DomainMismatch("measures live on different σ-algebras")
    _ensure_valid_unsigned(m1, "m1")
    _ensure_valid_unsigned(m2, "m2")
    values = {x: m1(x) - m2(x) for x in a1.members}
    return SignedMeasure(a1, values, SIGNED)
