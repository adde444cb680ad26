"""Positive and negative elements, greedy positive extraction and Hahn decomposition.

Claims that the theory guarantees are checked on every call.  A failed
claim is returned as a :class:`TheoremViolation` attached to the result;
it never raises, because a counterexample is itself a result worth keeping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .errors import InvalidMeasure, NotAMember, PreconditionViolated
from .measures import SignedMeasure, format_rational


@dataclass(frozen=True)
class TheoremViolation:
    claim: str
    detail: str
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"claim": self.claim, "detail": self.detail, "data": self.data}


@dataclass(frozen=True)
class PolarityCertificate:
    element: int
    positive: bool
    negative: bool
    checked: tuple[int, ...]
    positive_witness: int | None = None
    negative_witness: int | None = None
    violations: tuple[TheoremViolation, ...] = ()

    @property
    def polarity(self) -> str:
        if self.positive and self.negative:
            return "both"
        if self.positive:
            return "positive"
        if self.negative:
            return "negative"
        return "neither"

    @property
    def witness(self) -> int | None:
        """A failing sub-member: breaks positivity if there is one, else negativity."""
        if self.positive_witness is not None:
            return self.positive_witness
        return self.negative_witness

    def to_dict(self) -> dict:
        return {
            "element": self.element,
            "polarity": self.polarity,
            "positive": self.positive,
            "negative": self.negative,
            "checked": list(self.checked),
            "positive_witness": self.positive_witness,
            "negative_witness": self.negative_witness,
            "violations": [v.to_dict() for v in self.violations],
        }


@dataclass(frozen=True)
class ExtractionStep:
    removed: int
    threshold_rank: int
    value: Fraction


@dataclass(frozen=True)
class ExtractionTrace:
    start: int
    steps: tuple[ExtractionStep, ...]
    result: int
    remainders: tuple[int, ...]
    certificate: PolarityCertificate
    violations: tuple[TheoremViolation, ...] = ()

    def to_dict(self) -> dict:
        return {
            "start": self.start,
            "steps": [
                {"removed": s.removed, "threshold_rank": s.threshold_rank, "value": format_rational(s.value)}
                for s in self.steps
            ],
            "result": self.result,
            "remainders": list(self.remainders),
            "violations": [v.to_dict() for v in self.violations],
        }


@dataclass(frozen=True)
class HahnDecomposition:
    a: int
    b: int
    lambda_value: Fraction
    a_certificate: PolarityCertificate
    b_certificate: PolarityCertificate
    overlap_value: Fraction
    cover_ok: bool
    violations: tuple[TheoremViolation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_dict(self, names=None) -> dict:
        d = {
            "a": self.a,
            "b": self.b,
            "lambda": format_rational(self.lambda_value),
            "overlap_value": format_rational(self.overlap_value),
            "cover_ok": self.cover_ok,
            "a_certificate": self.a_certificate.to_dict(),
            "b_certificate": self.b_certificate.to_dict(),
            "violations": [v.to_dict() for v in self.violations],
        }
        if names is not None:
            d["a_name"] = names[self.a]
            d["b_name"] = names[self.b]
        return d


@dataclass(frozen=True)
class NoDecomposition:
    lambda_value: Fraction
    reason: str

    ok = False

    def to_dict(self) -> dict:
        return {"kind": "NoDecomposition", "lambda": format_rational(self.lambda_value), "reason": self.reason}


def _member(measure: SignedMeasure, x: int) -> None:
    if x not in measure.algebra:
        raise NotAMember(f"element {x} is not a member of the σ-algebra")


def classify_polarity(measure: SignedMeasure, element: int) -> PolarityCertificate:
    """Decide whether every member below ``element`` has value ≥ 0 (positive) or ≤ 0 (negative)."""
    _member(measure, element)
    checked = measure.algebra.below(element)
    pos_w = next((e for e in checked if measure(e) < 0), None)
    neg_w = next((e for e in checked if measure(e) > 0), None)
    return PolarityCertificate(element, pos_w is None, neg_w is None, tuple(checked), pos_w, neg_w)


def union_positive(measure: SignedMeasure, elements: Iterable[int]) -> PolarityCertificate:
    """Certificate for the join of positive elements, which must itself come out positive."""
    elements = list(elements)
    for x in elements:
        if not classify_polarity(measure, x).positive:
            raise PreconditionViolated(f"input element {x} is not positive")
    joined = measure.lattice.join_all(elements)
    cert = classify_polarity(measure, joined)
    if not cert.positive:
        v = TheoremViolation(
            "join of positive elements is positive",
            f"member {cert.positive_witness} below the join has negative value",
            {"inputs": elements, "join": joined, "witness": cert.positive_witness},
        )
        cert = PolarityCertificate(
            cert.element, cert.positive, cert.negative, cert.checked,
            cert.positive_witness, cert.negative_witness, (v,),
        )
    return cert


def threshold_rank(value: Fraction) -> int:
    """Smallest positive integer n with value < -1/n (value must be negative)."""
    if value >= 0:
        raise ValueError("threshold rank is only defined for negative values")
    return math.floor(1 / -value) + 1


def extract_positive(measure: SignedMeasure, e: int) -> ExtractionTrace:
    """Strip negative members out of ``e`` until what remains is positive.

    Each round removes the most negative member below the remainder (ties
    to the smallest index) by meeting with its complement.
    """
    _member(measure, e)
    if measure(e) <= 0:
        raise PreconditionViolated(f"value at start element {e} is {measure(e)}, need > 0")
    lat = measure.lattice
    comp = measure.algebra.complement
    limit = len(measure.algebra)
    remainder = e
    steps: list[ExtractionStep] = []
    remainders = [e]
    violations: list[TheoremViolation] = []
    cert = classify_polarity(measure, remainder)
    while not cert.positive:
        if len(steps) >= limit:
            violations.append(TheoremViolation(
                "extraction terminates", f"still not positive after {limit} steps", {"remainder": remainder}
            ))
            break
        negatives = [g for g in cert.checked if measure(g) < 0]
        g = min(negatives, key=lambda x: (measure(x), x))
        nxt = lat.meet(remainder, comp(g))
        steps.append(ExtractionStep(g, threshold_rank(measure(g)), measure(g)))
        if nxt == remainder:
            violations.append(TheoremViolation(
                "extraction makes progress",
                "meeting with the complement of the removed member left the remainder unchanged",
                {"remainder": remainder, "removed": g},
            ))
            break
        remainder = nxt
        remainders.append(remainder)
        cert = classify_polarity(measure, remainder)
    if not cert.positive or measure(remainder) <= 0:
        violations.append(TheoremViolation(
            "positive element of positive value exists below e",
            f"result {remainder} has value {measure(remainder)} and polarity {cert.polarity}",
            {"start": e, "result": remainder},
        ))
    return ExtractionTrace(e, tuple(steps), remainder, tuple(remainders), cert, tuple(violations))


def _require_valid(measure: SignedMeasure) -> SignedMeasure:
    if measure.validation is None:
        measure = measure.validated()
    if not measure.validation.ok:
        failed = ", ".join(f"({v.name}) witness {v.witness}" for v in measure.validation.failed())
        raise InvalidMeasure(f"measure fails clause {failed}", measure.validation)
    return measure


def hahn_decompose(measure: SignedMeasure) -> HahnDecomposition:
    """Take A as the positive member of largest value (smallest index on ties) and B = A^C."""
    measure = _require_valid(measure)
    alg = measure.algebra
    lat = alg.lattice
    certs = {x: classify_polarity(measure, x) for x in alg.members}
    positives = [x for x in alg.members if certs[x].positive]
    lam = max(measure(x) for x in positives)
    a = min(x for x in positives if measure(x) == lam)
    b = alg.complement(a)
    a_cert = certs[a]
    b_cert = certs.get(b) or classify_polarity(measure, b)
    overlap = measure(lat.meet(a, b))
    cover_ok = lat.join(a, b) == lat.top

    violations = []
    if not a_cert.positive:
        violations.append(TheoremViolation("A is positive", "", {"a": a}))
    if not b_cert.negative:
        violations.append(TheoremViolation(
            "B = A^C is negative",
            f"member {b_cert.negative_witness} below B has positive value",
            {"a": a, "b": b, "witness": b_cert.negative_witness},
        ))
    if overlap != 0:
        violations.append(TheoremViolation(
            "value of A ∧ B is 0", f"value is {overlap}", {"a": a, "b": b, "meet": lat.meet(a, b)}
        ))
    if not cover_ok:
        violations.append(TheoremViolation(
            "A ∨ B = top", f"join is {lat.join(a, b)}", {"a": a, "b": b}
        ))
    return HahnDecomposition(a, b, lam, a_cert, b_cert, overlap, cover_ok, tuple(violations))


def oracle_decompose(measure: SignedMeasure) -> HahnDecomposition | NoDecomposition:
    """Scan every member A in index order for a valid pair (A, A^C).

    Sub-members are found through the order table rather than through
    meets, so this shares no code path with :func:`classify_polarity`.
    """
    measure = _require_valid(measure)
    alg = measure.algebra
    lat = alg.lattice
    members = list(alg.members)
    v = measure.values

    def scan(x):
        below = [e for e in members if lat.leq_table[e][x]]
        pos = [e for e in below if v[e] < 0]
        neg = [e for e in below if v[e] > 0]
        return PolarityCertificate(
            x, not pos, not neg, tuple(below), pos[0] if pos else None, neg[0] if neg else None
        )

    lam = max(v[x] for x in members if all(v[e] >= 0 for e in members if lat.leq_table[e][x]))
    for a in members:
        b = alg.complement(a)
        if b not in alg:
            continue
        ca, cb = scan(a), scan(b)
        if not (ca.positive and cb.negative):
            continue
        if lat.join_table[a][b] != lat.top:
            continue
        if v[lat.meet_table[a][b]] != 0:
            continue
        return HahnDecomposition(a, b, lam, ca, cb, v[lat.meet_table[a][b]], True)
    return NoDecomposition(lam, f"no member pair (A, A^C) among {len(members)} members is valid")
