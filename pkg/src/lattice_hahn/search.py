"""Enumerate small (lattice, complement, measure) models and mine findings.

Lattices are generated isomorph-free: inner elements are added one at a
time in a natural labelling (each new element sits above a down-closed
set of earlier ones), and each survivor is reduced to a canonical code,
the smallest order encoding over all linear extensions of its inner poset.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from .complement import AXIOMS, ComplementMap, check_axioms
from .errors import SizeTooLargeForExhaustive
from .hahn import NoDecomposition, hahn_decompose, oracle_decompose
from .lattice import FiniteLattice, check_distributive
from .measures import SIGNED, SignedMeasure, format_rational, to_rational, validate_signed_measure
from .modelio import Model, model_to_dict, model_verdicts, parse_model
from .sigma import SigmaAlgebra, generate

MAX_EXHAUSTIVE_LATTICE = 8
MAX_EXHAUSTIVE_COMPLEMENT = 6

MODEL_FOUND = "ModelFound"
NO_MODEL_EXISTS = "NoModelExists"
THEOREM_VIOLATION = "TheoremViolation"
VALID_MEASURE_FOUND = "ValidMeasureFound"


# ---------------------------------------------------------------- lattices

def _inner_names(k: int) -> list[str]:
    letters = "abcdefghijklmnopqrstuvwxyz"
    return [letters[i] if i < len(letters) else f"e{i}" for i in range(k)]


def _natural_posets(k: int) -> Iterator[list[int]]:
    """Naturally labelled posets on ``k`` elements whose prefixes stay meet-closed.

    Each poset is a list of strict down-set bitmasks.  A prefix that lacks
    some meet (with the bottom adjoined) can never be repaired, because later
    elements are never below earlier ones.
    """
    def extend(down: list[int]):
        i = len(down)
        if i == k:
            yield list(down)
            return
        for mask in range(1 << i):
            if any(mask >> j & 1 and down[j] & ~mask for j in range(i)):
                continue
            if not _meets_ok(down, mask):
                continue
            down.append(mask)
            yield from extend(down)
            down.pop()

    yield from extend([])


def _meets_ok(down: list[int], new_down: int) -> bool:
    for j in range(len(down)):
        lower = new_down & (down[j] | 1 << j)
        if lower and not _has_greatest(down, lower):
            return False
    return True


def _has_greatest(down: list[int], s: int) -> bool:
    return any(s >> m & 1 and s & ~(down[m] | 1 << m) == 0 for m in range(len(down)))


def _joins_ok(down: list[int]) -> bool:
    k = len(down)
    up = [sum(1 << j for j in range(k) if down[j] >> i & 1) for i in range(k)]
    for i, j in itertools.combinations(range(k), 2):
        upper = (up[i] | 1 << i) & (up[j] | 1 << j)
        if upper and not any(
            upper >> m & 1 and upper & ~(up[m] | 1 << m) == 0 for m in range(k)
        ):
            return False
    return True


def _canonical_code(down: list[int]) -> tuple[int, list[int]]:
    """Smallest encoding of the strict order over all linear extensions."""
    k = len(down)
    best = None
    best_order: list[int] = []

    def extensions(placed: list[int], used: int):
        if len(placed) == k:
            yield placed
            return
        for x in range(k):
            if not used >> x & 1 and down[x] & ~used == 0:
                placed.append(x)
                yield from extensions(placed, used | 1 << x)
                placed.pop()

    for order in extensions([], 0):
        code = 0
        for a in range(k):
            for b in range(a + 1, k):
                code = code << 1 | (down[order[b]] >> order[a] & 1)
        if best is None or code < best:
            best, best_order = code, list(order)
    return (best if best is not None else 0), best_order


def _lattice_from_down(down: list[int], order: list[int]) -> FiniteLattice:
    """Relabel the inner poset by ``order`` and add a bottom and a top."""
    k = len(down)
    n = k + 2
    pos = {x: i + 1 for i, x in enumerate(order)}
    leq = [[False] * n for _ in range(n)]
    for i in range(n):
        leq[0][i] = True
        leq[i][n - 1] = True
        leq[i][i] = True
    for x in range(k):
        for y in range(k):
            if down[y] >> x & 1:
                leq[pos[x]][pos[y]] = True
    names = ["⊥"] + _inner_names(k) + ["⊤"]
    return FiniteLattice.from_leq(names, leq)


def lattice_code(lattice: FiniteLattice) -> tuple[int, int]:
    """Isomorphism-invariant key ``(size, code)`` of a bounded lattice."""
    n = lattice.size
    if n <= 2:
        return (n, 0)
    inner = [x for x in lattice.elements() if x not in (lattice.bottom, lattice.top)]
    idx = {x: i for i, x in enumerate(inner)}
    down = [0] * len(inner)
    for x in inner:
        for y in inner:
            if x != y and lattice.le(x, y):
                down[idx[y]] |= 1 << idx[x]
    return (n, _canonical_code(down)[0])


def enumerate_lattices(
    max_size: int, require_distributive: bool = False, min_size: int = 1
) -> Iterator[FiniteLattice]:
    """Yield one lattice per isomorphism class with ``min_size``..``max_size`` elements.

    Order: by size, then by canonical code.
    """
    if max_size > MAX_EXHAUSTIVE_LATTICE:
        raise SizeTooLargeForExhaustive(
            f"exhaustive lattice enumeration is limited to {MAX_EXHAUSTIVE_LATTICE} elements"
        )
    if min_size <= 1 <= max_size:
        yield FiniteLattice.from_leq(["⊥"], [[True]])
    if min_size <= 2 <= max_size:
        yield FiniteLattice.from_leq(["⊥", "⊤"], [[True, True], [False, True]])
    for n in range(max(3, min_size), max_size + 1):
        found: dict[int, list[int]] = {}
        for down in _natural_posets(n - 2):
            if not _joins_ok(down):
                continue
            code, order = _canonical_code(down)
            if code not in found:
                found[code] = (down, order)
        for code in sorted(found):
            lat = _lattice_from_down(*found[code])
            if require_distributive and not check_distributive(lat).holds:
                continue
            yield lat


def sample_lattices(size: int, count: int, seed: int, require_distributive: bool = False) -> list[FiniteLattice]:
    """Random isomorph-free lattices of one size, for sizes beyond exhaustive reach."""
    rng = random.Random(seed)
    k = size - 2
    found: dict[int, FiniteLattice] = {}
    for _ in range(count):
        down: list[int] = []
        for i in range(k):
            options = [
                m for m in range(1 << i)
                if not any(m >> j & 1 and down[j] & ~m for j in range(i))
            ]
            down.append(rng.choice(options))
        if not _joins_ok(down) or not all(_meets_ok(down[:i], down[i]) for i in range(k)):
            continue
        code, order = _canonical_code(down)
        if code in found:
            continue
        lat = _lattice_from_down(down, order)
        if require_distributive and not check_distributive(lat).holds:
            continue
        found[code] = lat
    return [found[c] for c in sorted(found)]


# -------------------------------------------------------------- complements

def enumerate_complements(lattice: FiniteLattice, required=(), forbidden=()) -> Iterator[ComplementMap]:
    """Every complement table satisfying ``required`` and violating each of ``forbidden``.

    Required laws prune partial tables; the final decision is always made
    by :func:`check_axioms` on the complete table.
    """
    required, forbidden = set(required), set(forbidden)
    n = lattice.size
    le, meet, join = lattice.le, lattice.meet, lattice.join
    table = [-1] * n

    def consistent(x: int) -> bool:
        c = table[x]
        if "L5" in required and join(x, c) != lattice.top:
            return False
        if "L6" in required and meet(x, c) != lattice.bottom:
            return False
        if "L8" in required:
            if table[c] != -1 and table[c] != x:
                return False
            for z in range(x):
                if table[z] == x and c != z:
                    return False
        if "L7" in required:
            for y in range(x):
                cy = table[y]
                if le(x, y) and not le(cy, c):
                    return False
                if le(y, x) and not le(c, cy):
                    return False
        return True

    def fill(x: int):
        if x == n:
            cm = ComplementMap(lattice, table)
            report = check_axioms(cm)
            if all(report.holds(a) for a in required) and not any(report.holds(a) for a in forbidden):
                yield cm
            return
        for c in range(n):
            table[x] = c
            if consistent(x):
                yield from fill(x + 1)
        table[x] = -1

    yield from fill(0)


def sample_complements(lattice: FiniteLattice, required, forbidden, count: int, seed: int) -> list[ComplementMap]:
    rng = random.Random(seed)
    seen = set()
    out = []
    n = lattice.size
    for _ in range(count):
        t = tuple(rng.randrange(n) for _ in range(n))
        if t in seen:
            continue
        seen.add(t)
        cm = ComplementMap(lattice, t)
        report = check_axioms(cm)
        if all(report.holds(a) for a in required) and not any(report.holds(a) for a in forbidden):
            out.append(cm)
    return sorted(out, key=lambda c: c.table)


# ----------------------------------------------------------------- measures

def enumerate_measures(algebra: SigmaAlgebra, pool) -> Iterator[SignedMeasure]:
    """Valuations drawn from ``pool`` that pass every signed-measure clause.

    Partial assignments are pruned on the bottom value and on modularity;
    survivors are decided by :func:`validate_signed_measure`.
    """
    pool = sorted({to_rational(v) for v in pool})
    lat = algebra.lattice
    ms = list(algebra.members)
    position = {m: i for i, m in enumerate(ms)}
    # Modularity constraints, each attached to the member at which it becomes checkable.
    checks: list[list[tuple[int, int, int, int]]] = [[] for _ in ms]
    for i, h in enumerate(ms):
        for g in ms[i:]:
            j, m = lat.join(h, g), lat.meet(h, g)
            last = max(position[h], position[g], position[j], position[m])
            checks[last].append((h, g, j, m))
    values: dict[int, Fraction] = {}

    def fill(i: int):
        if i == len(ms):
            measure = SignedMeasure(algebra, dict(values), SIGNED)
            if validate_signed_measure(measure).ok:
                yield measure
            return
        x = ms[i]
        candidates = [Fraction(0)] if x == lat.bottom else pool
        for val in candidates:
            values[x] = val
            if all(values[j] + values[m] == values[h] + values[g] for h, g, j, m in checks[i]):
                yield from fill(i + 1)
        values.pop(x, None)

    if lat.bottom in algebra and Fraction(0) not in pool:
        return
    yield from fill(0)


# ------------------------------------------------------------------- search

@dataclass(frozen=True)
class SearchSpec:
    max_lattice_size: int = 4
    required_axioms: frozenset = frozenset()
    forbidden_axioms: frozenset = frozenset()
    measure_value_pool: tuple = ()
    require_distributive: bool = False
    limit: int | None = None
    seed: int = 0
    samples: int = 20_000

    def __post_init__(self):
        req, forb = frozenset(self.required_axioms), frozenset(self.forbidden_axioms)
        bad = (req | forb) - set(AXIOMS)
        if bad:
            raise ValueError(f"unknown axioms {sorted(bad)}")
        if req & forb:
            raise ValueError(f"axioms both required and forbidden: {sorted(req & forb)}")
        object.__setattr__(self, "required_axioms", req)
        object.__setattr__(self, "forbidden_axioms", forb)
        object.__setattr__(self, "measure_value_pool", tuple(to_rational(v) for v in self.measure_value_pool))

    def bounds(self) -> dict:
        return {
            "max_lattice_size": self.max_lattice_size,
            "required": sorted(self.required_axioms),
            "forbidden": sorted(self.forbidden_axioms),
            "pool": [format_rational(v) for v in self.measure_value_pool],
            "require_distributive": self.require_distributive,
            "limit": self.limit,
            "seed": self.seed,
            "exhaustive_lattices_up_to": min(self.max_lattice_size, MAX_EXHAUSTIVE_LATTICE),
            "exhaustive_complements_up_to": MAX_EXHAUSTIVE_COMPLEMENT,
        }


@dataclass(frozen=True)
class Finding:
    kind: str
    model: dict | None
    notes: str
    verdicts: dict | None = None
    key: tuple = field(default=(), compare=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "model": self.model, "notes": self.notes, "verdicts": self.verdicts}


def _model_finding(kind: str, model: Model, notes: str, key: tuple) -> Finding:
    return Finding(kind, model_to_dict(model), notes, model_verdicts(model), key)


def _complements_for(lattice, spec: SearchSpec):
    """Complement tables for one lattice and whether the list is exhaustive."""
    if lattice.size <= MAX_EXHAUSTIVE_COMPLEMENT or "L8" in spec.required_axioms:
        # Involutions are few; pruning on L8 keeps larger sizes exhaustive.
        return enumerate_complements(lattice, spec.required_axioms, spec.forbidden_axioms), True
    return sample_complements(
        lattice, spec.required_axioms, spec.forbidden_axioms, spec.samples, spec.seed
    ), False


def _lattices_for(spec: SearchSpec):
    top = min(spec.max_lattice_size, MAX_EXHAUSTIVE_LATTICE)
    yield from enumerate_lattices(top, spec.require_distributive)
    for size in range(MAX_EXHAUSTIVE_LATTICE + 1, spec.max_lattice_size + 1):
        yield from sample_lattices(size, spec.samples, spec.seed + size, spec.require_distributive)


def search_models(spec: SearchSpec) -> list[Finding]:
    """Run the search and return findings sorted by model key.

    An absence finding is emitted only when every phase was exhaustive and
    the emission limit did not cut the search short.
    """
    findings: list[Finding] = []
    exhaustive = spec.max_lattice_size <= MAX_EXHAUSTIVE_LATTICE
    truncated = False
    lattices_seen = complements_seen = 0

    def full() -> bool:
        return spec.limit is not None and len(findings) >= spec.limit

    for lattice in _lattices_for(spec):
        if full():
            truncated = True
            break
        lattices_seen += 1
        code = lattice_code(lattice)
        comps, complete = _complements_for(lattice, spec)
        exhaustive &= complete
        for cm in comps:
            if full():
                truncated = True
                break
            complements_seen += 1
            algebra = generate(lattice, cm, lattice.elements())
            base_key = (code, cm.table)
            model = Model(lattice, cm, algebra)
            findings.append(_model_finding(
                MODEL_FOUND, model, f"size {lattice.size} lattice with complement {list(cm.table)}", base_key + ((),)
            ))
            if not spec.measure_value_pool:
                continue
            for measure in enumerate_measures(algebra, spec.measure_value_pool):
                if full():
                    truncated = True
                    break
                vals = tuple(measure(x) for x in algebra.members)
                findings.append(_model_finding(
                    VALID_MEASURE_FOUND,
                    Model(lattice, cm, algebra, measure),
                    "valuation passes every signed-measure clause",
                    base_key + (vals,),
                ))

    findings.sort(key=lambda f: f.key)
    if not findings and exhaustive and not truncated:
        notes = (
            f"no model matches required={sorted(spec.required_axioms)} "
            f"forbidden={sorted(spec.forbidden_axioms)}; searched {lattices_seen} lattices "
            f"(isomorph-free, sizes 1..{spec.max_lattice_size}) with every complement table"
        )
        findings.append(Finding(NO_MODEL_EXISTS, None, notes, {"bounds": spec.bounds()}))
    return findings


def stress_theorem(spec: SearchSpec) -> list[Finding]:
    """Decompose every valid model found under ``spec`` two ways and report disagreements."""
    return stress_findings(search_models(spec))


def stress_findings(findings) -> list[Finding]:
    violations = []
    for f in findings:
        if f.kind != VALID_MEASURE_FOUND:
            continue
        problems = check_decomposition(parse_model(f.model).measure)
        if problems:
            violations.append(Finding(THEOREM_VIOLATION, f.model, "; ".join(problems), f.verdicts, f.key))
    return violations


def check_decomposition(measure: SignedMeasure) -> list[str]:
    """Cross-check :func:`hahn_decompose` against :func:`oracle_decompose`; empty list if they agree."""
    problems = []
    hd = hahn_decompose(measure)
    od = oracle_decompose(measure)
    problems += [f"{v.claim}: {v.detail}".rstrip(": ") for v in hd.violations]
    if isinstance(od, NoDecomposition):
        problems.append(f"oracle found no decomposition ({od.reason})")
        return problems
    if hd.lambda_value != od.lambda_value:
        problems.append(f"λ mismatch: {hd.lambda_value} vs oracle {od.lambda_value}")
    if hd.a != od.a and measure(hd.a) != measure(od.a):
        problems.append(f"A differs beyond a tie: {hd.a} vs oracle {od.a}")
    return problems
