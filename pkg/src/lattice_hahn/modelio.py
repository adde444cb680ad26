"""Model files: a single JSON document describing lattice, complement, σ-algebra and measure.

Accepted shape::

    {
      "names": ["0", "a", "b", "1"], "covers": [[0, 1], [0, 2], [1, 3], [2, 3]],
      # or instead of names/covers:  "powerset": ["p", "q"]
      "complement": [3, 2, 1, 0],
      "generators": [1],                 # optional, default: every element
      "measure": {"a": "1/2", "b": "-1", ...},   # optional, keys by name or index
      "measure_kind": "signed"           # optional: "signed" (default) or "unsigned"
    }

Elements may be referenced by index or by name anywhere a reference is
expected.  Serialisation always writes the canonical names/covers form.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .complement import ComplementMap, check_axioms, require_paper_profile
from .errors import ParseError, ReferentialError
from .lattice import FiniteLattice, build_from_covers, build_powerset, check_distributive, check_lattice_laws
from .measures import KINDS, SIGNED, SignedMeasure, format_rational, to_rational
from .sigma import SigmaAlgebra, generate, is_closed

MODEL_KEYS = {"names", "covers", "powerset", "complement", "generators", "measure", "measure_kind", "finding"}


@dataclass(frozen=True)
class Model:
    lattice: FiniteLattice
    complement: ComplementMap
    algebra: SigmaAlgebra
    measure: SignedMeasure | None = None

    def __iter__(self):
        return iter((self.lattice, self.complement, self.algebra, self.measure))


def _ref(names, ref, field_name: str) -> int:
    if isinstance(ref, bool):
        raise ReferentialError(f"{field_name}: {ref!r} is not an element reference")
    if isinstance(ref, int):
        if 0 <= ref < len(names):
            return ref
        raise ReferentialError(f"{field_name}: index {ref} out of range 0..{len(names) - 1}")
    if isinstance(ref, str):
        if ref in names:
            return names.index(ref)
        if ref.strip().lstrip("-").isdigit():
            return _ref(names, int(ref), field_name)
        raise ReferentialError(f"{field_name}: unknown element name {ref!r}")
    raise ReferentialError(f"{field_name}: {ref!r} is not an element reference")


def _list(data, key):
    val = data[key]
    if not isinstance(val, list):
        raise ParseError(f"field {key!r} must be a list")
    return val


def parse_model(data) -> Model:
    """Build and cross-check every component described by a decoded model document."""
    if not isinstance(data, dict):
        raise ParseError("model file must contain a JSON object")
    unknown = sorted(set(data) - MODEL_KEYS)
    if unknown:
        raise ParseError(f"unknown field(s): {', '.join(unknown)}")

    if "powerset" in data:
        if "names" in data or "covers" in data:
            raise ParseError("field 'powerset' cannot be combined with 'names'/'covers'")
        labels = _list(data, "powerset")
        if not all(isinstance(l, str) for l in labels):
            raise ParseError("field 'powerset' must list string labels")
        lattice = build_powerset(labels)
    elif "names" in data and "covers" in data:
        names = _list(data, "names")
        if not all(isinstance(n, str) for n in names):
            raise ParseError("field 'names' must list strings")
        covers = []
        for pair in _list(data, "covers"):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"field 'covers': entry {pair!r} is not a pair")
            covers.append((_ref(names, pair[0], "covers"), _ref(names, pair[1], "covers")))
        lattice = build_from_covers(names, covers)
    else:
        raise ParseError("model needs either 'powerset' or both 'names' and 'covers'")

    names = list(lattice.names)
    if "complement" not in data:
        raise ParseError("missing field 'complement'")
    comp_refs = _list(data, "complement")
    if len(comp_refs) != lattice.size:
        raise ReferentialError(
            f"complement: {len(comp_refs)} entries given for {lattice.size} elements"
        )
    complement = ComplementMap(lattice, [_ref(names, r, "complement") for r in comp_refs])

    if "generators" in data:
        gens = [_ref(names, r, "generators") for r in _list(data, "generators")]
    else:
        gens = list(lattice.elements())
    algebra = generate(lattice, complement, gens)

    measure = None
    if "measure" in data:
        raw = data["measure"]
        if not isinstance(raw, dict):
            raise ParseError("field 'measure' must be an object mapping elements to rationals")
        kind = data.get("measure_kind", SIGNED)
        if kind not in KINDS:
            raise ParseError(f"field 'measure_kind' must be one of {KINDS}")
        values = {}
        for key, val in raw.items():
            idx = _ref(names, key, "measure")
            if idx in values:
                raise ReferentialError(f"measure: element {names[idx]!r} given twice")
            if not isinstance(val, (str, int)) or isinstance(val, bool):
                raise ParseError(f"measure: value for {key!r} must be a rational string")
            try:
                values[idx] = to_rational(val)
            except (ValueError, ZeroDivisionError) as exc:
                raise ParseError(f"measure: bad rational {val!r} for {key!r}") from exc
        measure = SignedMeasure(algebra, values, kind)
    return Model(lattice, complement, algebra, measure)


def loads_model(text: str) -> Model:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return parse_model(data)


def load_model(path) -> Model:
    return loads_model(Path(path).read_text(encoding="utf-8"))


def read_document(path) -> dict:
    try:
        return json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc


def model_to_dict(model: Model) -> dict:
    lat = model.lattice
    d = {
        "names": list(lat.names),
        "covers": [list(p) for p in sorted(lat.covers())],
        "complement": list(model.complement.table),
        "generators": list(model.algebra.generators),
    }
    if model.measure is not None:
        d["measure"] = {lat.names[x]: format_rational(model.measure(x)) for x in model.algebra.members}
        d["measure_kind"] = model.measure.kind
    return d


def dumps_model(model: Model, extra: dict | None = None) -> str:
    d = model_to_dict(model)
    if extra:
        d.update(extra)
    return json.dumps(d, indent=2, ensure_ascii=False) + "\n"


def model_verdicts(model: Model) -> dict:
    """Pass/fail summary of every check that applies to the model."""
    lat = model.lattice
    laws = check_lattice_laws(lat)
    axioms = check_axioms(model.complement)
    out = {
        "lattice_laws": all(v.holds for v in laws.values()),
        "distributive": check_distributive(lat).holds,
        "complement": {k: v.holds for k, v in axioms.verdicts().items()},
        "profile": require_paper_profile(axioms).accepted,
        "sigma_closed": is_closed(lat, model.complement, model.algebra.members).holds,
        "sigma_members": list(model.algebra.members),
        "measure": None,
    }
    if model.measure is not None:
        report = model.measure.validated().validation
        out["measure"] = {k: v.holds for k, v in report.clauses.items()}
    return out

