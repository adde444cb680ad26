"""Command line interface.

Exit codes: 0 when every verdict passes, 1 on failed verdicts or theorem
violations, 2 on unusable input or bad usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .complement import check_axioms, require_paper_profile
from .errors import InvalidMeasure, LatticeHahnError
from .hahn import hahn_decompose
from .lattice import check_distributive, check_lattice_laws
from .modelio import Model, dumps_model, load_model, model_to_dict, model_verdicts, parse_model, read_document
from .search import NO_MODEL_EXISTS, THEOREM_VIOLATION, SearchSpec, search_models, stress_findings
from .sigma import is_closed

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


def _named(names, witness):
    if witness is None:
        return None
    return [names[w] if isinstance(w, int) and not isinstance(w, bool) else w for w in witness]


def _verdict_line(label, verdict, names) -> str:
    if verdict.holds:
        return f"  {label:<12} pass"
    return f"  {label:<12} FAIL  witness={_named(names, verdict.witness)}  {verdict.note}"


def _validate(model: Model) -> tuple[dict, list[str], bool]:
    lat = model.lattice
    names = lat.names
    laws = check_lattice_laws(lat)
    dist = check_distributive(lat)
    axioms = check_axioms(model.complement)
    profile = require_paper_profile(axioms)
    closed = is_closed(lat, model.complement, model.algebra.members)
    ok = all(v.holds for v in laws.values()) and profile.accepted and closed.holds

    lines = [f"lattice: {lat.size} elements"]
    lines += [_verdict_line(k, v, names) for k, v in laws.items()]
    lines.append(_verdict_line("L4", dist, names) + ("" if dist.holds else "  (informational)"))
    lines.append("complement:")
    lines += [_verdict_line(k, v, names) for k, v in axioms.verdicts().items()]
    lines.append(
        f"  profile L5+L7+L8: {'accepted' if profile.accepted else 'rejected'}"
        f" (L6 {'holds' if profile.l6_holds else 'fails'})"
    )
    lines.append(f"σ-algebra: {len(model.algebra)} members")
    lines.append(_verdict_line("closed", closed, names))

    record = {
        "lattice": {k: v.to_dict() for k, v in laws.items()},
        "distributive": dist.to_dict(),
        "complement": axioms.to_dict(),
        "profile": profile.to_dict(),
        "sigma": {"members": [names[m] for m in model.algebra.members], "closed": closed.to_dict()},
        "measure": None,
    }
    if model.measure is not None:
        report = model.measure.validated().validation
        ok = ok and report.ok
        lines.append(f"{model.measure.kind} measure:")
        lines += [_verdict_line(f"({k})", v, names) for k, v in report.clauses.items()]
        record["measure"] = _named_report(report, names)
    record["ok"] = ok
    return record, lines, ok


def _named_report(report, names) -> dict:
    d = report.to_dict()
    for c in d["clauses"].values():
        c["witness_names"] = _named(names, c["witness"])
    return d


def cmd_validate(args) -> int:
    model = load_model(args.file)
    record, lines, ok = _validate(model)
    _emit(args, record, lines)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_sigma(args) -> int:
    model = load_model(args.file)
    names = model.lattice.names
    alg = model.algebra
    closed = is_closed(model.lattice, model.complement, alg.members)
    record = {
        "members": list(alg.members),
        "member_names": [names[m] for m in alg.members],
        "generators": [names[g] for g in alg.generators],
        "closed": closed.to_dict(),
    }
    lines = [f"generators: {', '.join(record['generators']) or '(none)'}",
             f"members ({len(alg)}):"]
    lines += [f"  {m}: {names[m]}" for m in alg.members]
    _emit(args, record, lines)
    return EXIT_OK if closed.holds else EXIT_FAIL


def cmd_decompose(args) -> int:
    model = load_model(args.file)
    if model.measure is None:
        raise LatticeHahnError(f"{args.file}: model has no 'measure' field")
    names = model.lattice.names
    try:
        hd = hahn_decompose(model.measure)
    except InvalidMeasure as exc:
        record = {"ok": False, "error": "InvalidMeasure", "measure": _named_report(exc.report, names)}
        lines = ["measure is not a valid signed lattice measure:"]
        lines += [_verdict_line(f"({v.name})", v, names) for v in exc.report.failed()]
        _emit(args, record, lines)
        return EXIT_FAIL
    record = hd.to_dict(names)
    record["ok"] = hd.ok
    lines = [
        f"A = {names[hd.a]}   (positive: {hd.a_certificate.polarity}, {len(hd.a_certificate.checked)} sub-members checked)",
        f"B = {names[hd.b]}   (negative: {hd.b_certificate.polarity}, {len(hd.b_certificate.checked)} sub-members checked)",
        f"λ = {hd.lambda_value}",
        f"value of A ∧ B = {hd.overlap_value}",
        f"A ∨ B = top: {hd.cover_ok}",
    ]
    lines += [f"VIOLATION {v.claim}: {v.detail}" for v in hd.violations]
    _emit(args, record, lines)
    return EXIT_OK if hd.ok else EXIT_FAIL


def _axiom_list(text: str | None) -> frozenset:
    if not text:
        return frozenset()
    return frozenset(a.strip().upper() for a in text.split(",") if a.strip())


def _pool(text: str | None) -> tuple:
    if not text:
        return ()
    return tuple(v.strip() for v in text.split(",") if v.strip())


def cmd_search(args) -> int:
    try:
        spec = SearchSpec(
            max_lattice_size=args.max_size,
            required_axioms=_axiom_list(args.require),
            forbidden_axioms=_axiom_list(args.forbid),
            measure_value_pool=_pool(args.pool),
            require_distributive=args.distributive,
            limit=args.limit,
            seed=args.seed,
            samples=args.samples,
        )
    except (ValueError, ZeroDivisionError) as exc:
        raise LatticeHahnError(f"bad search flags: {exc}") from exc
    findings = list(search_models(spec))
    if args.stress:
        findings += stress_findings(findings)

    counts: dict[str, int] = {}
    for f in findings:
        counts[f.kind] = counts.get(f.kind, 0) + 1
    summary = {"bounds": spec.bounds(), "counts": counts, "findings": []}
    if args.out:
        out = Path(args.out)
        out.mkdir(parents=True, exist_ok=True)
    for i, f in enumerate(findings):
        entry = {"kind": f.kind, "notes": f.notes, "file": None}
        if f.model is not None and args.out:
            fname = f"model-{i:05d}.json"
            model = parse_model(f.model)
            meta = {"finding": {"kind": f.kind, "notes": f.notes, "verdicts": f.verdicts}}
            (out / fname).write_text(dumps_model(model, meta), encoding="utf-8")
            entry["file"] = fname
        if f.model is None:
            entry["verdicts"] = f.verdicts
        summary["findings"].append(entry)
    if args.out:
        (out / "summary.json").write_text(json.dumps(summary, indent=2, ensure_ascii=False) + "\n", encoding="utf-8")

    lines = [f"searched: {json.dumps(spec.bounds(), ensure_ascii=False)}"]
    lines += [f"  {k}: {v}" for k, v in sorted(counts.items())]
    lines += [f"{f.kind}: {f.notes}" for f in findings if f.kind in (NO_MODEL_EXISTS, THEOREM_VIOLATION)]
    if args.out:
        lines.append(f"wrote {sum(1 for e in summary['findings'] if e['file'])} model files to {args.out}")
    _emit(args, summary, lines)
    return EXIT_FAIL if counts.get(THEOREM_VIOLATION) else EXIT_OK


def cmd_report(args) -> int:
    """Reload every model file of a search directory and re-check its recorded verdicts."""
    root = Path(args.dir)
    summary_path = root / "summary.json"
    if not summary_path.is_file():
        raise LatticeHahnError(f"{root}: no summary.json found")
    summary = read_document(summary_path)
    rows = []
    failures = 0
    for entry in summary.get("findings", []):
        if entry.get("kind") == THEOREM_VIOLATION:
            failures += 1
        if not entry.get("file"):
            continue
        path = root / entry["file"]
        doc = read_document(path)
        recorded = doc.get("finding", {}).get("verdicts")
        model = parse_model(doc)
        same_verdicts = model_verdicts(model) == recorded
        stable = model_to_dict(parse_model(model_to_dict(model))) == model_to_dict(model)
        stable = stable and {k: v for k, v in doc.items() if k != "finding"} == model_to_dict(model)
        if not (same_verdicts and stable):
            failures += 1
        rows.append({"file": entry["file"], "kind": entry["kind"], "verdicts_match": same_verdicts, "canonical": stable})
    record = {"counts": summary.get("counts", {}), "models": rows, "failures": failures}
    lines = [f"{k}: {v}" for k, v in sorted(record["counts"].items())]
    lines += [
        f"  {r['file']}: {r['kind']} verdicts {'match' if r['verdicts_match'] else 'DIFFER'}, "
        f"{'canonical' if r['canonical'] else 'NOT canonical'}"
        for r in rows
    ]
    lines.append(f"{len(rows)} model files re-checked, {failures} problem(s)")
    _emit(args, record, lines)
    return EXIT_FAIL if failures else EXIT_OK


def _emit(args, record, lines) -> None:
    if getattr(args, "json", False):
        print(json.dumps(record, indent=2, ensure_ascii=False, default=str))
    else:
        print("\n".join(lines))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lattice-hahn", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, help_ in (
        ("validate", cmd_validate, "check lattice, complement, σ-algebra and measure"),
        ("sigma", cmd_sigma, "print the generated σ-algebra"),
        ("decompose", cmd_decompose, "Hahn decomposition of the model's measure"),
    ):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("file")
        sp.add_argument("--json", action="store_true", help="emit the full record as JSON")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("search", help="enumerate small models")
    sp.add_argument("--max-size", type=int, default=4)
    sp.add_argument("--require", help="comma separated, e.g. L5,L7,L8")
    sp.add_argument("--forbid", help="comma separated, e.g. L6")
    sp.add_argument("--pool", help='measure values, e.g. "-1,0,1,2"')
    sp.add_argument("--limit", type=int)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--samples", type=int, default=20_000, help="draws per sampled phase")
    sp.add_argument("--distributive", action="store_true", help="only distributive lattices")
    sp.add_argument("--stress", action="store_true", help="cross-check decompositions of every valid measure")
    sp.add_argument("--out", help="directory for model files and summary.json")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("report", help="re-check a search output directory")
    sp.add_argument("dir")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_report)
    return p


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (LatticeHahnError, OSError, ValueError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())
