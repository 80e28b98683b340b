"""Command-line interface.

Exit codes: 0 success or affirmative answer, 1 negative or inconclusive
answer, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from dlkit.fragments import detect_features, dl_name, is_el, is_elpp
from dlkit.owl import ExportConfig, export_functional
from dlkit.parser import ParseError, parse_axiom, parse_ontology, render, render_axiom, render_role
from dlkit.reasoner import (
    CapExceeded,
    NoneUpTo,
    SearchConfig,
    Witness,
    check_consistency,
    check_entailment,
    max_interpretations_from_env,
)
from dlkit.rewrite import desugar, nominalize_abox
from dlkit.semantics import UnmappedName, interpretation_from_json, satisfies_axiom
from dlkit.structural import StructuralConfig, has_complex_role_inclusions, validate_simplicity
from dlkit.syntax import ABOX_AXIOMS

OK, NEGATIVE, ERROR = 0, 1, 2

REGULARITY_WARNING = "warning: regularity of complex role inclusions is not checked"

EPILOG = """\
exit codes: 0 success/affirmative, 1 negative or inconclusive, 2 parse or usage error.
Note the asymmetry: 'consistent' exits 0 when a model is found and 1 when none
exists up to the bound; 'entails' exits 0 when no countermodel exists up to the
bound (entailment not refuted) and 1 when a countermodel is found.
Set DLKIT_MAX_INTERPRETATIONS to cap explicit enumeration (default 10^8).
"""


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from e


def _load(path: str):
    return parse_ontology(_read(path))


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json

    def emit(self, text: str, data: dict) -> None:
        if self.as_json:
            sys.stdout.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
        elif text:
            sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _search_config(args) -> SearchConfig:
    if args.max_domain < 1:
        raise UsageError("--max-domain must be at least 1")
    return SearchConfig(
        max_domain_size=args.max_domain,
        max_interpretations=max_interpretations_from_env(),
        strategy=args.strategy,
        workers=args.workers,
    )


def _write_model(path: Optional[str], verdict) -> None:
    if path and isinstance(verdict, Witness):
        with open(path, "w", encoding="utf-8", newline="\n") as f:
            f.write(verdict.interpretation.to_json())


# --------------------------------------------------------------------------
# commands
# --------------------------------------------------------------------------


def cmd_parse(args, out: _Out) -> int:
    o = _load(args.file)
    text = render(o)
    out.emit(text, {"axioms": text.splitlines()})
    return OK


def cmd_check(args, out: _Out) -> int:
    o = _load(args.file)
    report = validate_simplicity(o, StructuralConfig(universal_role_simple=args.universal_simple))
    nonsimple = sorted(render_role(r) for r in report.nonsimple)
    warn = has_complex_role_inclusions(o)
    if warn:
        print(REGULARITY_WARNING, file=sys.stderr)
    lines = [f"non-simple roles: {', '.join(nonsimple) if nonsimple else '(none)'}"]
    lines.append(f"violations: {len(report.violations)}")
    for v in report.violations:
        lines.append(
            f"  {v.where()}: {render_axiom(v.axiom)}: "
            f"non-simple role {render_role(v.role)} in {v.position}"
        )
    out.emit(
        "\n".join(lines),
        {
            "nonsimple": nonsimple,
            "violations": [
                {
                    "axiom_index": v.axiom_index,
                    "line": v.line,
                    "axiom": render_axiom(v.axiom),
                    "role": render_role(v.role),
                    "position": v.position,
                }
                for v in report.violations
            ],
            "regularity_checked": False,
        },
    )
    return OK if report.ok else NEGATIVE


def cmd_consistent(args, out: _Out) -> int:
    o = desugar(_load(args.file))
    verdict = check_consistency(o, _search_config(args))
    _write_model(args.emit_model, verdict)
    if isinstance(verdict, Witness):
        out.emit(
            f"model found at size {verdict.size}",
            {"verdict": "model", "size": verdict.size, "model": verdict.interpretation.to_dict()},
        )
        return OK
    out.emit(f"no model up to size {verdict.bound}", {"verdict": "none", "bound": verdict.bound})
    return NEGATIVE


def cmd_entails(args, out: _Out) -> int:
    o = _load(args.file)
    try:
        query = parse_axiom(args.axiom, o.signature)
    except ParseError as e:
        e.source = "--axiom"
        raise
    verdict = check_entailment(desugar(o), query, _search_config(args))
    _write_model(args.emit_model, verdict)
    if isinstance(verdict, NoneUpTo):
        out.emit(
            f"no countermodel up to size {verdict.bound}",
            {"verdict": "not refuted", "bound": verdict.bound, "query": render_axiom(query)},
        )
        return OK
    out.emit(
        f"countermodel found at size {verdict.size}",
        {
            "verdict": "refuted",
            "size": verdict.size,
            "query": render_axiom(query),
            "countermodel": verdict.interpretation.to_dict(),
        },
    )
    return NEGATIVE


def cmd_model_check(args, out: _Out) -> int:
    o = _load(args.file)
    interp = interpretation_from_json(
        _read(args.interpretation), o.signature, partial_as_empty=args.partial_as_empty
    )
    rows = [(render_axiom(a), satisfies_axiom(a, interp)) for a in o.axioms]
    model = all(ok for _, ok in rows)
    lines = [f"{'holds' if ok else 'FAILS':5}  {text}" for text, ok in rows]
    lines.append(f"model: {'yes' if model else 'no'}")
    out.emit(
        "\n".join(lines),
        {"axioms": [{"axiom": t, "holds": ok} for t, ok in rows], "model": model},
    )
    return OK if model else NEGATIVE


def cmd_desugar(args, out: _Out) -> int:
    text = render(desugar(_load(args.file)))
    out.emit(text, {"axioms": text.splitlines()})
    return OK


def cmd_nominalize(args, out: _Out) -> int:
    text = render(nominalize_abox(_load(args.file)))
    out.emit(text, {"axioms": text.splitlines()})
    return OK


def cmd_fragment(args, out: _Out) -> int:
    o = _load(args.file)
    features = detect_features(o)
    name = dl_name(features)
    el, elpp = is_el(o), is_elpp(o)
    lines = [name, f"EL: {'yes' if el else 'no'}", f"EL++: {'yes' if elpp else 'no'}"]
    if o.axioms and all(isinstance(a, ABOX_AXIOMS) for a in o.axioms):
        lines.append("note: assertions alone do not affect the constructor-based name")
    out.emit(
        "\n".join(lines),
        {"name": name, "el": el, "elpp": elpp, "features": features.enabled()},
    )
    return OK


def cmd_export_owl(args, out: _Out) -> int:
    o = _load(args.file)
    try:
        cfg = ExportConfig(ontology_iri=args.iri, prefix=args.prefix)
    except ValueError as e:
        raise UsageError(str(e)) from e
    text = export_functional(o, cfg)
    out.emit(text, {"functional_syntax": text})
    return OK


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured JSON output")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--max-domain", type=int, default=3, metavar="N")
    search.add_argument("--strategy", choices=("ground", "enumerate"), default="ground")
    search.add_argument("--workers", type=int, default=1)
    search.add_argument("--emit-model", metavar="PATH", help="write the witness as JSON")

    parser = argparse.ArgumentParser(
        prog="dlkit",
        description="SROIQ ontology toolkit: parsing, structural checks, bounded reasoning, OWL export.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", parents=[common], help="print the canonical rendering")
    p.add_argument("file")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("check", parents=[common], help="simplicity restrictions")
    p.add_argument("file")
    p.add_argument("--universal-simple", action="store_true", help="treat Universal as simple")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("consistent", parents=[common, search], help="bounded model search")
    p.add_argument("file")
    p.set_defaults(func=cmd_consistent)

    p = sub.add_parser("entails", parents=[common, search], help="bounded countermodel search")
    p.add_argument("file")
    p.add_argument("--axiom", required=True, help="query axiom in ontology syntax")
    p.set_defaults(func=cmd_entails)

    p = sub.add_parser("model-check", parents=[common], help="evaluate axioms in an interpretation")
    p.add_argument("file")
    p.add_argument("--interpretation", required=True, metavar="PATH")
    p.add_argument("--partial-as-empty", action="store_true")
    p.set_defaults(func=cmd_model_check)

    p = sub.add_parser("desugar", parents=[common], help="expand role characteristics")
    p.add_argument("file")
    p.set_defaults(func=cmd_desugar)

    p = sub.add_parser("nominalize", parents=[common], help="turn assertions into inclusions")
    p.add_argument("file")
    p.set_defaults(func=cmd_nominalize)

    p = sub.add_parser("fragment", parents=[common], help="DL name and EL / EL++ membership")
    p.add_argument("file")
    p.set_defaults(func=cmd_fragment)

    p = sub.add_parser("export-owl", parents=[common], help="OWL 2 Functional-Style Syntax")
    p.add_argument("file")
    p.add_argument("--iri", help="ontology IRI")
    p.add_argument("--prefix", help="IRI bound to the ':' prefix (default: IRI#)")
    p.set_defaults(func=cmd_export_owl)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return OK if e.code == 0 else ERROR
    try:
        return args.func(args, _Out(args.json))
    except ParseError as e:
        where = getattr(e, "source", None) or getattr(args, "file", "<input>")
        print(f"{where}:{e.line}:{e.column}: {e.kind.lower()} error: {e.message}", file=sys.stderr)
    except (UsageError, UnmappedName, CapExceeded, ValueError) as e:
        # ValueError covers NameKindConflict, InverseOfUniversal, bad JSON
        print(f"error: {e}", file=sys.stderr)
    return ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
