"""Acceptance criteria, one check per criterion.

Each check returns a short detail string on success and raises on failure.
Under pytest the outcome lines are printed in the terminal summary; run
this file directly to print them without pytest.
"""

from __future__ import annotations

import contextlib
import io
import random
import sys
from pathlib import Path

import numpy as np
import pytest

from dlkit.batch import Block
from dlkit.cli import run
from dlkit.fragments import fragment_name, is_el
from dlkit.owl import ExportConfig, export_axiom, export_functional
from dlkit.parser import parse_axiom, parse_ontology, render
from dlkit.randgen import GenConfig, random_axiom, random_concept, random_ontology, random_role
from dlkit.reasoner import (
    NoneUpTo,
    SearchConfig,
    Witness,
    check_consistency,
    check_entailment,
    model_indices,
)
from dlkit.rewrite import desugar, nominalize_abox, split_equivalences
from dlkit.space import InterpretationSpace
from dlkit.structural import compute_nonsimple, validate_simplicity
from dlkit.syntax import (
    ComplexRoleIncl,
    ConceptIncl,
    Exists,
    Forall,
    Inverse,
    Not,
    RoleDisjoint,
    RoleIncl,
    RoleName,
    build_ontology,
    signature_of,
)

TESTS = Path(__file__).resolve().parent
ONTOLOGIES = TESTS.parent / "ontologies"
GOLDEN = TESTS / "golden"

RESULTS: list[tuple[int, str, bool, str]] = []
CRITERIA = []


def criterion(number: int, title: str):
    def register(fn):
        fn.number, fn.title = number, title
        CRITERIA.append(fn)
        return fn

    return register


def load(name: str):
    return parse_ontology((ONTOLOGIES / name).read_text(encoding="utf-8"))


def cli(*argv) -> tuple[int, str]:
    out = io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(io.StringIO()):
        code = run([str(a) for a in argv])
    return code, out.getvalue()


# --------------------------------------------------------------------------


@criterion(1, "worked inferences are not refuted up to size 3")
def check_inferences():
    cases = [
        ("mothers.dl", "julia : Parent"),
        ("family.dl", "julia : Parent"),
        ("ancestors.dl", "(julia, john) : ancestorOf"),
        ("uncles.dl", "(charles, john) : uncleOf"),
        ("sons.dl", "john : Male"),
        ("sons.dl", "julia : Parent"),
    ]
    for name, query in cases:
        code, out = cli("entails", ONTOLOGIES / name, "--axiom", query, "--max-domain", 3)
        assert (code, out) == (0, "no countermodel up to size 3\n"), (name, query, out)
    return f"{len(cases)} queries"


@criterion(2, "three-child ontology: first model at size 3, none at sizes 1-2")
def check_three_children():
    o = load("many_children.dl")
    for strategy in ("enumerate", "ground"):
        small = check_consistency(o, SearchConfig(max_domain_size=2, strategy=strategy))
        assert small == NoneUpTo(2), (strategy, small)
        verdict = check_consistency(o, SearchConfig(max_domain_size=3, strategy=strategy))
        assert isinstance(verdict, Witness) and verdict.size == 3, (strategy, verdict)
    for n in (1, 2):
        assert len(model_indices(o, n)) == 0
    n_models = len(model_indices(o, 3))
    assert n_models > 0
    return f"{n_models} models at size 3"


@criterion(3, "inconsistent ontology has no model and entails 20 random queries")
def check_inconsistency():
    o = load("contradiction.dl")
    for n in (1, 2, 3):
        assert len(model_indices(o, n)) == 0
    assert check_consistency(o) == NoneUpTo(3)
    cfg = GenConfig(individuals=("bob", "ann"), concepts=("Male", "Female", "A"), roles=("r",))
    rng = random.Random(3)
    for _ in range(20):
        q = random_axiom(rng, cfg)
        verdict = check_entailment(o, q)
        assert verdict == NoneUpTo(3), (q, verdict)
    return "20 queries not refuted"


@criterion(4, "forall R.C equals not exists R.not C on every interpretation up to size 3")
def check_duality():
    cfg = GenConfig(individuals=(), concepts=("A", "B"), roles=("r", "s"), max_depth=2)
    rng = random.Random(4)
    checked = mismatches = 0
    chunk = 1 << 20
    for _ in range(200):
        c, r = random_concept(rng, cfg), random_role(rng, cfg)
        lhs, rhs = Forall(r, c), Not(Exists(r, Not(c)))
        # evaluation only depends on the names that occur, so the space of
        # their interpretations covers every interpretation of the full signature
        sig = signature_of([ConceptIncl(lhs, rhs)])
        for n in (1, 2, 3):
            space = InterpretationSpace(sig, n)
            for start in range(0, space.count, chunk):
                b = Block(space, start, min(space.count, start + chunk))
                mismatches += int(np.count_nonzero(b.concept(lhs) != b.concept(rhs)))
                checked += b.N
    assert mismatches == 0, mismatches
    return f"200 concepts, {checked} interpretations, 0 discrepancies"


REWRITE_CFG = GenConfig(individuals=("a", "b"), concepts=("A", "B"), roles=("r",))


@criterion(5, "rewrites keep the exact model set at sizes 1-3")
def check_rewrites():
    rng = random.Random(5)
    compared = 0
    for _ in range(100):
        o = random_ontology(rng, REWRITE_CFG)
        for n in (1, 2, 3):
            base = model_indices(o, n, o.signature)
            compared += len(base)
            for f in (desugar, split_equivalences, nominalize_abox):
                got = model_indices(f(o), n, o.signature)
                assert np.array_equal(got, base), (render(o), n, f.__name__)
    return f"100 ontologies, {compared} models compared"


@criterion(6, "adding an axiom never adds models")
def check_monotonicity():
    rng = random.Random(6)
    strict = 0
    for _ in range(100):
        o = random_ontology(rng, REWRITE_CFG)
        bigger = o.extended(random_axiom(rng, REWRITE_CFG))
        for n in (1, 2, 3):
            before = model_indices(o, n, bigger.signature)
            after = model_indices(bigger, n)
            assert np.isin(after, before).all(), (render(bigger), n)
            strict += len(after) < len(before)
    return f"100 pairs, {strict} strict shrinkages"


@criterion(7, "non-simple roles and simplicity violations on the uncle RBox")
def check_simplicity():
    uncle, rel = RoleName("uncleOf"), RoleName("relativeOf")
    rbox = [
        RoleIncl(RoleName("parentOf"), RoleName("ancestorOf")),
        ComplexRoleIncl(RoleName("brotherOf"), RoleName("parentOf"), uncle),
    ]
    o = build_ontology(rbox)
    assert compute_nonsimple(o) == {uncle, Inverse("uncleOf")}
    o = o.extended(RoleIncl(uncle, rel))
    assert compute_nonsimple(o) == {uncle, Inverse("uncleOf"), rel, Inverse("relativeOf")}
    o = o.extended(RoleDisjoint(uncle, RoleName("X")))
    violations = validate_simplicity(o).violations
    assert len(violations) == 1 and violations[0].axiom_index == 3
    return "4 non-simple roles, 1 violation"


@criterion(8, "fragment names and EL membership")
def check_fragments():
    alchiq = parse_ontology(
        "r SubRoleOf s\nA SubClassOf exists inv(r).(B or not C)\nB SubClassOf >= 2 s.A and forall r.C"
    )
    assert fragment_name(alchiq) == "ALCHIQ"
    assert fragment_name(load("family.dl")) == "SROIQ"
    el = parse_ontology("Parent EquivalentTo exists parentOf.Top")
    assert is_el(el)
    assert not is_el(el.extended(parse_axiom("Parent EquivalentTo (Father or Mother)")))
    return "ALCHIQ, SROIQ, EL yes/no"


@criterion(9, "render then parse is the identity on 500 random ontologies")
def check_round_trip():
    cfg = GenConfig(
        individuals=("a", "b", "c"),
        concepts=("A", "B", "C"),
        roles=("r", "s", "t"),
        max_depth=4,
        max_axioms=8,
    )
    rng = random.Random(9)
    for _ in range(500):
        o = random_ontology(rng, cfg)
        text = render(o)
        back = parse_ontology(text)
        assert back == o, text
        assert render(back) == text
    return "500 ontologies"


@criterion(10, "OWL functional syntax export matches the golden file")
def check_owl():
    line = export_axiom(parse_axiom("Mother EquivalentTo (Female and Parent)"))
    assert line == "EquivalentClasses( :Mother ObjectIntersectionOf( :Female :Parent ) )"
    text = export_functional(load("family.dl"), ExportConfig(ontology_iri="http://example.org/family"))
    assert text == (GOLDEN / "family.ofn").read_text(encoding="utf-8")
    return "example axiom and family.ofn"


# --------------------------------------------------------------------------


def evaluate(check) -> tuple[bool, str]:
    try:
        detail = check()
    except Exception as e:  # recorded, then re-raised by the test
        RESULTS.append((check.number, check.title, False, f"{type(e).__name__}: {e}"))
        raise
    RESULTS.append((check.number, check.title, True, detail))
    return True, detail


def format_result(number: int, title: str, ok: bool, detail: str) -> str:
    return f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}  ({detail})"


@pytest.mark.parametrize("check", CRITERIA, ids=lambda c: f"{c.number:02d}-{c.__name__[6:]}")
def test_criterion(check):
    evaluate(check)


if __name__ == "__main__":
    failed = 0
    for check in CRITERIA:
        try:
            evaluate(check)
        except Exception:
            failed += 1
        print(format_result(*RESULTS[-1]), flush=True)
    sys.exit(1 if failed else 0)
