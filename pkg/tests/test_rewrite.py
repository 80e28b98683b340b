import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dlkit.batch import Block
from dlkit.parser import parse_ontology
from dlkit.reasoner import model_indices
from dlkit.rewrite import (
    InverseOfUniversal,
    desugar,
    eliminate_forall,
    eliminate_forall_ontology,
    nominalize_abox,
    split_equivalences,
)
from dlkit.space import InterpretationSpace
from dlkit.syntax import (
    Characteristic,
    CharacteristicKind,
    ComplexRoleIncl,
    ConceptAssertion,
    ConceptIncl,
    Exists,
    Forall,
    Inverse,
    Named,
    Nominal,
    Not,
    RoleAssertion,
    RoleDisjoint,
    RoleName,
    Signature,
    Universal,
    build_ontology,
    subconcepts,
)

from strategies import concepts, ontologies

A = Named("A")
R, S = RoleName("R"), RoleName("S")


class TestDesugar:
    def test_transitive(self):
        o = parse_ontology("Transitive(ancestorOf)")
        anc = RoleName("ancestorOf")
        assert desugar(o).axioms == (ComplexRoleIncl(anc, anc, anc),)

    def test_asymmetric(self):
        o = parse_ontology("Asymmetric(parentOf)")
        assert desugar(o).axioms == (RoleDisjoint(RoleName("parentOf"), Inverse("parentOf")),)

    def test_all_encodings(self):
        o = parse_ontology("Symmetric(m)\nReflexive(k)\nIrreflexive(m)")
        expected = parse_ontology(
            "m EquivalentRole inv(m)\nTop SubClassOf Self(k)\nTop SubClassOf not Self(m)"
        )
        assert desugar(o).axioms == expected.axioms

    def test_identity_without_sugar(self):
        o = parse_ontology("A SubClassOf B\n(a, b) : r")
        assert desugar(o) == o

    def test_locations_inherited(self):
        o = parse_ontology("A SubClassOf B\n\nTransitive(r)")
        assert desugar(o).locations == (1, 3)

    @pytest.mark.parametrize("kind", [CharacteristicKind.SYMMETRIC, CharacteristicKind.ASYMMETRIC])
    def test_universal_rejected(self, kind):
        with pytest.raises(InverseOfUniversal):
            desugar(build_ontology([Characteristic(kind, Universal())]))

    def test_universal_transitive_allowed(self):
        o = build_ontology([Characteristic(CharacteristicKind.TRANSITIVE, Universal())])
        assert desugar(o).axioms == (ComplexRoleIncl(Universal(), Universal(), Universal()),)


class TestSplit:
    def test_concepts(self):
        o = parse_ontology("Mother EquivalentTo (Female and Parent)")
        assert split_equivalences(o) == parse_ontology(
            "Mother SubClassOf (Female and Parent)\n(Female and Parent) SubClassOf Mother"
        )

    def test_roles(self):
        o = parse_ontology("parentOf EquivalentRole inv(childOf)")
        assert split_equivalences(o) == parse_ontology(
            "parentOf SubRoleOf inv(childOf)\ninv(childOf) SubRoleOf parentOf"
        )

    def test_inclusions_unchanged(self):
        o = parse_ontology("A SubClassOf B")
        assert split_equivalences(o) == o


class TestNominalize:
    def test_concept_assertion(self):
        o = build_ontology([ConceptAssertion(Named("Mother"), "julia")])
        assert nominalize_abox(o).axioms == (ConceptIncl(Nominal("julia"), Named("Mother")),)

    def test_role_assertion(self):
        o = build_ontology([RoleAssertion(RoleName("parentOf"), "julia", "john")])
        assert nominalize_abox(o).axioms == (
            ConceptIncl(Nominal("julia"), Exists(RoleName("parentOf"), Nominal("john"))),
        )

    def test_tbox_unchanged(self):
        o = parse_ontology("A SubClassOf B")
        assert nominalize_abox(o) == o

    def test_equalities_kept(self):
        o = parse_ontology("a = b\na != c")
        assert nominalize_abox(o) == o


class TestEliminateForall:
    def test_single(self):
        p = RoleName("parentOf")
        assert eliminate_forall(Forall(p, Named("Female"))) == Not(Exists(p, Not(Named("Female"))))

    def test_named(self):
        assert eliminate_forall(A) == A

    def test_nested(self):
        assert eliminate_forall(Forall(R, Forall(S, A))) == Not(Exists(R, Not(Not(Exists(S, Not(A))))))

    def test_nested_is_equivalent_up_to_size_3(self):
        c = Forall(R, Forall(S, A))
        d = eliminate_forall(c)
        sig = Signature(set(), {"A"}, {"R", "S"})
        for n in (1, 2, 3):
            space = InterpretationSpace(sig, n)
            for start in range(0, space.count, 1 << 18):
                b = Block(space, start, min(space.count, start + (1 << 18)))
                assert np.array_equal(b.concept(c), b.concept(d))


REWRITES = [desugar, split_equivalences, nominalize_abox, eliminate_forall_ontology]


@settings(max_examples=40, deadline=None)
@given(ontologies)
def test_model_sets_preserved(o):
    for n in (1, 2):
        base = model_indices(o, n)
        for f in REWRITES:
            assert np.array_equal(model_indices(f(o), n, o.signature), base), f.__name__


@given(ontologies)
def test_idempotent(o):
    for f in REWRITES:
        assert f(f(o)) == f(o)


@given(ontologies)
def test_nominalize_removes_assertions(o):
    assert not any(
        isinstance(a, (ConceptAssertion, RoleAssertion)) for a in nominalize_abox(o).axioms
    )


@given(ontologies)
def test_desugar_removes_characteristics(o):
    assert not any(isinstance(a, Characteristic) for a in desugar(o).axioms)


@given(st.lists(concepts, min_size=1, max_size=3))
def test_eliminate_forall_leaves_no_forall(cs):
    for c in cs:
        assert not any(isinstance(x, Forall) for x in subconcepts(eliminate_forall(c)))
