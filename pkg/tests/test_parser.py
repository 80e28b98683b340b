import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dlkit.parser import ParseError, parse_axiom, parse_concept, parse_ontology, render, render_axiom
from dlkit.syntax import (
    And,
    AtLeast,
    Bottom,
    Characteristic,
    CharacteristicKind,
    ComplexRoleIncl,
    ConceptAssertion,
    ConceptEquiv,
    ConceptIncl,
    Equal,
    Exists,
    Forall,
    Inverse,
    Named,
    Not,
    NotEqual,
    Or,
    RoleAssertion,
    RoleDisjoint,
    RoleEquiv,
    RoleIncl,
    RoleName,
    Self,
    Signature,
    Top,
    Universal,
    build_ontology,
)

from strategies import axioms, concepts, ontologies

A, B, C = Named("A"), Named("B"), Named("C")
r = RoleName("r")


def one(text):
    o = parse_ontology(text)
    assert len(o.axioms) == 1
    return o.axioms[0]


class TestExamples:
    def test_inclusion(self):
        assert one("Mother SubClassOf Parent") == ConceptIncl(Named("Mother"), Named("Parent"))

    def test_abox(self):
        o = parse_ontology("julia : Mother\n(julia, john) : parentOf\n")
        assert o.axioms == (
            ConceptAssertion(Named("Mother"), "julia"),
            RoleAssertion(RoleName("parentOf"), "julia", "john"),
        )
        assert o.locations == (1, 2)

    def test_equivalence(self):
        assert one("Mother EquivalentTo (Female and Parent)") == ConceptEquiv(
            Named("Mother"), And(Named("Female"), Named("Parent"))
        )

    def test_domain_restriction(self):
        assert one("exists sonOf.Top SubClassOf Male") == ConceptIncl(
            Exists(RoleName("sonOf"), Top()), Named("Male")
        )

    def test_incomplete(self):
        with pytest.raises(ParseError) as e:
            parse_ontology("not not")
        assert e.value.kind == "Syntax"

    def test_parse_axiom(self):
        assert parse_axiom("julia : Parent") == ConceptAssertion(Named("Parent"), "julia")
        assert parse_axiom("julia = julia") == Equal("julia", "julia")
        assert parse_axiom("(charles, john) : uncleOf") == RoleAssertion(
            RoleName("uncleOf"), "charles", "john"
        )

    def test_every_axiom_form(self):
        text = """
        a != b
        r SubRoleOf inv(s)
        r EquivalentRole Universal
        r o s SubRoleOf t
        Disjoint(r, inv(s))
        Transitive(r)
        Irreflexive(s)
        A SubClassOf Self(r) or >= 2 s.Bottom
        """
        o = parse_ontology(text)
        s, t = RoleName("s"), RoleName("t")
        assert o.axioms == (
            NotEqual("a", "b"),
            RoleIncl(r, Inverse("s")),
            RoleEquiv(r, Universal()),
            ComplexRoleIncl(r, s, t),
            RoleDisjoint(r, Inverse("s")),
            Characteristic(CharacteristicKind.TRANSITIVE, r),
            Characteristic(CharacteristicKind.IRREFLEXIVE, s),
            ConceptIncl(A, Or(Self(r), AtLeast(2, s, Bottom()))),
        )


class TestPrecedence:
    def test_and_binds_tighter_than_or(self):
        assert parse_concept("A and B or C") == Or(And(A, B), C)

    def test_not_binds_tightest(self):
        assert parse_concept("not A and B") == And(Not(A), B)

    def test_quantifier_takes_one_unary(self):
        assert parse_concept("exists r.A and B") == And(Exists(r, A), B)

    def test_left_associative(self):
        assert parse_concept("A and B and C") == And(And(A, B), C)


class TestErrors:
    def test_lexical(self):
        with pytest.raises(ParseError) as e:
            parse_ontology("A SubClassOf B\nA SubClassOf $")
        assert (e.value.kind, e.value.line, e.value.column) == ("Lexical", 2, 14)

    def test_name_kind_conflict(self):
        with pytest.raises(ParseError) as e:
            parse_ontology("julia : Mother\n(a, b) : Mother")
        assert (e.value.kind, e.value.line, e.value.column) == ("NameKindConflict", 2, 10)

    def test_axiom_checked_against_signature(self):
        sig = Signature({"julia"}, {"Parent"}, set())
        with pytest.raises(ParseError) as e:
            parse_axiom("(julia, julia) : Parent", sig)
        assert e.value.kind == "NameKindConflict"

    def test_long_chain_rejected(self):
        with pytest.raises(ParseError):
            parse_ontology("r o s o t SubRoleOf u")

    def test_double_inverse_rejected(self):
        with pytest.raises(ParseError):
            parse_ontology("inv(inv(r)) SubRoleOf s")

    def test_keyword_is_not_a_name(self):
        with pytest.raises(ParseError):
            parse_ontology("o SubClassOf A")

    def test_deep_nesting_is_a_parse_error(self):
        with pytest.raises(ParseError):
            parse_ontology("A SubClassOf " + "not " * 20000 + "B")

    def test_two_axioms_on_one_line(self):
        with pytest.raises(ParseError):
            parse_ontology("A SubClassOf B C SubClassOf D")


class TestRender:
    def test_bottom_inclusion(self):
        o = build_ontology([ConceptIncl(And(Named("Male"), Named("Female")), Bottom())])
        assert render(o) == "(Male and Female) SubClassOf Bottom\n"

    def test_empty(self):
        assert render(build_ontology([])) == ""

    def test_not_forall_without_parens(self):
        a = ConceptAssertion(Not(Forall(RoleName("parentOf"), Named("Female"))), "x")
        assert render_axiom(a) == "x : not forall parentOf.Female"
        assert parse_axiom(render_axiom(a)) == a

    def test_mixed_and_or_parenthesized(self):
        a = ConceptIncl(Or(And(A, B), C), Not(Forall(r, A)))
        assert render_axiom(a) == "((A and B) or C) SubClassOf not forall r.A"

    def test_right_nested_keeps_parens(self):
        c = And(A, And(B, C))
        assert parse_concept(render_axiom(ConceptAssertion(c, "x")).split(" : ")[1]) == c

    def test_crlf_and_comments(self):
        o = parse_ontology("# header\r\nA SubClassOf B  # trailing\r\n\r\n")
        assert o.axioms == (ConceptIncl(A, B),)


@given(ontologies)
def test_round_trip(o):
    text = render(o)
    back = parse_ontology(text)
    assert back == o
    assert render(back) == text


@given(concepts)
def test_concept_round_trip(c):
    assert parse_concept(render_axiom(ConceptAssertion(c, "x"))[4:]) == c


@given(axioms)
def test_axiom_round_trip(a):
    assert parse_axiom(render_axiom(a)) == a


_FRAGMENTS = [
    "A", "B", "r", "a", "and", "or", "not", "exists", "forall", ".", "(", ")", "{", "}",
    ",", ":", "=", "!=", ">=", "<=", "2", "SubClassOf", "EquivalentTo", "SubRoleOf", "o",
    "inv", "Self", "Top", "Disjoint", "Transitive", "\n", " ", "#", "$",
]


@settings(max_examples=300)
@given(st.lists(st.sampled_from(_FRAGMENTS), max_size=15).map(" ".join))
def test_parsing_is_total(text):
    try:
        parse_ontology(text)
    except ParseError:
        pass


@given(st.text(max_size=40))
def test_parsing_is_total_on_arbitrary_text(text):
    try:
        parse_ontology(text)
    except ParseError as e:
        assert e.line >= 1 and e.column >= 1
