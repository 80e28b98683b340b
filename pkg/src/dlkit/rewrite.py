"""Model-preserving syntactic rewrites.

All rewrites keep axiom order and the source line of the axiom they came
from, so errors found later still point at what the user wrote.
"""

from __future__ import annotations

from dlkit.syntax import (
    And,
    AtLeast,
    AtMost,
    Axiom,
    Characteristic,
    CharacteristicKind,
    ComplexRoleIncl,
    ConceptAssertion,
    ConceptEquiv,
    ConceptExpr,
    ConceptIncl,
    Exists,
    Forall,
    Nominal,
    Not,
    Ontology,
    Or,
    RoleAssertion,
    RoleDisjoint,
    RoleEquiv,
    RoleIncl,
    Self,
    Top,
    Universal,
    inverse,
)


class InverseOfUniversal(ValueError):
    """The encoding of a characteristic would need the inverse of Universal."""


def _map_axioms(o: Ontology, f) -> Ontology:
    axioms, locations = [], []
    for k, a in enumerate(o.axioms):
        for b in f(a):
            axioms.append(b)
            locations.append(o.location(k))
    return o.with_axioms(axioms, None if o.locations is None else locations)


def desugar_axiom(a: Axiom) -> list[Axiom]:
    if not isinstance(a, Characteristic):
        return [a]
    r, kind = a.role, a.kind
    if kind is CharacteristicKind.TRANSITIVE:
        return [ComplexRoleIncl(r, r, r)]
    if kind in (CharacteristicKind.SYMMETRIC, CharacteristicKind.ASYMMETRIC):
        if isinstance(r, Universal):
            raise InverseOfUniversal(f"{kind.value}(Universal) cannot be encoded")
        if kind is CharacteristicKind.SYMMETRIC:
            return [RoleEquiv(r, inverse(r))]
        return [RoleDisjoint(r, inverse(r))]
    if kind is CharacteristicKind.REFLEXIVE:
        return [ConceptIncl(Top(), Self(r))]
    return [ConceptIncl(Top(), Not(Self(r)))]


def desugar(o: Ontology) -> Ontology:
    """Replace every role characteristic by its encoding in core axioms."""
    return _map_axioms(o, desugar_axiom)


def split_equivalences(o: Ontology) -> Ontology:
    """C EquivalentTo D becomes two inclusions; likewise for roles."""

    def split(a):
        if isinstance(a, ConceptEquiv):
            return [ConceptIncl(a.left, a.right), ConceptIncl(a.right, a.left)]
        if isinstance(a, RoleEquiv):
            return [RoleIncl(a.left, a.right), RoleIncl(a.right, a.left)]
        return [a]

    return _map_axioms(o, split)


def nominalize_abox(o: Ontology) -> Ontology:
    """Turn concept and role assertions into inclusions between nominals.

    C(a) becomes {a} SubClassOf C and R(a, b) becomes
    {a} SubClassOf exists R.{b}. (In)equality assertions are kept.
    """

    def nominalize(a):
        if isinstance(a, ConceptAssertion):
            return [ConceptIncl(Nominal(a.individual), a.concept)]
        if isinstance(a, RoleAssertion):
            return [ConceptIncl(Nominal(a.subject), Exists(a.role, Nominal(a.object)))]
        return [a]

    return _map_axioms(o, nominalize)


def eliminate_forall(c: ConceptExpr) -> ConceptExpr:
    """Replace each forall R.C by not exists R.not C, bottom-up."""
    if isinstance(c, Forall):
        return Not(Exists(c.role, Not(eliminate_forall(c.filler))))
    if isinstance(c, And):
        return And(eliminate_forall(c.left), eliminate_forall(c.right))
    if isinstance(c, Or):
        return Or(eliminate_forall(c.left), eliminate_forall(c.right))
    if isinstance(c, Not):
        return Not(eliminate_forall(c.operand))
    if isinstance(c, Exists):
        return Exists(c.role, eliminate_forall(c.filler))
    if isinstance(c, AtLeast):
        return AtLeast(c.n, c.role, eliminate_forall(c.filler))
    if isinstance(c, AtMost):
        return AtMost(c.n, c.role, eliminate_forall(c.filler))
    return c


def eliminate_forall_axiom(a: Axiom) -> Axiom:
    if isinstance(a, ConceptAssertion):
        return ConceptAssertion(eliminate_forall(a.concept), a.individual)
    if isinstance(a, ConceptIncl):
        return ConceptIncl(eliminate_forall(a.sub), eliminate_forall(a.sup))
    if isinstance(a, ConceptEquiv):
        return ConceptEquiv(eliminate_forall(a.left), eliminate_forall(a.right))
    return a


def eliminate_forall_ontology(o: Ontology) -> Ontology:
    return _map_axioms(o, lambda a: [eliminate_forall_axiom(a)])
