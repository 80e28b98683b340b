"""Export to OWL 2 Functional-Style Syntax.

Names are written as ``:Name``. When a prefix IRI is known a
``Prefix(:=<...>)`` line binds it; without one the output still lists every
axiom but leaves the empty prefix undeclared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from dlkit.syntax import (
    And,
    AtLeast,
    AtMost,
    Axiom,
    Bottom,
    Characteristic,
    CharacteristicKind,
    ComplexRoleIncl,
    ConceptAssertion,
    ConceptEquiv,
    ConceptExpr,
    ConceptIncl,
    Equal,
    Exists,
    Forall,
    Inverse,
    Named,
    Nominal,
    Not,
    NotEqual,
    Ontology,
    Or,
    RoleAssertion,
    RoleDisjoint,
    RoleEquiv,
    RoleExpr,
    RoleIncl,
    Self,
    Top,
    Universal,
)

# absolute IRI: scheme ":" then no whitespace or angle brackets
_IRI_RE = re.compile(r"^[A-Za-z][A-Za-z0-9+.\-]*:[^\s<>\"{}|\\^`]*$")


@dataclass(frozen=True)
class ExportConfig:
    ontology_iri: Optional[str] = None
    prefix: Optional[str] = None

    def __post_init__(self):
        for iri in (self.ontology_iri, self.prefix):
            if iri is not None and not _IRI_RE.match(iri):
                raise ValueError(f"not a valid IRI: {iri!r}")

    @property
    def prefix_iri(self) -> Optional[str]:
        if self.prefix is not None:
            return self.prefix
        if self.ontology_iri is not None:
            return self.ontology_iri + "#"
        return None


_CHARACTERISTIC_OPS = {
    CharacteristicKind.TRANSITIVE: "TransitiveObjectProperty",
    CharacteristicKind.SYMMETRIC: "SymmetricObjectProperty",
    CharacteristicKind.ASYMMETRIC: "AsymmetricObjectProperty",
    CharacteristicKind.REFLEXIVE: "ReflexiveObjectProperty",
    CharacteristicKind.IRREFLEXIVE: "IrreflexiveObjectProperty",
}


def _call(op: str, *args: str) -> str:
    return f"{op}( {' '.join(args)} )"


def _name(name: str) -> str:
    return ":" + name


def export_role(r: RoleExpr) -> str:
    if isinstance(r, Universal):
        return "owl:topObjectProperty"
    if isinstance(r, Inverse):
        return _call("ObjectInverseOf", _name(r.name))
    return _name(r.name)


def export_concept(c: ConceptExpr) -> str:
    if isinstance(c, Named):
        return _name(c.name)
    if isinstance(c, Top):
        return "owl:Thing"
    if isinstance(c, Bottom):
        return "owl:Nothing"
    if isinstance(c, And):
        return _call("ObjectIntersectionOf", export_concept(c.left), export_concept(c.right))
    if isinstance(c, Or):
        return _call("ObjectUnionOf", export_concept(c.left), export_concept(c.right))
    if isinstance(c, Not):
        return _call("ObjectComplementOf", export_concept(c.operand))
    if isinstance(c, Exists):
        return _call("ObjectSomeValuesFrom", export_role(c.role), export_concept(c.filler))
    if isinstance(c, Forall):
        return _call("ObjectAllValuesFrom", export_role(c.role), export_concept(c.filler))
    if isinstance(c, AtLeast):
        return _call("ObjectMinCardinality", str(c.n), export_role(c.role), export_concept(c.filler))
    if isinstance(c, AtMost):
        return _call("ObjectMaxCardinality", str(c.n), export_role(c.role), export_concept(c.filler))
    if isinstance(c, Self):
        return _call("ObjectHasSelf", export_role(c.role))
    if isinstance(c, Nominal):
        return _call("ObjectOneOf", _name(c.individual))
    raise TypeError(c)


def export_axiom(a: Axiom) -> str:
    if isinstance(a, ConceptAssertion):
        return _call("ClassAssertion", export_concept(a.concept), _name(a.individual))
    if isinstance(a, RoleAssertion):
        return _call("ObjectPropertyAssertion", export_role(a.role), _name(a.subject), _name(a.object))
    if isinstance(a, Equal):
        return _call("SameIndividual", _name(a.left), _name(a.right))
    if isinstance(a, NotEqual):
        return _call("DifferentIndividuals", _name(a.left), _name(a.right))
    if isinstance(a, ConceptIncl):
        return _call("SubClassOf", export_concept(a.sub), export_concept(a.sup))
    if isinstance(a, ConceptEquiv):
        return _call("EquivalentClasses", export_concept(a.left), export_concept(a.right))
    if isinstance(a, RoleIncl):
        return _call("SubObjectPropertyOf", export_role(a.sub), export_role(a.sup))
    if isinstance(a, RoleEquiv):
        return _call("EquivalentObjectProperties", export_role(a.left), export_role(a.right))
    if isinstance(a, ComplexRoleIncl):
        chain = _call("ObjectPropertyChain", export_role(a.first), export_role(a.second))
        return _call("SubObjectPropertyOf", chain, export_role(a.sup))
    if isinstance(a, RoleDisjoint):
        return _call("DisjointObjectProperties", export_role(a.left), export_role(a.right))
    if isinstance(a, Characteristic):
        if isinstance(a.role, Universal):
            raise ValueError(f"{a.kind.value}(Universal) cannot be exported")
        return _call(_CHARACTERISTIC_OPS[a.kind], export_role(a.role))
    raise TypeError(a)


OWL_NS = "http://www.w3.org/2002/07/owl#"


def export_functional(o: Ontology, cfg: ExportConfig = ExportConfig()) -> str:
    body = [export_axiom(a) for a in o.axioms]
    lines = []
    if cfg.prefix_iri is not None:
        lines.append(f"Prefix(:=<{cfg.prefix_iri}>)")
    if any("owl:" in line for line in body):
        lines.append(f"Prefix(owl:=<{OWL_NS}>)")
    lines.append("Ontology(" if cfg.ontology_iri is None else f"Ontology(<{cfg.ontology_iri}>")
    sig = o.signature
    for kind, names in (
        ("Class", sig.concepts),
        ("ObjectProperty", sig.roles),
        ("NamedIndividual", sig.individuals),
    ):
        for name in sorted(names):
            lines.append(f"Declaration({kind}({_name(name)}))")
    lines.extend(body)
    lines.append(")")
    return "\n".join(lines) + "\n"
