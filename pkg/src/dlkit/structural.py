"""Non-simple roles and the simplicity restrictions on an ontology.

Regularity of complex role inclusions is not checked here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from dlkit.syntax import (
    AtLeast,
    AtMost,
    Axiom,
    Characteristic,
    CharacteristicKind,
    ComplexRoleIncl,
    Ontology,
    RoleDisjoint,
    RoleEquiv,
    RoleExpr,
    RoleIncl,
    Self,
    Universal,
    all_roles,
    axiom_concepts,
    inverse,
    subconcepts,
)


@dataclass(frozen=True)
class StructuralConfig:
    # OWL 2 treats the universal role as non-simple
    universal_role_simple: bool = False


@dataclass(frozen=True)
class Violation:
    axiom_index: int
    line: Optional[int]
    axiom: Axiom
    role: RoleExpr
    position: str  # "Disjoint", "Asymmetric", ">=", "<=", "Self", ...

    def where(self) -> str:
        return f"line {self.line}" if self.line is not None else f"axiom {self.axiom_index}"


@dataclass(frozen=True)
class SimplicityReport:
    nonsimple: frozenset
    violations: tuple = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations


def _chain_heads(a: Axiom) -> list[RoleExpr]:
    if isinstance(a, ComplexRoleIncl):
        return [a.sup]
    # Transitive(R) is sugar for R o R SubRoleOf R
    if isinstance(a, Characteristic) and a.kind is CharacteristicKind.TRANSITIVE:
        return [a.role]
    return []


def _propagation_edges(o: Ontology) -> dict:
    """R -> roles S that become non-simple once R is (R ⊑ S, S ≡ R, R ≡ S)."""
    edges: dict = {}
    for a in o.axioms:
        if isinstance(a, RoleIncl):
            edges.setdefault(a.sub, set()).add(a.sup)
        elif isinstance(a, RoleEquiv):
            edges.setdefault(a.left, set()).add(a.right)
            edges.setdefault(a.right, set()).add(a.left)
    return edges


def _uses_universal(o: Ontology) -> bool:
    return any(isinstance(r, Universal) for a in o.axioms for r in all_roles(a))


def compute_nonsimple(o: Ontology, cfg: StructuralConfig = StructuralConfig()) -> frozenset:
    """Least set of role expressions closed under the non-simplicity rules."""
    work = [r for a in o.axioms for r in _chain_heads(a)]
    if not cfg.universal_role_simple and _uses_universal(o):
        work.append(Universal())
    edges = _propagation_edges(o)
    result: set = set()
    while work:
        r = work.pop()
        if r in result:
            continue
        result.add(r)
        work.append(inverse(r))
        work.extend(edges.get(r, ()))
    return frozenset(result)


def _restricted_positions(a: Axiom):
    """(role, position label) pairs that must carry a simple role."""
    if isinstance(a, RoleDisjoint):
        yield a.left, "Disjoint"
        if a.right != a.left:
            yield a.right, "Disjoint"
    elif isinstance(a, Characteristic) and a.kind in (
        CharacteristicKind.ASYMMETRIC,
        CharacteristicKind.REFLEXIVE,
        CharacteristicKind.IRREFLEXIVE,
    ):
        # these desugar to Disjoint(R, inv(R)) or to Self(R)
        yield a.role, a.kind.value
    for c in axiom_concepts(a):
        for sub in subconcepts(c):
            if isinstance(sub, Self):
                yield sub.role, "Self"
            elif isinstance(sub, AtLeast):
                yield sub.role, ">="
            elif isinstance(sub, AtMost):
                yield sub.role, "<="


def validate_simplicity(o: Ontology, cfg: StructuralConfig = StructuralConfig()) -> SimplicityReport:
    nonsimple = compute_nonsimple(o, cfg)
    violations = []
    for k, a in enumerate(o.axioms):
        for role, pos in _restricted_positions(a):
            if role in nonsimple:
                violations.append(Violation(k, o.location(k), a, role, pos))
    return SimplicityReport(nonsimple, tuple(violations))


def has_complex_role_inclusions(o: Ontology) -> bool:
    return any(_chain_heads(a) for a in o.axioms)
