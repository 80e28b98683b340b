"""Signature, expression, axiom and ontology data model.

Every value here is a frozen dataclass, so expressions compare and hash
structurally and can be shared freely between threads or processes.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional, Union


class NameKindConflict(ValueError):
    """A name was used both as, say, a concept and a role."""

    def __init__(self, name: str, kind1: str, kind2: str):
        super().__init__(f"name {name!r} used as {kind1} and as {kind2}")
        self.name = name
        self.kind1 = kind1
        self.kind2 = kind2


# --------------------------------------------------------------------------
# Roles
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Universal:
    pass


@dataclass(frozen=True)
class RoleName:
    name: str


@dataclass(frozen=True)
class Inverse:
    # A role name, never another inverse: R-- is not representable.
    name: str


RoleExpr = Union[Universal, RoleName, Inverse]


def inverse(r: RoleExpr) -> RoleExpr:
    """Inverse of a role expression, reading (S-)- as S."""
    if isinstance(r, RoleName):
        return Inverse(r.name)
    if isinstance(r, Inverse):
        return RoleName(r.name)
    return r


def role_name(r: RoleExpr) -> Optional[str]:
    return None if isinstance(r, Universal) else r.name


# --------------------------------------------------------------------------
# Concepts
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Named:
    name: str


@dataclass(frozen=True)
class And:
    left: "ConceptExpr"
    right: "ConceptExpr"


@dataclass(frozen=True)
class Or:
    left: "ConceptExpr"
    right: "ConceptExpr"


@dataclass(frozen=True)
class Not:
    operand: "ConceptExpr"


@dataclass(frozen=True)
class Top:
    pass


@dataclass(frozen=True)
class Bottom:
    pass


@dataclass(frozen=True)
class Exists:
    role: RoleExpr
    filler: "ConceptExpr"


@dataclass(frozen=True)
class Forall:
    role: RoleExpr
    filler: "ConceptExpr"


@dataclass(frozen=True)
class AtLeast:
    n: int
    role: RoleExpr
    filler: "ConceptExpr"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"cardinality must be non-negative, got {self.n}")


@dataclass(frozen=True)
class AtMost:
    n: int
    role: RoleExpr
    filler: "ConceptExpr"

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"cardinality must be non-negative, got {self.n}")


@dataclass(frozen=True)
class Self:
    role: RoleExpr


@dataclass(frozen=True)
class Nominal:
    individual: str


ConceptExpr = Union[
    Named, And, Or, Not, Top, Bottom, Exists, Forall, AtLeast, AtMost, Self, Nominal
]

QUANTIFIERS = (Exists, Forall, AtLeast, AtMost)


def subconcepts(c: ConceptExpr) -> Iterator[ConceptExpr]:
    """Pre-order walk over `c` and all of its subexpressions."""
    stack = [c]
    while stack:
        c = stack.pop()
        yield c
        if isinstance(c, (And, Or)):
            stack.append(c.right)
            stack.append(c.left)
        elif isinstance(c, Not):
            stack.append(c.operand)
        elif isinstance(c, QUANTIFIERS):
            stack.append(c.filler)


# --------------------------------------------------------------------------
# Axioms
# --------------------------------------------------------------------------


class CharacteristicKind(enum.Enum):
    TRANSITIVE = "Transitive"
    SYMMETRIC = "Symmetric"
    ASYMMETRIC = "Asymmetric"
    REFLEXIVE = "Reflexive"
    IRREFLEXIVE = "Irreflexive"


@dataclass(frozen=True)
class ConceptAssertion:
    concept: ConceptExpr
    individual: str


@dataclass(frozen=True)
class RoleAssertion:
    role: RoleExpr
    subject: str
    object: str


@dataclass(frozen=True)
class Equal:
    left: str
    right: str


@dataclass(frozen=True)
class NotEqual:
    left: str
    right: str


@dataclass(frozen=True)
class ConceptIncl:
    sub: ConceptExpr
    sup: ConceptExpr


@dataclass(frozen=True)
class ConceptEquiv:
    left: ConceptExpr
    right: ConceptExpr


@dataclass(frozen=True)
class RoleIncl:
    sub: RoleExpr
    sup: RoleExpr


@dataclass(frozen=True)
class RoleEquiv:
    left: RoleExpr
    right: RoleExpr


@dataclass(frozen=True)
class ComplexRoleIncl:
    """first o second SubRoleOf sup; chains are fixed at length two."""

    first: RoleExpr
    second: RoleExpr
    sup: RoleExpr


@dataclass(frozen=True)
class RoleDisjoint:
    left: RoleExpr
    right: RoleExpr


@dataclass(frozen=True)
class Characteristic:
    kind: CharacteristicKind
    role: RoleExpr


Axiom = Union[
    ConceptAssertion,
    RoleAssertion,
    Equal,
    NotEqual,
    ConceptIncl,
    ConceptEquiv,
    RoleIncl,
    RoleEquiv,
    ComplexRoleIncl,
    RoleDisjoint,
    Characteristic,
]

ABOX_AXIOMS = (ConceptAssertion, RoleAssertion, Equal, NotEqual)
TBOX_AXIOMS = (ConceptIncl, ConceptEquiv)
RBOX_AXIOMS = (RoleIncl, RoleEquiv, ComplexRoleIncl, RoleDisjoint, Characteristic)


def axiom_concepts(a: Axiom) -> tuple:
    """Top-level concept expressions of an axiom."""
    if isinstance(a, ConceptAssertion):
        return (a.concept,)
    if isinstance(a, ConceptIncl):
        return (a.sub, a.sup)
    if isinstance(a, ConceptEquiv):
        return (a.left, a.right)
    return ()


def axiom_roles(a: Axiom) -> tuple:
    """Role expressions occurring directly in an axiom (not inside concepts)."""
    if isinstance(a, RoleAssertion):
        return (a.role,)
    if isinstance(a, (RoleIncl,)):
        return (a.sub, a.sup)
    if isinstance(a, (RoleEquiv, RoleDisjoint)):
        return (a.left, a.right)
    if isinstance(a, ComplexRoleIncl):
        return (a.first, a.second, a.sup)
    if isinstance(a, Characteristic):
        return (a.role,)
    return ()


def all_roles(a: Axiom) -> Iterator[RoleExpr]:
    """Every role expression in `a`, including those nested in concepts."""
    yield from axiom_roles(a)
    for c in axiom_concepts(a):
        for sub in subconcepts(c):
            if isinstance(sub, (Exists, Forall, AtLeast, AtMost, Self)):
                yield sub.role


# --------------------------------------------------------------------------
# Signature and ontology
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Signature:
    individuals: frozenset = frozenset()
    concepts: frozenset = frozenset()
    roles: frozenset = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "individuals", frozenset(self.individuals))
        object.__setattr__(self, "concepts", frozenset(self.concepts))
        object.__setattr__(self, "roles", frozenset(self.roles))
        kinds = (
            ("individual", self.individuals),
            ("concept", self.concepts),
            ("role", self.roles),
        )
        for i, (k1, s1) in enumerate(kinds):
            for k2, s2 in kinds[i + 1:]:
                clash = s1 & s2
                if clash:
                    raise NameKindConflict(min(clash), k1, k2)

    def union(self, other: "Signature") -> "Signature":
        return Signature(
            self.individuals | other.individuals,
            self.concepts | other.concepts,
            self.roles | other.roles,
        )

    def kind_of(self, name: str) -> Optional[str]:
        if name in self.individuals:
            return "individual"
        if name in self.concepts:
            return "concept"
        if name in self.roles:
            return "role"
        return None

    def __len__(self):
        return len(self.individuals) + len(self.concepts) + len(self.roles)


def _concept_names(c: ConceptExpr, inds: set, cons: set, roles: set) -> None:
    for sub in subconcepts(c):
        if isinstance(sub, Named):
            cons.add(sub.name)
        elif isinstance(sub, Nominal):
            inds.add(sub.individual)
        elif isinstance(sub, (Exists, Forall, AtLeast, AtMost, Self)):
            name = role_name(sub.role)
            if name is not None:
                roles.add(name)


def free_names(axiom: Axiom) -> tuple[frozenset, frozenset, frozenset]:
    """(individual names, concept names, role names) occurring in `axiom`."""
    inds: set = set()
    cons: set = set()
    roles: set = set()
    if isinstance(axiom, ConceptAssertion):
        inds.add(axiom.individual)
    elif isinstance(axiom, RoleAssertion):
        inds.update((axiom.subject, axiom.object))
    elif isinstance(axiom, (Equal, NotEqual)):
        inds.update((axiom.left, axiom.right))
    for c in axiom_concepts(axiom):
        _concept_names(c, inds, cons, roles)
    for r in axiom_roles(axiom):
        name = role_name(r)
        if name is not None:
            roles.add(name)
    return frozenset(inds), frozenset(cons), frozenset(roles)


def signature_of(axioms: Iterable[Axiom]) -> Signature:
    """Collect free names, raising NameKindConflict on a kind clash.

    Clashes are reported in axiom order: the kind seen first wins.
    """
    seen: dict[str, str] = {}
    for a in axioms:
        for kind, names in zip(("individual", "concept", "role"), free_names(a)):
            for name in sorted(names):
                prev = seen.setdefault(name, kind)
                if prev != kind:
                    raise NameKindConflict(name, prev, kind)
    by_kind: dict[str, set] = {"individual": set(), "concept": set(), "role": set()}
    for name, kind in seen.items():
        by_kind[kind].add(name)
    return Signature(by_kind["individual"], by_kind["concept"], by_kind["role"])


@dataclass(frozen=True)
class Ontology:
    """An ordered list of axioms plus its signature.

    `locations` holds a 1-based source line per axiom when the ontology
    came from the parser. It never takes part in equality.
    """

    signature: Signature
    axioms: tuple
    locations: Optional[tuple] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "axioms", tuple(self.axioms))
        if self.locations is not None:
            locs = tuple(self.locations)
            if len(locs) != len(self.axioms):
                raise ValueError("one location per axiom required")
            object.__setattr__(self, "locations", locs)

    def __iter__(self):
        return iter(self.axioms)

    def __len__(self):
        return len(self.axioms)

    def location(self, index: int) -> Optional[int]:
        return None if self.locations is None else self.locations[index]

    def with_axioms(self, axioms, locations=None) -> "Ontology":
        """Same signature, new axiom list."""
        return Ontology(self.signature, tuple(axioms), locations)

    def extended(self, *axioms: Axiom) -> "Ontology":
        """o plus extra axioms, with the signature widened to match."""
        return build_ontology(self.axioms + tuple(axioms), self.signature)


def build_ontology(
    axioms: Iterable[Axiom],
    signature: Optional[Signature] = None,
    locations: Optional[Iterable[Optional[int]]] = None,
) -> Ontology:
    """Build an ontology whose signature is the union of the free names.

    An explicit `signature` may add names that no axiom mentions.
    """
    axioms = tuple(axioms)
    sig = signature_of(axioms)
    if signature is not None:
        sig = signature.union(sig)
    return Ontology(sig, axioms, None if locations is None else tuple(locations))
