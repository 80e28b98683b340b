"""Interpretations and the model-theoretic satisfaction relation.

This is the reference evaluator: plain Python sets, one interpretation at a
time, each clause written as directly as possible. The faster routes in
`dlkit.batch` and `dlkit.grounding` are tested against it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Mapping, Optional

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
    RoleName,
    Self,
    Signature,
    Top,
    Universal,
)


class UnmappedName(KeyError):
    def __init__(self, kind: str, name: str):
        super().__init__(f"{kind} {name!r} is not mapped by the interpretation")
        self.kind = kind
        self.name = name

    def __str__(self):
        return self.args[0]


class InterpretationError(ValueError):
    """Malformed interpretation (empty domain, element outside the domain, ...)."""


@dataclass(frozen=True, eq=False)
class Interpretation:
    """A finite domain and the extensions of concept, role and individual names."""

    domain: tuple
    concepts: Mapping[str, frozenset]
    roles: Mapping[str, frozenset]
    individuals: Mapping[str, str]

    def __post_init__(self):
        domain = tuple(self.domain)
        if not domain:
            raise InterpretationError("domain must be non-empty")
        if len(set(domain)) != len(domain):
            raise InterpretationError("domain elements must be distinct")
        dom = set(domain)
        concepts = {k: frozenset(v) for k, v in self.concepts.items()}
        roles = {k: frozenset((x, y) for x, y in v) for k, v in self.roles.items()}
        individuals = dict(self.individuals)
        for name, ext in concepts.items():
            if not ext <= dom:
                raise InterpretationError(f"concept {name!r} maps outside the domain")
        for name, pairs in roles.items():
            if any(x not in dom or y not in dom for x, y in pairs):
                raise InterpretationError(f"role {name!r} maps outside the domain")
        for name, e in individuals.items():
            if e not in dom:
                raise InterpretationError(f"individual {name!r} maps outside the domain")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "concepts", concepts)
        object.__setattr__(self, "roles", roles)
        object.__setattr__(self, "individuals", individuals)

    def _key(self):
        return (
            self.domain,
            tuple(sorted(self.concepts.items())),
            tuple(sorted((k, tuple(sorted(v))) for k, v in self.roles.items())),
            tuple(sorted(self.individuals.items())),
        )

    def __eq__(self, other):
        if not isinstance(other, Interpretation):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def covers(self, sig: Signature) -> bool:
        return (
            sig.individuals <= self.individuals.keys()
            and sig.concepts <= self.concepts.keys()
            and sig.roles <= self.roles.keys()
        )

    # -- JSON ------------------------------------------------------------

    def to_dict(self) -> dict:
        order = {e: i for i, e in enumerate(self.domain)}
        return {
            "domain": list(self.domain),
            "concepts": {
                k: sorted(v, key=order.__getitem__) for k, v in sorted(self.concepts.items())
            },
            "roles": {
                k: [list(p) for p in sorted(v, key=lambda p: (order[p[0]], order[p[1]]))]
                for k, v in sorted(self.roles.items())
            },
            "individuals": dict(sorted(self.individuals.items())),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


_JSON_KEYS = {"domain", "concepts", "roles", "individuals"}


def interpretation_from_dict(
    data: dict,
    signature: Optional[Signature] = None,
    partial_as_empty: bool = False,
) -> Interpretation:
    """Read the JSON object form of an interpretation.

    Unknown keys are rejected. With `partial_as_empty`, concept and role
    names of `signature` missing from the file are mapped to the empty set;
    individuals must always be mapped.
    """
    if not isinstance(data, dict):
        raise InterpretationError("interpretation must be a JSON object")
    unknown = set(data) - _JSON_KEYS
    if unknown:
        raise InterpretationError(f"unknown keys: {', '.join(sorted(unknown))}")
    if "domain" not in data:
        raise InterpretationError("missing 'domain'")
    concepts = {k: set(v) for k, v in data.get("concepts", {}).items()}
    roles = {}
    for k, pairs in data.get("roles", {}).items():
        if any(len(p) != 2 for p in pairs):
            raise InterpretationError(f"role {k!r}: pairs must have two elements")
        roles[k] = {tuple(p) for p in pairs}
    individuals = dict(data.get("individuals", {}))
    if signature is not None and partial_as_empty:
        for c in signature.concepts:
            concepts.setdefault(c, set())
        for r in signature.roles:
            roles.setdefault(r, set())
    interp = Interpretation(tuple(data["domain"]), concepts, roles, individuals)
    if signature is not None:
        for kind, names, mapped in (
            ("individual", signature.individuals, interp.individuals),
            ("concept", signature.concepts, interp.concepts),
            ("role", signature.roles, interp.roles),
        ):
            missing = sorted(set(names) - mapped.keys())
            if missing:
                raise UnmappedName(kind, missing[0])
    return interp


def interpretation_from_json(
    text: str, signature: Optional[Signature] = None, partial_as_empty: bool = False
) -> Interpretation:
    return interpretation_from_dict(json.loads(text), signature, partial_as_empty)


# --------------------------------------------------------------------------
# Evaluation
# --------------------------------------------------------------------------


def _role_ext(name: str, i: Interpretation) -> frozenset:
    try:
        return i.roles[name]
    except KeyError:
        raise UnmappedName("role", name) from None


def _ind(name: str, i: Interpretation):
    try:
        return i.individuals[name]
    except KeyError:
        raise UnmappedName("individual", name) from None


def eval_role(r: RoleExpr, i: Interpretation) -> frozenset:
    """The set of pairs a role expression denotes."""
    if isinstance(r, Universal):
        return frozenset((x, y) for x in i.domain for y in i.domain)
    if isinstance(r, RoleName):
        return _role_ext(r.name, i)
    if isinstance(r, Inverse):
        return frozenset((y, x) for x, y in _role_ext(r.name, i))
    raise TypeError(f"not a role: {r!r}")


def _successors(pairs: frozenset, x) -> set:
    return {b for a, b in pairs if a == x}


def eval_concept(c: ConceptExpr, i: Interpretation) -> frozenset:
    """The set of domain elements a concept expression denotes."""
    domain = frozenset(i.domain)
    if isinstance(c, Named):
        try:
            return i.concepts[c.name]
        except KeyError:
            raise UnmappedName("concept", c.name) from None
    if isinstance(c, And):
        return eval_concept(c.left, i) & eval_concept(c.right, i)
    if isinstance(c, Or):
        return eval_concept(c.left, i) | eval_concept(c.right, i)
    if isinstance(c, Not):
        return domain - eval_concept(c.operand, i)
    if isinstance(c, Top):
        return domain
    if isinstance(c, Bottom):
        return frozenset()
    if isinstance(c, Nominal):
        return frozenset({_ind(c.individual, i)})
    if isinstance(c, Self):
        pairs = eval_role(c.role, i)
        return frozenset(x for x in i.domain if (x, x) in pairs)
    if isinstance(c, (Exists, Forall, AtLeast, AtMost)):
        pairs = eval_role(c.role, i)
        filler = eval_concept(c.filler, i)
        result = set()
        for x in i.domain:
            succ = _successors(pairs, x)
            if isinstance(c, Exists):
                ok = bool(succ & filler)
            elif isinstance(c, Forall):
                ok = succ <= filler
            elif isinstance(c, AtLeast):
                ok = len(succ & filler) >= c.n
            else:
                ok = len(succ & filler) <= c.n
            if ok:
                result.add(x)
        return frozenset(result)
    raise TypeError(f"not a concept: {c!r}")


def compose(r1: frozenset, r2: frozenset) -> frozenset:
    """Relational composition: {(x, z) | (x, y) in r1 and (y, z) in r2}."""
    return frozenset((x, z) for x, y in r1 for y2, z in r2 if y == y2)


def satisfies_axiom(a: Axiom, i: Interpretation) -> bool:
    if isinstance(a, ConceptAssertion):
        return _ind(a.individual, i) in eval_concept(a.concept, i)
    if isinstance(a, RoleAssertion):
        return (_ind(a.subject, i), _ind(a.object, i)) in eval_role(a.role, i)
    if isinstance(a, Equal):
        return _ind(a.left, i) == _ind(a.right, i)
    if isinstance(a, NotEqual):
        return _ind(a.left, i) != _ind(a.right, i)
    if isinstance(a, ConceptIncl):
        return eval_concept(a.sub, i) <= eval_concept(a.sup, i)
    if isinstance(a, ConceptEquiv):
        return eval_concept(a.left, i) == eval_concept(a.right, i)
    if isinstance(a, RoleIncl):
        return eval_role(a.sub, i) <= eval_role(a.sup, i)
    if isinstance(a, RoleEquiv):
        return eval_role(a.left, i) == eval_role(a.right, i)
    if isinstance(a, ComplexRoleIncl):
        return compose(eval_role(a.first, i), eval_role(a.second, i)) <= eval_role(a.sup, i)
    if isinstance(a, RoleDisjoint):
        return not (eval_role(a.left, i) & eval_role(a.right, i))
    if isinstance(a, Characteristic):
        return _characteristic_holds(a.kind, eval_role(a.role, i), i.domain)
    raise TypeError(f"not an axiom: {a!r}")


def _characteristic_holds(kind: CharacteristicKind, pairs: frozenset, domain) -> bool:
    # the usual relational properties, independent of the desugared encodings
    if kind is CharacteristicKind.TRANSITIVE:
        return all((x, z) in pairs for x, y in pairs for y2, z in pairs if y == y2)
    if kind is CharacteristicKind.SYMMETRIC:
        return all((y, x) in pairs for x, y in pairs)
    if kind is CharacteristicKind.ASYMMETRIC:
        return not any((y, x) in pairs for x, y in pairs)
    if kind is CharacteristicKind.REFLEXIVE:
        return all((x, x) in pairs for x in domain)
    if kind is CharacteristicKind.IRREFLEXIVE:
        return not any((x, x) in pairs for x in domain)
    raise ValueError(kind)


def is_model(o: Ontology, i: Interpretation) -> bool:
    return all(satisfies_axiom(a, i) for a in o.axioms)
