"""Seeded random ASTs over a small fixed name pool.

Used by the acceptance suite and the experiment scripts, where a fixed
number of samples with a fixed seed is wanted. The property tests use the
hypothesis strategies in tests/strategies.py instead.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

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
    Top,
    Universal,
    build_ontology,
)


@dataclass(frozen=True)
class GenConfig:
    individuals: tuple = ("a", "b")
    concepts: tuple = ("A", "B")
    roles: tuple = ("r",)
    max_depth: int = 2
    max_count: int = 2
    min_axioms: int = 1
    max_axioms: int = 4
    inverse: bool = True
    universal: bool = True
    nominals: bool = True
    self_restriction: bool = True
    numbers: bool = True


def random_role(rng: random.Random, cfg: GenConfig, universal: bool | None = None) -> RoleExpr:
    if (cfg.universal if universal is None else universal) and rng.random() < 0.1:
        return Universal()
    name = rng.choice(cfg.roles)
    if cfg.inverse and rng.random() < 0.3:
        return Inverse(name)
    return RoleName(name)


def _leaf(rng: random.Random, cfg: GenConfig) -> ConceptExpr:
    options = ["named"] * 4 + ["top", "bottom"]
    if cfg.nominals and cfg.individuals:
        options.append("nominal")
    pick = rng.choice(options)
    if pick == "named":
        return Named(rng.choice(cfg.concepts))
    if pick == "top":
        return Top()
    if pick == "bottom":
        return Bottom()
    return Nominal(rng.choice(cfg.individuals))


def random_concept(rng: random.Random, cfg: GenConfig, depth: int | None = None) -> ConceptExpr:
    depth = cfg.max_depth if depth is None else depth
    if depth <= 0 or rng.random() < 0.3:
        return _leaf(rng, cfg)
    options = ["and", "or", "not", "exists", "forall"]
    if cfg.numbers:
        options += ["atleast", "atmost"]
    if cfg.self_restriction:
        options.append("self")
    pick = rng.choice(options)
    sub = lambda: random_concept(rng, cfg, depth - 1)  # noqa: E731
    if pick == "and":
        return And(sub(), sub())
    if pick == "or":
        return Or(sub(), sub())
    if pick == "not":
        return Not(sub())
    if pick == "self":
        return Self(random_role(rng, cfg))
    role = random_role(rng, cfg)
    if pick == "exists":
        return Exists(role, sub())
    if pick == "forall":
        return Forall(role, sub())
    n = rng.randint(0, cfg.max_count)
    return (AtLeast if pick == "atleast" else AtMost)(n, role, sub())


AXIOM_KINDS = (
    "concept_assertion",
    "role_assertion",
    "equal",
    "not_equal",
    "concept_incl",
    "concept_equiv",
    "role_incl",
    "role_equiv",
    "complex_role_incl",
    "role_disjoint",
    "characteristic",
)


def random_axiom(rng: random.Random, cfg: GenConfig, kinds: tuple = AXIOM_KINDS) -> Axiom:
    if not cfg.individuals:
        kinds = tuple(k for k in kinds if k not in AXIOM_KINDS[:4])
    kind = rng.choice(kinds)
    concept = lambda: random_concept(rng, cfg)  # noqa: E731
    role = lambda: random_role(rng, cfg)  # noqa: E731
    ind = lambda: rng.choice(cfg.individuals)  # noqa: E731
    if kind == "concept_assertion":
        return ConceptAssertion(concept(), ind())
    if kind == "role_assertion":
        return RoleAssertion(role(), ind(), ind())
    if kind == "equal":
        return Equal(ind(), ind())
    if kind == "not_equal":
        return NotEqual(ind(), ind())
    if kind == "concept_incl":
        return ConceptIncl(concept(), concept())
    if kind == "concept_equiv":
        return ConceptEquiv(concept(), concept())
    if kind == "role_incl":
        return RoleIncl(role(), role())
    if kind == "role_equiv":
        return RoleEquiv(role(), role())
    if kind == "complex_role_incl":
        return ComplexRoleIncl(role(), role(), role())
    if kind == "role_disjoint":
        return RoleDisjoint(role(), role())
    # Symmetric/Asymmetric of Universal have no encoding, so stay on names
    return Characteristic(rng.choice(list(CharacteristicKind)), random_role(rng, cfg, universal=False))


def random_ontology(rng: random.Random, cfg: GenConfig, kinds: tuple = AXIOM_KINDS) -> Ontology:
    n = rng.randint(cfg.min_axioms, cfg.max_axioms)
    return build_ontology(random_axiom(rng, cfg, kinds) for _ in range(n))
