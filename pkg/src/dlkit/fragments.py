"""Feature detection and DL naming (ALC, S, H, R, O, I, Q; EL and EL++)."""

from __future__ import annotations

from dataclasses import dataclass, fields

from dlkit.syntax import (
    ABOX_AXIOMS,
    And,
    AtLeast,
    AtMost,
    Bottom,
    Characteristic,
    CharacteristicKind,
    ComplexRoleIncl,
    ConceptAssertion,
    Exists,
    Forall,
    Inverse,
    Named,
    Nominal,
    Not,
    Ontology,
    Or,
    RBOX_AXIOMS,
    RoleAssertion,
    RoleDisjoint,
    RoleEquiv,
    RoleIncl,
    RoleName,
    Self,
    Top,
    Universal,
    all_roles,
    axiom_concepts,
    subconcepts,
)


@dataclass(frozen=True)
class FeatureSet:
    uses_union: bool = False
    uses_complement: bool = False
    uses_forall: bool = False
    uses_exists: bool = False
    uses_intersection: bool = False
    uses_top: bool = False
    uses_bottom: bool = False
    uses_nominals: bool = False
    uses_self: bool = False
    uses_universal_role: bool = False
    uses_inverse: bool = False
    uses_number_restrictions: bool = False
    uses_role_hierarchy: bool = False
    uses_role_composition: bool = False
    uses_transitivity_pattern: bool = False
    # some R o S SubRoleOf T that is not of the shape R o R SubRoleOf R
    uses_general_composition: bool = False
    uses_role_equiv: bool = False
    uses_role_disjoint: bool = False
    characteristics: frozenset = frozenset()
    has_abox: bool = False

    def uses_characteristic(self, kind: CharacteristicKind) -> bool:
        return kind in self.characteristics

    def enabled(self) -> list[str]:
        out = [f.name for f in fields(self) if f.name != "characteristics" and getattr(self, f.name)]
        out += [f"characteristic:{k.value}" for k in sorted(self.characteristics, key=lambda k: k.value)]
        return out


_CONSTRUCTOR_FLAGS = {
    Or: "uses_union",
    Not: "uses_complement",
    Forall: "uses_forall",
    Exists: "uses_exists",
    And: "uses_intersection",
    Top: "uses_top",
    Bottom: "uses_bottom",
    Nominal: "uses_nominals",
    Self: "uses_self",
    AtLeast: "uses_number_restrictions",
    AtMost: "uses_number_restrictions",
}


def detect_features(o: Ontology) -> FeatureSet:
    flags: dict = {}
    chars = set()
    for a in o.axioms:
        for c in axiom_concepts(a):
            for sub in subconcepts(c):
                flag = _CONSTRUCTOR_FLAGS.get(type(sub))
                if flag:
                    flags[flag] = True
        for r in all_roles(a):
            if isinstance(r, Universal):
                flags["uses_universal_role"] = True
            elif isinstance(r, Inverse):
                flags["uses_inverse"] = True
        if isinstance(a, ABOX_AXIOMS):
            flags["has_abox"] = True
        elif isinstance(a, (RoleIncl, RoleEquiv)):
            flags["uses_role_hierarchy"] = True
            if isinstance(a, RoleEquiv):
                flags["uses_role_equiv"] = True
        elif isinstance(a, ComplexRoleIncl):
            flags["uses_role_composition"] = True
            if a.first == a.second == a.sup:
                flags["uses_transitivity_pattern"] = True
            else:
                flags["uses_general_composition"] = True
        elif isinstance(a, RoleDisjoint):
            flags["uses_role_disjoint"] = True
        elif isinstance(a, Characteristic):
            chars.add(a.kind)
    return FeatureSet(characteristics=frozenset(chars), **flags)


def dl_name(f: FeatureSet) -> str:
    """Name the fragment: base ALC or S, then R or H, then O, I, Q."""
    transitive = f.uses_transitivity_pattern or f.uses_characteristic(CharacteristicKind.TRANSITIVE)
    name = "S" if transitive else "ALC"
    other_chars = f.characteristics - {CharacteristicKind.TRANSITIVE}
    if (
        f.uses_general_composition
        or f.uses_self
        or f.uses_universal_role
        or f.uses_role_disjoint
        or other_chars
    ):
        name += "R"
    elif f.uses_role_hierarchy:
        name += "H"
    if f.uses_nominals:
        name += "O"
    if f.uses_inverse:
        name += "I"
    if f.uses_number_restrictions:
        name += "Q"
    return name


def fragment_name(o: Ontology) -> str:
    return dl_name(detect_features(o))


def name_covers(bigger: str, smaller: str) -> bool:
    """Every letter of `smaller` is present in or subsumed by `bigger`.

    S extends ALC and R subsumes H.
    """

    def letters(name):
        base = "S" if name.startswith("S") else "ALC"
        rest = set(name[len(base):])
        return base, rest

    b_base, b_rest = letters(bigger)
    s_base, s_rest = letters(smaller)
    if s_base == "S" and b_base != "S":
        return False
    if "R" in b_rest:
        b_rest = b_rest | {"H"}
    return s_rest <= b_rest


# --------------------------------------------------------------------------
# EL family
# --------------------------------------------------------------------------

_EL_CONCEPTS = (Named, And, Exists, Top)
_ELPP_CONCEPTS = (Named, And, Exists, Top, Bottom, Self, Nominal)
_ELPP_EXCLUDED = {
    CharacteristicKind.SYMMETRIC,
    CharacteristicKind.ASYMMETRIC,
    CharacteristicKind.IRREFLEXIVE,
}


def _concepts_within(o: Ontology, allowed) -> bool:
    return all(
        isinstance(sub, allowed)
        for a in o.axioms
        for c in axiom_concepts(a)
        for sub in subconcepts(c)
    )


def is_el(o: Ontology) -> bool:
    """Only intersection, existentials over role names, Top and concept
    names; no RBox axioms. The ABox may hold concept and role assertions.
    """
    for a in o.axioms:
        if isinstance(a, RBOX_AXIOMS):
            return False
        if isinstance(a, ABOX_AXIOMS) and not isinstance(a, (ConceptAssertion, RoleAssertion)):
            return False
        if any(not isinstance(r, RoleName) for r in all_roles(a)):
            return False
    return _concepts_within(o, _EL_CONCEPTS)


def is_elpp(o: Ontology) -> bool:
    """EL++: adds Bottom, Self, nominals, the universal role and all axiom
    types except symmetry, asymmetry and irreflexivity; no inverse roles.

    Works on the undesugared ontology so the excluded characteristics are
    still visible.
    """
    for a in o.axioms:
        if isinstance(a, Characteristic) and a.kind in _ELPP_EXCLUDED:
            return False
        if any(isinstance(r, Inverse) for r in all_roles(a)):
            return False
    return _concepts_within(o, _ELPP_CONCEPTS)
