"""SROIQ ontologies: syntax, parsing, structural checks, finite-model
reasoning, rewrites, fragment detection and OWL 2 export."""

from dlkit.fragments import FeatureSet, detect_features, dl_name, fragment_name, is_el, is_elpp
from dlkit.owl import ExportConfig, export_functional
from dlkit.parser import ParseError, parse_axiom, parse_concept, parse_ontology, render
from dlkit.reasoner import (
    CapExceeded,
    NoneUpTo,
    SearchConfig,
    Witness,
    all_models,
    check_consistency,
    check_entailment,
)
from dlkit.rewrite import desugar, nominalize_abox
from dlkit.semantics import Interpretation, eval_concept, is_model, satisfies_axiom
from dlkit.structural import StructuralConfig, compute_nonsimple, validate_simplicity
from dlkit.syntax import NameKindConflict, Ontology, Signature, build_ontology

__all__ = [
    "CapExceeded",
    "ExportConfig",
    "FeatureSet",
    "Interpretation",
    "NameKindConflict",
    "NoneUpTo",
    "Ontology",
    "ParseError",
    "SearchConfig",
    "Signature",
    "StructuralConfig",
    "Witness",
    "all_models",
    "build_ontology",
    "check_consistency",
    "check_entailment",
    "compute_nonsimple",
    "desugar",
    "detect_features",
    "dl_name",
    "eval_concept",
    "export_functional",
    "fragment_name",
    "is_el",
    "is_elpp",
    "is_model",
    "nominalize_abox",
    "parse_axiom",
    "parse_concept",
    "parse_ontology",
    "render",
    "satisfies_axiom",
    "validate_simplicity",
]
