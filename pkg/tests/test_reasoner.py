import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dlkit.parser import parse_axiom, parse_ontology
from dlkit.reasoner import (
    CapExceeded,
    NoneUpTo,
    SearchConfig,
    Witness,
    all_models,
    check_consistency,
    check_entailment,
    enumerate_interpretations,
    max_interpretations_from_env,
    model_indices,
)
from dlkit.rewrite import desugar
from dlkit.semantics import is_model, satisfies_axiom
from dlkit.syntax import Signature, build_ontology

from strategies import axioms

GROUND = SearchConfig()
ENUMERATE = SearchConfig(strategy="enumerate")


class TestConsistency:
    def test_contradiction(self, load):
        assert check_consistency(load("contradiction.dl")) == NoneUpTo(3)

    def test_julia_needs_three_elements(self, load):
        o = load("many_children.dl")
        verdict = check_consistency(o)
        assert isinstance(verdict, Witness) and verdict.size == 3
        assert is_model(o, verdict.interpretation)
        assert check_consistency(o, SearchConfig(max_domain_size=2)) == NoneUpTo(2)

    def test_julia_by_enumeration(self, load):
        o = load("many_children.dl")
        assert check_consistency(o, ENUMERATE) == check_consistency(o, GROUND)

    def test_empty(self):
        verdict = check_consistency(build_ontology([]))
        assert isinstance(verdict, Witness) and verdict.size == 1


class TestEntailment:
    @pytest.mark.parametrize(
        "name, query",
        [
            ("mothers.dl", "julia : Parent"),
            ("ancestors.dl", "(julia, john) : ancestorOf"),
            ("uncles.dl", "(charles, john) : uncleOf"),
            ("sons.dl", "john : Male"),
            ("sons.dl", "julia : Parent"),
        ],
    )
    def test_worked_inferences(self, load, name, query):
        o = load(name)
        assert check_entailment(o, parse_axiom(query, o.signature)) == NoneUpTo(3)

    def test_countermodel(self):
        o = parse_ontology("julia : Mother")
        verdict = check_entailment(o, parse_axiom("julia : Female"))
        assert isinstance(verdict, Witness) and verdict.size == 1
        assert verdict.interpretation.concepts["Female"] == frozenset()

    def test_inconsistent_entails_everything(self, load):
        o = load("contradiction.dl")
        for text in ["bob : Bottom", "Top SubClassOf Bottom", "(bob, x) : r", "bob != bob"]:
            assert check_entailment(o, parse_axiom(text)) == NoneUpTo(3)


class TestAllModels:
    def test_single_concept(self):
        o = build_ontology([], Signature(set(), {"A"}, set()))
        assert len(all_models(o, 1)) == 2

    def test_equivalence(self):
        assert len(all_models(parse_ontology("A EquivalentTo B"), 1)) == 2

    def test_top_inclusion(self):
        assert len(all_models(parse_ontology("Top SubClassOf A"), 1)) == 1

    def test_in_enumeration_order(self):
        o = parse_ontology("A SubClassOf exists r.B")
        models = all_models(o, 2)
        expected = [i for i in enumerate_interpretations(o.signature, 2) if is_model(o, i)]
        assert models == expected

    def test_cap(self):
        o = parse_ontology("A SubClassOf exists r.B")
        with pytest.raises(CapExceeded):
            all_models(o, 3, max_interpretations=1000)


class TestConfig:
    def test_bound_validated(self):
        with pytest.raises(ValueError):
            SearchConfig(max_domain_size=0)

    def test_unknown_strategy(self):
        with pytest.raises(ValueError):
            SearchConfig(strategy="tableau")

    def test_enumeration_cap(self, load):
        with pytest.raises(CapExceeded):
            # 4 candidates at size 1, then 256 more at size 2
            check_consistency(
                load("many_children.dl"), SearchConfig(strategy="enumerate", max_interpretations=100)
            )

    def test_env_cap(self, monkeypatch):
        monkeypatch.setenv("DLKIT_MAX_INTERPRETATIONS", "500")
        assert max_interpretations_from_env() == 500
        monkeypatch.delenv("DLKIT_MAX_INTERPRETATIONS")
        assert max_interpretations_from_env() == 10**8


class TestWorkers:
    def test_same_witness_across_worker_counts(self, load):
        o = load("many_children.dl")
        one = check_consistency(o, SearchConfig(workers=1))
        four = check_consistency(o, SearchConfig(workers=4))
        assert one == four

    def test_same_countermodel_across_worker_counts(self):
        o = parse_ontology("a : A\nb : B\nA SubClassOf exists r.B")
        q = parse_axiom("(a, b) : r")
        assert check_entailment(o, q, SearchConfig(workers=1)) == check_entailment(
            o, q, SearchConfig(workers=3)
        )

    def test_nondeterministic_witness_is_sound(self, load):
        o = load("many_children.dl")
        verdict = check_consistency(o, SearchConfig(workers=2, deterministic=False))
        assert isinstance(verdict, Witness) and is_model(o, verdict.interpretation)


small_ontologies = st.lists(axioms, max_size=3).map(lambda ax: desugar(build_ontology(ax)))


@settings(max_examples=40, deadline=None)
@given(small_ontologies)
def test_strategies_agree(o):
    cfg = SearchConfig(max_domain_size=2)
    assert check_consistency(o, cfg) == check_consistency(
        o, SearchConfig(max_domain_size=2, strategy="enumerate")
    )


@settings(max_examples=40, deadline=None)
@given(small_ontologies, axioms)
def test_entailment_strategies_agree_and_witnesses_are_sound(o, query):
    verdict = check_entailment(o, query, SearchConfig(max_domain_size=2))
    assert verdict == check_entailment(o, query, SearchConfig(max_domain_size=2, strategy="enumerate"))
    if isinstance(verdict, Witness):
        i = verdict.interpretation
        assert is_model(o, i) and not satisfies_axiom(query, i)


@settings(max_examples=40, deadline=None)
@given(small_ontologies)
def test_first_witness_is_first_model(o):
    verdict = check_consistency(o, SearchConfig(max_domain_size=2))
    for n in (1, 2):
        idx = model_indices(o, n)
        if len(idx):
            assert isinstance(verdict, Witness) and verdict.size == n
            assert verdict.interpretation == all_models(o, n)[0]
            return
    assert verdict == NoneUpTo(2)


@settings(max_examples=30, deadline=None)
@given(small_ontologies, axioms)
def test_models_are_monotone(o, a):
    bigger = o.extended(a)
    for n in (1, 2):
        small = set(model_indices(o, n, bigger.signature).tolist())
        assert set(model_indices(bigger, n).tolist()) <= small


@settings(max_examples=30, deadline=None)
@given(small_ontologies)
def test_model_indices_match_plain_semantics(o):
    expected = [k for k, i in enumerate(enumerate_interpretations(o.signature, 1)) if is_model(o, i)]
    assert np.array_equal(model_indices(o, 1), np.array(expected, dtype=np.int64))
