"""Bounded model search for consistency and entailment.

Domain sizes are tried smallest first, and within a size interpretations are
visited in the fixed order of `dlkit.space`, so a reported witness is always
the first one in global enumeration order. Two interchangeable strategies
compute it:

``"ground"``
    per individual map, ground the axioms into CNF and extract the
    lexicographically least satisfying assignment with a SAT solver.
``"enumerate"``
    walk every interpretation and check it with `dlkit.semantics.is_model`.
    Slow, but trivially correct; it is the oracle the ground strategy is
    tested against.

A search that finds nothing only shows that no witness exists up to the
bound. It does not prove that none exists at all.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass
from typing import Iterator, Optional, Union

import numpy as np

from dlkit import batch, grounding
from dlkit.semantics import Interpretation, is_model, satisfies_axiom
from dlkit.space import InterpretationSpace
from dlkit.syntax import Axiom, Ontology, Signature, build_ontology

STRATEGIES = ("ground", "enumerate")


class CapExceeded(RuntimeError):
    def __init__(self, cap: int, needed: Optional[int] = None):
        msg = f"interpretation cap of {cap} exceeded"
        if needed is not None:
            msg += f" ({needed} interpretations required)"
        super().__init__(msg)
        self.cap = cap
        self.needed = needed


@dataclass(frozen=True)
class Witness:
    interpretation: Interpretation

    @property
    def size(self) -> int:
        return len(self.interpretation.domain)


@dataclass(frozen=True)
class NoneUpTo:
    bound: int


BoundedVerdict = Union[Witness, NoneUpTo]


@dataclass(frozen=True)
class SearchConfig:
    max_domain_size: int = 3
    # caps interpretations visited one by one (enumerate strategy, all_models)
    max_interpretations: Optional[int] = None
    deterministic: bool = True
    strategy: str = "ground"
    workers: int = 1

    def __post_init__(self):
        if self.max_domain_size < 1:
            raise ValueError("max_domain_size must be at least 1")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.workers < 1:
            raise ValueError("workers must be at least 1")


def enumerate_interpretations(sig: Signature, size: int) -> Iterator[Interpretation]:
    """Every interpretation over `sig` with domain e0..e{size-1}, once each."""
    return iter(InterpretationSpace(sig, size))


def count_interpretations(sig: Signature, size: int) -> int:
    return InterpretationSpace(sig, size).count


# --------------------------------------------------------------------------
# search
# --------------------------------------------------------------------------


def _search_block(space, ind_digits, axioms, refuted, strategy):
    """First witness among interpretations with this individual map."""
    if strategy == "ground":
        bits = grounding.first_model(space, ind_digits, axioms, refuted)
        return None if bits is None else space.build(ind_digits, bits)
    o = Ontology(space.signature, axioms)
    for bits in itertools.product((0, 1), repeat=space.n_bits):
        i = space.build(ind_digits, bits)
        if is_model(o, i) and (refuted is None or not satisfies_axiom(refuted, i)):
            return i
    return None


def _search_star(args):
    return _search_block(*args)


def _parallel(jobs, cfg: SearchConfig) -> Optional[Interpretation]:
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        if cfg.deterministic:
            # map() yields in job order, so the earliest witness in
            # enumeration order wins whatever the completion order
            for found in pool.map(_search_star, jobs):
                if found is not None:
                    return found
            return None
        pending = {pool.submit(_search_block, *job) for job in jobs}
        while pending:
            done, pending = wait(pending, return_when=FIRST_COMPLETED)
            for fut in done:
                if fut.result() is not None:
                    for rest in pending:
                        rest.cancel()
                    return fut.result()
        return None


def _search(
    sig: Signature, axioms: tuple, refuted: Optional[Axiom], cfg: SearchConfig
) -> BoundedVerdict:
    visited = 0
    for size in range(1, cfg.max_domain_size + 1):
        space = InterpretationSpace(sig, size)
        if cfg.strategy == "enumerate" and cfg.max_interpretations is not None:
            visited += space.count
            if visited > cfg.max_interpretations:
                raise CapExceeded(cfg.max_interpretations, visited)
        jobs = [(space, d, axioms, refuted, cfg.strategy) for d in space.individual_maps()]
        if cfg.workers > 1 and len(jobs) > 1:
            found = _parallel(jobs, cfg)
            if found is not None:
                return Witness(found)
        else:
            for job in jobs:
                found = _search_block(*job)
                if found is not None:
                    return Witness(found)
    return NoneUpTo(cfg.max_domain_size)


def check_consistency(o: Ontology, cfg: SearchConfig = SearchConfig()) -> BoundedVerdict:
    """Witness(first model found) or NoneUpTo(bound)."""
    return _search(o.signature, o.axioms, None, cfg)


def check_entailment(o: Ontology, query: Axiom, cfg: SearchConfig = SearchConfig()) -> BoundedVerdict:
    """Search for a countermodel: a model of `o` in which `query` fails.

    Witness means `o` does not entail `query`; NoneUpTo means no
    countermodel exists up to the bound.
    """
    sig = build_ontology([query], o.signature).signature
    return _search(sig, o.axioms, query, cfg)


# --------------------------------------------------------------------------
# all models (oracle for property tests)
# --------------------------------------------------------------------------


def _space_for(o: Ontology, size: int, signature: Optional[Signature]) -> InterpretationSpace:
    sig = o.signature if signature is None else signature.union(o.signature)
    return InterpretationSpace(sig, size)


def model_indices(
    o: Ontology,
    size: int,
    signature: Optional[Signature] = None,
    max_interpretations: Optional[int] = None,
) -> np.ndarray:
    """Enumeration indices of all models of `o` with the given domain size.

    `signature` may widen the space beyond the names `o` uses, which makes
    model sets of different ontologies comparable.
    """
    space = _space_for(o, size, signature)
    if max_interpretations is not None and space.count > max_interpretations:
        raise CapExceeded(max_interpretations, space.count)
    return batch.model_indices(space, o.axioms)


def all_models(
    o: Ontology,
    size: int,
    signature: Optional[Signature] = None,
    max_interpretations: Optional[int] = None,
) -> list[Interpretation]:
    space = _space_for(o, size, signature)
    idx = model_indices(o, size, signature, max_interpretations)
    return [space.decode(int(k)) for k in idx]


def max_interpretations_from_env(default: int = 10**8) -> int:
    raw = os.environ.get("DLKIT_MAX_INTERPRETATIONS")
    if raw is None or raw == "":
        return default
    value = int(raw)
    if value < 1:
        raise ValueError("DLKIT_MAX_INTERPRETATIONS must be positive")
    return value
