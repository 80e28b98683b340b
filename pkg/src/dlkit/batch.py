"""Vectorized evaluation over a contiguous block of an interpretation space.

A block holds N interpretations at once. Concept extensions are uint8 bit
masks (bit x set iff e_x is a member), roles are stored as per-element
successor masks of shape (size, N), individuals as element indices. Domain
sizes up to 8 fit into uint8.
"""

from __future__ import annotations

import numpy as np

from dlkit.space import InterpretationSpace
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
)

MAX_BATCH_SIZE = 8
POPCOUNT = np.array([bin(v).count("1") for v in range(256)], dtype=np.uint8)


class Block:
    """Interpretations ``start .. stop-1`` of `space`, decoded into arrays."""

    def __init__(self, space: InterpretationSpace, start: int, stop: int):
        n = space.size
        if n > MAX_BATCH_SIZE:
            raise ValueError(f"batch evaluation supports domain sizes up to {MAX_BATCH_SIZE}")
        if space.n_bits > 62:
            raise ValueError("interpretation space too large for batch evaluation")
        self.space = space
        self.n = n
        self.full = np.uint8((1 << n) - 1)
        idx = np.arange(start, stop, dtype=np.int64)
        self.N = len(idx)
        nb = space.n_bits
        bits = idx & ((1 << nb) - 1) if nb else np.zeros_like(idx)
        ind_value = idx >> nb

        self.individuals = {}
        for a in reversed(space.individuals):
            self.individuals[a] = (ind_value % n).astype(np.intp)
            ind_value = ind_value // n

        def bit(pos: int) -> np.ndarray:
            return ((bits >> (nb - 1 - pos)) & 1).astype(np.uint8)

        self.concepts = {}
        for k, c in enumerate(space.concepts):
            m = np.zeros(self.N, dtype=np.uint8)
            for x in range(n):
                m |= bit(space.concept_bit(k, x)) << np.uint8(x)
            self.concepts[c] = m
        self.roles = {}
        for k, r in enumerate(space.roles):
            succ = np.zeros((n, self.N), dtype=np.uint8)
            for x in range(n):
                for y in range(n):
                    succ[x] |= bit(space.role_bit(k, x, y)) << np.uint8(y)
            self.roles[r] = succ
        self._inverse: dict[str, np.ndarray] = {}
        self._memo: dict = {}

    # -- roles -----------------------------------------------------------

    def role(self, r: RoleExpr) -> np.ndarray:
        """Successor masks, shape (n, N)."""
        if isinstance(r, Universal):
            return np.full((self.n, self.N), self.full, dtype=np.uint8)
        if isinstance(r, RoleName):
            return self.roles[r.name]
        if isinstance(r, Inverse):
            if r.name not in self._inverse:
                self._inverse[r.name] = transpose(self.roles[r.name], self.n)
            return self._inverse[r.name]
        raise TypeError(r)

    # -- concepts --------------------------------------------------------

    def concept(self, c: ConceptExpr) -> np.ndarray:
        hit = self._memo.get(c)
        if hit is None:
            hit = self._memo[c] = self._concept(c)
        return hit

    def _concept(self, c: ConceptExpr) -> np.ndarray:
        n, N = self.n, self.N
        if isinstance(c, Named):
            return self.concepts[c.name]
        if isinstance(c, And):
            return self.concept(c.left) & self.concept(c.right)
        if isinstance(c, Or):
            return self.concept(c.left) | self.concept(c.right)
        if isinstance(c, Not):
            return self.concept(c.operand) ^ self.full
        if isinstance(c, Top):
            return np.full(N, self.full, dtype=np.uint8)
        if isinstance(c, Bottom):
            return np.zeros(N, dtype=np.uint8)
        if isinstance(c, Nominal):
            return (np.uint8(1) << self.individuals[c.individual].astype(np.uint8)).astype(np.uint8)
        succ = self.role(c.role)
        out = np.zeros(N, dtype=np.uint8)
        if isinstance(c, Self):
            for x in range(n):
                out |= ((succ[x] >> np.uint8(x)) & 1) << np.uint8(x)
            return out
        filler = self.concept(c.filler)
        for x in range(n):
            if isinstance(c, Exists):
                ok = (succ[x] & filler) != 0
            elif isinstance(c, Forall):
                ok = (succ[x] & ~filler) == 0
            elif isinstance(c, AtLeast):
                ok = POPCOUNT[succ[x] & filler] >= c.n
            elif isinstance(c, AtMost):
                ok = POPCOUNT[succ[x] & filler] <= c.n
            else:
                raise TypeError(c)
            out |= ok.astype(np.uint8) << np.uint8(x)
        return out

    # -- axioms ----------------------------------------------------------

    def axiom(self, a: Axiom) -> np.ndarray:
        """Boolean array: which interpretations of the block satisfy `a`."""
        n = self.n
        rows = np.arange(self.N)
        if isinstance(a, ConceptAssertion):
            return ((self.concept(a.concept) >> self.individuals[a.individual].astype(np.uint8)) & 1) == 1
        if isinstance(a, RoleAssertion):
            succ = self.role(a.role)
            row = succ[self.individuals[a.subject], rows]
            return ((row >> self.individuals[a.object].astype(np.uint8)) & 1) == 1
        if isinstance(a, Equal):
            return self.individuals[a.left] == self.individuals[a.right]
        if isinstance(a, NotEqual):
            return self.individuals[a.left] != self.individuals[a.right]
        if isinstance(a, ConceptIncl):
            return (self.concept(a.sub) & ~self.concept(a.sup)) == 0
        if isinstance(a, ConceptEquiv):
            return self.concept(a.left) == self.concept(a.right)
        if isinstance(a, RoleIncl):
            return _subset(self.role(a.sub), self.role(a.sup))
        if isinstance(a, RoleEquiv):
            return (self.role(a.left) == self.role(a.right)).all(axis=0)
        if isinstance(a, ComplexRoleIncl):
            return _subset(compose(self.role(a.first), self.role(a.second), n), self.role(a.sup))
        if isinstance(a, RoleDisjoint):
            return ((self.role(a.left) & self.role(a.right)) == 0).all(axis=0)
        if isinstance(a, Characteristic):
            succ = self.role(a.role)
            kind = a.kind
            if kind is CharacteristicKind.TRANSITIVE:
                return _subset(compose(succ, succ, n), succ)
            if kind is CharacteristicKind.SYMMETRIC:
                return _subset(succ, transpose(succ, n))
            if kind is CharacteristicKind.ASYMMETRIC:
                return ((succ & transpose(succ, n)) == 0).all(axis=0)
            diag = np.stack([(succ[x] >> np.uint8(x)) & 1 for x in range(n)])
            if kind is CharacteristicKind.REFLEXIVE:
                return (diag == 1).all(axis=0)
            return (diag == 0).all(axis=0)
        raise TypeError(a)

    def models(self, axioms) -> np.ndarray:
        ok = np.ones(self.N, dtype=bool)
        for a in axioms:
            ok &= self.axiom(a)
            if not ok.any():
                break
        return ok


def transpose(succ: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros_like(succ)
    for x in range(n):
        for y in range(n):
            out[x] |= ((succ[y] >> np.uint8(x)) & 1) << np.uint8(y)
    return out


def compose(r1: np.ndarray, r2: np.ndarray, n: int) -> np.ndarray:
    out = np.zeros_like(r1)
    for x in range(n):
        for y in range(n):
            has = ((r1[x] >> np.uint8(y)) & 1).astype(bool)
            out[x] |= np.where(has, r2[y], np.uint8(0))
    return out


def _subset(r: np.ndarray, s: np.ndarray) -> np.ndarray:
    return ((r & ~s) == 0).all(axis=0)


def model_indices(space: InterpretationSpace, axioms, chunk: int = 1 << 18) -> np.ndarray:
    """Indices (in enumeration order) of interpretations satisfying all axioms."""
    axioms = tuple(axioms)
    found = []
    for start in range(0, space.count, chunk):
        block = Block(space, start, min(start + chunk, space.count))
        found.append(np.flatnonzero(block.models(axioms)) + start)
    return np.concatenate(found) if found else np.zeros(0, dtype=np.int64)
