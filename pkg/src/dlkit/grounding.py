"""Propositional grounding of axioms over a fixed domain and individual map.

For a domain size n and a fixed assignment of individuals to elements, an
interpretation is exactly a truth assignment to the bits of the enumeration
order (see `dlkit.space`). Variable k+1 is bit k, so the lexicographically
least satisfying assignment, found greedily with solver assumptions, is the
first model in enumeration order.

Compound subformulas get Tseitin variables defined by full equivalences,
which lets an axiom literal be asserted or negated.
"""

from __future__ import annotations

from typing import Optional, Sequence

from pysat.solvers import Solver

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

SOLVER = "minisat22"

# literals are non-zero ints or the Python constants True / False
Lit = object


class Grounder:
    def __init__(self, space: InterpretationSpace, ind_digits: Sequence[int]):
        self.space = space
        self.n = space.size
        self.ind = dict(zip(space.individuals, ind_digits))
        self._concept_idx = {c: k for k, c in enumerate(space.concepts)}
        self._role_idx = {r: k for k, r in enumerate(space.roles)}
        self.n_vars = space.n_bits
        self.clauses: list[list[int]] = []
        self._gates: dict = {}
        self._memo: dict = {}

    # -- gates with constant folding ---------------------------------------

    def fresh(self) -> int:
        self.n_vars += 1
        return self.n_vars

    @staticmethod
    def neg(lit):
        if lit is True:
            return False
        if lit is False:
            return True
        return -lit

    def conj(self, lits) -> Lit:
        out = []
        for lit in lits:
            if lit is False:
                return False
            if lit is not True:
                out.append(lit)
        out = sorted(set(out))
        if not out:
            return True
        if len(out) == 1:
            return out[0]
        if any(-lit in out for lit in out):
            return False
        key = ("and", tuple(out))
        g = self._gates.get(key)
        if g is None:
            g = self._gates[key] = self.fresh()
            for lit in out:
                self.clauses.append([-g, lit])
            self.clauses.append([g] + [-lit for lit in out])
        return g

    def disj(self, lits) -> Lit:
        return self.neg(self.conj(self.neg(lit) for lit in lits))

    def implies(self, a, b) -> Lit:
        return self.disj([self.neg(a), b])

    def iff(self, a, b) -> Lit:
        return self.conj([self.implies(a, b), self.implies(b, a)])

    def at_least(self, k: int, lits: list) -> Lit:
        """At least k of `lits` hold (k <= 0 is always true)."""
        memo: dict = {}

        def go(k, i):
            if k <= 0:
                return True
            if len(lits) - i < k:
                return False
            key = (k, i)
            if key not in memo:
                memo[key] = self.disj([self.conj([lits[i], go(k - 1, i + 1)]), go(k, i + 1)])
            return memo[key]

        return go(k, 0)

    # -- atoms -------------------------------------------------------------

    def concept_var(self, name: str, x: int) -> int:
        return self.space.concept_bit(self._concept_idx[name], x) + 1

    def role_lit(self, r: RoleExpr, x: int, y: int) -> Lit:
        if isinstance(r, Universal):
            return True
        if isinstance(r, RoleName):
            return self.space.role_bit(self._role_idx[r.name], x, y) + 1
        if isinstance(r, Inverse):
            return self.space.role_bit(self._role_idx[r.name], y, x) + 1
        raise TypeError(r)

    # -- concepts ----------------------------------------------------------

    def concept(self, c: ConceptExpr, x: int) -> Lit:
        key = (c, x)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._memo[key] = self._concept(c, x)
        return hit

    def _concept(self, c: ConceptExpr, x: int) -> Lit:
        ys = range(self.n)
        if isinstance(c, Named):
            return self.concept_var(c.name, x)
        if isinstance(c, And):
            return self.conj([self.concept(c.left, x), self.concept(c.right, x)])
        if isinstance(c, Or):
            return self.disj([self.concept(c.left, x), self.concept(c.right, x)])
        if isinstance(c, Not):
            return self.neg(self.concept(c.operand, x))
        if isinstance(c, Top):
            return True
        if isinstance(c, Bottom):
            return False
        if isinstance(c, Nominal):
            return self.ind[c.individual] == x
        if isinstance(c, Self):
            return self.role_lit(c.role, x, x)
        if isinstance(c, Forall):
            return self.conj(
                self.implies(self.role_lit(c.role, x, y), self.concept(c.filler, y)) for y in ys
            )
        succ = [self.conj([self.role_lit(c.role, x, y), self.concept(c.filler, y)]) for y in ys]
        if isinstance(c, Exists):
            return self.disj(succ)
        if isinstance(c, AtLeast):
            return self.at_least(c.n, succ)
        if isinstance(c, AtMost):
            return self.neg(self.at_least(c.n + 1, succ))
        raise TypeError(c)

    # -- axioms ------------------------------------------------------------

    def axiom(self, a: Axiom) -> Lit:
        """A literal equivalent to `a` holding."""
        xs = range(self.n)
        pairs = [(x, y) for x in xs for y in xs]
        if isinstance(a, ConceptAssertion):
            return self.concept(a.concept, self.ind[a.individual])
        if isinstance(a, RoleAssertion):
            return self.role_lit(a.role, self.ind[a.subject], self.ind[a.object])
        if isinstance(a, Equal):
            return self.ind[a.left] == self.ind[a.right]
        if isinstance(a, NotEqual):
            return self.ind[a.left] != self.ind[a.right]
        if isinstance(a, ConceptIncl):
            return self.conj(self.implies(self.concept(a.sub, x), self.concept(a.sup, x)) for x in xs)
        if isinstance(a, ConceptEquiv):
            return self.conj(self.iff(self.concept(a.left, x), self.concept(a.right, x)) for x in xs)
        if isinstance(a, RoleIncl):
            return self.conj(
                self.implies(self.role_lit(a.sub, x, y), self.role_lit(a.sup, x, y)) for x, y in pairs
            )
        if isinstance(a, RoleEquiv):
            return self.conj(
                self.iff(self.role_lit(a.left, x, y), self.role_lit(a.right, x, y)) for x, y in pairs
            )
        if isinstance(a, ComplexRoleIncl):
            return self._composition(a.first, a.second, a.sup)
        if isinstance(a, RoleDisjoint):
            return self.conj(
                self.neg(self.conj([self.role_lit(a.left, x, y), self.role_lit(a.right, x, y)]))
                for x, y in pairs
            )
        if isinstance(a, Characteristic):
            r, kind = a.role, a.kind
            if kind is CharacteristicKind.TRANSITIVE:
                return self._composition(r, r, r)
            if kind is CharacteristicKind.SYMMETRIC:
                return self.conj(
                    self.implies(self.role_lit(r, x, y), self.role_lit(r, y, x)) for x, y in pairs
                )
            if kind is CharacteristicKind.ASYMMETRIC:
                return self.conj(
                    self.neg(self.conj([self.role_lit(r, x, y), self.role_lit(r, y, x)]))
                    for x, y in pairs
                )
            if kind is CharacteristicKind.REFLEXIVE:
                return self.conj(self.role_lit(r, x, x) for x in xs)
            return self.conj(self.neg(self.role_lit(r, x, x)) for x in xs)
        raise TypeError(a)

    def _composition(self, r1, r2, s) -> Lit:
        xs = range(self.n)
        return self.conj(
            self.disj(
                [
                    self.neg(self.role_lit(r1, x, y)),
                    self.neg(self.role_lit(r2, y, z)),
                    self.role_lit(s, x, z),
                ]
            )
            for x in xs
            for y in xs
            for z in xs
        )


def first_model(
    space: InterpretationSpace,
    ind_digits: Sequence[int],
    axioms: Sequence[Axiom],
    refuted: Optional[Axiom] = None,
) -> Optional[list[int]]:
    """Bits of the first interpretation (for this individual map) that
    satisfies every axiom and, if given, falsifies `refuted`; else None.
    """
    g = Grounder(space, ind_digits)
    units = [g.axiom(a) for a in axioms]
    if refuted is not None:
        units.append(g.neg(g.axiom(refuted)))
    if any(u is False for u in units):
        return None
    clauses = g.clauses + [[u] for u in units if u is not True]
    nb = space.n_bits
    with Solver(name=SOLVER, bootstrap_with=clauses) as solver:
        if not solver.solve():
            return None
        model = set(solver.get_model() or ())
        fixed: list[int] = []
        for v in range(1, nb + 1):
            # variables absent from every clause are free; False is least
            if v not in model:
                fixed.append(-v)
                continue
            if solver.solve(assumptions=fixed + [-v]):
                model = set(solver.get_model())
                fixed.append(-v)
            else:
                fixed.append(v)
    return [1 if v > 0 else 0 for v in fixed]
