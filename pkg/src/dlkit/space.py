"""The finite space of interpretations over a signature and a domain size.

Enumeration order is fixed and lexicographic over a digit string:

* one digit in ``range(size)`` per individual name (sorted), then
* one bit per (concept name, element), concepts sorted, elements e0.., then
* one bit per (role name, pair), roles sorted, pairs in row-major order.

The first digit is the most significant and 0/False comes before 1/True.
Every interpretation therefore has a unique index in
``range(space.count)``, and iteration order equals index order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from dlkit.semantics import Interpretation
from dlkit.syntax import Signature


def element(k: int) -> str:
    return f"e{k}"


@dataclass(frozen=True)
class InterpretationSpace:
    signature: Signature
    size: int
    individuals: tuple = field(init=False)
    concepts: tuple = field(init=False)
    roles: tuple = field(init=False)

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("domain size must be at least 1")
        object.__setattr__(self, "individuals", tuple(sorted(self.signature.individuals)))
        object.__setattr__(self, "concepts", tuple(sorted(self.signature.concepts)))
        object.__setattr__(self, "roles", tuple(sorted(self.signature.roles)))

    @property
    def domain(self) -> tuple:
        return tuple(element(k) for k in range(self.size))

    @property
    def n_bits(self) -> int:
        n = self.size
        return n * len(self.concepts) + n * n * len(self.roles)

    @property
    def n_individual_maps(self) -> int:
        return self.size ** len(self.individuals)

    @property
    def count(self) -> int:
        return self.n_individual_maps * 2**self.n_bits

    def concept_bit(self, concept: int, x: int) -> int:
        """Position (0 = most significant) of the bit for e_x in concept #k."""
        return concept * self.size + x

    def role_bit(self, role: int, x: int, y: int) -> int:
        n = self.size
        return n * len(self.concepts) + role * n * n + x * n + y

    def individual_maps(self) -> Iterator[tuple]:
        return itertools.product(range(self.size), repeat=len(self.individuals))

    def build(self, ind_digits: Sequence[int], bits: Sequence[int]) -> Interpretation:
        n = self.size
        dom = self.domain
        concepts = {
            c: {dom[x] for x in range(n) if bits[self.concept_bit(k, x)]}
            for k, c in enumerate(self.concepts)
        }
        roles = {
            r: {
                (dom[x], dom[y])
                for x in range(n)
                for y in range(n)
                if bits[self.role_bit(k, x, y)]
            }
            for k, r in enumerate(self.roles)
        }
        individuals = {a: dom[d] for a, d in zip(self.individuals, ind_digits)}
        return Interpretation(dom, concepts, roles, individuals)

    def __iter__(self) -> Iterator[Interpretation]:
        ni = len(self.individuals)
        for digits in itertools.product(
            *([range(self.size)] * ni), *([(0, 1)] * self.n_bits)
        ):
            yield self.build(digits[:ni], digits[ni:])

    def __len__(self):
        return self.count

    def decode(self, index: int) -> Interpretation:
        """The interpretation at position `index` of the enumeration."""
        if not 0 <= index < self.count:
            raise IndexError(index)
        nb = self.n_bits
        ind_value, bit_value = divmod(index, 2**nb)
        bits = [(bit_value >> (nb - 1 - j)) & 1 for j in range(nb)]
        digits = []
        for _ in self.individuals:
            ind_value, d = divmod(ind_value, self.size)
            digits.append(d)
        return self.build(digits[::-1], bits)
