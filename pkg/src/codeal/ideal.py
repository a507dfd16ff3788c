"""Generators of the binomial ideal I(C) of a linear code.

Coefficients live in the two-element field, so a binomial is just an
ordered pair of monomials ``lead - trail`` with ``lead`` larger.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .code import LinearCode, vec_scale, vec_sub
from .crossing import FieldVector, Monomial, TermOrder, down, format_monomial, up
from .field import FieldSpec


@dataclass(frozen=True)
class Binomial:
    lead: Monomial
    trail: Monomial

    @classmethod
    def oriented(cls, a: Monomial, b: Monomial, order: TermOrder) -> "Binomial":
        c = order.compare(a, b)
        if c == 0:
            raise ValueError(f"degenerate binomial {a} - {b}")
        return cls(a, b) if c > 0 else cls(b, a)

    def is_oriented(self, order: TermOrder) -> bool:
        return order.compare(self.lead, self.trail) > 0

    def __str__(self) -> str:
        return f"{format_monomial(self.lead)} - {format_monomial(self.trail)}"


@dataclass(frozen=True)
class GeneratorSet:
    code: LinearCode
    row_binomials: Tuple[Binomial, ...]
    table_relations: Tuple[Binomial, ...]

    def __iter__(self):
        yield from self.row_binomials
        yield from self.table_relations

    def __len__(self):
        return len(self.row_binomials) + len(self.table_relations)


def row_multiple_binomials(code: LinearCode, order: Optional[TermOrder] = None) -> List[Binomial]:
    """up(alpha^j * w_i) - 1 for every row w_i and j = 1..q-1."""
    spec = code.spec
    order = order or TermOrder.default(code.n, code.q)
    one = Monomial.one(code.n, code.q)
    out = []
    for row in code.G:
        for j in range(1, code.q):
            out.append(Binomial.oriented(up(vec_scale(spec, j, row), spec), one, order))
    return out


def additive_relations(spec: FieldSpec, n: int, order: Optional[TermOrder] = None) -> List[Binomial]:
    """x[i,u]*x[i,v] - x[i,w] (or - 1) from the additive table, per coordinate."""
    q = spec.q
    order = order or TermOrder.default(n, q)
    one = Monomial.one(n, q)
    out = []
    for i in range(n):
        for (u, v), w in sorted(spec.add_table.items()):
            lead = Monomial.variable(n, q, i, u) * Monomial.variable(n, q, i, v)
            trail = Monomial.variable(n, q, i, w) if w else one
            out.append(Binomial.oriented(lead, trail, order))
    return out


def assemble_generators(code: LinearCode, order: Optional[TermOrder] = None) -> GeneratorSet:
    return GeneratorSet(
        code,
        tuple(row_multiple_binomials(code, order)),
        tuple(additive_relations(code.spec, code.n, order)),
    )


def binomial_codeword(b: Binomial, spec: FieldSpec) -> FieldVector:
    return vec_sub(spec, down(b.lead, spec), down(b.trail, spec))


def is_member(code: LinearCode, b: Binomial) -> bool:
    return code.is_codeword(binomial_codeword(b, code.spec))
