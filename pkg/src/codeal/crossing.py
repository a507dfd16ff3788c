"""Crossing maps between F_q^n and exponent vectors, monomials and deglex.

The variable ``x[i,j]`` (1-based coordinate ``i``, power index ``j`` in
``1..q-1``) sits at flat position ``(i-1)*(q-1) + (j-1)``.
"""

from __future__ import annotations

import re
from operator import add, sub
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .field import ZERO, FieldSpec

FieldVector = Tuple[int, ...]


class NotDivisible(ArithmeticError):
    pass


class Monomial:
    """Exponent vector over the variables x[1,1] .. x[n,q-1]."""

    __slots__ = ("exps", "block", "mask", "degree", "squarefree", "_hash")

    def __init__(self, exps: Sequence[int], block: int):
        exps = tuple(exps)
        if block < 1 or len(exps) % block:
            raise ValueError(f"{len(exps)} exponents do not split into blocks of {block}")
        if any(e < 0 for e in exps):
            raise ValueError("exponents must be non-negative")
        self._set(exps, block)

    def _set(self, exps: Tuple[int, ...], block: int) -> None:
        self.exps = exps
        self.block = block
        mask = 0
        for v, e in enumerate(exps):
            if e:
                mask |= 1 << v
        self.mask = mask
        self.degree = sum(exps)
        self.squarefree = self.degree == mask.bit_count()
        self._hash = hash(exps)

    @classmethod
    def _raw(cls, exps: Tuple[int, ...], block: int) -> "Monomial":
        m = object.__new__(cls)
        m._set(exps, block)
        return m

    @classmethod
    def _known(cls, exps: Tuple[int, ...], block: int, mask: int, degree: int) -> "Monomial":
        m = object.__new__(cls)
        m.exps = exps
        m.block = block
        m.mask = mask
        m.degree = degree
        m.squarefree = degree == mask.bit_count()
        m._hash = hash(exps)
        return m

    @classmethod
    def one(cls, n: int, q: int) -> "Monomial":
        return cls((0,) * (n * (q - 1)), q - 1)

    @classmethod
    def variable(cls, n: int, q: int, i: int, j: int) -> "Monomial":
        """The variable x[i,j] with 0-based coordinate i and j in 1..q-1."""
        exps = [0] * (n * (q - 1))
        exps[i * (q - 1) + j - 1] = 1
        return cls(exps, q - 1)

    @property
    def n(self) -> int:
        return len(self.exps) // self.block

    @property
    def q(self) -> int:
        return self.block + 1

    @property
    def nvars(self) -> int:
        return len(self.exps)

    def support(self) -> List[int]:
        return [v for v, e in enumerate(self.exps) if e]

    def blocks(self) -> Iterator[Tuple[int, ...]]:
        b = self.block
        for i in range(0, len(self.exps), b):
            yield self.exps[i:i + b]

    def is_canonical(self) -> bool:
        """At most one nonzero entry per block, and that entry is 1."""
        if not self.squarefree:
            return False
        for blk in self.blocks():
            if sum(blk) > 1:
                return False
        return True

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.exps == other.exps and self.block == other.block

    def __hash__(self):
        return self._hash

    def __mul__(self, other: "Monomial") -> "Monomial":
        self._same_ring(other)
        return Monomial._known(tuple(map(add, self.exps, other.exps)), self.block,
                               self.mask | other.mask, self.degree + other.degree)

    def divides(self, other: "Monomial") -> bool:
        if self.mask & ~other.mask:
            return False
        if self.squarefree:
            return True
        return all(a <= b for a, b in zip(self.exps, other.exps))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        """Exact quotient self / other."""
        self._same_ring(other)
        if not other.divides(self):
            raise NotDivisible(f"{other} does not divide {self}")
        return Monomial._raw(tuple(map(sub, self.exps, other.exps)), self.block)

    def substitute(self, lead: "Monomial", trail: "Monomial") -> "Monomial":
        """(self / lead) * trail in one pass; lead must divide self."""
        return Monomial._raw(tuple(map(add, map(sub, self.exps, lead.exps), trail.exps)),
                             self.block)

    def lcm(self, other: "Monomial") -> "Monomial":
        exps = tuple(map(max, self.exps, other.exps))
        return Monomial._known(exps, self.block, self.mask | other.mask, sum(exps))

    def gcd(self, other: "Monomial") -> "Monomial":
        return Monomial._raw(tuple(min(a, b) for a, b in zip(self.exps, other.exps)), self.block)

    def coprime(self, other: "Monomial") -> bool:
        return not self.mask & other.mask

    def times_var(self, v: int) -> "Monomial":
        e = self.exps
        return Monomial._known(e[:v] + (e[v] + 1,) + e[v + 1:], self.block,
                               self.mask | (1 << v), self.degree + 1)

    def without_var(self, v: int) -> "Monomial":
        e = self.exps
        if not e[v]:
            raise NotDivisible(f"{var_name(v, self.block)} does not divide {self}")
        return Monomial._raw(e[:v] + (e[v] - 1,) + e[v + 1:], self.block)

    def _same_ring(self, other: "Monomial") -> None:
        if self.block != other.block or len(self.exps) != len(other.exps):
            raise ValueError("monomials live in different rings")

    def __str__(self) -> str:
        return format_monomial(self)

    def __repr__(self) -> str:
        return f"Monomial({format_monomial(self)!r})"


def var_name(v: int, block: int) -> str:
    i, j = divmod(v, block)
    return f"x[{i + 1},{j + 1}]"


def format_monomial(m: Monomial) -> str:
    factors = []
    for v, e in enumerate(m.exps):
        if e:
            name = var_name(v, m.block)
            factors.append(name if e == 1 else f"{name}^{e}")
    return "*".join(factors) or "1"


_FACTOR = re.compile(r"x\[(\d+),(\d+)\](?:\^(\d+))?")


def parse_monomial(text: str, n: int, q: int) -> Monomial:
    """Inverse of format_monomial; repeated factors multiply."""
    text = text.strip()
    exps = [0] * (n * (q - 1))
    if text == "1":
        return Monomial(exps, q - 1)
    for part in text.split("*"):
        m = _FACTOR.fullmatch(part.strip())
        if not m:
            raise ValueError(f"bad monomial factor {part!r}")
        i, j = int(m.group(1)), int(m.group(2))
        e = int(m.group(3)) if m.group(3) else 1
        if not (1 <= i <= n and 1 <= j <= q - 1) or e < 1:
            raise ValueError(f"factor {part!r} out of range for n={n}, q={q}")
        exps[(i - 1) * (q - 1) + j - 1] += e
    return Monomial(exps, q - 1)


def up(v: Sequence[int], spec: FieldSpec) -> Monomial:
    """Encode a field vector as a canonical monomial (one unit per nonzero coordinate)."""
    b = spec.q - 1
    exps = [0] * (len(v) * b)
    for i, a in enumerate(v):
        if a != ZERO:
            exps[i * b + a - 1] = 1
    return Monomial(exps, b)


def down(m: Monomial, spec: FieldSpec) -> FieldVector:
    """Decode an arbitrary exponent vector: coordinate i is sum_j e[i,j] * alpha**j."""
    if m.block != spec.q - 1:
        raise ValueError("monomial does not match the field")
    out = []
    for blk in m.blocks():
        acc = ZERO
        for j, e in enumerate(blk, 1):
            if e:
                acc = spec.add(acc, spec.times(e, j))
        out.append(acc)
    return tuple(out)


class TermOrder:
    """Degree-lexicographic order with a configurable variable precedence.

    ``precedence`` lists flat variable indices from highest to lowest.  The
    default puts x[1,1] highest and x[n,q-1] lowest.
    """

    def __init__(self, nvars: int, precedence: Optional[Sequence[int]] = None):
        if precedence is None:
            precedence = range(nvars)
        self.precedence = tuple(precedence)
        if sorted(self.precedence) != list(range(nvars)):
            raise ValueError("precedence must be a permutation of the variables")
        self.nvars = nvars
        self._identity = self.precedence == tuple(range(nvars))

    kind = "deglex"

    @classmethod
    def default(cls, n: int, q: int) -> "TermOrder":
        return cls(n * (q - 1))

    @classmethod
    def parse(cls, text: str, n: int, q: int) -> "TermOrder":
        """Read whitespace-separated variable names, highest precedence first."""
        names = [t for line in text.splitlines() for t in line.split("#", 1)[0].split()]
        prec = []
        for name in names:
            m = parse_monomial(name, n, q)
            if m.degree != 1:
                raise ValueError(f"{name!r} is not a single variable")
            prec.append(m.support()[0])
        return cls(n * (q - 1), prec)

    def key(self, m: Monomial) -> Tuple[int, Tuple[int, ...]]:
        """Sort key: larger key means larger monomial."""
        if self._identity:
            return (m.degree, m.exps)
        e = m.exps
        return (m.degree, tuple(e[v] for v in self.precedence))

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def lt(self, m1: Monomial, m2: Monomial) -> bool:
        return self.key(m1) < self.key(m2)

    def max(self, monomials: Iterable[Monomial]) -> Monomial:
        return max(monomials, key=self.key)

    def min(self, monomials: Iterable[Monomial]) -> Monomial:
        return min(monomials, key=self.key)

    def format(self, block: int) -> str:
        return " ".join(var_name(v, block) for v in self.precedence)

    def __eq__(self, other):
        return isinstance(other, TermOrder) and self.precedence == other.precedence

    def __hash__(self):
        return hash(self.precedence)

    def __repr__(self):
        return f"TermOrder(nvars={self.nvars}, default={self._identity})"


def compare(m1: Monomial, m2: Monomial, order: TermOrder) -> int:
    return order.compare(m1, m2)
