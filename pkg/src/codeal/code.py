"""Linear [n,k] codes over F_q and the brute-force oracles built on them."""

from __future__ import annotations

import itertools
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from .crossing import FieldVector, TermOrder, up
from .field import ZERO, FieldSpec

DEFAULT_ENUM_CAP = 10**6


class CodeError(ValueError):
    pass


class RankDeficient(CodeError):
    pass


class DimensionMismatch(CodeError):
    pass


class TooLarge(CodeError):
    pass


def vec_add(spec: FieldSpec, a: Sequence[int], b: Sequence[int]) -> FieldVector:
    return tuple(spec.add(x, y) for x, y in zip(a, b))


def vec_sub(spec: FieldSpec, a: Sequence[int], b: Sequence[int]) -> FieldVector:
    return tuple(spec.sub(x, y) for x, y in zip(a, b))


def vec_scale(spec: FieldSpec, c: int, a: Sequence[int]) -> FieldVector:
    return tuple(spec.mul(c, x) for x in a)


def vec_neg(spec: FieldSpec, a: Sequence[int]) -> FieldVector:
    return tuple(spec.neg(x) for x in a)


def rref(spec: FieldSpec, rows: Sequence[Sequence[int]]) -> Tuple[List[List[int]], List[int]]:
    """Reduced row echelon form over F_q; returns the nonzero rows and pivot columns."""
    m = [list(r) for r in rows]
    pivots: List[int] = []
    ncols = len(m[0]) if m else 0
    top = 0
    for col in range(ncols):
        piv = next((i for i in range(top, len(m)) if m[i][col] != ZERO), None)
        if piv is None:
            continue
        m[top], m[piv] = m[piv], m[top]
        inv = spec.inv(m[top][col])
        m[top] = [spec.mul(inv, x) for x in m[top]]
        for i in range(len(m)):
            if i != top and m[i][col] != ZERO:
                c = spec.neg(m[i][col])
                m[i] = [spec.add(x, spec.mul(c, y)) for x, y in zip(m[i], m[top])]
        pivots.append(col)
        top += 1
        if top == len(m):
            break
    return m[:top], pivots


def weight(v: Sequence[int]) -> int:
    return sum(1 for a in v if a != ZERO)


def distance(v: Sequence[int], w: Sequence[int]) -> int:
    if len(v) != len(w):
        raise DimensionMismatch("vectors have different lengths")
    return sum(1 for a, b in zip(v, w) if a != b)


def support(v: Sequence[int]) -> Set[int]:
    """1-based positions of the nonzero coordinates."""
    return {i + 1 for i, a in enumerate(v) if a != ZERO}


class LinearCode:
    """An [n,k] code given by a full-rank generator matrix."""

    def __init__(self, spec: FieldSpec, rows: Sequence[Sequence[int]]):
        if not rows:
            raise DimensionMismatch("generator matrix has no rows")
        n = len(rows[0])
        if n == 0 or any(len(r) != n for r in rows):
            raise DimensionMismatch("generator rows must be nonempty and of equal length")
        for r in rows:
            for a in r:
                spec.check(a)
        self.spec = spec
        self.G: Tuple[FieldVector, ...] = tuple(tuple(r) for r in rows)
        self.n = n
        self.k = len(rows)
        reduced, pivots = rref(spec, self.G)
        if len(reduced) < self.k:
            raise RankDeficient(f"generator rows have rank {len(reduced)} < {self.k}")
        self.pivots = tuple(pivots)
        self.H: Tuple[FieldVector, ...] = self._parity_check(reduced, pivots)

    def _parity_check(self, reduced, pivots) -> Tuple[FieldVector, ...]:
        spec = self.spec
        free = [c for c in range(self.n) if c not in pivots]
        H = []
        for c in free:
            h = [ZERO] * self.n
            h[c] = spec.one
            for r, p in enumerate(pivots):
                h[p] = spec.neg(reduced[r][c])
            H.append(tuple(h))
        return tuple(H)

    @property
    def q(self) -> int:
        return self.spec.q

    @property
    def redundancy(self) -> int:
        return self.n - self.k

    def syndrome(self, y: Sequence[int]) -> FieldVector:
        if len(y) != self.n:
            raise DimensionMismatch(f"word of length {len(y)}, expected {self.n}")
        spec = self.spec
        out = []
        for h in self.H:
            acc = ZERO
            for a, b in zip(h, y):
                if a != ZERO and b != ZERO:
                    acc = spec.add(acc, spec.mul(a, b))
            out.append(acc)
        return tuple(out)

    def is_codeword(self, y: Sequence[int]) -> bool:
        return all(s == ZERO for s in self.syndrome(y))

    def encode(self, message: Sequence[int]) -> FieldVector:
        spec = self.spec
        acc = (ZERO,) * self.n
        for lam, row in zip(message, self.G):
            if lam != ZERO:
                acc = vec_add(spec, acc, vec_scale(spec, lam, row))
        return acc

    def num_codewords(self) -> int:
        return self.q**self.k

    def num_cosets(self) -> int:
        return self.q**self.redundancy

    def __repr__(self):
        return f"LinearCode([{self.n},{self.k}] over F_{self.q})"


def new_code(spec: FieldSpec, rows: Sequence[Sequence[int]]) -> LinearCode:
    return LinearCode(spec, rows)


def enumerate_codewords(code: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> Iterator[FieldVector]:
    """Every codeword exactly once, as the images of all q^k messages."""
    if code.num_codewords() > cap:
        raise TooLarge(f"{code.num_codewords()} codewords exceed the cap {cap}")
    for msg in itertools.product(range(code.q), repeat=code.k):
        yield code.encode(msg)


def all_words(n: int, q: int, cap: int = DEFAULT_ENUM_CAP) -> Iterator[FieldVector]:
    if q**n > cap:
        raise TooLarge(f"{q**n} words exceed the cap {cap}")
    return itertools.product(range(q), repeat=n)


def min_distance(code: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> int:
    best = code.n + 1
    for c in enumerate_codewords(code, cap):
        w = weight(c)
        if 0 < w < best:
            best = w
    return best


def capability(code: LinearCode, cap: int = DEFAULT_ENUM_CAP) -> int:
    return (min_distance(code, cap) - 1) // 2


def coset_leader_bruteforce(code: LinearCode, y: Sequence[int],
                            order: Optional[TermOrder] = None,
                            cap: int = DEFAULT_ENUM_CAP) -> FieldVector:
    """The member of y + C whose canonical monomial is smallest in the term order."""
    spec = code.spec
    if order is None:
        order = TermOrder.default(code.n, code.q)
    best, best_key = None, None
    for c in enumerate_codewords(code, cap):
        e = vec_add(spec, y, c)
        key = order.key(up(e, spec))
        if best_key is None or key < best_key:
            best, best_key = e, key
    return best


def coset_leaders_bruteforce(code: LinearCode, order: Optional[TermOrder] = None,
                             cap: int = DEFAULT_ENUM_CAP) -> dict:
    """Map syndrome -> order-minimal coset member, by scanning all q^n words."""
    spec = code.spec
    if order is None:
        order = TermOrder.default(code.n, code.q)
    best: dict = {}
    for y in all_words(code.n, code.q, cap):
        s = code.syndrome(y)
        key = order.key(up(y, spec))
        cur = best.get(s)
        if cur is None or key < cur[0]:
            best[s] = (key, tuple(y))
    return {s: v for s, (_, v) in best.items()}


def words_of_weight(n: int, q: int, w: int) -> Iterator[FieldVector]:
    for pos in itertools.combinations(range(n), w):
        for vals in itertools.product(range(1, q), repeat=w):
            v = [ZERO] * n
            for i, a in zip(pos, vals):
                v[i] = a
            yield tuple(v)


def coset_leaders_by_weight(code: LinearCode, order: Optional[TermOrder] = None,
                            cap: int = DEFAULT_ENUM_CAP) -> dict:
    """Same table as coset_leaders_bruteforce, scanning words by increasing weight.

    Deglex compares degree first and degree(up(v)) = weight(v), so each
    coset's leader is the order-minimal word among those of the first weight
    that reaches it.  The scan stops once every coset has been reached.
    """
    spec = code.spec
    if order is None:
        order = TermOrder.default(code.n, code.q)
    total = code.num_cosets()
    best: dict = {}
    scanned = 0
    for w in range(code.n + 1):
        level: dict = {}
        for y in words_of_weight(code.n, code.q, w):
            scanned += 1
            if scanned > cap:
                raise TooLarge(f"weight scan exceeded the cap {cap}")
            s = code.syndrome(y)
            if s in best:
                continue
            key = order.key(up(y, spec))
            cur = level.get(s)
            if cur is None or key < cur[0]:
                level[s] = (key, y)
        best.update({s: v for s, (_, v) in level.items()})
        if len(best) == total:
            break
    return best


class MatrixSyntaxError(CodeError):
    pass


def parse_matrix_text(text: str, spec: FieldSpec) -> LinearCode:
    """Parse ``n k`` followed by k rows of n field elements ('#' starts a comment)."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if not lines:
        raise DimensionMismatch("matrix file is empty")
    lineno, head = lines[0]
    try:
        n, k = (int(t) for t in head.split())
    except ValueError:
        raise MatrixSyntaxError(f"line {lineno}: expected 'n k', got {head!r}") from None
    if n < 1 or k < 1 or k > n:
        raise DimensionMismatch(f"line {lineno}: need 1 <= k <= n, got n={n} k={k}")
    if len(lines) - 1 != k:
        raise DimensionMismatch(f"expected {k} matrix rows, found {len(lines) - 1}")
    rows = []
    for lineno, body in lines[1:]:
        tokens = body.split()
        if len(tokens) != n:
            raise DimensionMismatch(f"line {lineno}: expected {n} entries, found {len(tokens)}")
        try:
            rows.append([spec.parse_element(t) for t in tokens])
        except ValueError as exc:
            raise MatrixSyntaxError(f"line {lineno}: {exc}") from None
    return LinearCode(spec, rows)


def format_matrix_text(code: LinearCode) -> str:
    spec = code.spec
    out = [f"{code.n} {code.k}"]
    for row in code.G:
        out.append(" ".join(spec.format_element(a) for a in row))
    return "\n".join(out) + "\n"
