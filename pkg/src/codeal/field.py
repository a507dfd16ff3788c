"""Finite fields F_q = F_p[x]/(f) with a primitive root.

Nonzero elements are stored by discrete logarithm: the integer ``j`` in
``1..q-1`` stands for ``alpha**j`` and ``q-1`` is the multiplicative
identity.  The integer ``0`` is the zero element.  Coefficient vectors only
appear in the power table and in the external integer notation
``c0 + c1*p + ... + c_{r-1}*p**(r-1)``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

ZERO = 0

# Monic primitive polynomials (coefficients low degree first) used by
# default_field.  The q = 9 entry is x^2 - x - 1.
PRIMITIVE_POLYNOMIALS: Dict[int, Tuple[int, int, Tuple[int, ...]]] = {
    2: (2, 1, (1, 1)),
    3: (3, 1, (1, 1)),
    4: (2, 2, (1, 1, 1)),
    5: (5, 1, (3, 1)),
    7: (7, 1, (4, 1)),
    8: (2, 3, (1, 1, 0, 1)),
    9: (3, 2, (2, 2, 1)),
}

DEFAULT_MAX_ORDER = 512


class FieldError(ValueError):
    """Base class for invalid field descriptions."""


class NotPrime(FieldError):
    pass


class NotIrreducible(FieldError):
    pass


class NotPrimitive(FieldError):
    pass


class FieldSyntaxError(FieldError):
    pass


class FieldDivisionByZero(ZeroDivisionError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _poly_mod(a: List[int], b: Sequence[int], p: int) -> List[int]:
    """Remainder of a modulo the monic polynomial b over F_p (low first)."""
    a = [c % p for c in a]
    db = len(b) - 1
    while len(a) - 1 >= db and any(a):
        if a[-1] == 0:
            a.pop()
            continue
        c = a[-1]
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _has_factor(f: Sequence[int], p: int) -> bool:
    """Exhaustive trial division of f by every monic polynomial of degree <= deg(f)/2."""
    r = len(f) - 1
    for d in range(1, r // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not _poly_mod(list(f), list(low) + [1], p):
                return True
    return False


@dataclass(frozen=True)
class FieldSpec:
    """The field F_p[x]/(f) together with its power and additive tables.

    ``power_table[j]`` is the coefficient vector of ``alpha**j`` for
    ``j = 1..q-1``; ``power_table[0]`` is the zero vector.  ``add_table``
    maps ``(u, v)`` with ``1 <= u <= v <= q-1`` to ``w`` where
    ``alpha**u + alpha**v = alpha**w`` (``w = 0`` means the sum vanishes).
    """

    p: int
    r: int
    f_coeffs: Tuple[int, ...]
    power_table: Tuple[Tuple[int, ...], ...]
    add_table: Dict[Tuple[int, int], int] = field(compare=False, repr=False)
    _add: Tuple[Tuple[int, ...], ...] = field(compare=False, repr=False)
    _log: Dict[Tuple[int, ...], int] = field(compare=False, repr=False)

    @property
    def q(self) -> int:
        return self.p**self.r

    @property
    def one(self) -> int:
        return self.q - 1

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of F_{self.q}")
        return a

    def add(self, a: int, b: int) -> int:
        return self._add[a][b]

    def mul(self, a: int, b: int) -> int:
        if a == ZERO or b == ZERO:
            return ZERO
        return (a + b - 1) % (self.q - 1) + 1

    def neg(self, a: int) -> int:
        if a == ZERO:
            return ZERO
        row = self._add[a]
        return row.index(ZERO, 1)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def inv(self, a: int) -> int:
        if a == ZERO:
            raise FieldDivisionByZero("zero has no inverse")
        return (self.q - 1 - a) % (self.q - 1) or self.q - 1

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def scalar(self, m: int) -> int:
        """The element m * 1 for an integer m."""
        return self._log[(m % self.p,) + (0,) * (self.r - 1)]

    def times(self, m: int, a: int) -> int:
        """The element a added to itself m times."""
        return self.mul(self.scalar(m), a)

    def coeffs(self, a: int) -> Tuple[int, ...]:
        return self.power_table[a]

    def from_coeffs(self, c: Sequence[int]) -> int:
        return self._log[tuple(x % self.p for x in c)]

    def to_int(self, a: int) -> int:
        """External integer notation: sum of c_i * p**i."""
        return sum(c * self.p**i for i, c in enumerate(self.power_table[a]))

    def from_int(self, value: int) -> int:
        if not 0 <= value < self.q:
            raise ValueError(f"integer {value} out of range 0..{self.q - 1}")
        digits = []
        for _ in range(self.r):
            value, d = divmod(value, self.p)
            digits.append(d)
        return self._log[tuple(digits)]

    def parse_element(self, token: str) -> int:
        """Parse ``"5"`` (integer notation) or ``"g^3"`` (power notation)."""
        token = token.strip()
        m = re.fullmatch(r"g\^(\d+)", token)
        if m:
            j = int(m.group(1))
            if not 1 <= j <= self.q - 1:
                raise ValueError(
                    f"power exponent {j} out of range 1..{self.q - 1} in {token!r}"
                )
            return j
        if not re.fullmatch(r"\d+", token):
            raise ValueError(f"bad field element token {token!r}")
        return self.from_int(int(token))

    def format_element(self, a: int) -> str:
        return str(self.to_int(a))

    def format_poly(self, a: int, var: str = "a") -> str:
        """Polynomial notation, highest degree first, e.g. ``2a+1``."""
        terms = []
        for i in reversed(range(self.r)):
            c = self.power_table[a][i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = var if i == 1 else f"{var}^{i}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms) or "0"


def build_field(p: int, r: int, f_coeffs: Sequence[int],
                max_order: int = DEFAULT_MAX_ORDER) -> FieldSpec:
    """Construct F_p[x]/(f) and check that the class of x is primitive."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if r < 1:
        raise FieldError(f"extension degree must be >= 1, got {r}")
    f = tuple(int(c) for c in f_coeffs)
    if len(f) != r + 1:
        raise FieldError(f"expected {r + 1} coefficients for degree {r}, got {len(f)}")
    if any(not 0 <= c < p for c in f):
        raise FieldError(f"coefficients must be reduced mod {p}: {list(f)}")
    if f[-1] != 1:
        raise FieldError("polynomial must be monic")
    q = p**r
    if q > max_order:
        raise FieldError(f"field order {q} exceeds the bound {max_order}")
    if r == 1:
        if f[0] == 0:
            raise NotPrimitive("root of f is zero")
    elif f[0] == 0 or _has_factor(f, p):
        raise NotIrreducible(f"{list(f)} factors over F_{p}")

    # successive powers alpha^1 .. alpha^(q-1) as coefficient vectors
    powers: List[Tuple[int, ...]] = [(0,) * r]
    cur = [0] * r
    cur[0] = 1
    for j in range(1, q):
        nxt = [0] + cur  # multiply by x
        nxt = _poly_mod(nxt, f, p)
        cur = nxt + [0] * (r - len(nxt))
        powers.append(tuple(cur))
        if all(c == 0 for c in cur[1:]) and cur[0] == 1 and j < q - 1:
            raise NotPrimitive(f"x has order {j} modulo {list(f)}, not {q - 1}")
    one = (1,) + (0,) * (r - 1)
    if powers[q - 1] != one:
        raise NotPrimitive(f"x is not a unit of order {q - 1} modulo {list(f)}")
    log = {vec: j for j, vec in enumerate(powers)}
    if len(log) != q:
        raise NotPrimitive("powers of x are not pairwise distinct")

    full = []
    for u in range(q):
        row = []
        for v in range(q):
            s = tuple((a + b) % p for a, b in zip(powers[u], powers[v]))
            row.append(log[s])
        full.append(tuple(row))
    add_table = {(u, v): full[u][v] for u in range(1, q) for v in range(u, q)}
    return FieldSpec(p, r, f, tuple(powers), add_table, tuple(full), log)


def find_primitive_polynomial(p: int, r: int) -> Tuple[int, ...]:
    """Smallest monic primitive polynomial of degree r over F_p by exhaustive search."""
    for low in itertools.product(range(p), repeat=r):
        f = tuple(reversed(low)) + (1,)
        try:
            build_field(p, r, f)
        except FieldError:
            continue
        return f
    raise NotPrimitive(f"no primitive polynomial of degree {r} over F_{p}")


def default_field(q: int) -> FieldSpec:
    if q in PRIMITIVE_POLYNOMIALS:
        p, r, f = PRIMITIVE_POLYNOMIALS[q]
        return build_field(p, r, f)
    for p in range(2, q + 1):
        if is_prime(p):
            r, rest = 0, q
            while rest % p == 0:
                rest //= p
                r += 1
            if rest == 1:
                return build_field(p, r, find_primitive_polynomial(p, r))
            break
    raise FieldError(f"{q} is not a prime power")


def parse_field_text(text: str) -> FieldSpec:
    """Parse the two-line field file: ``p r`` then the coefficients of f, low first."""
    lines = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append((lineno, body))
    if len(lines) != 2:
        raise FieldSyntaxError(f"field file: expected 2 lines, found {len(lines)}")
    (l1, head), (l2, coeffs) = lines
    try:
        p, r = (int(t) for t in head.split())
    except ValueError:
        raise FieldSyntaxError(f"line {l1}: expected 'p r', got {head!r}") from None
    try:
        f = [int(t) for t in coeffs.split()]
    except ValueError:
        raise FieldSyntaxError(f"line {l2}: bad coefficient list {coeffs!r}") from None
    return build_field(p, r, f)


def format_field_text(spec: FieldSpec) -> str:
    return f"{spec.p} {spec.r}\n{' '.join(map(str, spec.f_coeffs))}\n"
