"""Reduced Groebner basis of I(C) by enumerating terms in increasing order.

Terms are walked from 1 upwards.  Each term is valued by the syndrome of
its decoded vector; the quotient F_2[x]/I(C) is the group algebra of
F_q^n / C, so linear dependence among values is plain equality.  A term
whose value is new is standard; otherwise it is the lead of a basis element
whose trail is the earlier (smaller) standard term with the same value.
"""

from __future__ import annotations

import heapq
import itertools
import random
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .code import LinearCode, TooLarge, vec_scale, vec_sub
from .crossing import FieldVector, Monomial, TermOrder, down, up
from .ideal import Binomial, GeneratorSet, assemble_generators, binomial_codeword, is_member

DEFAULT_COSET_CAP = 10**5

STANDARD = "standard"
BASIS = "basis"
SKIPPED = "skipped"


class InternalOrderViolation(RuntimeError):
    pass


@dataclass(frozen=True)
class TraceEntry:
    term: Monomial
    image: FieldVector
    kind: str
    trail: Optional[Monomial] = None


@dataclass
class GroebnerBasis:
    code: LinearCode
    order: TermOrder
    elements: Tuple[Binomial, ...]
    standard_monomials: FrozenSet[Monomial]
    leader_map: Dict[FieldVector, Monomial]
    trace: Optional[List[TraceEntry]] = None
    _buckets: Dict[int, List[Binomial]] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        buckets: Dict[int, List[Binomial]] = {}
        for g in self.elements:
            buckets.setdefault(g.lead.support()[0], []).append(g)
        self._buckets = buckets

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def dividing(self, m: Monomial) -> Iterable[Binomial]:
        """Basis elements whose lead divides m."""
        buckets = self._buckets
        for v in m.support():
            for g in buckets.get(v, ()):
                if g.lead.divides(m):
                    yield g

    def is_standard(self, m: Monomial) -> bool:
        return next(iter(self.dividing(m)), None) is None

    def leader(self, y: Sequence[int]) -> Monomial:
        """Table lookup of the standard monomial for the coset of y."""
        return self.leader_map[self.code.syndrome(y)]

    def sorted_elements(self) -> List[Binomial]:
        """Elements by lead degree, higher-precedence variables first within a degree."""
        def key(g):
            d, e = self.order.key(g.lead)
            return (d, tuple(-x for x in e))
        return sorted(self.elements, key=key)


def _scaled(m: Monomial, j: int, code: LinearCode) -> Monomial:
    spec = code.spec
    return up(vec_scale(spec, j, down(m, spec)), spec)


def compute_reduced_gb(code: LinearCode, order: Optional[TermOrder] = None,
                       cap: int = DEFAULT_COSET_CAP, eager_multiples: bool = False,
                       trace: bool = False) -> GroebnerBasis:
    """Reduced deglex Groebner basis of I(C), with the coset-leader table.

    With ``eager_multiples`` every emitted element t - s with canonical t
    also proposes the pairs up(a^j t) - up(a^j s); a proposed lead that turns
    up as a candidate while its trail is already standard is emitted without
    computing its syndrome.
    """
    if code.num_cosets() > cap:
        raise TooLarge(f"{code.num_cosets()} cosets exceed the cap {cap}")
    spec = code.spec
    n, q = code.n, code.q
    order = order or TermOrder.default(n, q)
    nvars = n * (q - 1)
    one = Monomial.one(n, q)

    counter = itertools.count()
    heap = [(order.key(one), next(counter), one)]
    queued = {one}
    standard: set = set()
    leader_map: Dict[FieldVector, Monomial] = {}
    elements: List[Binomial] = []
    pending: Dict[Monomial, Monomial] = {}
    log: Optional[List[TraceEntry]] = [] if trace else None
    last = None

    while heap:
        key, _, t = heapq.heappop(heap)
        if last is not None and key <= last:
            raise InternalOrderViolation(f"{t} does not exceed the previous term")
        last = key

        # t is a multiple of an earlier lead iff some t / x_v is not standard
        if any(t.without_var(v) not in standard for v in t.support()):
            if log is not None:
                log.append(TraceEntry(t, down(t, spec), SKIPPED))
            continue

        if eager_multiples and t in pending and pending[t] in standard:
            s = pending.pop(t)
            elements.append(Binomial(t, s))
            if log is not None:
                log.append(TraceEntry(t, down(t, spec), BASIS, s))
            continue

        image = down(t, spec)
        syn = code.syndrome(image)
        s = leader_map.get(syn)
        if s is None:
            leader_map[syn] = t
            standard.add(t)
            if log is not None:
                log.append(TraceEntry(t, image, STANDARD))
            for v in range(nvars):
                m = t.times_var(v)
                if m not in queued:
                    queued.add(m)
                    heapq.heappush(heap, (order.key(m), next(counter), m))
        else:
            elements.append(Binomial(t, s))
            if log is not None:
                log.append(TraceEntry(t, image, BASIS, s))
            if eager_multiples and t.is_canonical():
                for j in range(1, q - 1):
                    tj = _scaled(t, j, code)
                    if tj != t and tj not in pending:
                        pending[tj] = _scaled(s, j, code)

    return GroebnerBasis(code, order, tuple(elements), frozenset(standard), leader_map, log)


def reduce(m: Monomial, gb: GroebnerBasis, rng: Optional[random.Random] = None) -> Monomial:
    """Normal form of m by binomial division.

    Each step replaces a factor equal to some lead by its trail.  With
    ``rng`` the dividing element is chosen at random among all candidates.
    """
    while True:
        if rng is None:
            g = next(iter(gb.dividing(m)), None)
        else:
            cands = list(gb.dividing(m))
            g = rng.choice(cands) if cands else None
        if g is None:
            return m
        m = m.substitute(g.lead, g.trail)


def spoly(g1: Binomial, g2: Binomial) -> Tuple[Monomial, Monomial]:
    """The two monomials of the S-polynomial of g1 and g2."""
    L = g1.lead.lcm(g2.lead)
    return L.substitute(g1.lead, g1.trail), L.substitute(g2.lead, g2.trail)


@dataclass
class GroebnerCheck:
    ok: bool
    pairs_checked: int
    failed_pair: Optional[Tuple[Binomial, Binomial]] = None
    failed_generator: Optional[Binomial] = None
    failed_member: Optional[Binomial] = None

    def __bool__(self):
        return self.ok


def check_groebner(gb: GroebnerBasis, gens: Optional[GeneratorSet] = None) -> GroebnerCheck:
    """Buchberger criterion for gb, plus ideal equality with gens.

    Pairs with coprime leads are skipped (Buchberger's product criterion).
    Every generator must reduce to zero and every basis element must encode
    a codeword.
    """

    if gens is None:
        gens = assemble_generators(gb.code, gb.order)
    cache: Dict[Monomial, Monomial] = {}

    def nf(m: Monomial) -> Monomial:
        # plain division, memoizing every monomial met along the way
        path = []
        while True:
            r = cache.get(m)
            if r is not None:
                break
            g = next(iter(gb.dividing(m)), None)
            if g is None:
                r = m
                break
            path.append(m)
            m = m.substitute(g.lead, g.trail)
        for x in path:
            cache[x] = r
        cache[m] = r
        return r

    els = gb.elements
    checked = 0
    for i in range(len(els)):
        a = els[i].lead
        for j in range(i + 1, len(els)):
            if a.coprime(els[j].lead):
                continue
            checked += 1
            s1, s2 = spoly(els[i], els[j])
            if nf(s1) != nf(s2):
                return GroebnerCheck(False, checked, failed_pair=(els[i], els[j]))
    for g in gens:
        if nf(g.lead) != nf(g.trail):
            return GroebnerCheck(False, checked, failed_generator=g)
    for g in els:
        if not is_member(gb.code, g):
            return GroebnerCheck(False, checked, failed_member=g)
    return GroebnerCheck(True, checked)


def is_groebner(gb: GroebnerBasis, gens: Optional[GeneratorSet] = None) -> bool:
    return check_groebner(gb, gens).ok


def is_reduced(gb: GroebnerBasis) -> bool:
    """Leads pairwise non-divisible and every trail standard."""
    leads = [g.lead for g in gb.elements]
    for i, a in enumerate(leads):
        for j, b in enumerate(leads):
            if i != j and a.divides(b):
                return False
    return all(gb.is_standard(g.trail) for g in gb.elements)


@dataclass
class Theorem1Report:
    pairs: int
    pair_failures: int
    elements: int
    element_failures: int

    @property
    def ok(self) -> bool:
        return self.pair_failures == 0 and self.element_failures == 0


def verify_theorem1(code: LinearCode, gb: GroebnerBasis, samples: int = 200,
                    rng: Optional[random.Random] = None,
                    pairs: Optional[Iterable[Tuple[FieldVector, FieldVector]]] = None) -> Theorem1Report:
    """Check both inclusions of I(C) = <generators> on samples.

    Pairs (a, b) with a - b in C must share a normal form; sampled basis
    elements must encode codewords.  ``pairs`` overrides the random pairs.
    """
    spec = code.spec
    rng = rng or random.Random(0)
    if pairs is None:
        def gen_pairs():
            for _ in range(samples):
                a = tuple(rng.randrange(code.q) for _ in range(code.n))
                c = code.encode([rng.randrange(code.q) for _ in range(code.k)])
                yield a, vec_sub(spec, a, c)
        pairs = gen_pairs()
    npairs = bad_pairs = 0
    for a, b in pairs:
        npairs += 1
        if reduce(up(a, spec), gb) != reduce(up(b, spec), gb):
            bad_pairs += 1
    if gb.elements:
        picks = [rng.choice(gb.elements) for _ in range(samples)]
    else:
        picks = []
    bad_els = sum(1 for g in picks if not code.is_codeword(binomial_codeword(g, spec)))
    return Theorem1Report(npairs, bad_pairs, len(picks), bad_els)
