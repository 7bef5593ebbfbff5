"""Buchberger engine: reduced bases, normal forms, membership, quotient dimension.

The basis computation uses the Gebauer-Moeller pair update (coprime and chain
criteria) with sugar-degree pair selection, or normal selection under lex.
Reduction is heap driven: the working polynomial is a dict of coefficients and
a heap of its monomials, so the largest live monomial is always at hand.

All limit breaches raise :class:`LimitExceeded`; nothing is truncated silently.
"""
from __future__ import annotations

import contextlib
import contextvars
import heapq
import time
from dataclasses import dataclass, field, replace
from math import comb
from typing import Iterable, Sequence

from gmpy2 import mpq

from .poly import GREVLEX, MonomialOrder, Polynomial, Ring, parse_poly

INFINITE = float("inf")


class LimitExceeded(RuntimeError):
    """A configured computation limit was hit (degree, pair count or time)."""

    def __init__(self, kind: str, detail: str):
        super().__init__(f"{kind} limit exceeded: {detail}")
        self.kind = kind
        self.detail = detail


@dataclass(frozen=True)
class Limits:
    max_degree: int = 40
    max_pairs: int = 200_000
    time_limit: float | None = 120.0

    def as_dict(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "max_pairs": self.max_pairs,
            "time_limit": self.time_limit,
        }


DEFAULT_LIMITS = Limits()

_active_limits: contextvars.ContextVar[Limits] = contextvars.ContextVar(
    "active_limits", default=DEFAULT_LIMITS
)
_deadline: contextvars.ContextVar[float | None] = contextvars.ContextVar(
    "deadline", default=None
)


@contextlib.contextmanager
def limits_scope(limits: Limits):
    """Run a block under ``limits``; the time budget covers the whole block."""
    deadline = None
    if limits.time_limit is not None:
        deadline = time.monotonic() + limits.time_limit
    tok1 = _active_limits.set(limits)
    tok2 = _deadline.set(deadline)
    try:
        yield limits
    finally:
        _active_limits.reset(tok1)
        _deadline.reset(tok2)


def current_limits() -> Limits:
    return _active_limits.get()


def check_deadline() -> None:
    deadline = _deadline.get()
    if deadline is not None and time.monotonic() > deadline:
        raise LimitExceeded("time", f"budget of {current_limits().time_limit} s used up")


# --------------------------------------------------------------------------
# internal representation


def _heap_key_fn(order: MonomialOrder):
    # min-heap keys whose smallest element is the order-largest monomial
    if order.kind == "grevlex":
        return lambda e: (-sum(e),) + e[::-1]
    if order.kind == "deglex":
        return lambda e: (-sum(e),) + tuple(-x for x in e)
    return lambda e: tuple(-x for x in e)


def _mask(e: tuple) -> int:
    m = 0
    for i, x in enumerate(e):
        if x:
            m |= 1 << i
    return m


def _divides(a: tuple, b: tuple) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: tuple, b: tuple) -> tuple:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _sub(a: tuple, b: tuple) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


class _Elem:
    """A monic basis element: leading monomial plus tail terms (descending)."""

    __slots__ = ("lm", "mask", "tail", "sugar", "deg")

    def __init__(self, terms: dict, order: MonomialOrder, sugar: int | None = None):
        key = order.key
        items = sorted(terms.items(), key=lambda t: key(t[0]), reverse=True)
        lm, lc = items[0]
        inv = 1 / lc
        self.lm = lm
        self.mask = _mask(lm)
        self.tail = [(e, c * inv) for e, c in items[1:]]
        self.deg = max(sum(e) for e in terms)
        self.sugar = self.deg if sugar is None else max(sugar, self.deg)

    def terms(self) -> dict:
        d = {self.lm: mpq(1)}
        d.update(self.tail)
        return d


class _Reducer:
    def __init__(self, order: MonomialOrder):
        self.order = order
        self.hk = _heap_key_fn(order)
        self.elems: list[_Elem] = []

    def find(self, e: tuple, emask: int) -> _Elem | None:
        for g in self.elems:
            if g.mask & ~emask == 0 and _divides(g.lm, e):
                return g
        return None

    def reduce(self, f: dict, full: bool = True) -> dict:
        """Remainder of ``f`` on division by the current elements."""
        hk = self.hk
        acc = dict(f)
        heap = [(hk(e), e) for e in acc]
        heapq.heapify(heap)
        rem: dict = {}
        steps = 0
        while heap:
            _, e = heapq.heappop(heap)
            c = acc.pop(e, None)
            if c is None:
                continue
            g = self.find(e, _mask(e))
            if g is None:
                rem[e] = c
                if not full:
                    for e2, c2 in acc.items():
                        rem[e2] = c2
                    return rem
                continue
            q = _sub(e, g.lm)
            for ge, gc in g.tail:
                m = tuple(a + b for a, b in zip(q, ge))
                v = acc.get(m)
                if v is None:
                    acc[m] = -c * gc
                    heapq.heappush(heap, (hk(m), m))
                else:
                    v = v - c * gc
                    if v:
                        acc[m] = v
                    else:
                        del acc[m]
            steps += 1
            if steps & 127 == 0:
                check_deadline()
        return rem


def _spoly(f: _Elem, g: _Elem) -> dict:
    l = _lcm(f.lm, g.lm)
    qf = _sub(l, f.lm)
    qg = _sub(l, g.lm)
    acc: dict = {}
    for e, c in f.tail:
        m = tuple(a + b for a, b in zip(qf, e))
        acc[m] = acc.get(m, 0) + c
    for e, c in g.tail:
        m = tuple(a + b for a, b in zip(qg, e))
        acc[m] = acc.get(m, 0) - c
    return {e: c for e, c in acc.items() if c}


def buchberger(
    gens: Sequence[dict],
    order: MonomialOrder,
    limits: Limits | None = None,
) -> list[dict]:
    """Reduced Groebner basis of the ideal spanned by ``gens`` (term dicts)."""
    limits = limits or current_limits()
    check_deadline()
    red = _Reducer(order)
    okey = order.key
    graded = order.degree_compatible
    basis: list[_Elem] = []  # every element ever added
    active: list[int] = []  # indices still in the basis
    pairs: dict[tuple[int, int], tuple] = {}  # live pairs -> lcm
    pheap: list = []
    processed = 0

    def push_pair(i, j, l):
        gi, gj = basis[i], basis[j]
        sug = max(gi.sugar + sum(l) - gi.deg, gj.sugar + sum(l) - gj.deg)
        pairs[(i, j)] = l
        # sugar for degree orders; plain normal selection for lex, where sugar
        # chases low-degree pairs into long coefficient-swelling chains
        heapq.heappush(pheap, (sug if graded else 0, okey(l), i, j))

    def update(h_idx: int):
        h = basis[h_idx]
        hlm = h.lm
        # new pairs (h, g) filtered by the chain criterion among themselves
        cand = []
        for g_idx in active:
            glm = basis[g_idx].lm
            coprime = all(a == 0 or b == 0 for a, b in zip(hlm, glm))
            cand.append((g_idx, _lcm(hlm, glm), coprime))
        kept = []
        while cand:
            g_idx, l, coprime = cand.pop(0)
            if coprime or not (
                any(_divides(l2, l) for _, l2, _ in cand)
                or any(_divides(l2, l) for _, l2, _ in kept)
            ):
                kept.append((g_idx, l, coprime))
        # coprime pairs only served to dominate others; drop them now
        new = [(g_idx, l) for g_idx, l, coprime in kept if not coprime]
        # old pairs killed by h (chain criterion)
        for (i, j), l in list(pairs.items()):
            if _divides(hlm, l):
                li = _lcm(basis[i].lm, hlm)
                lj = _lcm(basis[j].lm, hlm)
                if li != l and lj != l:
                    del pairs[(i, j)]
        for g_idx, l in new:
            push_pair(min(g_idx, h_idx), max(g_idx, h_idx), l)
        # elements whose leading monomial h divides leave the basis
        active[:] = [g for g in active if not _divides(hlm, basis[g].lm)]
        active.append(h_idx)
        red.elems = [basis[g] for g in active]
        # keep tails reduced; stale tails make coefficients swell (badly so under lex)
        for g_idx in active[:-1]:
            g = basis[g_idx]
            if any(_divides(hlm, e) for e, _ in g.tail):
                red.elems = [basis[k] for k in active if k != g_idx]
                t = {g.lm: mpq(1)}
                t.update(red.reduce(dict(g.tail)))
                basis[g_idx] = _Elem(t, order, sugar=g.sugar)
        red.elems = [basis[g] for g in active]

    # seed: reduce generators against each other as they come in
    seeds = [g for g in gens if g]
    seeds.sort(key=lambda t: okey(max(t, key=okey)))
    for g in seeds:
        deg = max(sum(e) for e in g)
        if deg > limits.max_degree:
            raise LimitExceeded("degree", f"generator of degree {deg}")
        r = red.reduce(g)
        if not r:
            continue
        basis.append(_Elem(r, order, sugar=deg))
        update(len(basis) - 1)

    while pheap:
        sug, _, i, j = heapq.heappop(pheap)
        l = pairs.pop((i, j), None)
        if l is None:
            continue
        processed += 1
        if processed > limits.max_pairs:
            raise LimitExceeded("pairs", f"more than {limits.max_pairs} S-pairs")
        if sum(l) > limits.max_degree:
            raise LimitExceeded("degree", f"S-pair of degree {sum(l)}")
        check_deadline()
        s = _spoly(basis[i], basis[j])
        if not s:
            continue
        r = red.reduce(s)
        if not r:
            continue
        basis.append(_Elem(r, order, sugar=sug))
        update(len(basis) - 1)

    # inter-reduce to the reduced basis
    elems = sorted((basis[g] for g in active), key=lambda g: okey(g.lm))
    out: list[dict] = []
    for k, g in enumerate(elems):
        red.elems = [h for h in elems if h is not g]
        tail = red.reduce(dict(g.tail)) if g.tail else {}
        t = {g.lm: mpq(1)}
        t.update(tail)
        out.append(t)
    return out


def reduce_terms(f: dict, basis: Sequence[dict], order: MonomialOrder) -> dict:
    red = _Reducer(order)
    red.elems = [_Elem(b, order) for b in basis]
    return red.reduce(f)


# --------------------------------------------------------------------------
# Ideal


@dataclass
class HilbertData:
    counts: list[int]
    dimension: int | float | None = None  # total when finite, else INFINITE

    def total(self) -> int:
        return sum(self.counts)


class Ideal:
    """Generators in one ring plus lazily cached reduced Groebner bases."""

    def __init__(self, gens: Iterable, ring: Ring | None = None, limits: Limits | None = None):
        gens = list(gens)
        if ring is None:
            if not gens or not isinstance(gens[0], Polynomial):
                raise ValueError("ring required when generators are not Polynomials")
            ring = gens[0].ring
        self.ring = ring
        self.gens = [ring.coerce(g) for g in gens]
        self.limits = limits
        self._gb: dict[MonomialOrder, list[Polynomial]] = {}

    def __repr__(self):
        return f"Ideal({len(self.gens)} generators in {self.ring!r})"

    def __add__(self, other) -> "Ideal":
        extra = other.gens if isinstance(other, Ideal) else [self.ring.coerce(g) for g in other]
        return Ideal(self.gens + list(extra), self.ring, self.limits)

    # Groebner basis ----------------------------------------------------
    def groebner_basis(self, order: MonomialOrder = GREVLEX) -> list[Polynomial]:
        if order not in self._gb:
            gens = [g.primitive(order).terms for g in self.gens if g]
            raw = buchberger(gens, order, self.limits)
            basis = [Polynomial._raw(self.ring, t) for t in raw]
            basis.sort(key=lambda p: order.key(p.leading_monomial(order)))
            self._gb[order] = basis
        return self._gb[order]

    def install_basis(self, basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> None:
        """Publish a basis known to be reduced Groebner for this ideal."""
        basis = sorted(basis, key=lambda p: order.key(p.leading_monomial(order)))
        self._gb[order] = list(basis)

    def leading_monomials(self, order: MonomialOrder = GREVLEX) -> list[tuple]:
        return [p.leading_monomial(order) for p in self.groebner_basis(order)]

    def is_unit(self) -> bool:
        gb = self.groebner_basis()
        return len(gb) == 1 and gb[0].is_constant()

    # queries -----------------------------------------------------------
    def normal_form(self, f, order: MonomialOrder = GREVLEX) -> Polynomial:
        f = self.ring.coerce(f)
        if not f:
            return f
        basis = [g.terms for g in self.groebner_basis(order)]
        return Polynomial._raw(self.ring, reduce_terms(f.terms, basis, order))

    def contains(self, f) -> bool:
        return not self.normal_form(f)

    __contains__ = contains

    def contains_ideal(self, other: "Ideal | Iterable") -> bool:
        gens = other.gens if isinstance(other, Ideal) else other
        return all(self.contains(g) for g in gens)

    def equals(self, other: "Ideal") -> bool:
        return self.contains_ideal(other) and other.contains_ideal(self)

    def quotient_dimension(self, order: MonomialOrder = GREVLEX):
        return monomial_quotient_dimension(self.leading_monomials(order), self.ring.nvars)

    def standard_monomials(self, order: MonomialOrder = GREVLEX, max_degree: int | None = None) -> list[tuple]:
        return standard_monomials(self.leading_monomials(order), self.ring.nvars, max_degree)

    def hilbert_function(self, d_max: int, require_homogeneous: bool = False) -> HilbertData:
        if require_homogeneous and not all(g.is_homogeneous() for g in self.gens):
            raise ValueError("ideal is not homogeneous")
        lms = self.leading_monomials(GREVLEX)
        counts = [0] * (d_max + 1)
        for e in standard_monomials(lms, self.ring.nvars, d_max):
            counts[sum(e)] += 1
        return HilbertData(counts, monomial_quotient_dimension(lms, self.ring.nvars))

    def initial_form_ideal(self, order: MonomialOrder = GREVLEX) -> "Ideal":
        if not order.degree_compatible:
            raise ValueError("initial forms need a degree-compatible order")
        basis = self.groebner_basis(order)
        forms = [p.leading_form() for p in basis]
        J = Ideal(forms, self.ring, self.limits)
        # top-degree forms of a reduced degree-compatible basis are a reduced
        # basis of the initial-form ideal (same leading monomials, standard tails)
        J.install_basis([f.monic(order) for f in forms], order)
        return J

    def specialize(self, bindings, ring: Ring | None = None) -> "Ideal":
        target = ring or self.ring
        gens = [g.specialize(bindings, target) for g in self.gens]
        return Ideal([g for g in gens if g] or [target.zero()], target, self.limits)


# --------------------------------------------------------------------------
# monomial ideal combinatorics


def _is_standard(e: tuple, lms: Sequence[tuple]) -> bool:
    return not any(_divides(m, e) for m in lms)


def monomial_quotient_dimension(lms: Sequence[tuple], nvars: int):
    """Number of monomials outside the monomial ideal (or INFINITE)."""
    if any(not any(m) for m in lms):
        return 0
    for i in range(nvars):
        if not any(m[i] and all(x == 0 for j, x in enumerate(m) if j != i) for m in lms):
            return INFINITE
    return len(standard_monomials(lms, nvars))


def standard_monomials(lms: Sequence[tuple], nvars: int, max_degree: int | None = None) -> list[tuple]:
    """All standard monomials, sorted by degree then grevlex (optionally capped)."""
    if any(not any(m) for m in lms):
        return []
    lms = list(lms)
    # bound per variable from pure powers, if any
    bound = [None] * nvars
    for m in lms:
        nz = [i for i, x in enumerate(m) if x]
        if len(nz) == 1:
            i = nz[0]
            bound[i] = m[i] if bound[i] is None else min(bound[i], m[i])
    if max_degree is None and any(b is None for b in bound):
        raise ValueError("infinitely many standard monomials; pass max_degree")
    out = []

    def rec(i, prefix, deg):
        if i == nvars:
            out.append(tuple(prefix))
            return
        k = 0
        while True:
            if bound[i] is not None and k >= bound[i]:
                break
            if max_degree is not None and deg + k > max_degree:
                break
            prefix.append(k)
            # a monomial prefix that is already non-standard stays non-standard
            probe = tuple(prefix) + (0,) * (nvars - i - 1)
            if not _is_standard(probe, lms):
                prefix.pop()
                break
            rec(i + 1, prefix, deg + k)
            prefix.pop()
            k += 1

    rec(0, [], 0)
    out.sort(key=lambda e: GREVLEX.key(e))
    return out


# --------------------------------------------------------------------------
# module-level API


def groebner_basis(I: Ideal, order: MonomialOrder = GREVLEX) -> list[Polynomial]:
    return I.groebner_basis(order)


def normal_form(f, I: Ideal, order: MonomialOrder = GREVLEX) -> Polynomial:
    return I.normal_form(f, order)


def ideal_member(f, I: Ideal) -> bool:
    return I.contains(f)


def ideal_contains(I: Ideal, J: Ideal) -> bool:
    return I.contains_ideal(J)


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    return I.equals(J)


def quotient_dimension(I: Ideal):
    return I.quotient_dimension()


def hilbert_function(I: Ideal, d_max: int, require_homogeneous: bool = False) -> HilbertData:
    return I.hilbert_function(d_max, require_homogeneous)


def initial_form_ideal(I: Ideal) -> Ideal:
    return I.initial_form_ideal()


def s_polynomials_reduce_to_zero(basis: Sequence[Polynomial], order: MonomialOrder = GREVLEX) -> bool:
    """Buchberger's criterion, checked on every pair."""
    elems = [_Elem(b.terms, order) for b in basis if b]
    raw = [e.terms() for e in elems]
    for i in range(len(elems)):
        for j in range(i + 1, len(elems)):
            s = _spoly(elems[i], elems[j])
            if s and reduce_terms(s, raw, order):
                return False
    return True


# --------------------------------------------------------------------------
# ideal files


def read_ideal_file(text: str, ring: Ring | None = None) -> Ideal:
    """Parse an ideal file: optional ``vars:`` line, one generator per line, ``#`` comments."""
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if lines and lines[0].startswith("vars:"):
        names = lines.pop(0)[len("vars:"):].split()
        ring = Ring(names)
    if ring is None:
        raise ValueError("ideal file has no 'vars:' line and no ring was given")
    gens = [parse_poly(line, ring) for line in lines]
    return Ideal(gens or [ring.zero()], ring)


def write_ideal_file(gens: Sequence[Polynomial], labels: Sequence[str] | None = None) -> str:
    if not gens:
        return ""
    ring = gens[0].ring
    out = ["vars: " + " ".join(ring.names)]
    for i, g in enumerate(gens):
        if labels is not None:
            out.append(f"# label: {labels[i]}")
        out.append(str(g))
    return "\n".join(out) + "\n"
