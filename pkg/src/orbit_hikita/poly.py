"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Ring` is an ordered tuple of variable names; a :class:`Polynomial`
is an immutable map from exponent tuples to nonzero ``mpq`` coefficients.
"""
from __future__ import annotations

import re
from functools import reduce
from typing import Iterable, Mapping, Sequence, Union

from gmpy2 import mpq

Scalar = Union[int, "mpq", object]

_NAME_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")


def Q(x) -> mpq:
    """Coerce ints, Fractions, numeric strings and mpq values to ``mpq``."""
    if isinstance(x, str):
        return mpq(x.strip())
    return mpq(x)


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.text = text
        self.pos = pos


# --------------------------------------------------------------------------
# monomial orders


class MonomialOrder:
    """A monomial order on exponent tuples.

    ``key(e)`` is larger for larger monomials, so ``max(terms, key=order.key)``
    is the leading monomial.
    """

    KINDS = ("lex", "grevlex", "deglex")

    def __init__(self, kind: str):
        if kind not in self.KINDS:
            raise ValueError(f"unknown monomial order {kind!r}")
        self.kind = kind

    def key(self, e: tuple) -> tuple:
        if self.kind == "grevlex":
            return (sum(e), tuple(-x for x in reversed(e)))
        if self.kind == "deglex":
            return (sum(e), e)
        return e

    @property
    def degree_compatible(self) -> bool:
        return self.kind != "lex"

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and other.kind == self.kind

    def __hash__(self):
        return hash(("MonomialOrder", self.kind))

    def __repr__(self):
        return f"MonomialOrder({self.kind!r})"


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")
DEGLEX = MonomialOrder("deglex")


# --------------------------------------------------------------------------
# rings


class Ring:
    """Polynomial ring over Q in a fixed, ordered list of named variables."""

    def __init__(self, names: Iterable[str]):
        names = tuple(names)
        for name in names:
            if not _NAME_RE.fullmatch(name):
                raise ValueError(f"invalid variable name {name!r}")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        self.names = names
        self.index = {name: i for i, name in enumerate(names)}
        self.nvars = len(names)
        self._zero_exp = (0,) * self.nvars

    def __eq__(self, other):
        return isinstance(other, Ring) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Ring({', '.join(self.names)})"

    def __len__(self):
        return self.nvars

    def __contains__(self, name):
        return name in self.index

    # constructors -------------------------------------------------------
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return Polynomial(self, {self._zero_exp: mpq(1)})

    def const(self, c) -> "Polynomial":
        c = Q(c)
        return Polynomial(self, {self._zero_exp: c} if c else {})

    def gen(self, name: str) -> "Polynomial":
        try:
            i = self.index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r} in {self!r}") from None
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): mpq(1)})

    def gens(self, *names: str) -> list["Polynomial"]:
        return [self.gen(n) for n in (names or self.names)]

    def monomial(self, exp: Sequence[int], coeff=1) -> "Polynomial":
        exp = tuple(exp)
        if len(exp) != self.nvars or any(x < 0 for x in exp):
            raise ValueError(f"bad exponent vector {exp} for {self!r}")
        c = Q(coeff)
        return Polynomial(self, {exp: c} if c else {})

    def parse(self, text: str) -> "Polynomial":
        return parse_poly(text, self)

    def coerce(self, x) -> "Polynomial":
        if isinstance(x, Polynomial):
            if x.ring == self:
                return x
            return x.to_ring(self)
        if isinstance(x, str):
            return self.parse(x)
        return self.const(x)

    # ring arithmetic helpers --------------------------------------------
    def extend(self, extra: Iterable[str]) -> "Ring":
        return Ring(self.names + tuple(n for n in extra if n not in self.index))

    def drop(self, names: Iterable[str]) -> "Ring":
        drop = set(names)
        return Ring(n for n in self.names if n not in drop)


def standard_ring(
    n: int = 0,
    params: Sequence[str] = (),
    z: bool = False,
    extra: Sequence[str] = (),
) -> Ring:
    """Ring in the canonical order y1 > ... > yn > t0 > t1 > ... > h > z > extra.

    ``params`` may be given in any order; they are placed as t0, t1, ..., h.
    """
    names = [f"y{i}" for i in range(1, n + 1)]

    def param_rank(p):
        if p == "h":
            return (1, 0)
        m = re.fullmatch(r"t(\d+)", p)
        if m:
            return (0, int(m.group(1)))
        return (2, p)

    names += sorted(params, key=param_rank)
    if z:
        names.append("z")
    names += list(extra)
    return Ring(names)


# --------------------------------------------------------------------------
# polynomials


def _add_into(acc: dict, terms: Mapping, scale=None) -> None:
    for e, c in terms.items():
        if scale is not None:
            c = c * scale
        v = acc.get(e)
        if v is None:
            acc[e] = c
        else:
            v = v + c
            if v:
                acc[e] = v
            else:
                del acc[e]


class Polynomial:
    """Immutable sparse polynomial; ``terms`` maps exponent tuples to mpq."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: Ring, terms: Mapping[tuple, object]):
        self.ring = ring
        clean = {}
        for e, c in terms.items():
            if not isinstance(c, type(mpq(0))):
                c = Q(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Polynomial":
        # caller guarantees canonical terms (tuple keys, nonzero mpq values)
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        p._hash = None
        return p

    # basic protocol ---------------------------------------------------
    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        try:
            c = Q(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == ({self.ring._zero_exp: c} if c else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.names, frozenset(self.terms.items())))
        return self._hash

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")
            return other
        return self.ring.const(other)

    # arithmetic --------------------------------------------------------
    def __add__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError) as exc:
            if isinstance(other, Polynomial):
                raise exc
            return NotImplemented
        acc = dict(self.terms)
        _add_into(acc, other.terms)
        return Polynomial._raw(self.ring, acc)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, ValueError) as exc:
            if isinstance(other, Polynomial):
                raise exc
            return NotImplemented
        acc = dict(self.terms)
        _add_into(acc, other.terms, mpq(-1))
        return Polynomial._raw(self.ring, acc)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            try:
                c = Q(other)
            except (TypeError, ValueError):
                return NotImplemented
            if not c:
                return self.ring.zero()
            return Polynomial._raw(self.ring, {e: v * c for e, v in self.terms.items()})
        other = self._coerce(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        acc: dict = {}
        for e2, c2 in b.items():
            for e1, c1 in a.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = acc.get(e)
                acc[e] = c1 * c2 if v is None else v + c1 * c2
        return Polynomial._raw(self.ring, {e: c for e, c in acc.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = Q(other)
        if not c:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # inspection --------------------------------------------------------
    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var: str) -> int:
        i = self.ring.index[var]
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def variables(self) -> list[str]:
        used = [False] * self.ring.nvars
        for e in self.terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return [n for n, u in zip(self.ring.names, used) if u]

    def is_constant(self) -> bool:
        return all(not any(e) for e in self.terms)

    def constant_coefficient(self) -> mpq:
        return self.terms.get(self.ring._zero_exp, mpq(0))

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def homogeneous_component(self, d: int) -> "Polynomial":
        return Polynomial._raw(self.ring, {e: c for e, c in self.terms.items() if sum(e) == d})

    def leading_form(self) -> "Polynomial":
        """Sum of the terms of maximal total degree."""
        if not self.terms:
            raise ValueError("leading form of the zero polynomial")
        return self.homogeneous_component(self.total_degree())

    def sorted_terms(self, order: MonomialOrder = GREVLEX) -> list[tuple[tuple, mpq]]:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def leading_monomial(self, order: MonomialOrder = GREVLEX) -> tuple:
        if not self.terms:
            raise ValueError("leading monomial of the zero polynomial")
        return max(self.terms, key=order.key)

    def leading_coefficient(self, order: MonomialOrder = GREVLEX) -> mpq:
        return self.terms[self.leading_monomial(order)]

    def monic(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        return self * (1 / self.leading_coefficient(order))

    def primitive(self, order: MonomialOrder = GREVLEX) -> "Polynomial":
        """Integer-primitive associate with positive leading coefficient."""
        if not self.terms:
            return self
        from math import gcd, lcm

        den = reduce(lcm, (int(c.denominator) for c in self.terms.values()), 1)
        nums = [int(c * den) for c in self.terms.values()]
        g = reduce(gcd, nums, 0)
        scale = mpq(den, g)
        if self.leading_coefficient(order) < 0:
            scale = -scale
        return self * scale

    def coefficients_in(self, var: str) -> dict[int, "Polynomial"]:
        """View as univariate in ``var``: power -> coefficient (same ring, var-free)."""
        i = self.ring.index[var]
        out: dict[int, dict] = {}
        for e, c in self.terms.items():
            k = e[i]
            e2 = e[:i] + (0,) + e[i + 1:]
            out.setdefault(k, {})[e2] = c
        return {k: Polynomial._raw(self.ring, t) for k, t in out.items()}

    # evaluation and substitution --------------------------------------
    def evaluate(self, point) -> mpq:
        """Exact value at a point given as a sequence (ring order) or name map."""
        if isinstance(point, Mapping):
            vals = [Q(point[n]) for n in self.ring.names]
        else:
            vals = [Q(v) for v in point]
            if len(vals) != self.ring.nvars:
                raise ValueError(
                    f"point has {len(vals)} coordinates, ring has {self.ring.nvars}"
                )
        total = mpq(0)
        for e, c in self.terms.items():
            term = c
            for v, k in zip(vals, e):
                if k:
                    term *= v ** k
            total += term
        return total

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple, Mapping)):
            return self.evaluate(point[0])
        return self.evaluate(point)

    def specialize(self, bindings: Mapping[str, object], ring: Ring | None = None) -> "Polynomial":
        """Substitute variables; unbound variables map to the same name in ``ring``."""
        target = ring or self.ring
        for name in bindings:
            if name not in self.ring.index:
                raise KeyError(f"unknown variable {name!r} in {self.ring!r}")
        images = []
        for name in self.ring.names:
            if name in bindings:
                images.append(target.coerce(bindings[name]))
            elif name in target.index:
                images.append(target.gen(name))
            else:
                images.append(None)
        return self._substitute(images, target)

    def _substitute(self, images: list, target: Ring) -> "Polynomial":
        cache: dict = {}

        def power(i, k):
            key = (i, k)
            if key not in cache:
                img = images[i]
                if img is None:
                    raise ValueError(
                        f"variable {self.ring.names[i]!r} is unbound and absent from {target!r}"
                    )
                cache[key] = img ** k
            return cache[key]

        # fast path: every image is a constant or a single variable
        acc: dict = {}
        simple = all(
            img is not None and len(img.terms) <= 1 and all(sum(e) <= 1 for e in img.terms)
            for img in images
        )
        if simple:
            lin = []
            for img in images:
                if not img.terms:
                    lin.append((None, mpq(0)))
                else:
                    (e, c), = img.terms.items()
                    j = e.index(1) if any(e) else None
                    lin.append((j, c))
            nv = target.nvars
            for e, c in self.terms.items():
                new = [0] * nv
                coeff = c
                for (j, a), k in zip(lin, e):
                    if not k:
                        continue
                    if j is None:
                        coeff = coeff * a ** k
                    else:
                        coeff = coeff * a ** k if a != 1 else coeff
                        new[j] += k
                if coeff:
                    t = tuple(new)
                    v = acc.get(t)
                    v = coeff if v is None else v + coeff
                    if v:
                        acc[t] = v
                    else:
                        acc.pop(t, None)
            return Polynomial._raw(target, acc)

        result = target.zero()
        for e, c in self.terms.items():
            term = target.const(c)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            _add_into(acc, term.terms)
        return Polynomial._raw(target, acc)

    def to_ring(self, ring: Ring) -> "Polynomial":
        """Move to another ring by variable name; used variables must exist there."""
        if ring == self.ring:
            return self
        idx = []
        for i, name in enumerate(self.ring.names):
            idx.append(ring.index.get(name))
        acc = {}
        for e, c in self.terms.items():
            new = [0] * ring.nvars
            for i, k in enumerate(e):
                if k:
                    j = idx[i]
                    if j is None:
                        raise ValueError(
                            f"variable {self.ring.names[i]!r} not in target {ring!r}"
                        )
                    new[j] = k
            acc[tuple(new)] = c
        return Polynomial._raw(ring, acc)

    # printing ----------------------------------------------------------
    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Polynomial({format_poly(self)!r})"


def format_monomial(e: tuple, names: Sequence[str]) -> str:
    parts = []
    for name, k in zip(names, e):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append(f"{name}^{k}")
    return "*".join(parts)


def format_poly(p: Polynomial, order: MonomialOrder = GREVLEX) -> str:
    if not p.terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(p.sorted_terms(order)):
        neg = c < 0
        a = -c if neg else c
        mono = format_monomial(e, p.ring.names)
        if not mono:
            body = str(a)
        elif a == 1:
            body = mono
        else:
            body = f"{a}*{mono}"
        if i == 0:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# --------------------------------------------------------------------------
# parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z][A-Za-z0-9_]*)|(\S))?")


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m.group(1) is not None:
            tokens.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^":
                raise ParseError(f"unexpected character {ch!r}", text, m.start(3))
            tokens.append((ch, ch, m.start(3)))
        else:
            break
        pos = m.end()
    tokens.append(("end", "", n))
    return tokens


def parse_poly(text: str, ring: Ring) -> Polynomial:
    """Parse ``poly := ['-'] term (('+'|'-') term)*`` into ``ring``."""
    tokens = _tokenize(text)
    pos = 0

    def peek():
        return tokens[pos]

    def take(kind):
        nonlocal pos
        tok = tokens[pos]
        if tok[0] != kind:
            raise ParseError(f"expected {kind}, found {tok[1] or 'end of input'!r}", text, tok[2])
        pos += 1
        return tok

    def factor(exp):
        tok = take("name")
        name = tok[1]
        if name not in ring.index:
            raise ParseError(f"unknown variable {name!r}", text, tok[2])
        k = 1
        if peek()[0] == "^":
            take("^")
            k = int(take("int")[1])
        exp[ring.index[name]] += k

    def term():
        exp = [0] * ring.nvars
        coeff = mpq(1)
        if peek()[0] == "int":
            num = int(take("int")[1])
            if peek()[0] == "/":
                take("/")
                tok = take("int")
                den = int(tok[1])
                if den == 0:
                    raise ParseError("zero denominator", text, tok[2])
                coeff = mpq(num, den)
            else:
                coeff = mpq(num)
            while peek()[0] == "*":
                take("*")
                factor(exp)
        else:
            factor(exp)
            while peek()[0] == "*":
                take("*")
                factor(exp)
        return tuple(exp), coeff

    acc: dict = {}
    sign = 1
    if peek()[0] in ("+", "-"):
        sign = -1 if take(peek()[0])[0] == "-" else 1
    while True:
        e, c = term()
        _add_into(acc, {e: c * sign})
        kind = peek()[0]
        if kind == "end":
            break
        if kind not in ("+", "-"):
            tok = peek()
            raise ParseError(f"unexpected token {tok[1]!r}", text, tok[2])
        sign = -1 if take(kind)[0] == "-" else 1
    return Polynomial._raw(ring, {e: c for e, c in acc.items() if c})


# --------------------------------------------------------------------------
# univariate division in a distinguished variable


def poly_divmod_in_z(P: Polynomial, Qz: Polynomial, z: str) -> tuple[Polynomial, Polynomial]:
    """Long division of ``P`` by ``Qz`` viewed as polynomials in ``z``.

    The leading coefficient of ``Qz`` in ``z`` must be a nonzero constant.
    Returns ``(quot, rem)`` with ``P == Qz*quot + rem`` and ``deg_z rem < deg_z Qz``.
    """
    if P.ring != Qz.ring:
        raise ValueError("ring mismatch")
    if not Qz:
        raise ZeroDivisionError("division by the zero polynomial")
    ring = P.ring
    dq = Qz.degree(z)
    lc = Qz.coefficients_in(z)[dq]
    if not lc.is_constant():
        raise ValueError(f"leading coefficient of divisor in {z} is not a constant: {lc}")
    inv = 1 / lc.constant_coefficient()
    zi = ring.index[z]
    quot: dict = {}
    rem = dict(P.terms)
    qterms = list(Qz.terms.items())
    while rem:
        d = max(e[zi] for e in rem)
        if d < dq:
            break
        shift = d - dq
        top = {e: c for e, c in rem.items() if e[zi] == d}
        for e, c in top.items():
            qe = e[:zi] + (e[zi] - dq,) + e[zi + 1:]
            qc = c * inv
            _add_into(quot, {qe: qc})
            for f, b in qterms:
                g = tuple(x + y for x, y in zip(qe, f))
                _add_into(rem, {g: -qc * b})
    return Polynomial._raw(ring, quot), Polynomial._raw(ring, rem)


def elementary_symmetric(polys: Sequence[Polynomial], p: int, ring: Ring) -> Polynomial:
    """e_p of a list of polynomials (e_0 = 1, e_p = 0 for p > len)."""
    # coefficients of prod (1 + u*f_i), truncated at degree p
    e = [ring.one()] + [ring.zero()] * p
    for f in polys:
        for j in range(p, 0, -1):
            e[j] = e[j] + e[j - 1] * f
    return e[p]


def complete_symmetric(polys: Sequence[Polynomial], p: int, ring: Ring) -> Polynomial:
    """h_p of a list of polynomials (h_0 = 1; h_p = 0 for an empty list, p > 0)."""
    h = [ring.one()] + [ring.zero()] * p
    for f in polys:
        for j in range(1, p + 1):
            h[j] = h[j] + h[j - 1] * f
    return h[p]
