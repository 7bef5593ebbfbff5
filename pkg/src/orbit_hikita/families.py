"""Generator families: Tanisaki-type ideals, remainder generators, sco, T(b) and friends."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import flint
from gmpy2 import mpq

from .groebner import Ideal
from .poly import (
    GREVLEX,
    Polynomial,
    Ring,
    complete_symmetric,
    elementary_symmetric,
    poly_divmod_in_z,
    standard_ring,
)
from .weyl import LeviDatum, d_l, d_prime_l, signed_permutation_images


@dataclass
class GeneratorFamily:
    """Labelled generators with a provenance note per generator."""

    ring: Ring
    polys: list[Polynomial] = field(default_factory=list)
    labels: list[str] = field(default_factory=list)

    def add(self, p: Polynomial, label: str) -> None:
        if not p:
            return
        if label in self._label_set():
            raise ValueError(f"duplicate label {label!r}")
        self.polys.append(p)
        self.labels.append(label)

    def _label_set(self):
        return set(self.labels)

    def __len__(self):
        return len(self.polys)

    def __iter__(self):
        return iter(self.polys)

    def ideal(self) -> Ideal:
        return Ideal(self.polys or [self.ring.zero()], self.ring)

    def dumps(self) -> str:
        out = ["vars: " + " ".join(self.ring.names)]
        for p, lab in zip(self.polys, self.labels):
            out.append(f"# label: {lab}")
            out.append(str(p))
        return "\n".join(out) + "\n"

    def deduplicated(self) -> "GeneratorFamily":
        """Drop generators that agree with an earlier one up to a scalar."""
        fam = GeneratorFamily(self.ring)
        seen = set()
        for p, lab in zip(self.polys, self.labels):
            key = p.primitive()
            if key not in seen:
                seen.add(key)
                fam.add(p, lab)
        return fam

    def pruned(self) -> "GeneratorFamily":
        """Greedily drop generators lying in the ideal of the remaining ones."""
        keep = list(range(len(self.polys)))
        for i in reversed(range(len(self.polys))):
            rest = [self.polys[j] for j in keep if j != i]
            if rest and Ideal(rest, self.ring).contains(self.polys[i]):
                keep.remove(i)
        fam = GeneratorFamily(self.ring)
        for j in keep:
            fam.add(self.polys[j], self.labels[j])
        return fam


def _subsets(indices: Sequence[int], size: int):
    return itertools.combinations(indices, size)


def _fmt_set(L) -> str:
    return "{" + ",".join(str(i) for i in L) + "}"


def y_ring(n: int) -> Ring:
    return standard_ring(n)


def partial_elem_sym_sq(L: Iterable[int], p: int, n: int, ring: Ring | None = None) -> Polynomial:
    """e_p of y_i^2 for i in L (1-based indices)."""
    L = sorted(L)
    if p > len(L) or len(L) > n:
        raise ValueError(f"need p <= |L| <= n, got p={p}, L={L}, n={n}")
    ring = ring or y_ring(n)
    return elementary_symmetric([ring.gen(f"y{i}") ** 2 for i in L], p, ring)


def partial_complete_sym_sq(L: Iterable[int], p: int, n: int, ring: Ring | None = None) -> Polynomial:
    """h_p of y_i^2 for i in L (1-based indices)."""
    ring = ring or y_ring(n)
    return complete_symmetric([ring.gen(f"y{i}") ** 2 for i in sorted(L)], p, ring)


def y_K(K: Iterable[int], ring: Ring) -> Polynomial:
    out = ring.one()
    for i in K:
        out = out * ring.gen(f"y{i}")
    return out


def symmetric_ideal_sq(n: int, ring: Ring | None = None) -> Ideal:
    """I_n = (e_1(y^2), ..., e_n(y^2))."""
    ring = ring or y_ring(n)
    return Ideal([partial_elem_sym_sq(range(1, n + 1), p, n, ring) for p in range(1, n + 1)], ring)


def e2p_h2p_residues(n: int):
    """Normal forms of e2_p(L) - (-1)^p h2_p(L^c) modulo I_n, for proper L and 1 <= p <= |L|."""
    ring = y_ring(n)
    I = symmetric_ideal_sq(n, ring)
    full = set(range(1, n + 1))
    for l in range(1, n):
        for L in _subsets(range(1, n + 1), l):
            Lc = sorted(full - set(L))
            for p in range(1, l + 1):
                f = partial_elem_sym_sq(L, p, n, ring) - (-1) ** p * partial_complete_sym_sq(Lc, p, n, ring)
                yield L, p, I.normal_form(f)


# --------------------------------------------------------------------------
# a = 0


def tanisaki_pairs(levi: LeviDatum):
    """(L, p) with 2p >= 2l - d_l(lambda) + 1, for the partition of ``levi``."""
    n = levi.n
    lam = levi.lambda_b()
    for l in range(1, n + 1):
        dl = d_l(lam, n, l)
        for p in range(1, l + 1):
            if 2 * p >= 2 * l - dl + 1:
                for L in _subsets(range(1, n + 1), l):
                    yield L, p


def tanisaki_ideal(levi: LeviDatum, prune: bool = False) -> GeneratorFamily:
    if levi.a != 0:
        raise ValueError("T_lambda needs a = 0")
    ring = y_ring(levi.n)
    fam = GeneratorFamily(ring)
    for L, p in tanisaki_pairs(levi):
        fam.add(partial_elem_sym_sq(L, p, levi.n, ring), f"e2_{p}{_fmt_set(L)}")
    return fam.pruned() if prune else fam


def remainder_coefficients(levi: LeviDatum, L: Sequence[int]) -> dict[int, Polynomial]:
    """Coefficients of z^d (d < d_l) in P_L(z) mod Q_l(z), in Q[y, t1..tk]."""
    n, k = levi.n, levi.k
    params = [f"t{i}" for i in range(1, k + 1)]
    rz = standard_ring(n, params, z=True)
    out_ring = standard_ring(n, params)
    z = rz.gen("z")
    l = len(L)
    P = rz.one()
    for i in L:
        P = P * (z**2 - rz.gen(f"y{i}") ** 2)
    Qz = rz.one()
    for i, bi in enumerate(levi.b, start=1):
        Qz = Qz * (z**2 - rz.gen(f"t{i}") ** 2) ** max(0, l - (n - bi))
    dl = Qz.degree("z")
    _, rem = poly_divmod_in_z(P, Qz, "z")
    coeffs = rem.coefficients_in("z")
    out = {}
    for d in range(dl):
        c = coeffs.get(d)
        if c:
            out[d] = c.to_ring(out_ring)
    return out


def uniform_generators_a0(levi: LeviDatum) -> GeneratorFamily:
    if levi.a != 0:
        raise ValueError("uniform remainder generators need a = 0")
    params = [f"t{i}" for i in range(1, levi.k + 1)]
    fam = GeneratorFamily(standard_ring(levi.n, params))
    for l in range(1, levi.n + 1):
        for L in _subsets(range(1, levi.n + 1), l):
            for d, c in sorted(remainder_coefficients(levi, L).items()):
                fam.add(c, f"R{_fmt_set(L)}[z^{d}]")
    return fam


def specialize_t(fam: GeneratorFamily, tvals: Sequence, n: int) -> list[Polynomial]:
    """Substitute t_i -> tvals[i-1] and move to Q[y1..yn]."""
    ring = y_ring(n)
    bind = {f"t{i}": v for i, v in enumerate(tvals, start=1)}
    out = []
    for g in fam.polys:
        s = g.specialize(bind).to_ring(ring)
        if s:
            out.append(s)
    return out


# --------------------------------------------------------------------------
# a != 0


def sco(f: Polynomial) -> Polynomial:
    """Multiply f by every variable occurring in it."""
    if not f:
        raise ValueError("sco of the zero polynomial")
    out = f
    for name in f.variables():
        out = out * f.ring.gen(name)
    return out


def t_of_b(levi: LeviDatum) -> GeneratorFamily:
    """Partial e^2 / h^2 family on the first n - a coordinates."""
    if levi.k < 1:
        raise ValueError("T(b) needs k >= 1")
    m = levi.n - levi.a
    lam = levi.lambda_b()
    ring = y_ring(levi.n)
    fam = GeneratorFamily(ring)
    full = set(range(1, m + 1))
    for l in range(1, m + 1):
        dl = d_l(lam, m, l)
        for p in range(1, l + 1):
            if 2 * p <= 2 * l - dl:
                continue
            for L in _subsets(range(1, m + 1), l):
                fam.add(partial_elem_sym_sq(L, p, levi.n, ring), f"e2_{p}{_fmt_set(L)}")
                Lc = sorted(full - set(L))
                if Lc:
                    fam.add(partial_complete_sym_sq(Lc, p, levi.n, ring), f"h2_{p}{_fmt_set(Lc)}<-{_fmt_set(L)}")
    return fam


def permutation_images(f: Polynomial) -> set[Polynomial]:
    """Images of f under all permutations of the y variables, up to sign."""
    ring = f.ring
    n = sum(1 for name in ring.names if name.startswith("y"))
    out = set()
    for perm in itertools.permutations(range(n)):
        terms = {}
        for e, c in f.terms.items():
            e2 = [0] * ring.nvars
            for i in range(n):
                e2[perm[i]] = e[i]
            e2[n:] = e[n:]
            terms[tuple(e2)] = c
        out.add(Polynomial(ring, terms).primitive())
    return out


def conjectural_generators(levi: LeviDatum, reading: str = "degree") -> GeneratorFamily:
    """Candidate generators of gr I_x for a >= 1.

    ``reading`` selects the bound for the e^2_p(L) item: "degree" uses
    p > l - d'_l (the z-degree of the divisor is 2 d'_l), "literal" uses
    2p >= 2l - d'_l + 1 as printed.
    """
    if levi.a < 1:
        raise ValueError("conjectural generators need a >= 1")
    n = levi.n
    ring = y_ring(n)
    fam = GeneratorFamily(ring)
    for l in range(1, n + 1):
        dp = d_prime_l(levi, l)
        for p in range(1, l + 1):
            ok = p > l - dp if reading == "degree" else 2 * p >= 2 * l - dp + 1
            if not ok:
                continue
            for L in _subsets(range(1, n + 1), l):
                fam.add(partial_elem_sym_sq(L, p, n, ring), f"e2_{p}{_fmt_set(L)}")
    for K in _subsets(range(1, n + 1), n - levi.a + 1):
        fam.add(y_K(K, ring), f"y_{_fmt_set(K)}")
    seen = set(p.primitive() for p in fam.polys)
    tb = t_of_b(levi)
    for f, lab in zip(tb.polys, tb.labels):
        for g in sorted(permutation_images(sco(f)), key=str):
            if g not in seen:
                seen.add(g)
                fam.add(g, f"W.sco({lab})#{len(fam)}")
    return fam


def i_nak(n: int, a: int, k: int) -> GeneratorFamily:
    if not (n >= a + k >= 1) or a < 0 or k < 0:
        raise ValueError(f"need n >= a + k >= 1, got n={n}, a={a}, k={k}")
    ring = y_ring(n)
    ys = ring.gens()
    fam = GeneratorFamily(ring)
    for i, y in enumerate(ys, start=1):
        fam.add(y ** (2 * k + 1), f"y{i}^{2 * k + 1}")
    for j in range(1, n + 1):
        fam.add(sum((y ** (2 * j) for y in ys), ring.zero()), f"p_{2 * j}")
    for K in _subsets(range(1, n + 1), n - a + 1):
        fam.add(y_K(K, ring), f"y_{_fmt_set(K)}")
    return fam


def bi1_generators(n: int, k: int) -> GeneratorFamily:
    """Generators for b_1 = ... = b_k = 1: y_i^(2k+1), power sums, y_K with |K| = k+1."""
    return i_nak(n, n - k, k)


# --------------------------------------------------------------------------
# two-row and very even


def two_row_ideal(n: int, k: int) -> GeneratorFamily:
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    ring = y_ring(n)
    fam = GeneratorFamily(ring)
    for i in range(1, n + 1):
        fam.add(ring.gen(f"y{i}") ** 2, f"y{i}^2")
    for K in _subsets(range(1, n + 1), k + 1):
        fam.add(y_K(K, ring), f"y_{_fmt_set(K)}")
    return fam


def very_even_differences(k: int, ring: Ring | None = None) -> GeneratorFamily:
    n = 2 * k
    ring = ring or y_ring(n)
    fam = GeneratorFamily(ring)
    full = set(range(1, n + 1))
    for L in _subsets(range(1, n + 1), k):
        if 1 not in L:
            continue  # L and its complement give the same generator up to sign
        Lc = sorted(full - set(L))
        fam.add(y_K(L, ring) - y_K(Lc, ring), f"y_{_fmt_set(L)}-y_{_fmt_set(Lc)}")
    return fam


def very_even_ideal(k: int) -> GeneratorFamily:
    if k < 1:
        raise ValueError("need k >= 1")
    ring = y_ring(2 * k)
    fam = GeneratorFamily(ring)
    for i in range(1, 2 * k + 1):
        fam.add(ring.gen(f"y{i}") ** 2, f"y{i}^2")
    diffs = very_even_differences(k, ring)
    for p, lab in zip(diffs.polys, diffs.labels):
        fam.add(p, lab)
    return fam


def vk_span_dim(n: int, k: int) -> int:
    """Dimension of the span of all signed-permutation images of y1*...*yk."""
    if not 1 <= k <= n:
        raise ValueError(f"need 1 <= k <= n, got n={n}, k={k}")
    base = (1,) * k + (0,) * (n - k)
    images = signed_permutation_images(base)
    # an image with coordinates (s_i, 0) gives the polynomial prod_{s_i != 0} s_i y_i
    monos = sorted({tuple(1 if v else 0 for v in img) for img in images})
    col = {m: j for j, m in enumerate(monos)}
    rows = []
    for img in sorted(images):
        row = [0] * len(monos)
        sign = 1
        for v in img:
            if v:
                sign *= int(v)
        row[col[tuple(1 if v else 0 for v in img)]] = sign
        rows.append(row)
    return flint.fmpz_mat(rows).rank()
