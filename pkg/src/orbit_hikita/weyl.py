"""Partitions, Levi data, signed-permutation orbits and vanishing ideals of points."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial, lcm, prod
from typing import Iterable, Sequence

import flint
from gmpy2 import mpq

from .groebner import Ideal, check_deadline
from .poly import GREVLEX, MonomialOrder, Polynomial, Q, Ring, standard_ring

ORACLE_CAP = 500
ORBIT_CAP = 200_000
DEFAULT_TVALS = (2, 3, 5, 7, 11, 13, 17, 19)


class GenericityError(ValueError):
    pass


class CapExceeded(ValueError):
    pass


# --------------------------------------------------------------------------
# partitions


class Partition(tuple):
    """Weakly decreasing tuple of positive integers, indexed from 0."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        return cls(sorted((p for p in parts if p), reverse=True))

    def size(self) -> int:
        return sum(self)

    def part(self, j: int) -> int:
        return self[j] if 0 <= j < len(self) else 0

    def __repr__(self):
        return f"Partition({tuple(self)})"


def dual_partition(lam: Sequence[int]) -> Partition:
    lam = Partition.from_parts(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p > i) for i in range(lam[0]))


def d_l(lam: Sequence[int], n: int, l: int) -> int:
    """Sum of the parts lam_j with j >= n - l (missing parts count as 0)."""
    if not 1 <= l <= n:
        raise ValueError(f"l={l} out of range 1..{n}")
    lam = Partition.from_parts(lam)
    return sum(lam[n - l:])


# --------------------------------------------------------------------------
# Levi data


@dataclass(frozen=True)
class LeviDatum:
    """(family, n, a, b) with a + sum(b) = n.

    ``b`` may be any composition; only orbit points depend on its order.
    """

    family: str
    n: int
    a: int
    b: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "b", tuple(int(x) for x in self.b))
        if self.family not in ("B", "C", "D"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.a < 0 or any(x < 1 for x in self.b):
            raise ValueError(f"bad Levi datum {self}")
        if self.a + sum(self.b) != self.n:
            raise ValueError(f"a + sum(b) = {self.a + sum(self.b)} != n = {self.n}")

    @classmethod
    def make(cls, n: int, a: int = 0, b: Sequence[int] = (), family: str = "C") -> "LeviDatum":
        return cls(family, n, a, tuple(b))

    @property
    def k(self) -> int:
        return len(self.b)

    @property
    def very_even_adjacent(self) -> bool:
        return self.family == "D" and self.a == 0

    def lambda_b(self) -> Partition:
        """Dual of (b1, b1, ..., bk, bk)."""
        return dual_partition([x for x in self.b for _ in range(2)])

    def label(self) -> str:
        b = ",".join(map(str, self.b))
        return f"{self.family}(n={self.n},a={self.a},b=({b}))"

    def as_dict(self) -> dict:
        return {"family": self.family, "n": self.n, "a": self.a, "b": list(self.b)}


def d_prime_l(levi: LeviDatum, l: int) -> int:
    if not 1 <= l <= levi.n:
        raise ValueError(f"l={l} out of range 1..{levi.n}")
    n = levi.n
    return sum(max(0, l - (n - bi)) for bi in levi.b) + max(0, l - (n - levi.a))


def compositions(n: int) -> list[tuple[int, ...]]:
    """All compositions of n, in lexicographic order."""
    if n == 0:
        return [()]
    out = []
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            out.append((first,) + rest)
    return out


def partitions_of(n: int, max_part: int | None = None) -> list[tuple[int, ...]]:
    max_part = n if max_part is None else max_part
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return out


# --------------------------------------------------------------------------
# orbits


def generic_point(levi: LeviDatum, tvals: Sequence | None = None) -> tuple:
    if tvals is None:
        tvals = DEFAULT_TVALS[: levi.k]
    tvals = [Q(t) for t in tvals]
    if len(tvals) != levi.k:
        raise ValueError(f"need {levi.k} parameter values, got {len(tvals)}")
    if any(t == 0 for t in tvals):
        raise GenericityError("parameter values must be nonzero")
    if len(set(tvals)) != len(tvals):
        raise GenericityError("parameter values must be pairwise distinct")
    pt = []
    for t, bi in zip(tvals, levi.b):
        pt += [t] * bi
    pt += [mpq(0)] * levi.a
    return tuple(pt)


class PointSet:
    """Deduplicated, sorted list of rational vectors of one dimension."""

    def __init__(self, points: Iterable[Sequence]):
        seen = set()
        pts = []
        dim = None
        for p in points:
            p = tuple(Q(x) for x in p)
            if dim is None:
                dim = len(p)
            elif len(p) != dim:
                raise ValueError("points of mixed dimension")
            if p not in seen:
                seen.add(p)
                pts.append(p)
        pts.sort()
        self.points = tuple(pts)
        self.dim = dim or 0

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p):
        return tuple(Q(x) for x in p) in set(self.points)

    def __eq__(self, other):
        return isinstance(other, PointSet) and other.points == self.points

    def dumps(self) -> str:
        return "".join(",".join(str(x) for x in p) + "\n" for p in self.points)

    @classmethod
    def loads(cls, text: str) -> "PointSet":
        return cls(
            [Q(x) for x in line.split(",")]
            for line in text.splitlines()
            if line.strip() and not line.lstrip().startswith("#")
        )


def signed_permutation_images(x: Sequence, even_signs: bool = False) -> set[tuple]:
    """All images of x under signed permutations (even sign changes if asked)."""
    x = tuple(x)
    out = set()
    for perm in set(itertools.permutations(x)):
        nz = [i for i, v in enumerate(perm) if v != 0]
        for flips in itertools.product((False, True), repeat=len(nz)):
            if even_signs and sum(flips) % 2:
                continue
            p = list(perm)
            for i, f in zip(nz, flips):
                if f:
                    p[i] = -p[i]
            out.add(tuple(p))
    return out


def weyl_orbit(levi: LeviDatum, tvals: Sequence | None = None, cap: int = ORBIT_CAP) -> PointSet:
    x = generic_point(levi, tvals)
    size = orbit_size(levi)
    if size > cap:
        raise CapExceeded(f"orbit of size {size} exceeds cap {cap}")
    return PointSet(signed_permutation_images(x, even_signs=levi.very_even_adjacent))


def orbit_size(levi: LeviDatum) -> int:
    n, a = levi.n, levi.a
    stab = prod(factorial(bi) for bi in levi.b)
    if levi.very_even_adjacent:
        # W_D has index 2 in W_B; the stabilizer is the same when x has no zero coordinate
        return factorial(n) * 2 ** (n - 1) // stab
    return factorial(n) * 2 ** n // (stab * factorial(a) * 2 ** a)


def vanishes_on(gens: Iterable[Polynomial], points: Iterable[Sequence]) -> bool:
    pts = list(points)
    return all(g.evaluate(p) == 0 for g in gens for p in pts)


def first_nonvanishing(gens: Iterable[Polynomial], points: Iterable[Sequence]):
    pts = list(points)
    for g in gens:
        for p in pts:
            v = g.evaluate(p)
            if v != 0:
                return g, p, v
    return None


# --------------------------------------------------------------------------
# vanishing ideals of points


def _degree_monomials(nvars: int, d: int) -> list[tuple]:
    out = []
    for c in itertools.combinations_with_replacement(range(nvars), d):
        e = [0] * nvars
        for i in c:
            e[i] += 1
        out.append(tuple(e))
    return out


def _integer_rows(cols: list[list], N: int) -> list[list[int]]:
    rows = []
    for r in range(N):
        row = [c[r] for c in cols]
        # scaling a row (a point) does not change relations among columns
        den = lcm(*(int(v.denominator) for v in row))
        rows.append([int(v * den) for v in row])
    return rows


def vanishing_ideal_points(
    points: Iterable[Sequence],
    ring: Ring | None = None,
    cap: int = ORACLE_CAP,
    order: MonomialOrder = GREVLEX,
) -> Ideal:
    """Reduced Groebner basis of the ideal of a finite point set.

    Buchberger-Moeller, one degree at a time. Candidates of degree d are the
    monomials whose every divisor m/x_i is standard. Their evaluation columns
    are row reduced after the columns of the standard monomials found so far;
    new pivots become standard and the remaining candidates, written in terms
    of smaller pivots, are the basis elements.
    """
    if not order.degree_compatible:
        raise ValueError("vanishing ideal construction needs a degree-compatible order")
    pts = list(points) if isinstance(points, PointSet) else list(PointSet(points))
    N = len(pts)
    if N > cap:
        raise CapExceeded(f"{N} points exceed the oracle cap {cap}")
    if ring is None:
        ring = standard_ring(len(pts[0]) if pts else 0)
    nv = ring.nvars
    if N == 0:
        return Ideal([ring.one()], ring)

    one = (0,) * nv
    std = [one]
    vals = {one: [mpq(1)] * N}
    basis = []
    d = 0
    while True:
        d += 1
        check_deadline()
        std_set = set(std)
        cands = []
        for m in _degree_monomials(nv, d):
            divs = [(i, m[:i] + (m[i] - 1,) + m[i + 1:]) for i in range(nv) if m[i]]
            if all(q in std_set for _, q in divs):
                cands.append(m)
                i, q = divs[0]
                vals[m] = [v * p[i] for v, p in zip(vals[q], pts)]
        if not cands:
            break
        cands.sort(key=order.key)
        cols = std + cands
        R, rden, rank = flint.fmpz_mat(_integer_rows([vals[m] for m in cols], N)).rref()
        R = [[int(x) for x in row] for row in R.tolist()[:rank]]
        rden = int(rden)
        pivots = [next(j for j, x in enumerate(row) if x) for row in R]
        pivot_set = set(pivots)
        for j in range(len(std), len(cols)):
            m = cols[j]
            if j in pivot_set:
                continue
            terms = {m: mpq(1)}
            for r, jj in enumerate(pivots):
                if jj < j and R[r][j]:
                    terms[cols[jj]] = -mpq(R[r][j], rden)
            basis.append(Polynomial(ring, terms))
        std = [cols[j] for j in pivots]
        keep = set(std)
        vals = {m: v for m, v in vals.items() if m in keep}
    I = Ideal(basis, ring)
    I.install_basis(basis, order)
    return I


def certify_points_ideal(gens: Sequence[Polynomial], points: Sequence[Sequence]) -> dict:
    """Containment-plus-dimension certificate that (gens) is the ideal of the points."""
    pts = list(points)
    vanish = vanishes_on(gens, pts)
    dim = Ideal(gens).quotient_dimension()
    return {"vanishes": vanish, "dimension": dim, "points": len(pts), "equal": vanish and dim == len(pts)}
