"""Matrix realisations of classical Lie algebras, Pfaffians and symplectic Pfaffians.

Forms follow the block conventions diag(J_o, ..., J_o), diag(J_o, ..., J_o, 1)
and diag(J_s, ..., J_s) with J_o = [[0,1],[1,0]] and J_s = [[0,1],[-1,0]].
Diagonal free entries at (2i-1, 2i-1) are named ``y{i}``; other free entries
``y{r}_{c}`` (1-based row, column).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Sequence

import flint
from gmpy2 import mpq

from .families import GeneratorFamily, y_K, y_ring
from .poly import Polynomial, Q, Ring
from .weyl import Partition, d_l, dual_partition

FAMILIES = ("orthogonal-even", "orthogonal-odd", "symplectic")


# --------------------------------------------------------------------------
# matrices of polynomials


class MatrixPoly:
    """Square matrix of polynomials over one ring."""

    def __init__(self, rows: Sequence[Sequence], ring: Ring):
        self.ring = ring
        self.rows = [[ring.coerce(x) for x in row] for row in rows]
        self.N = len(self.rows)
        if any(len(r) != self.N for r in self.rows):
            raise ValueError("matrix is not square")

    @classmethod
    def from_rationals(cls, rows, ring: Ring) -> "MatrixPoly":
        return cls([[ring.const(x) for x in row] for row in rows], ring)

    @classmethod
    def identity(cls, N: int, ring: Ring, scale=1) -> "MatrixPoly":
        s = ring.coerce(scale)
        return cls([[s if i == j else ring.zero() for j in range(N)] for i in range(N)], ring)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        return isinstance(other, MatrixPoly) and self.rows == other.rows

    def __matmul__(self, other: "MatrixPoly") -> "MatrixPoly":
        N = self.N
        out = []
        for i in range(N):
            row = []
            for j in range(N):
                acc = self.ring.zero()
                for k in range(N):
                    a = self.rows[i][k]
                    b = other.rows[k][j]
                    if a and b:
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return MatrixPoly(out, self.ring)

    def __add__(self, other):
        return MatrixPoly([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ring)

    def __sub__(self, other):
        return MatrixPoly([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ring)

    def __neg__(self):
        return MatrixPoly([[-a for a in r] for r in self.rows], self.ring)

    def scale(self, c) -> "MatrixPoly":
        c = self.ring.coerce(c)
        return MatrixPoly([[a * c for a in r] for r in self.rows], self.ring)

    def transpose(self) -> "MatrixPoly":
        return MatrixPoly([list(col) for col in zip(*self.rows)], self.ring)

    def submatrix(self, idx: Sequence[int]) -> "MatrixPoly":
        """Principal submatrix on 0-based indices ``idx``."""
        return MatrixPoly([[self.rows[i][j] for j in idx] for i in idx], self.ring)

    def map(self, fn) -> "MatrixPoly":
        rows = [[fn(a) for a in r] for r in self.rows]
        ring = rows[0][0].ring if rows else self.ring
        return MatrixPoly(rows, ring)

    def is_skew(self) -> bool:
        return all(self.rows[i][j] == -self.rows[j][i] for i in range(self.N) for j in range(self.N))

    def dumps(self) -> str:
        return "".join(", ".join(str(a) for a in r) + "\n" for r in self.rows)


def pfaffian(M: MatrixPoly) -> Polynomial:
    """Pfaffian by expansion along the first row, memoised on index subsets."""
    if M.N % 2:
        raise ValueError("Pfaffian of an odd-size matrix")
    if not M.is_skew():
        raise ValueError("matrix is not skew-symmetric")
    memo: dict[tuple, Polynomial] = {}
    ring = M.ring

    def pf(idx: tuple) -> Polynomial:
        if not idx:
            return ring.one()
        if idx in memo:
            return memo[idx]
        i = idx[0]
        acc = ring.zero()
        for pos in range(1, len(idx)):
            j = idx[pos]
            a = M.rows[i][j]
            if not a:
                continue
            rest = idx[1:pos] + idx[pos + 1:]
            term = a * pf(rest)
            acc = acc + term if pos % 2 else acc - term
        memo[idx] = acc
        return acc

    return pf(tuple(range(M.N)))


def pfaffian_by_permutations(M: MatrixPoly) -> Polynomial:
    """The 1/(2^n n!) signed sum over S_2n; only for cross-checks at N <= 6."""
    N = M.N
    if N % 2 or N > 6:
        raise ValueError("permutation-sum Pfaffian only for even N <= 6")
    n = N // 2
    acc = M.ring.zero()
    for perm in itertools.permutations(range(N)):
        term = M.ring.const(_perm_sign(perm))
        for i in range(n):
            term = term * M.rows[perm[2 * i]][perm[2 * i + 1]]
            if not term:
                break
        acc = acc + term
    return acc / (2**n * factorial(n))


def _perm_sign(perm) -> int:
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        while perm[i] != i:
            j = perm[i]
            perm[i], perm[j] = perm[j], perm[i]
            sign = -sign
    return sign


def det(M: MatrixPoly) -> Polynomial:
    """Laplace expansion along rows, memoised on the remaining column set."""
    ring = M.ring
    N = M.N
    memo: dict[tuple, Polynomial] = {}

    def rec(r: int, cols: tuple) -> Polynomial:
        if r == N:
            return ring.one()
        if cols in memo:
            return memo[cols]
        acc = ring.zero()
        for pos, c in enumerate(cols):
            a = M.rows[r][c]
            if not a:
                continue
            term = a * rec(r + 1, cols[:pos] + cols[pos + 1:])
            acc = acc - term if pos % 2 else acc + term
        memo[cols] = acc
        return acc

    return rec(0, tuple(range(N)))


# --------------------------------------------------------------------------
# forms and generic elements


@dataclass(frozen=True)
class FormConvention:
    family: str
    N: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown form family {self.family!r}")
        if self.family == "orthogonal-odd" and self.N % 2 == 0:
            raise ValueError("orthogonal-odd needs odd N")
        if self.family != "orthogonal-odd" and self.N % 2:
            raise ValueError(f"{self.family} needs even N")

    @property
    def rank(self) -> int:
        return self.N // 2

    def form_matrix(self) -> list[list[int]]:
        return block_form(self.family, self.N)


def block_form(family: str, N: int) -> list[list[int]]:
    J = [[0] * N for _ in range(N)]
    for i in range(N // 2):
        J[2 * i][2 * i + 1] = 1
        J[2 * i + 1][2 * i] = -1 if family == "symplectic" else 1
    if N % 2:
        J[N - 1][N - 1] = 1
    return J


def lie_algebra_dim(conv: FormConvention) -> int:
    n = conv.rank
    if conv.family == "symplectic":
        return n * (2 * n + 1)
    if conv.family == "orthogonal-odd":
        return n * (2 * n + 1)
    return n * (2 * n - 1)


def entry_name(r: int, c: int) -> str:
    """Name for the free entry at 0-based (r, c)."""
    if r == c and r % 2 == 0:
        return f"y{r // 2 + 1}"
    return f"y{r + 1}_{c + 1}"


@lru_cache(maxsize=None)
def _solve_form(family: str, N: int):
    """Express every entry of A with A^T J + J A = 0 in terms of free entries.

    Returns (free entry positions, {position: [(free position, coeff)]}).
    Entries are ordered last-first so pivots land on later entries.
    """
    J = block_form(family, N)
    positions = [(r, c) for r in range(N) for c in range(N)]
    order = list(reversed(positions))
    col = {p: j for j, p in enumerate(order)}
    rows = []
    for i in range(N):
        for j in range(N):
            # (A^T J + J A)_{ij} = sum_k A_{ki} J_{kj} + J_{ik} A_{kj}
            row = [0] * (N * N)
            for k in range(N):
                if J[k][j]:
                    row[col[(k, i)]] += J[k][j]
                if J[i][k]:
                    row[col[(k, j)]] += J[i][k]
            if any(row):
                rows.append(row)
    R, den, rank = flint.fmpz_mat(rows).rref()
    R = [[int(x) for x in r] for r in R.tolist()[:rank]]
    den = int(den)
    pivots = [next(j for j, x in enumerate(r) if x) for r in R]
    pivot_set = set(pivots)
    free = [order[j] for j in range(N * N) if j not in pivot_set]
    expr = {}
    for p in free:
        expr[p] = [(p, mpq(1))]
    for r, pj in enumerate(pivots):
        # den * x_pivot + sum R[r][j] x_j = 0
        terms = []
        for j, x in enumerate(R[r]):
            if x and j != pj:
                terms.append((order[j], -mpq(x, den)))
        expr[order[pj]] = terms
    free.sort()
    return tuple(free), expr


def generic_element(conv: FormConvention, extra: Sequence[str] = ()) -> tuple[MatrixPoly, Ring]:
    """Generic element of g(V) with independent free entries.

    The ring is y1..yn, then ``extra`` names (e.g. "t"), then the
    off-diagonal free entries in row-major order.
    """
    free, expr = _solve_form(conv.family, conv.N)
    n = conv.rank
    diag_names = [f"y{i}" for i in range(1, n + 1)]
    other = [entry_name(r, c) for (r, c) in free if entry_name(r, c) not in diag_names]
    names = [entry_name(r, c) for (r, c) in free]
    if sorted(n_ for n_ in names if n_ in diag_names) != sorted(diag_names):
        raise RuntimeError("diagonal entries were not chosen as free variables")
    ring = Ring(diag_names + list(extra) + other)
    rows = []
    for r in range(conv.N):
        row = []
        for c in range(conv.N):
            acc = ring.zero()
            for p, coeff in expr[(r, c)]:
                acc = acc + ring.gen(entry_name(*p)) * coeff
            row.append(acc)
        rows.append(row)
    return MatrixPoly(rows, ring), ring


def free_entry_count(conv: FormConvention) -> int:
    return len(_solve_form(conv.family, conv.N)[0])


def satisfies_form(A: MatrixPoly, J: Sequence[Sequence[int]]) -> bool:
    Jm = MatrixPoly.from_rationals(J, A.ring)
    return (A.transpose() @ Jm + Jm @ A) == MatrixPoly.identity(A.N, A.ring, 0)


# --------------------------------------------------------------------------
# symplectic Pfaffian


def _inverse(J: Sequence[Sequence]) -> list[list]:
    M = flint.fmpq_mat([[flint.fmpq(int(Q(x).numerator), int(Q(x).denominator)) for x in row] for row in J])
    inv = M.inv()
    N = len(J)
    return [[mpq(int(inv[i, j].p), int(inv[i, j].q)) for j in range(N)] for i in range(N)]


def symplectic_pfaffian(X: MatrixPoly, J: Sequence[Sequence] | None = None, check: bool = True) -> Polynomial:
    """pf(A_X) with (A_X)_{ij} = <v_i, X v_j>, i.e. A_X = J X."""
    if J is None:
        J = block_form("symplectic", X.N)
    Jm = MatrixPoly.from_rationals(J, X.ring)
    if check:
        Jinv = MatrixPoly.from_rationals(_inverse(J), X.ring)
        if Jm @ X @ Jinv != X.transpose():
            raise ValueError("X does not satisfy J X J^-1 = X^T")
    return pfaffian(Jm @ X)


def worked_example_matrix() -> tuple[MatrixPoly, list[list[int]], Ring]:
    """The worked 4x4 example: J = [[0, I], [-I, 0]] and X in the x_ij entries."""
    ring = Ring(["x11", "x12", "x14", "x21", "x22", "x23"])
    g = {name: ring.gen(name) for name in ring.names}
    z = ring.zero()
    X = MatrixPoly(
        [
            [g["x11"], g["x12"], z, g["x14"]],
            [g["x21"], g["x22"], -g["x14"], z],
            [z, g["x23"], g["x11"], g["x21"]],
            [-g["x23"], z, g["x12"], g["x22"]],
        ],
        ring,
    )
    J = [[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]]
    return X, J, ring


# --------------------------------------------------------------------------
# restriction to the Cartan


def restrict_diagonal(p: Polynomial, keep: Sequence[str] = ()) -> Polynomial:
    """Set off-diagonal free entries to 0; keep y1..yn and the names in ``keep``."""
    ring = p.ring
    ys = [name for name in ring.names if name.startswith("y") and "_" not in name]
    kept = ys + [name for name in keep if name in ring.index]
    target = Ring(kept)
    bind = {name: 0 for name in ring.names if name not in kept}
    return p.specialize(bind, target)


def restrict_matrix(M: MatrixPoly, keep: Sequence[str] = ()) -> MatrixPoly:
    return M.map(lambda a: restrict_diagonal(a, keep))


def spf_minor(n: int, L: Sequence[int], restrict_first: bool = False) -> Polynomial:
    """sPf of the principal submatrix of t*Id - Y^2 on rows {2i-1, 2i : i in L}.

    With ``restrict_first`` the generic element is restricted to the diagonal
    before the Pfaffian is taken (restriction is a ring homomorphism, so the
    result equals the restriction of the full symbolic value).
    """
    conv = FormConvention("symplectic", 2 * n)
    Y, ring = generic_element(conv, extra=("t",))
    if restrict_first:
        Y = restrict_matrix(Y, keep=("t",))
        ring = Y.ring
    X = Y @ Y
    M = MatrixPoly.identity(2 * n, ring, ring.gen("t")) - X
    idx = [j for i in sorted(L) for j in (2 * i - 2, 2 * i - 1)]
    ML = M.submatrix(idx)
    return symplectic_pfaffian(ML, block_form("symplectic", len(idx)))


def principal_minor(n: int, L: Sequence[int]) -> Polynomial:
    conv = FormConvention("symplectic", 2 * n)
    Y, ring = generic_element(conv, extra=("t",))
    M = MatrixPoly.identity(2 * n, ring, ring.gen("t")) - Y @ Y
    idx = [j for i in sorted(L) for j in (2 * i - 2, 2 * i - 1)]
    return det(M.submatrix(idx))


def expected_minor_restriction(n: int, L: Sequence[int]) -> Polynomial:
    ring = Ring([f"y{i}" for i in range(1, n + 1)] + ["t"])
    t = ring.gen("t")
    out = ring.one()
    for i in L:
        out = out * (t - ring.gen(f"y{i}") ** 2)
    return out


@dataclass
class RankPfaffian:
    pfaffian: Polynomial
    restriction: Polynomial
    family: GeneratorFamily


def rank_pfaffian_generators(conv: FormConvention, l: int) -> RankPfaffian:
    """Pfaffian of the leading (2l+2) block of a generic orthogonal element."""
    if conv.family == "symplectic":
        raise ValueError("rank Pfaffians are for orthogonal forms")
    n = conv.rank
    if not 0 <= l <= n - 1:
        raise ValueError(f"l={l} out of range 0..{n - 1}")
    Y, ring = generic_element(conv)
    m = 2 * l + 2
    block = Y.submatrix(range(m))
    # the block lies in so_{2l+2} for diag(J_o, ...); J_o times it is skew
    J = MatrixPoly.from_rationals(block_form("orthogonal-even", m), ring)
    pf = pfaffian(J @ block)
    yr = y_ring(n)
    res = restrict_diagonal(pf).to_ring(yr)
    fam = GeneratorFamily(yr)
    for K in itertools.combinations(range(1, n + 1), l + 1):
        fam.add(y_K(K, yr), "y_{" + ",".join(map(str, K)) + "}")
    return RankPfaffian(pf, res, fam)


def typeC_minor_coeff_generators(lam: Sequence[int]) -> GeneratorFamily:
    """Coefficients of t^d, d < d_l(lam)/2, of the restricted minors sPf_L."""
    lam = Partition.from_parts(lam)
    if any(p % 2 for p in lam):
        raise ValueError(f"partition {tuple(lam)} has an odd part")
    dual = dual_partition(lam)
    if len(dual) % 2 or any(dual[2 * i] != dual[2 * i + 1] for i in range(len(dual) // 2)):
        raise ValueError(f"partition {tuple(lam)} is not the dual of (b1,b1,...,bk,bk)")
    n = sum(lam) // 2
    yr = y_ring(n)
    fam = GeneratorFamily(yr)
    for l in range(1, n + 1):
        bound = d_l(lam, n, l) // 2
        if bound == 0:
            continue
        for L in itertools.combinations(range(1, n + 1), l):
            spf = spf_minor(n, L, restrict_first=True)
            coeffs = spf.coefficients_in("t")
            for d in range(bound):
                c = coeffs.get(d)
                if c:
                    fam.add(c.to_ring(yr), f"sPf{{{','.join(map(str, L))}}}[t^{d}]")
    return fam
