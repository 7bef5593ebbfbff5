import random

import pytest
import sympy

from orbit_hikita import pfaffian as pf
from orbit_hikita.families import tanisaki_ideal
from orbit_hikita.groebner import Ideal
from orbit_hikita.poly import Ring
from orbit_hikita.weyl import LeviDatum


def random_skew(N, rng, ring):
    rows = [[0] * N for _ in range(N)]
    for i in range(N):
        for j in range(i + 1, N):
            v = rng.randint(-9, 9)
            rows[i][j], rows[j][i] = v, -v
    return pf.MatrixPoly.from_rationals(rows, ring)


def test_small_pfaffians():
    R = Ring(["a"])
    a = R.gen("a")
    assert pf.pfaffian(pf.MatrixPoly([[0, a], [-a, 0]], R)) == a
    names = [f"a{i}{j}" for i in range(1, 5) for j in range(i + 1, 5)]
    S = Ring(names)
    rows = [[S.zero()] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(i + 1, 4):
            g = S.gen(f"a{i + 1}{j + 1}")
            rows[i][j], rows[j][i] = g, -g
    M = pf.MatrixPoly(rows, S)
    assert pf.pfaffian(M) == S.parse("a12*a34 - a13*a24 + a14*a23")
    assert pf.pfaffian(M) == pf.pfaffian_by_permutations(M)
    assert pf.pfaffian(M) ** 2 == pf.det(M)


@pytest.mark.parametrize("N", [2, 4, 6, 8])
def test_pf_squared_is_det_against_sympy(N):
    rng = random.Random(N)
    R = Ring(["u"])
    for _ in range(5):
        M = random_skew(N, rng, R)
        d = sympy.Matrix([[int(x.constant_coefficient()) for x in row] for row in M.rows]).det()
        p = pf.pfaffian(M).constant_coefficient()
        assert p * p == int(d)
        assert pf.det(M).constant_coefficient() == int(d)
        if N <= 6:
            assert pf.pfaffian_by_permutations(M).constant_coefficient() == p


def test_odd_size_rejected():
    R = Ring(["u"])
    with pytest.raises(ValueError):
        pf.pfaffian(random_skew(5, random.Random(0), R))


def test_non_skew_rejected():
    R = Ring(["u"])
    with pytest.raises(ValueError):
        pf.pfaffian(pf.MatrixPoly.from_rationals([[1, 2], [-2, 0]], R))


@pytest.mark.parametrize(
    "family,N,count",
    [("symplectic", 2, 3), ("orthogonal-even", 4, 6), ("symplectic", 4, 10), ("orthogonal-odd", 7, 21)],
)
def test_generic_elements(family, N, count):
    conv = pf.FormConvention(family, N)
    X, _ = pf.generic_element(conv)
    assert pf.free_entry_count(conv) == count == pf.lie_algebra_dim(conv)
    assert pf.satisfies_form(X, conv.form_matrix())
    diag = [str(X.rows[i][i]) for i in range(N)]
    expect = []
    for i in range(1, conv.rank + 1):
        expect += [f"y{i}", f"-y{i}"]
    assert diag[: 2 * conv.rank] == expect


def test_generic_restrictions():
    conv = pf.FormConvention("orthogonal-even", 4)
    Y, ring = pf.generic_element(conv)
    J = pf.MatrixPoly.from_rationals(pf.block_form("orthogonal-even", 4), ring)
    r = pf.restrict_diagonal(pf.pfaffian(J @ Y))
    assert str(r) in ("y1*y2", "-y1*y2")
    conv = pf.FormConvention("symplectic", 4)
    X, ring = pf.generic_element(conv)
    assert str(pf.restrict_diagonal(pf.det(X))) == "y1^2*y2^2"
    assert pf.restrict_diagonal(X.rows[0][1]).is_zero()


def test_worked_example_spf():
    X, J, ring = pf.worked_example_matrix()
    expected = ring.parse("-x23*x14 - x11*x22 + x12*x21")
    s = pf.symplectic_pfaffian(X, J)
    assert s in (expected, -expected)
    assert s * s == pf.det(X)


def test_spf_scalar_and_square_of_diagonal():
    R = Ring(["t"])
    X = pf.MatrixPoly.identity(4, R, scale=R.gen("t"))
    assert pf.symplectic_pfaffian(X) in (R.parse("t^2"), R.parse("-t^2"))
    S = Ring(["y1", "y2"])
    y1, y2 = S.gens("y1", "y2")
    Y = pf.MatrixPoly([[y1, 0, 0, 0], [0, -y1, 0, 0], [0, 0, y2, 0], [0, 0, 0, -y2]], S)
    assert pf.symplectic_pfaffian(Y @ Y) in (S.parse("y1^2*y2^2"), S.parse("-y1^2*y2^2"))


def test_spf_requires_compatibility():
    R = Ring(["u"])
    bad = pf.MatrixPoly.from_rationals([[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]], R)
    with pytest.raises(ValueError):
        pf.symplectic_pfaffian(bad)


@pytest.mark.parametrize("n,L", [(2, [1]), (2, [1, 2]), (3, [1, 3])])
def test_spf_minor_restrictions(n, L):
    res = pf.restrict_diagonal(pf.spf_minor(n, L), keep=("t",))
    exp = pf.expected_minor_restriction(n, L)
    assert res in (exp, -exp)


def test_spf_minor_squares_to_principal_minor():
    m = pf.spf_minor(3, [1, 2])
    assert m**2 == pf.principal_minor(3, [1, 2])


@pytest.mark.parametrize("family,N,l,k", [("orthogonal-even", 4, 1, 2), ("orthogonal-even", 6, 1, 2), ("orthogonal-odd", 7, 2, 3)])
def test_rank_pfaffians(family, N, l, k):
    rp = pf.rank_pfaffian_generators(pf.FormConvention(family, N), l)
    ring = rp.restriction.ring
    prod_y = ring.parse("*".join(f"y{i}" for i in range(1, k + 1)))
    assert rp.restriction in (prod_y, -prod_y)


def test_typeC_minor_families():
    fam = pf.typeC_minor_coeff_generators((2, 2))
    r = fam.ring
    assert fam.ideal().equals(Ideal([r.parse("y1^2"), r.parse("y2^2")]))
    fam = pf.typeC_minor_coeff_generators((4,))
    r = fam.ring
    assert fam.ideal().equals(Ideal([r.parse("y1^2 + y2^2"), r.parse("y1^2*y2^2")]))
    fam = pf.typeC_minor_coeff_generators((4, 2, 2))
    assert fam.ideal().equals(tanisaki_ideal(LeviDatum.make(4, 0, (3, 1))).ideal())
