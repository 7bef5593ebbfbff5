from itertools import permutations, product
from math import factorial, prod

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbit_hikita.groebner import Ideal
from orbit_hikita.weyl import (
    GenericityError,
    LeviDatum,
    PointSet,
    certify_points_ideal,
    compositions,
    dual_partition,
    generic_point,
    orbit_size,
    partitions_of,
    signed_permutation_images,
    vanishing_ideal_points,
    weyl_orbit,
)


@st.composite
def levi_data(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    a = draw(st.integers(0, n))
    b = draw(st.sampled_from(compositions(n - a))) if n > a else ()
    family = draw(st.sampled_from("BCD"))
    return LeviDatum.make(n, a, b, family)


def weyl_order(family, n):
    return factorial(n) * 2 ** (n - 1 if family == "D" else n)


def stabilizer_order(levi):
    # W_L = W(a) x prod S_{b_i}; W(0) is trivial
    wa = weyl_order(levi.family, levi.a) if levi.a else 1
    if levi.family == "D" and levi.a == 1:
        wa = 1
    return wa * prod(factorial(x) for x in levi.b)


def brute_orbit(x, even):
    out = set()
    for perm in permutations(range(len(x))):
        for signs in product((1, -1), repeat=len(x)):
            if even and signs.count(-1) % 2:
                continue
            out.add(tuple(s * x[i] for s, i in zip(signs, perm)))
    return out


@settings(max_examples=60, deadline=None)
@given(levi_data())
def test_orbit_size_matches_enumeration(levi):
    pts = weyl_orbit(levi)
    assert len(pts) == orbit_size(levi)
    x = generic_point(levi)
    assert set(pts.points) == brute_orbit(x, levi.family == "D")


@pytest.mark.parametrize(
    "levi",
    [
        LeviDatum.make(3, 1, (2,), "C"),
        LeviDatum.make(4, 0, (2, 2), "C"),
        LeviDatum.make(4, 2, (1, 1), "B"),
        LeviDatum.make(4, 0, (3, 1), "D"),
        LeviDatum.make(3, 0, (1, 1, 1), "D"),
    ],
)
def test_orbit_size_closed_form(levi):
    assert orbit_size(levi) == weyl_order(levi.family, levi.n) // stabilizer_order(levi)


def test_signed_images():
    assert len(signed_permutation_images((1, 2, 0))) == 24
    assert len(signed_permutation_images((1, 2, 3), even_signs=True)) == 24
    assert len(signed_permutation_images((1, 2, 3))) == 48


def test_generic_point_layout():
    levi = LeviDatum.make(3, 1, (2,), "C")
    assert generic_point(levi, (5,)) == (5, 5, 0)
    with pytest.raises(GenericityError):
        weyl_orbit(LeviDatum.make(2, 0, (1, 1)), (1, 1))
    with pytest.raises(GenericityError):
        weyl_orbit(LeviDatum.make(2, 0, (1, 1)), (0, 3))


def test_partitions_and_duals():
    assert partitions_of(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert compositions(3) == [(1, 1, 1), (1, 2), (2, 1), (3,)]
    assert dual_partition((4, 2, 1)) == (3, 2, 1, 1)
    assert dual_partition((3, 3)) == (2, 2, 2)
    for lam in partitions_of(6):
        assert dual_partition(dual_partition(lam)) == lam


def test_pointset_roundtrip():
    ps = PointSet([(1, "1/2"), (0, 0), (1, "1/2")])
    assert len(ps) == 2
    assert PointSet.loads(ps.dumps()) == ps
    assert PointSet.loads("# header\n1,2\n\n3,4\n").points == ((1, 2), (3, 4))


PRIME = 2**61 - 1


def _rank_mod_p(rows):
    # full rank mod p implies full rank over Q
    rows = [list(r) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][c] % PRIME), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = pow(rows[rank][c], -1, PRIME)
        for r in range(len(rows)):
            if r != rank and rows[r][c] % PRIME:
                f = rows[r][c] * inv % PRIME
                rows[r] = [(x - f * y) % PRIME for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _standard_evaluation_rank(I, pts):
    exps = I.standard_monomials()
    rows = []
    for p in pts:
        vals = [prod(p[i] ** e[i] for i in range(len(e))) for e in exps]
        rows.append([int(v.numerator) * pow(int(v.denominator), -1, PRIME) % PRIME for v in vals])
    return len(exps), _rank_mod_p(rows)


@settings(max_examples=15, deadline=None)
@given(levi_data(max_n=3))
def test_vanishing_ideal_is_the_points_ideal(levi):
    pts = list(weyl_orbit(levi))
    I = vanishing_ideal_points(pts)
    cert = certify_points_ideal(I.gens, pts)
    assert cert["equal"]
    # standard monomials interpolate: evaluation matrix is square and invertible
    n_std, rank = _standard_evaluation_rank(I, pts)
    assert n_std == rank == len(pts)


def test_vanishing_ideal_example():
    pts = list(weyl_orbit(LeviDatum.make(3, 1, (2,), "C")))
    I = vanishing_ideal_points(pts)
    ring = I.ring
    assert I.contains(ring.parse("y1^2 + y2^2 + y3^2 - 8"))
    assert I.contains(ring.parse("y1*y2*y3"))
    assert not I.contains(ring.parse("y1*y2"))
    assert I.equals(Ideal(I.gens))
