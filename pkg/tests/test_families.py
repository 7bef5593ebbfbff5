from math import comb

import pytest

from orbit_hikita import families as fm
from orbit_hikita.groebner import Ideal
from orbit_hikita.weyl import LeviDatum, compositions, orbit_size, vanishes_on, weyl_orbit


def P(text, n):
    return fm.y_ring(n).parse(text)


def test_partial_symmetric_examples():
    assert fm.partial_elem_sym_sq([1, 2], 1, 2) == P("y1^2 + y2^2", 2)
    assert fm.partial_elem_sym_sq([1, 2, 3], 3, 3) == P("y1^2*y2^2*y3^2", 3)
    assert len(fm.partial_elem_sym_sq([1, 2, 3, 4], 2, 4).terms) == 6
    assert fm.partial_complete_sym_sq([1], 3, 1) == P("y1^6", 1)
    assert fm.partial_complete_sym_sq([1, 2], 2, 2) == P("y1^4 + y1^2*y2^2 + y2^4", 2)
    assert fm.partial_complete_sym_sq([1, 2], 3, 2) == P("y1^6 + y1^4*y2^2 + y1^2*y2^4 + y2^6", 2)


def test_generating_function_identity():
    # sum_p (-1)^p e_p(L) h_{q-p}(L) = 0 for q > 0, with e_p = 0 past |L|
    n, L = 4, [1, 2, 4]
    for q in range(1, 5):
        s = sum(
            ((-1) ** p) * fm.partial_elem_sym_sq(L, p, n) * fm.partial_complete_sym_sq(L, q - p, n)
            for p in range(min(q, len(L)) + 1)
        )
        assert s.is_zero()


@pytest.mark.parametrize(
    "n,b,expected",
    [
        (2, (2,), ["y1^2", "y2^2"]),
        (4, (3, 1), ["y1^2 + y2^2 + y3^2 + y4^2"] + [f"y{i}^2*y{j}^2" for i in range(1, 5) for j in range(i + 1, 5)]),
        (2, (1, 1), ["y1^2 + y2^2", "y1^2*y2^2"]),
    ],
)
def test_tanisaki_examples(n, b, expected):
    fam = fm.tanisaki_ideal(LeviDatum.make(n, 0, b))
    assert fam.ideal().equals(Ideal([P(e, n) for e in expected]))


@pytest.mark.parametrize("n", [2, 3])
def test_uniform_generators(n):
    for b in compositions(n):
        levi = LeviDatum.make(n, 0, b)
        fam = fm.uniform_generators_a0(levi)
        at0 = Ideal(fm.specialize_t(fam, (0,) * levi.k, n))
        assert at0.equals(fm.tanisaki_ideal(levi).ideal())
        tv = (2, 3, 5)[: levi.k]
        gens = fm.specialize_t(fam, tv, n)
        assert vanishes_on(gens, weyl_orbit(levi, tv))
        assert Ideal(gens).quotient_dimension() == orbit_size(levi)


def test_uniform_example_single_block():
    fam = fm.uniform_generators_a0(LeviDatum.make(2, 0, (2,)))
    assert fam.ring.parse("-y1^2 + t1^2") in fam.polys


def test_sco_examples():
    assert fm.sco(P("y1^2*y2^2*y3^2", 3)) == P("y1^3*y2^3*y3^3", 3)
    assert fm.sco(P("y1^6", 1)) == P("y1^7", 1)
    h = P("y1^6 + y1^4*y2^2 + y1^2*y2^4 + y2^6", 2)
    assert fm.sco(h) == P("y1*y2", 2) * h


def test_t_of_b_examples():
    fam = fm.t_of_b(LeviDatum.make(6, 1, (3, 1, 1)))
    ring = fam.ring
    assert ring.parse("y1^6") in fam.polys
    assert ring.parse("y1^6 + y1^4*y2^2 + y1^2*y2^4 + y2^6") in fam.polys
    small = fm.t_of_b(LeviDatum.make(2, 1, (1,)))
    assert small.polys == [small.ring.parse("y1^2")]


def test_conjectural_contains_products():
    fam = fm.conjectural_generators(LeviDatum.make(5, 2, (3,)))
    r = fam.ring
    assert r.parse("y1*y2*y3*y4") in fam.polys
    assert r.parse("y1^2*y2^2*y3^2") in fam.polys


def test_i_nak():
    small = fm.i_nak(2, 1, 1)
    r = small.ring
    assert small.polys == [r.parse(s) for s in ("y1^3", "y2^3", "y1^2 + y2^2", "y1^4 + y2^4", "y1*y2")]
    fam = fm.i_nak(3, 1, 1)
    r = fam.ring
    stated = Ideal([r.parse("y1^2 + y2^2 + y3^2"), r.parse("y1*y2*y3")] + [r.parse(f"y{i}^3") for i in (1, 2, 3)])
    assert fam.ideal().equals(stated)
    assert fam.ideal().quotient_dimension() == 12


@pytest.mark.parametrize("n", range(1, 6))
def test_two_row_dimension(n):
    for k in range(n + 1):
        assert fm.two_row_ideal(n, k).ideal().quotient_dimension() == sum(comb(n, l) for l in range(k + 1))


def test_very_even():
    fam = fm.very_even_ideal(1)
    r = fam.ring
    assert fam.polys == [r.parse("y1^2"), r.parse("y2^2"), r.parse("y1 - y2")]
    assert fam.ideal().quotient_dimension() == 2
    assert fm.very_even_ideal(2).ideal().quotient_dimension() == 8
    both = fm.two_row_ideal(4, 2).ideal() + fm.very_even_differences(2).polys
    assert both.equals(fm.very_even_ideal(2).ideal())


@pytest.mark.parametrize("n,k", [(n, k) for n in range(1, 7) for k in range(1, n + 1)])
def test_vk_span_dim(n, k):
    assert fm.vk_span_dim(n, k) == comb(n, k)


@pytest.mark.parametrize("n", range(1, 5))
def test_e2p_h2p(n):
    assert all(r.is_zero() for _, _, r in fm.e2p_h2p_residues(n))


def test_remainder_coefficients_lead_to_tanisaki():
    levi = LeviDatum.make(3, 0, (2, 1))
    yr = fm.y_ring(3)
    zero_t = {"t1": 0, "t2": 0}
    leads = set()
    for L in ([1], [2], [3], [1, 2], [1, 3], [2, 3], [1, 2, 3]):
        for c in fm.remainder_coefficients(levi, L).values():
            leads.add(c.specialize(zero_t).to_ring(yr).primitive())
    for g in fm.tanisaki_ideal(levi).polys:
        assert g.primitive() in leads


def test_family_serialization():
    text = fm.i_nak(2, 1, 1).dumps()
    assert text.startswith("vars: y1 y2")
    assert "# label: y_{1,2}" in text
