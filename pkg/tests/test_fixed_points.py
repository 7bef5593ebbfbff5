import pytest

from orbit_hikita import fixed_points as fp
from orbit_hikita.families import y_ring
from orbit_hikita.poly import Q, Ring

SIZES = {
    "C:2n-2,1,1?n=4": 8,
    "C:2,2,2": 12,
    "C:4,3,3": 80,
    "B:2,2,1": 4,
    "D:2,2,1,1": 12,
    "D:3,2,2,1": 24,
    "D:2n-3,1,1,1?n=4": 8,
}

SAMPLES = [(2, 1), (7, 3), (Q("5/2"), -1), (11, 2)]


def numeric_values(g, fam, t0, h):
    # evaluate each coordinate at (t0, h) first, then the generator: a route
    # independent of symbolic substitution
    vals = []
    for pt in fam.points:
        coords = [c.evaluate({"t0": t0, "h": h}) for c in pt]
        env = {f"y{i + 1}": v for i, v in enumerate(coords)}
        env.update(t0=t0, h=h)
        vals.append(g.evaluate({k: v for k, v in env.items() if k in g.ring.names}))
    return vals


@pytest.mark.parametrize("case,size", SIZES.items())
def test_family_cardinality_and_distinctness(case, size):
    fam = fp.fixed_point_family(case)
    assert len(fam.points) == size == fam.expected_size
    assert len(set(fam.points)) == size
    for pt in fam.points:
        assert all(c.total_degree() <= 1 and c.constant_coefficient() == 0 for c in pt)


def test_unknown_case():
    with pytest.raises(fp.CaseError):
        fp.fixed_point_family("C:9,9,9")


@pytest.mark.parametrize("case", list(SIZES))
def test_flag_relations_vanish(case):
    fam = fp.fixed_point_family(case)
    rel = fp.flag_relations(fam.weights, fam.n)
    assert fp.vanishes_identically(rel.polys, fam) is None
    for t0, h in SAMPLES[:2]:
        for g in rel.polys:
            assert all(v == 0 for v in numeric_values(g, fam, t0, h))


@pytest.mark.parametrize("case", ["C:2,2,2", "B:2,2,1", "C:4,3,3"])
def test_stated_generators_vanish_numerically(case):
    fam = fp.fixed_point_family(case)
    gens = fp.stated_generators(case).polys
    assert gens
    sym = fp.vanishes_identically(gens, fam)
    for t0, h in SAMPLES:
        for g in gens:
            assert all(v == 0 for v in numeric_values(g, fam, t0, h)) == (sym is None or sym[0] != g)


def test_hook_stated_generator_fails_with_witness():
    case = "C:2n-2,1,1?n=4"
    fam = fp.fixed_point_family(case)
    wit = fp.vanishes_identically(fp.stated_generators(case).polys, fam)
    assert wit is not None
    g, point, value = wit
    assert not value.is_zero()
    idx = fam.points.index(tuple(point))
    assert any(numeric_values(g, fam, t0, h)[idx] != 0 for t0, h in SAMPLES)
    corrected = fp.corrected_hook_generators(4).polys
    assert fp.vanishes_identically(corrected, fam) is None


@pytest.mark.parametrize("case", ["C:2,2,2", "D:2,2,1,1"])
def test_kernel_by_degree_vanishes(case):
    fam = fp.fixed_point_family(case)
    for d in (1, 2, 3):
        ker = fp.kernel_by_degree(fam, d)
        assert fp.vanishes_identically(ker, fam) is None
        for g in ker:
            assert g.is_homogeneous() and g.total_degree() == d


@pytest.mark.parametrize("case", ["B:2,2,1", "C:2,2,2", "D:2,2,1,1", "D:3,2,2,1"])
def test_verify_kernel_case_passes(case):
    rep = fp.verify_kernel_case(case)
    assert rep.size == SIZES[case]
    assert rep.ok, [s.as_dict() for s in rep.subchecks if not s.ok]
    ranks = rep.get("generic_rank").computed
    assert set(ranks.values()) == {SIZES[case]}
    assert rep.get("origin_rank").computed == SIZES[case]


def test_c433_initial_ideal_discrepancy():
    rep = fp.verify_kernel_case("C:4,3,3")
    sub = rep.get("initial_ideal")
    assert not sub.ok
    assert rep.extra["stated_initial_dimension"] == 131
    assert rep.extra["stated_initial_with_flags_dimension"] == 80
    assert rep.get("vanish").ok and rep.get("generic_rank").ok and rep.get("origin_rank").ok


def test_fiber_rank_constancy():
    r = Ring(["y1", "t"])
    broken = [r.parse("y1^2 - t"), r.parse("y1^3")]
    out = fp.fiber_rank_constancy(broken, [{"t": 0}, {"t": 1}], 1)
    assert out["ranks"] == [2, 0] and not out["constant"]
    good = [r.parse("y1^2 - t")]
    out = fp.fiber_rank_constancy(good, [{"t": 0}, {"t": 4}, {"t": 9}], 1)
    assert out["constant"] and out["rank"] == 2


def test_fiber_rank_needs_two_samples():
    with pytest.raises(ValueError):
        fp.fiber_rank_constancy([y_ring(1).parse("y1")], [{}], 1)
