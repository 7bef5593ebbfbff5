"""Named checks binding each computational claim to an executable verification.

Every check function takes a dict of typed parameters plus a seeded RNG and
returns an :class:`Outcome`; :func:`run_check` adds timing, limits and the
SKIP handling for resource caps.
"""
from __future__ import annotations

import itertools
import random
import re
import time
from dataclasses import dataclass, field
from math import comb, factorial, prod
from typing import Callable

from . import families as fm
from . import fixed_points as fp
from . import pfaffian as pf
from .groebner import INFINITE, Ideal, LimitExceeded, Limits, limits_scope
from .poly import Ring, standard_ring
from .weyl import (
    CapExceeded,
    LeviDatum,
    ORACLE_CAP,
    DEFAULT_TVALS,
    compositions,
    dual_partition,
    first_nonvanishing,
    orbit_size,
    partitions_of,
    signed_permutation_images,
    vanishes_on,
    vanishing_ideal_points,
    weyl_orbit,
)

PASS, FAIL, DISCREPANCY, SKIP = "PASS", "FAIL", "DISCREPANCY", "SKIP"
STATUSES = (PASS, FAIL, DISCREPANCY, SKIP)


class UnknownCheck(KeyError):
    pass


class InvalidParams(ValueError):
    pass


@dataclass
class Outcome:
    status: str
    computed: dict
    expected: object
    provenance: str
    witnesses: list = field(default_factory=list)
    stated: object = None
    labels: list = field(default_factory=list)


@dataclass
class CheckResult:
    id: str
    name: str
    params: dict
    status: str
    computed: dict
    expected: dict
    witnesses: list
    millis: int
    paper_ref: str
    stated: object = None
    labels: list = field(default_factory=list)
    reason: str | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status}")
        if self.status in (FAIL, DISCREPANCY) and not self.witnesses:
            raise ValueError(f"{self.id}: {self.status} without a witness")
        if self.status == SKIP and not self.reason:
            raise ValueError(f"{self.id}: SKIP without a reason")

    def as_dict(self, timing: bool = True) -> dict:
        d = {
            "id": self.id,
            "params": self.params,
            "status": self.status,
            "computed": self.computed,
            "expected": self.expected,
            "witnesses": self.witnesses,
            "millis": self.millis if timing else 0,
            "paper_ref": self.paper_ref,
        }
        if self.status == DISCREPANCY or self.stated is not None:
            d["stated"] = self.stated
        if self.labels:
            d["labels"] = self.labels
        if self.reason:
            d["reason"] = self.reason
        return d


# --------------------------------------------------------------------------
# parameters


def _tuple(v) -> tuple[int, ...]:
    if isinstance(v, (tuple, list)):
        return tuple(int(x) for x in v)
    if isinstance(v, int):
        return (v,)
    s = str(v).strip().strip("()[]")
    return tuple(int(x) for x in s.split(",") if x.strip())


def parse_value(text: str):
    """Parse a command-line parameter value: int, tuple of ints, or string."""
    text = text.strip()
    if re.fullmatch(r"-?\d+", text):
        return int(text)
    if re.fullmatch(r"\(?\s*(\d+\s*,\s*)*\d*\s*\)?", text):
        return _tuple(text)
    return text


def _levi(p: dict, default_family: str = "C") -> LeviDatum:
    b = _tuple(p.get("b", ()))
    a = int(p.get("a", 0))
    n = int(p.get("n", a + sum(b)))
    try:
        return LeviDatum(p.get("family", default_family), n, a, b)
    except ValueError as e:
        raise InvalidParams(str(e)) from None


def _fmt_value(v) -> str:
    if isinstance(v, (list, tuple)):
        return "(" + ",".join(map(str, v)) + ")"
    return str(v)


def format_id(name: str, params: dict) -> str:
    if not params:
        return name
    return name + "{" + ",".join(f"{k}={_fmt_value(v)}" for k, v in params.items()) + "}"


def jsonable(x):
    """Turn computed values into plain JSON types (polynomials and rationals as strings)."""
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, str):
        return x
    if isinstance(x, int):
        return x
    if x == INFINITE:
        return "infinite"
    if isinstance(x, float):
        return x
    return str(x)


def _dim(I: Ideal):
    d = I.quotient_dimension()
    return "infinite" if d == INFINITE else d


def _ok(flag: bool) -> str:
    return PASS if flag else FAIL


# --------------------------------------------------------------------------
# section 2: Tanisaki-type ideals and b_i = 1, 2 families


def check_sq_tanisaki(p, rng) -> Outcome:
    levi = _levi(p)
    if levi.a:
        raise InvalidParams("SQ-TANISAKI needs a = 0")
    expected = factorial(levi.n) * 2**levi.n // prod(factorial(x) for x in levi.b)
    T = fm.tanisaki_ideal(levi)
    dim = _dim(T.ideal())
    U = fm.uniform_generators_a0(levi)
    yr = fm.y_ring(levi.n)
    zero_t = {f"t{i}": 0 for i in range(1, levi.k + 1)}
    leads = {g.specialize(zero_t).to_ring(yr).primitive() for g in U.polys} - {yr.zero()}
    uncertified = [str(g) for g in T.polys if g.primitive() not in leads]
    orbit = weyl_orbit(levi)
    spec = fm.specialize_t(U, DEFAULT_TVALS[: levi.k], levi.n)
    bad = first_nonvanishing(spec, orbit)
    udim = _dim(Ideal(spec, yr))
    computed = {
        "dimension": dim,
        "generators": len(T),
        "leading_form_certified": not uncertified,
        "uniform_vanishes_on_orbit": bad is None,
        "uniform_dimension": udim,
        "orbit_points": len(orbit),
    }
    wit = []
    if dim != expected:
        wit.append({"dimension": dim, "expected": expected})
    if uncertified:
        wit.append({"not_a_leading_form": uncertified[:3]})
    if bad is not None:
        wit.append({"generator": str(bad[0]), "point": list(bad[1]), "value": bad[2]})
    if udim != len(orbit):
        wit.append({"uniform_dimension": udim, "orbit_points": len(orbit)})
    return Outcome(_ok(not wit), computed, expected, "PAPER", wit)


def check_uniform_a0(p, rng) -> Outcome:
    levi = _levi(p)
    if levi.a:
        raise InvalidParams("UNIFORM-A0 needs a = 0")
    U = fm.uniform_generators_a0(levi)
    yr = fm.y_ring(levi.n)
    orbit = weyl_orbit(levi)
    spec = Ideal(fm.specialize_t(U, DEFAULT_TVALS[: levi.k], levi.n), yr)
    zero = fm.specialize_t(U, [0] * levi.k, levi.n)
    T = fm.tanisaki_ideal(levi).ideal()
    cond1_vanish = vanishes_on(spec.gens, orbit)
    cond1_dim = _dim(spec)
    cond2 = Ideal(zero or [yr.zero()], yr).equals(T)
    computed = {
        "generators": len(U),
        "generic_vanishes": cond1_vanish,
        "generic_dimension": cond1_dim,
        "zero_fibre_equals_tanisaki": cond2,
    }
    if len(orbit) <= ORACLE_CAP:
        oracle = vanishing_ideal_points(orbit, yr)
        computed["oracle_equal"] = oracle.equals(spec)
    wit = []
    if not cond1_vanish:
        g, pt, v = first_nonvanishing(spec.gens, orbit)
        wit.append({"generator": str(g), "point": list(pt), "value": v})
    if cond1_dim != len(orbit):
        wit.append({"generic_dimension": cond1_dim, "orbit_points": len(orbit)})
    if not cond2:
        wit.append({"zero_fibre": [str(g) for g in zero[:4]]})
    if computed.get("oracle_equal") is False:
        wit.append({"oracle": "vanishing ideal of the orbit differs from the specialised family"})
    return Outcome(_ok(not wit), computed, len(orbit), "PAPER", wit)


def check_bi1(p, rng) -> Outcome:
    n, k = int(p["n"]), int(p["k"])
    if not 1 <= k <= n:
        raise InvalidParams("need 1 <= k <= n")
    expected = factorial(n) * 2**k // factorial(n - k)
    G = fm.bi1_generators(n, k).ideal()
    dim = _dim(G)
    computed = {"dimension": dim}
    wit = []
    if dim != expected:
        wit.append({"dimension": dim, "expected": expected})
    levi = LeviDatum.make(n, n - k, (1,) * k)
    if orbit_size(levi) <= ORACLE_CAP:
        gr = vanishing_ideal_points(weyl_orbit(levi)).initial_form_ideal()
        eq = gr.equals(G)
        computed["oracle_equal"] = eq
        if not eq:
            wit.append({"oracle": "gr of the orbit ideal differs from the generator set"})
    return Outcome(_ok(not wit), computed, expected, "PAPER", wit)


def check_b1eq2(p, rng) -> Outcome:
    n, a, k = int(p["n"]), int(p["a"]), int(p["k"])
    expected = factorial(n) * 2**k // factorial(a)
    I = fm.i_nak(n, a, k).ideal()
    dim = _dim(I)
    computed = {"dimension": dim}
    wit = []
    if dim != expected:
        wit.append({"dimension": dim, "expected": expected})
    twos = n - a - k
    if 0 <= twos <= k:
        # b has n - a - k parts equal to 2 and the rest equal to 1
        levi = LeviDatum.make(n, a, (2,) * twos + (1,) * (k - twos))
        computed["levi"] = levi.label()
        if orbit_size(levi) <= ORACLE_CAP:
            gr = vanishing_ideal_points(weyl_orbit(levi)).initial_form_ideal()
            eq = gr.equals(I)
            computed["oracle_equal"] = eq
            if not eq:
                wit.append({"oracle": "gr of the orbit ideal differs from I_{n,a,k}", "levi": levi.label()})
    else:
        computed["levi"] = None
        if wit:
            wit[0]["note"] = "no Levi datum with b_1 = 2 has these (n, a, k)"
    labels = ["CONJECTURAL"] if a == 1 else []
    return Outcome(_ok(not wit), computed, expected, "PAPER", wit, labels=labels)


def _certify_gr(fam: fm.GeneratorFamily, gr: Ideal, size: int) -> dict:
    I = fam.ideal()
    outside = [str(g) for g in fam.polys if not gr.contains(g)]
    dim = _dim(I)
    return {"generators": len(fam), "contained": not outside, "dimension": dim, "certified": not outside and dim == size, "outside": outside[:3]}


def check_conj_a_ne_0(p, rng) -> Outcome:
    levi = _levi(p)
    if levi.a < 1:
        raise InvalidParams("conjecture instances need a >= 1")
    orbit = weyl_orbit(levi)
    if len(orbit) > ORACLE_CAP:
        raise CapExceeded(f"orbit of {len(orbit)} points exceeds the oracle cap {ORACLE_CAP}")
    gr = vanishing_ideal_points(orbit).initial_form_ideal()
    lit = _certify_gr(fm.conjectural_generators(levi, "literal"), gr, len(orbit))
    deg = _certify_gr(fm.conjectural_generators(levi, "degree"), gr, len(orbit))
    computed = {"orbit_points": len(orbit), "literal": lit, "degree": deg}
    labels = ["CONJECTURAL"]
    if lit["certified"]:
        return Outcome(PASS, computed, len(orbit), "PAPER", labels=labels)
    wit = [{"reading": "literal", "dimension": lit["dimension"], "contained": lit["contained"], "outside": lit["outside"]}]
    stated = {"bound": "2p >= 2l - d'_l + 1", "dimension": lit["dimension"]}
    if deg["certified"]:
        wit.append({"reading": "degree", "bound": "p > l - d'_l", "dimension": deg["dimension"]})
        return Outcome(DISCREPANCY, computed, len(orbit), "PAPER", wit, stated=stated, labels=labels)
    return Outcome(FAIL, computed, len(orbit), "PAPER", wit, stated=stated, labels=labels)


def check_remark_12(p, rng) -> Outcome:
    I = fm.i_nak(3, 1, 1).ideal()
    y3 = I.ring.gen("y3")
    dims = [0] + [I.__add__([y3**r]).quotient_dimension() for r in (1, 2, 3)]
    slices = [dims[r + 1] - dims[r] for r in range(3)]
    total = _dim(I)
    computed = {"slices": slices, "total": total}
    expected = [5, 4, 3]
    wit = [] if slices == expected and total == 12 else [{"slices": slices, "total": total}]
    return Outcome(_ok(not wit), computed, {"slices": expected, "total": 12}, "PAPER", wit)


def check_e2p_h2p(p, rng) -> Outcome:
    n = int(p["n"])
    count = 0
    bad = []
    for L, pp, r in fm.e2p_h2p_residues(n):
        count += 1
        if r:
            bad.append({"L": list(L), "p": pp, "normal_form": str(r)})
    computed = {"identities": count, "nonzero": len(bad)}
    return Outcome(_ok(not bad), computed, {"nonzero": 0}, "PAPER", bad[:3])


# --------------------------------------------------------------------------
# section 3: Pfaffians


_CONST = Ring([])


def _rand_q(rng, lo=-9, hi=9, maxden=4):
    from gmpy2 import mpq

    return mpq(rng.randint(lo, hi), rng.randint(1, maxden))


def _random_skew(rng, N):
    rows = [[0] * N for _ in range(N)]
    for i in range(N):
        for j in range(i + 1, N):
            v = _rand_q(rng)
            rows[i][j], rows[j][i] = v, -v
    return pf.MatrixPoly.from_rationals(rows, _CONST)


def check_pf_square(p, rng) -> Outcome:
    count = int(p.get("count", 100))
    sizes = (2, 4, 6, 8)
    bad = []
    for s in range(count):
        M = _random_skew(rng, sizes[s % 4])
        if pf.pfaffian(M) ** 2 != pf.det(M):
            bad.append({"sample": s, "matrix": M.dumps()})
    cong = 0
    for s in range(20):
        N = (2, 4, 6)[s % 3]
        M = _random_skew(rng, N)
        P = pf.MatrixPoly.from_rationals([[rng.randint(-3, 3) for _ in range(N)] for _ in range(N)], _CONST)
        lhs = pf.pfaffian(P @ M @ P.transpose())
        if lhs != pf.det(P) * pf.pfaffian(M):
            bad.append({"congruence_sample": s, "matrix": M.dumps(), "P": P.dumps()})
        cong += 1
    # summation formula cross-check at N <= 6
    sums = 0
    for N in (2, 4, 6):
        M = _random_skew(rng, N)
        if pf.pfaffian(M) != pf.pfaffian_by_permutations(M):
            bad.append({"summation_mismatch": M.dumps()})
        sums += 1
    computed = {"samples": count, "congruence_samples": cong, "summation_checks": sums, "failures": len(bad)}
    return Outcome(_ok(not bad), computed, {"failures": 0}, "PAPER", bad[:3])


def _random_sp_element(rng, N):
    conv = pf.FormConvention("symplectic", N)
    Y, ring = pf.generic_element(conv)
    vals = {name: _rand_q(rng, -5, 5, 3) for name in ring.names}
    return Y.map(lambda a: a.specialize(vals, _CONST))


def check_spf_square(p, rng) -> Outcome:
    count = int(p.get("count", 50))
    bad = []
    for s in range(count):
        N = (4, 6, 8)[s % 3]
        Y = _random_sp_element(rng, N)
        X = Y @ Y
        if pf.symplectic_pfaffian(X) ** 2 != pf.det(X):
            bad.append({"sample": s, "Y": Y.dumps()})
    X, J, ring = pf.worked_example_matrix()
    val = pf.symplectic_pfaffian(X, J)
    g = {v: ring.gen(v) for v in ring.names}
    stated = -g["x23"] * g["x14"] - g["x11"] * g["x22"] + g["x12"] * g["x21"]
    example_ok = val == stated or val == -stated
    det_ok = pf.det(X) == stated**2
    if not (example_ok and det_ok):
        bad.append({"example_value": str(val), "stated": str(stated)})
    # characteristic polynomial of a generic X is a square (N = 4)
    conv = pf.FormConvention("symplectic", 4)
    Yg, rg = pf.generic_element(conv, extra=("t",))
    M = pf.MatrixPoly.identity(4, rg, rg.gen("t")) - Yg @ Yg
    s_full = pf.spf_minor(2, (1, 2))
    charpoly_ok = pf.det(M) == s_full**2
    if not charpoly_ok:
        bad.append({"charpoly": "det(t - X) is not sPf_L(full)^2"})
    computed = {
        "samples": count,
        "failures": len(bad),
        "example_value": str(val),
        "example_sign": "+" if val == stated else ("-" if val == -stated else None),
        "example_det_is_square": det_ok,
        "charpoly_square_N4": charpoly_ok,
    }
    return Outcome(_ok(not bad), computed, {"failures": 0, "example_value": str(stated)}, "PAPER", bad[:3])


def check_spf_minor(p, rng) -> Outcome:
    n = int(p["n"])
    L = _tuple(p["L"])
    if not L or any(not 1 <= i <= n for i in L):
        raise InvalidParams("L must be a nonempty subset of 1..n")
    full = pf.spf_minor(n, L)
    res = pf.restrict_diagonal(full, keep=("t",))
    exp = pf.expected_minor_restriction(n, L)
    ok = res == exp or res == -exp
    computed = {"restriction": str(res), "sign": "+" if res == exp else ("-" if res == -exp else None)}
    wit = [] if ok else [{"restriction": str(res), "expected": str(exp)}]
    if len(L) <= 2:
        sq = full**2 == pf.principal_minor(n, L)
        computed["square_of_principal_minor"] = sq
        if not sq:
            wit.append({"principal_minor": "sPf_L^2 differs from the principal minor"})
    return Outcome(_ok(not wit), computed, "+-(" + str(exp) + ")", "PAPER", wit)


def check_pf_rank(p, rng) -> Outcome:
    N, l = int(p["N"]), int(p["l"])
    conv = pf.FormConvention("orthogonal-even" if N % 2 == 0 else "orthogonal-odd", N)
    rp = pf.rank_pfaffian_generators(conv, l)
    yr = fm.y_ring(conv.rank)
    exp = fm.y_K(range(1, l + 2), yr)
    ok = rp.restriction == exp or rp.restriction == -exp
    computed = {"restriction": str(rp.restriction), "pfaffian_terms": len(rp.pfaffian.terms)}
    wit = [] if ok else [{"restriction": str(rp.restriction), "expected": str(exp)}]
    return Outcome(_ok(ok), computed, "+-(" + str(exp) + ")", "PAPER", wit)


def _levi_of_even_partition(lam) -> LeviDatum:
    dual = dual_partition(lam)
    b = tuple(dual[2 * i] for i in range(len(dual) // 2))
    return LeviDatum.make(sum(lam) // 2, 0, b)


def check_typec_flat(p, rng) -> Outcome:
    lam = _tuple(p["lam"])
    fam = pf.typeC_minor_coeff_generators(lam)
    levi = _levi_of_even_partition(lam)
    T = fm.tanisaki_ideal(levi).ideal()
    eq = fam.ideal().equals(T)
    computed = {"generators": len(fam), "levi": levi.label(), "equal": eq}
    wit = [] if eq else [{"minor_family": [str(g) for g in fam.polys[:4]]}]
    return Outcome(_ok(eq), computed, {"equal": True}, "PAPER", wit)


def check_typec_nonflat(p, rng) -> Outcome:
    levi = _levi(p)
    if levi.a < 1:
        raise InvalidParams("TYPEC-NONFLAT needs a >= 1")
    yr = fm.y_ring(levi.n)
    orbit = weyl_orbit(levi)
    K = tuple(range(1, levi.n - levi.a + 2))
    g = fm.y_K(K, yr)
    ok = vanishes_on([g], orbit)
    computed = {"y_K": str(g), "vanishes_on_orbit": ok, "orbit_points": len(orbit)}
    wit = [] if ok else [{"y_K": str(g)}]
    return Outcome(_ok(ok), computed, {"vanishes_on_orbit": True}, "PAPER", wit)


def ex333_ideal(variant: str) -> Ideal:
    """4-variable candidate ideal: (y_i^e, sum_{i<=4} y_i^{2l} for l <= 4, y_iy_jy_k)."""
    e = {"cube": 3, "fifth": 5}.get(variant)
    if e is None:
        raise InvalidParams(f"variant must be cube or fifth, not {variant!r}")
    yr = fm.y_ring(4)
    ys = [yr.gen(f"y{i}") for i in range(1, 5)]
    gens = [y**e for y in ys]
    gens += [sum((y ** (2 * l) for y in ys), yr.zero()) for l in range(1, 5)]
    gens += [fm.y_K(K, yr) for K in itertools.combinations(range(1, 5), 3)]
    return Ideal(gens, yr)


def check_ex333(p, rng) -> Outcome:
    variant = str(p["variant"])
    I = ex333_ideal(variant)
    y1, y2 = I.ring.gen("y1"), I.ring.gen("y2")
    nf = I.normal_form(y1**2 * y2**2)
    computed = {"normal_form": str(nf), "nonzero": bool(nf), "dimension": _dim(I)}
    if nf:
        return Outcome(PASS, computed, {"nonzero": True}, "PAPER")
    return Outcome(
        DISCREPANCY, computed, {"nonzero": True}, "PAPER",
        [{"variant": variant, "normal_form": "0"}], stated="y1^2*y2^2 not in the ideal",
    )


# --------------------------------------------------------------------------
# section 5


def check_two_row(p, rng) -> Outcome:
    n, k = int(p["n"]), int(p["k"])
    exp = sum(comb(n, l) for l in range(k + 1))
    d = _dim(fm.two_row_ideal(n, k).ideal())
    return Outcome(_ok(d == exp), {"dimension": d}, exp, "PAPER", [] if d == exp else [{"dimension": d}])


def check_very_even(p, rng) -> Outcome:
    k = int(p["k"])
    exp = 2 ** (2 * k - 1)
    V = fm.very_even_ideal(k).ideal()
    d = _dim(V)
    orbit = signed_permutation_images((2,) * (2 * k), even_signs=True)
    compat = (fm.two_row_ideal(2 * k, k).ideal() + fm.very_even_differences(k).polys).equals(V)
    gr = vanishing_ideal_points(orbit).initial_form_ideal()
    computed = {"dimension": d, "orbit_points": len(orbit), "two_row_compatible": compat, "oracle_equal": gr.equals(V)}
    wit = []
    if d != exp or len(orbit) != exp:
        wit.append({"dimension": d, "orbit_points": len(orbit)})
    if not compat:
        wit.append({"two_row_plus_differences": "differs from the very even ideal"})
    if not computed["oracle_equal"]:
        wit.append({"oracle": "gr of the orbit ideal differs"})
    return Outcome(_ok(not wit), computed, exp, "PAPER", wit)


def check_vk_dim(p, rng) -> Outcome:
    n, k = int(p["n"]), int(p["k"])
    d = fm.vk_span_dim(n, k)
    exp = comb(n, k)
    return Outcome(_ok(d == exp), {"span_dimension": d}, exp, "PAPER", [] if d == exp else [{"span_dimension": d}])


# --------------------------------------------------------------------------
# appendix and section 4


def check_appendix_a(p, rng) -> Outcome:
    case = str(p["case"])
    try:
        rep = fp.verify_kernel_case(case)
    except fp.CaseError as e:
        raise InvalidParams(str(e)) from None
    computed = {
        "family_size": rep.size,
        "subchecks": [s.as_dict() for s in rep.subchecks],
        **rep.extra,
    }
    if rep.ok:
        return Outcome(PASS, computed, rep.size, "PAPER")
    wit = [{"subcheck": s.name, **(s.witness if isinstance(s.witness, dict) else {"value": s.witness})} for s in rep.subchecks if not s.ok]
    stated = {s.name: s.expected for s in rep.subchecks if not s.ok}
    return Outcome(DISCREPANCY, computed, rep.size, "PAPER", wit, stated=stated)


def levi_weights(levi: LeviDatum):
    """Torus weights on V for the Levi datum, as forms in t1..tk."""
    R = Ring([f"t{i}" for i in range(1, levi.k + 1)])
    ws = []
    for i, bi in enumerate(levi.b, start=1):
        t = R.gen(f"t{i}")
        ws += [t, -t] * bi
    ws += [R.zero()] * (2 * levi.a + (1 if levi.family == "B" else 0))
    return ws


def check_flag_eval(p, rng) -> Outcome:
    levi = _levi(p)
    n = levi.n
    params = [f"t{i}" for i in range(1, levi.k + 1)]
    ring = standard_ring(n, params)
    rels = fp.flag_relations(levi_weights(levi), n, ring)
    tv = dict(zip(params, DEFAULT_TVALS))
    orbit = weyl_orbit(levi)
    bad = None
    for pt in orbit:
        vals = {**tv, **{f"y{i}": x for i, x in enumerate(pt, start=1)}}
        for g in rels.polys:
            v = g.evaluate(vals)
            if v:
                bad = {"relation": str(g), "point": list(pt), "value": v}
                break
        if bad:
            break
    computed = {"relations": len(rels), "orbit_points": len(orbit), "all_vanish": bad is None}
    return Outcome(_ok(bad is None), computed, {"all_vanish": True}, "PAPER", [bad] if bad else [])


def _primes_from(start: int, k: int) -> list[int]:
    ps = [q for q in DEFAULT_TVALS if q >= start]
    return ps[:k]


def check_free_rank(p, rng) -> Outcome:
    levi = _levi(p)
    if levi.a:
        raise InvalidParams("FREE-RANK uses the a = 0 uniform families")
    U = fm.uniform_generators_a0(levi)
    k = levi.k
    samples = [
        {f"t{i}": 0 for i in range(1, k + 1)},
        dict(zip((f"t{i}" for i in range(1, k + 1)), _primes_from(2, k))),
        dict(zip((f"t{i}" for i in range(1, k + 1)), _primes_from(3, k))),
    ]
    res = fp.fiber_rank_constancy(U.polys, samples, levi.n)
    exp = orbit_size(levi)
    ok = res["constant"] and res["rank"] == exp
    computed = {"ranks": res["ranks"], "samples": samples}
    wit = [] if ok else [{"ranks": res["ranks"], "expected": exp}]
    return Outcome(_ok(ok), computed, exp, "PAPER", wit)


# --------------------------------------------------------------------------
# catalog


@dataclass(frozen=True)
class CheckSpec:
    name: str
    fn: Callable
    paper_ref: str
    params: tuple[str, ...] = ()


CATALOG: dict[str, CheckSpec] = {
    s.name: s
    for s in [
        CheckSpec("SQ-TANISAKI", check_sq_tanisaki, "Prop: generated by e2_p(L); quotient of size n! 2^n / prod b_i!", ("n", "b")),
        CheckSpec("UNIFORM-A0", check_uniform_a0, "Def: uniform generators (remainder coefficients)", ("n", "b")),
        CheckSpec("BI1", check_bi1, "Prop b_i = 1: y_i^(2k+1), power sums, y_K", ("n", "k")),
        CheckSpec("B1EQ2", check_b1eq2, "Prop b_1 = 2: gr I_x = I_{n,a,k}", ("n", "a", "k")),
        CheckSpec("CONJ-A-NE-0", check_conj_a_ne_0, "Conjecture: W-stable set generated by sco(T(b))", ("family", "n", "a", "b")),
        CheckSpec("REMARK-12", check_remark_12, "Remark: filtration pieces of dimension 5, 4, 3"),
        CheckSpec("E2P-H2P", check_e2p_h2p, "Lemma: e2_p(L) - (-1)^p h2_p(L^c) in I_n", ("n",)),
        CheckSpec("PF-SQUARE", check_pf_square, "Def: pf(Y)^2 = det(Y)", ("count",)),
        CheckSpec("SPF-SQUARE", check_spf_square, "Def: sPf(X)^2 = det(X), worked 4x4 example", ("count",)),
        CheckSpec("SPF-MINOR", check_spf_minor, "Cor: sPf_L restricts to prod (t - y_i^2)", ("n", "L")),
        CheckSpec("PF-RANK", check_pf_rank, "Lemma: contains y_1 ... y_(l+1)", ("N", "l")),
        CheckSpec("TYPEC-FLAT", check_typec_flat, "Prop: minor coefficients generate T_lambda", ("lam",)),
        CheckSpec("TYPEC-NONFLAT", check_typec_nonflat, "Prop: y_K lies in gr I_x (gr side only)", ("n", "a", "b")),
        CheckSpec("EX-333", check_ex333, "Example: y1^2 y2^2 not in I_lambda", ("variant",)),
        CheckSpec("TWO-ROW-D", check_two_row, "C[y]/(y_i^2, y_K) of dimension sum C(n,l)", ("n", "k")),
        CheckSpec("VERY-EVEN", check_very_even, "Lemma: (y_i^2, y_L - y_(L^c)), dimension 2^(2k-1)", ("k",)),
        CheckSpec("VK-DIM", check_vk_dim, "Lemma irred: span of dimension C(n,k)", ("n", "k")),
        CheckSpec("APPENDIX-A", check_appendix_a, "Appendix lemma: free module over C[t0,h]", ("case",)),
        CheckSpec("FLAG-EVAL", check_flag_eval, "Prop: evaluation at w.x", ("family", "n", "a", "b")),
        CheckSpec("FREE-RANK", check_free_rank, "Cor: flat, free of rank |W/W_L|", ("n", "b")),
    ]
}
ALIASES = {"CONJ-A≠0": "CONJ-A-NE-0"}


def normalize_params(name: str, params: dict) -> dict:
    """Canonical, JSON-friendly parameter dict for a check."""
    spec = CATALOG[name]
    out = {}
    for key in spec.params:
        if key not in params:
            if key == "family" and "n" in params:
                out[key] = "C"
                continue
            if key == "a" and "b" in params:
                out[key] = 0
                continue
            if key == "count":
                continue
            raise InvalidParams(f"{name}: missing parameter {key!r}")
        v = params[key]
        if key in ("b", "L", "lam"):
            out[key] = list(_tuple(v))
        elif key in ("family", "variant", "case"):
            out[key] = str(v)
        else:
            out[key] = int(v) if not isinstance(v, (list, tuple)) else int(v[0])
    extra = set(params) - set(spec.params)
    if extra:
        raise InvalidParams(f"{name}: unknown parameter(s) {', '.join(sorted(extra))}")
    if "a" in out and "b" in out and "n" not in out:
        out["n"] = out["a"] + sum(out["b"])
    return out


def resolve(name: str) -> str:
    name = ALIASES.get(name, name)
    if name not in CATALOG:
        raise UnknownCheck(f"unknown check {name!r}")
    return name


def run_check(name: str, params: dict | None = None, limits: Limits | None = None, seed: int = 0) -> CheckResult:
    name = resolve(name)
    params = normalize_params(name, params or {})
    cid = format_id(name, params)
    spec = CATALOG[name]
    limits = limits or Limits()
    rng = random.Random(f"{seed}:{cid}")
    t0 = time.perf_counter()
    reason = None
    try:
        with limits_scope(limits):
            out = spec.fn(params, rng)
    except (LimitExceeded, CapExceeded) as e:
        out = Outcome(SKIP, {}, None, "", [])
        reason = str(e)
    except InvalidParams:
        raise
    except Exception as e:  # an unexpected error is a failure, never a skip
        out = Outcome(FAIL, {}, None, "", [{"error": f"{type(e).__name__}: {e}"}])
    millis = int(round((time.perf_counter() - t0) * 1000))
    return CheckResult(
        id=cid,
        name=name,
        params=jsonable(params),
        status=out.status,
        computed=jsonable(out.computed),
        expected={"value": jsonable(out.expected), "provenance": out.provenance},
        witnesses=jsonable(out.witnesses),
        millis=millis,
        paper_ref=spec.paper_ref,
        stated=jsonable(out.stated),
        labels=list(out.labels),
        reason=reason,
    )


# --------------------------------------------------------------------------
# suites


def _levis_a0(nmin: int, nmax: int):
    for n in range(nmin, nmax + 1):
        for b in compositions(n):
            yield {"n": n, "b": list(b)}


def _levis_all(nmax: int, families=("B", "C", "D")):
    for fam in families:
        for n in range(1, nmax + 1):
            for a in range(0, n + 1):
                for b in partitions_of(n - a):
                    yield {"family": fam, "n": n, "a": a, "b": list(b)}


CONJ_INSTANCES = [
    (2, 1, (1,)),
    (3, 1, (2,)),
    (3, 1, (1, 1)),
    (3, 2, (1,)),
    (4, 1, (2, 1)),
    (4, 2, (2,)),
    (4, 1, (3,)),
    (5, 2, (3,)),
]


def suite_entries(suite: str) -> list[tuple[str, dict]]:
    if suite == "paper-core":
        out = []
        out += [("SQ-TANISAKI", p) for p in _levis_a0(2, 4)]
        out += [("UNIFORM-A0", p) for p in _levis_a0(2, 4)]
        out += [("BI1", {"n": n, "k": k}) for n in range(1, 6) for k in range(1, n + 1)]
        out += [("B1EQ2", {"n": n, "a": a, "k": k}) for n, a, k in [(3, 1, 1), (4, 1, 1), (4, 2, 1), (4, 1, 2), (5, 2, 2)]]
        out += [("REMARK-12", {})]
        out += [("E2P-H2P", {"n": n}) for n in range(1, 6)]
        out += [("SPF-MINOR", {"n": n, "L": list(L)}) for n in range(1, 4) for l in range(1, n + 1) for L in itertools.combinations(range(1, n + 1), l)]
        out += [("PF-RANK", {"N": N, "l": l}) for N in range(2, 9) for l in range(N // 2)]
        out += [("TYPEC-FLAT", {"lam": list(lam)}) for lam in [(2, 2), (4,), (4, 2, 2), (2, 2, 2, 2)]]
        out += [("TYPEC-NONFLAT", {"n": n, "a": a, "b": list(b)}) for n, a, b in [(2, 1, (1,)), (3, 1, (2,)), (4, 2, (2,)), (4, 1, (2, 1))]]
        out += [("EX-333", {"variant": v}) for v in ("cube", "fifth")]
        out += [("TWO-ROW-D", {"n": n, "k": k}) for n in range(1, 7) for k in range(0, n + 1)]
        out += [("VERY-EVEN", {"k": k}) for k in (1, 2)]
        out += [("VK-DIM", {"n": n, "k": k}) for n in range(1, 7) for k in range(1, n + 1)]
        out += [("FLAG-EVAL", p) for p in _levis_all(4)]
        out += [("FREE-RANK", p) for p in _levis_a0(1, 4)]
        return out
    if suite == "properties":
        return [("PF-SQUARE", {"count": 100}), ("SPF-SQUARE", {"count": 50})]
    if suite == "conjecture-instances":
        return [("CONJ-A-NE-0", {"family": "C", "n": n, "a": a, "b": list(b)}) for n, a, b in CONJ_INSTANCES]
    if suite == "appendix-a":
        return [("APPENDIX-A", {"case": c}) for c in fp.APPENDIX_CASES]
    if suite == "all":
        return sum((suite_entries(s) for s in ("paper-core", "properties", "conjecture-instances", "appendix-a")), [])
    raise UnknownCheck(f"unknown suite {suite!r}; known: {', '.join(SUITES)}")


SUITES = ("paper-core", "properties", "conjecture-instances", "appendix-a", "all")


def _run_entry(args):
    name, params, limits, seed = args
    return run_check(name, params, limits, seed)


def run_suite(suite: str, limits: Limits | None = None, seed: int = 0, workers: int = 1, progress=None) -> list[CheckResult]:
    entries = suite_entries(suite)
    limits = limits or Limits()
    jobs = [(name, params, limits, seed) for name, params in entries]
    if workers <= 1:
        results = []
        for job in jobs:
            r = _run_entry(job)
            if progress:
                progress(r)
            results.append(r)
        return sorted(results, key=lambda r: r.id)
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=workers) as ex:
        results = list(ex.map(_run_entry, jobs))
    if progress:
        for r in results:
            progress(r)
    return sorted(results, key=lambda r: r.id)
