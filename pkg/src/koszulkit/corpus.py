"""Deterministic corpus: embedded inputs reproducing every computation the
acceptance suite cites, each case printing stable lines and returning
True/False.  No case touches the network or reads files.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

from . import filtration as flt
from . import gtheory as gt
from . import quotient as qt
from . import resolution as rs
from .files import parse_ring_descriptor
from .groebner import (
    IdealS,
    buchberger,
    buchberger_raw,
    colon,
    ideal_equals,
    is_groebner_basis,
    is_reduced_basis,
    normal_form,
    substitution_vanishes,
    toric_ideal,
)
from .quotient import QuotientRing, annihilator, colon_element
from .rings import GF, QQ, DegRevLex, Lex, PolyRing

CASES = {}


def case(name):
    def register(fn):
        CASES[name] = fn
        return fn

    return register


def run_case(name, out=print):
    """Run one corpus case; returns True iff every embedded check passed."""
    return CASES[name](out)


def run_all(out=print):
    ok = True
    for name in sorted(CASES):
        out(f"== {name}")
        ok = run_case(name, out) and ok
    return ok


# ---------------------------------------------------------------------------
# embedded inputs


SEC3_RING = """
field QQ
vars x1 x2 x3 x4 x5 x6
order lex
"""

SEC3_G = ["x1*x4-x2*x3", "x2*x5-x3*x4", "x3*x6-x4*x5"]
SEC3_H = SEC3_G + ["x2*x6-x4^2", "x1*x6-x3*x4", "x1*x5-x3^2"]

TRAMPOLINE_QUADRICS = [
    "a*(b-j)", "b*(a-j)", "a*(c-d)", "c*(a-d)", "c*(g-j)", "g*(c-j)",
    "b*(d-g)", "d*(b-g)", "d*(e-f)", "e*(d-f)", "g*(h-i)", "h*(g-i)",
    "j*(k-l)", "k*(j-l)",
]

B4T_LEX = "a > b > c > e > h > k > l > i > f > j > g > d"

ROOS45 = """
field QQ
vars u x y z
quotient:
x*y + y*z
x*y + z^2 + y*u
y*u + z*u
y^2
x*z
"""
ROOS45_FORMS = ["u", "x", "y", "z", "x+y", "y+z"]

ROOS58 = """
field QQ
vars u x y z
quotient:
x^2 + x*y
x^2 + z*u
y^2
z^2
x*z + y*u
x*u
"""
ROOS58_FORMS = ["u", "x", "y", "z", "2*x+y-z", "2*x+y+z", "2*u-y+z", "2*u+y+z"]

PV_MATRIX = [
    [3, 2, 2, 1, 1, 0, 0, 0, 0],
    [0, 1, 0, 2, 0, 3, 2, 1, 0],
    [0, 0, 1, 0, 2, 0, 1, 2, 3],
]

PV_LAMBDA1 = [
    ("x1", "x2", "x4", "x5"), ("x1", "x3", "x4", "x5"), ("x2", "x4", "x6", "x8"),
    ("x2", "x6", "x7", "x8"), ("x3", "x5", "x7", "x9"), ("x3", "x7", "x8", "x9"),
]
PV_LAMBDA2 = [("x1", "x2", "x3"), ("x4", "x6", "x7"), ("x5", "x8", "x9")]

F2_FILTRATION = [
    [[]],
    [["d"], ["d+e+f"]],
    [["e", "d"], ["d+e+f", "b+e+f+g"], ["g", "d+e+f"]],
    [["f", "e", "d"], ["d+e+f", "b+e+f+g", "a+c+e+f"],
     ["g", "d+e+f", "b+e+f"], ["g", "d+e+f", "b+c+f"]],
    [["e+f", "d", "b+g", "a+c"], ["g", "d+e+f", "c+j", "b+e+f"], ["g", "e+f", "d", "b"]],
    [["j", "e+f", "d", "b+g", "a+c"], ["e+f", "d", "c+g+j", "b+g", "a+g+j"],
     ["h+i", "g", "d+e+f", "c+j", "b+e+f"]],
    [["j", "e+f", "d", "c", "b+g", "a"], ["j", "e+f", "d", "c+g", "b+g", "a+g"],
     ["g", "e+f", "d", "c+j", "b", "a+j"], ["i", "h", "g", "d+e+f", "c+j", "b+e+f"],
     ["h+i", "g", "e+f", "d", "c+j", "b"]],
    [["j", "g", "e+f", "d", "c", "b", "a"], ["k+l", "j", "e+f", "d", "c+g", "b+g", "a+g"],
     ["h+i", "g", "e+f", "d", "c+j", "b", "a+j"]],
    [["j", "h+i", "g", "e+f", "d", "c", "b", "a"],
     ["l", "k", "j", "e+f", "d", "c+g", "b+g", "a+g"]],
    [["j", "i", "h", "g", "e+f", "d", "c", "b", "a"]],
    [["j", "i", "h", "g", "f", "e", "d", "c", "b", "a"]],
    [["k", "j", "i", "h", "g", "f", "e", "d", "c", "b", "a"]],
    [["l", "k", "j", "i", "h", "g", "f", "e", "d", "c", "b", "a"]],
]

H_FILTRATION = [
    [], ["x6"], ["x4", "x6"], ["x5", "x6"], ["x2", "x4", "x6"], ["x4", "x5", "x6"],
    ["x3", "x4", "x5", "x6"], ["x2", "x3", "x4", "x5", "x6"],
    ["x1", "x2", "x3", "x4", "x5", "x6"],
]

G_FILTRATION = [
    [], ["x1+x2"], ["x1", "x2"], ["x1+x2", "x3+x4"], ["x1+x2", "x3+x4", "x5+x6"],
    ["x1+x2", "x3", "x4"], ["x1", "x2", "x3+x4", "x5+x6"],
    ["x1", "x2", "x3", "x4", "x5+x6"], ["x1", "x2", "x3", "x4", "x5", "x6"],
]

THE_37_FORMS = [
    "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l",
    "a+b", "a+c", "d+e", "d-e", "d+f", "d-f", "e+f", "g+h", "g-h", "g+i",
    "g-i", "h+i", "j+k", "j-k", "j+l", "j-l", "k+l",
    "a+b+j", "a+c+d", "d+e+f", "d-e-f", "g+h+i", "g-h-i", "j+k+l", "j-k-l",
]

BROKEN3_RELS = ["g*c-f*c", "g*f-f*c", "d*b-e*b", "d*e-e*b", "a*c-b*c", "a*b-b*c"]
BROKEN3_LEX = "a > d > g > f > e > b > c"
BROKEN3_ALPHAS = ["e", "d-b", "b", "a-c", "c", "g-f", "f"]
BROKEN3_FLAG = [
    [], ["e"], ["e", "d-b"], ["e", "b", "d"], ["e", "b", "d", "a-c"],
    ["e", "b", "d", "a", "c"], ["e", "b", "d", "a", "c", "g-f"],
    ["a", "b", "c", "d", "e", "f", "g"],
]


# ---------------------------------------------------------------------------
# shared constructions


@lru_cache(maxsize=None)
def sec3_ring():
    ring, _ = parse_ring_descriptor(SEC3_RING)
    return ring


def trampoline_text(p):
    lines = [f"field GF {p}", "vars a b c d e f g h i j k l", "quotient:"]
    lines += [f"{v}^2" for v in "abcdefghijkl"]
    lines += TRAMPOLINE_QUADRICS
    return "\n".join(lines)


@lru_cache(maxsize=None)
def trampoline(p):
    ring, sections = parse_ring_descriptor(trampoline_text(p))
    return QuotientRing(ring, sections["quotient"])


@lru_cache(maxsize=None)
def roos_ring(which):
    text = ROOS45 if which == 45 else ROOS58
    ring, sections = parse_ring_descriptor(text)
    return QuotientRing(ring, sections["quotient"])


@lru_cache(maxsize=None)
def pinched_veronese(p=None):
    field = QQ if p is None else GF(p)
    ring = PolyRing(field, [f"x{i}" for i in range(1, 10)], DegRevLex(9))
    return toric_ideal(PV_MATRIX, ring)


@lru_cache(maxsize=None)
def broken3(p):
    field = QQ if p == 0 else GF(p)
    names = list("abcdefg")
    perm = [names.index(v) for v in BROKEN3_LEX.replace(">", " ").split()]
    ring = PolyRing(field, names, Lex(7, perm))
    gens = [ring.parse(f"{v}^2") for v in names] + [ring.parse(s) for s in BROKEN3_RELS]
    return ring, gens


def _fmt_ideal(ideal):
    gens = ideal.min_gens()
    return "(" + ", ".join(str(g) for g in gens) + ")" if gens else "(0)"


def _check(out, ok, label):
    out(f"{label} = {'true' if ok else 'false'}")
    return bool(ok)


# ---------------------------------------------------------------------------
# the cases


@case("sec3-gsequences")
def _sec3(out):
    ring = sec3_ring()
    G = [ring.parse(s) for s in SEC3_G]
    H = [ring.parse(s) for s in SEC3_H]
    ok = True
    for label, gens in (("G", G), ("H", H)):
        gb_ok = is_groebner_basis(gens, ring.order)
        red_ok = is_reduced_basis(gens, ring.order)
        ok &= _check(out, gb_ok and red_ok, f"{label} is a reduced Groebner basis (lex)")
        gb = buchberger(IdealS(ring, gens))
        total = 0
        for r in range(1, 7):
            for sub in combinations(range(6), r):
                if gt.is_gset(gb, sub) and gt.find_gsequence(gb, sub) is not None:
                    total += 1
        ok &= _check(out, total == 0, f"{label}: nonempty G-sequences (exhaustive) = 0")
    ok &= _check(out, not ideal_equals(G, H, ring, ring.order), "(G) != (H)")
    hbasis = buchberger_raw(H, ring.order)
    ok &= _check(
        out,
        all(normal_form(g, hbasis, ring.order).is_zero() for g in G),
        "(H) contains (G)",
    )
    return ok


@case("h-gseq-filtration")
def _h_gseq(out):
    ring = PolyRing(QQ, [f"x{i}" for i in range(1, 7)], DegRevLex(6))
    H = [ring.parse(s) for s in SEC3_H]
    gb = buchberger(IdealS(ring, H))
    ok = _check(
        out,
        gb.quadratic and gb.binomial and gb.disjoint_support,
        "degrevlex basis of (H) is quadratic binomial with disjoint support",
    )
    cert = gt.gsequence_filtration_cert(gb)
    rep = flt.verify_filtration(cert)
    out(f"certificate members = {cert.member_count()}")
    ok &= _check(out, rep.valid, "gseq-filtration verifies (kind koszul)")
    return ok


@case("h-explicit-filtration")
def _h_explicit(out):
    ring = PolyRing(QQ, [f"x{i}" for i in range(1, 7)], DegRevLex(6))
    R = QuotientRing(ring, [ring.parse(s) for s in SEC3_H])
    levels = {}
    for gens in H_FILTRATION:
        ideal = R.ideal([ring.parse(s) for s in gens])
        levels.setdefault(len(gens), []).append(ideal)
    cert = flt.FiltrationCert(R, "koszul", [levels.get(i, []) for i in range(7)])
    rep = flt.verify_filtration(cert)
    return _check(out, rep.valid, "paper's 9-ideal monomial filtration of S/(H) verifies")


@case("g-explicit-filtration")
def _g_explicit(out):
    ring = PolyRing(QQ, [f"x{i}" for i in range(1, 7)], DegRevLex(6))
    R = QuotientRing(ring, [ring.parse(s) for s in SEC3_G])
    levels = {}
    for gens in G_FILTRATION:
        ideal = R.ideal([ring.parse(s) for s in gens])
        levels.setdefault(len(gens), []).append(ideal)
    cert = flt.FiltrationCert(R, "koszul", [levels.get(i, []) for i in range(7)])
    rep = flt.verify_filtration(cert)
    return _check(out, rep.valid, "paper's 9-ideal filtration of S/(G) verifies")


@case("bei-paths")
def _bei(out):
    ok = True
    for n in range(3, 7):
        graph = gt.Graph.path(n)
        ideal = gt.binomial_edge_ideal(graph, QQ)
        gb_ok = gt.edge_binomials_are_groebner(ideal)
        gb, seq = gt.bei_gset_chain(graph, QQ)
        chain_ok = seq.verify()
        cert = gt.gsequence_filtration_cert(gb, seq)
        rep = flt.verify_filtration(cert)
        ok &= _check(
            out,
            gb_ok and chain_ok and rep.valid,
            f"path on {n} vertices: edge basis + alternating chain + filtration",
        )
        out(f"  members = {cert.member_count()}")
    return ok


def _roos(out, which, forms):
    R = roos_ring(which)
    pool = [R.ambient.parse(s) for s in forms]
    lf = flt.partial_linear_filtration(R, pool)
    pkf = flt.partial_koszul_filtration(R, lf)
    ok = flt.contains_maximal_ideal(pkf)
    out(f"koszul-filtration: contains maximal ideal = {'true' if ok else 'false'}")
    return ok


@case("roos45")
def _roos45(out):
    return _roos(out, 45, ROOS45_FORMS)


@case("roos58")
def _roos58(out):
    ok = _roos(out, 58, ROOS58_FORMS)
    R = roos_ring(58)
    init = [
        R.ambient.monomial(g.leading_monomial(R.order))
        for g in R.gb.elements
    ]
    series = rs.hilbert_series(IdealS(R.ambient, init)).reduced()
    out(f"hilbert series of S/in(I58) = {series}")
    expected = rs.HilbertSeries([1, 3, 0, -3], 1)
    ok &= _check(out, series == expected, "series equals (1 + 3T - 3T^3)/(1 - T)")
    return ok


@case("pinched-veronese-toric")
def _pv_toric(out):
    I = pinched_veronese()
    ring = I.ring
    R = QuotientRing(ring, I.gens)
    out(f"graded dimensions = {[rs.dim_graded_piece(R, d) for d in range(3)]}")
    ok = rs.dim_graded_piece(R, 1) == 9
    ok &= _check(
        out,
        all(substitution_vanishes(g, PV_MATRIX) for g in I.gens),
        "every generator vanishes under the monomial substitution",
    )
    out(f"generators = {len(I.gens)}; degrees = "
        f"{sorted({g.degree() for g in I.gens})}")
    I_rev = toric_ideal(PV_MATRIX, ring, saturation_order=list(reversed(range(9))))
    ok &= _check(
        out,
        ideal_equals(I.gens, I_rev.gens, ring, ring.order),
        "reversed-order saturation gives the same ideal",
    )
    I3 = pinched_veronese(3)
    same = sorted(tuple(sorted(g.terms)) for g in I.gens) == sorted(
        tuple(sorted(g.terms)) for g in I3.gens
    )
    ok &= _check(out, same, "reduced basis agrees over QQ and GF(3)")
    gb = buchberger(I, ring.order)
    mono_free = all(
        not gb.normal_form(ring.var(i) ** d).is_zero()
        for i in range(9)
        for d in range(1, 5)
    )
    ok &= _check(out, mono_free, "ideal contains no monomials (variable powers)")
    return ok


@case("pinched-veronese-monomial")
def _pv_monomial(out):
    I = pinched_veronese()
    ring = I.ring
    PV = QuotientRing(ring, I.gens)
    found = {}
    for i in range(9):
        bi = PV.ideal([ring.var(i)])
        for j in range(9):
            if i == j:
                continue
            c = colon_element(bi, ring.var(j))
            mins = c.min_gens()
            if mins and all(g.degree() == 1 and g.num_terms() == 1 for g in mins):
                found.setdefault(tuple(sorted(str(g) for g in mins)), []).append((i, j))
    expected = {tuple(sorted(t)) for t in PV_LAMBDA1 + PV_LAMBDA2}
    ok = _check(
        out,
        set(found) == expected,
        "variable-generated colon ideals (x_i):x_j equal Lambda1 union Lambda2",
    )
    for key in sorted(found):
        out(f"  ({', '.join(key)})")
    lf = flt.partial_linear_filtration(PV, ring.gens())
    pkf = flt.partial_koszul_filtration(PV, lf)
    out(f"max minimal generators in partial Koszul filtration = {flt.max_min_gens(pkf)}")
    ok &= flt.max_min_gens(pkf) == 1
    ok &= _check(out, not flt.contains_maximal_ideal(pkf), "no monomial Koszul filtration")
    a = flt.linear_ideal(PV, [ring.var(0), ring.var(1), ring.var(3), ring.var(4)])
    linear = rs.res_looks_linear(a, 3)
    ok &= _check(out, not linear, "(x1,x2,x4,x5) fails 3-step linearity")
    return ok


@case("trampoline-f2")
def _trampoline_f2(out):
    B2 = trampoline(2)
    ring = B2.ambient
    levels = [
        [B2.ideal([ring.parse(s) for s in gens]) for gens in level]
        for level in F2_FILTRATION
    ]
    cert = flt.FiltrationCert(B2, "koszul", levels)
    rep = flt.verify_filtration(cert)
    ok = _check(out, rep.valid, "F2 trampoline certificate verifies (kind koszul)")
    broken = flt.FiltrationCert(B2, "koszul", levels[:-1])
    rep2 = flt.verify_filtration(broken)
    ok &= _check(
        out,
        not rep2.valid and any(v.axiom == "KF2" for v in rep2.violations),
        "dropping the maximal ideal is caught by KF2",
    )
    return ok


@case("trampoline-f3-forms")
def _trampoline_forms(out):
    B = trampoline(3)
    ring = B.ambient
    from .rings import enumerate_linear_forms, linear_form_count

    count = sum(1 for _ in enumerate_linear_forms(ring))
    out(f"linear forms up to scalar = {count}")
    ok = count == linear_form_count(3, 12) == 265720
    survivors = qt.linear_forms_with_linear_annihilator(B)
    out(f"forms with linear annihilator = {len(survivors)}")
    ok &= len(survivors) == 37
    expected = {flt.normalize_linear(B, ring.parse(s)).key() for s in THE_37_FORMS}
    got = {flt.normalize_linear(B, w).key() for w in survivors}
    ok &= _check(out, got == expected, "survivors match the 37 listed forms (up to sign)")
    for w in survivors:
        out(f"  {w}")
    return ok


@case("trampoline-f3-colons")
def _trampoline_colons(out):
    B = trampoline(3)
    ring = B.ambient
    ok = True
    for name, expect in (("d", ["e - f", "d", "b - g", "a - c"]),
                         ("e", ["e", "d - f"]),
                         ("g", ["h - i", "g", "c - j", "b - d"])):
        ann = annihilator(ring.parse(name), B)
        target = B.ideal([ring.parse(s) for s in expect])
        ok &= _check(out, ann.equals(target), f"ann({name}) = ({', '.join(expect)})")
    anna = annihilator(ring.parse("a"), B)
    ok &= _check(
        out,
        len(anna.min_gens()) == 3 and anna.is_linearly_generated(),
        "ann(a) has 3 linear minimal generators",
    )
    res = flt.linear_colon_ideals(
        B, [ring.parse(s) for s in ["e-f", "d", "b-g", "a-c"]], [ring.parse("d")]
    )
    out(f"distinct colon lists for ann(d) with seed d = {len(res)}")
    ok &= len(res) == 6
    targets = [["d", "c", "a"], ["d", "b+c+j", "a+g+j"],
               ["e-f", "d", "c", "a"], ["e-f", "d", "b+c+j", "a+g+j"]]
    tkeys = {
        flt.linear_ideal(B, [ring.parse(s) for s in t]).linear_span_key()
        for t in targets
    }
    hits = all(any(c.linear_span_key() in tkeys for c in lst) for lst in res)
    ok &= _check(out, hits, "every list contains one of the four forbidden ideals")
    for lst in res:
        out("  [" + " ; ".join(_fmt_ideal(c) for c in lst) + "]")
    res2 = flt.linear_colon_ideals(
        B, [ring.parse("e"), ring.parse("d-f")],
        [ring.parse("e"), ring.parse("d-f"), ring.parse("e-d+f")],
    )
    fed = flt.linear_ideal(B, [ring.parse(s) for s in ["f", "e", "d"]])
    ok &= _check(
        out,
        len(res2) == 1 and len(res2[0]) == 1
        and res2[0][0].linear_span_key() == fed.linear_span_key(),
        "seeding ann(e) forces exactly {{(f, e, d)}}",
    )
    return ok


@case("trampoline-f3-betti")
def _trampoline_betti(out):
    B = trampoline(3)
    ring = B.ambient
    anna = annihilator(ring.parse("a"), B)
    t1 = rs.betti_truncated(anna, 3, cutoff=6)
    out("betti(B/ann(a)), 3 steps:")
    out(t1.render())
    ok = [t1.get(i, i) for i in range(4)] == [1, 3, 12, 55] and t1.get(3, 5) == 1
    ok = ok and [t1.total(i) for i in range(4)] == [1, 3, 12, 56]
    ok = _check(out, ok, "table matches: strand 1,3,12,55 with one entry at (3,5)")
    dca = B.ideal([ring.parse(s) for s in ["d", "c", "a"]])
    t2 = rs.betti_truncated(dca, 3, cutoff=6)
    out("betti(B/(d,c,a)), 3 steps:")
    out(t2.render())
    ok2 = [t2.total(i) for i in range(4)] == [1, 3, 12, 55] and t2.get(3, 4) == 1
    ok &= _check(out, ok2, "table matches: totals 1,3,12,55 with one entry at (3,4)")
    ok &= _check(out, not rs.res_looks_linear(dca, 3), "(d,c,a) fails 3-step linearity")
    return ok


@case("trampoline-f3-cases")
def _trampoline_cases(out):
    B = trampoline(3)
    ring = B.ambient
    L = [ring.parse(s) for s in ["f", "e", "d", "b-g", "a-c"]]
    P = [ring.parse(s) for s in
         ["f", "e", "d+e", "d-e", "d+f", "d-f", "e+f", "d+e+f", "d-e-f"]]
    z = ring.parse("b-g")
    ok = True
    r1 = flt.forbidden_ideal_scan(B, L, P, z, 1)
    ok &= _check(out, sorted(r1.degree_sets) == [(1, 2)],
                 "case 1: every colon has generator degrees {1,2}")
    r2 = flt.forbidden_ideal_scan(B, L, P, z, 2)
    ok &= _check(out, sorted(r2.degree_sets) == [(1, 2)],
                 "case 2: every colon has generator degrees {1,2}")
    r3 = flt.forbidden_ideal_scan(B, L, P, z, 3)
    out(f"case 3 candidates = {len(r3.candidates)}")
    ok &= len(r3.candidates) == 630
    ok &= _check(out, not r3.survivors, "case 3: no candidate passes 5-step linearity")
    base = [ring.parse(s) for s in ["f", "e", "d", "a-c"]]
    r4 = flt.forbidden_ideal_scan(B, base, P, z, 4)
    ok &= _check(out, not r4.survivors, "case 4: no perturbed ideal passes 4-step linearity")
    return ok


@case("b4t-gquadratic")
def _b4t_gq(out):
    names = list("abcdefghijkl")
    perm = [names.index(v) for v in B4T_LEX.replace(">", " ").split()]
    ok = True
    for p in (2, 3):
        ring = PolyRing(GF(p), names, Lex(12, perm))
        gens = [ring.parse(f"{v}^2") for v in names]
        gens += [ring.parse(s) for s in TRAMPOLINE_QUADRICS]
        gb = buchberger(IdealS(ring, gens))
        ok &= _check(
            out,
            gb.quadratic,
            f"GF({p}): reduced basis under lex {B4T_LEX} is quadratic "
            f"({len(gb.elements)} elements)",
        )
    return ok


@case("broken-3-trampoline")
def _broken3(out):
    ok = True
    for p in (0, 2, 3, 5):
        ring, gens = broken3(p)
        label = "QQ" if p == 0 else f"GF({p})"
        given_ok = is_groebner_basis(gens, ring.order)
        gb = buchberger(IdealS(ring, gens))
        ok &= _check(out, given_ok and gb.quadratic,
                     f"{label}: generators form a quadratic basis under lex {BROKEN3_LEX}")
        alphas = [ring.parse(a) for a in BROKEN3_ALPHAS]
        ids_ok = True
        for s in range(6):
            Gs = buchberger_raw(gens + alphas[:s], ring.order)
            lhs = colon(Gs, alphas[s], ring, ring.order)
            ids_ok &= ideal_equals(lhs, gens + alphas[: s + 2], ring, ring.order)
        G6 = buchberger_raw(gens + alphas[:6], ring.order)
        lhs = colon(G6, alphas[6], ring, ring.order)
        ids_ok &= ideal_equals(lhs, gens + alphas, ring, ring.order)
        ok &= _check(out, ids_ok, f"{label}: (G_s):alpha_(s+1) = (G_(s+2)) for s = 0..5 "
                                  "and (G_6):alpha_7 = (G_7)")
    ring, gens = broken3(0)
    Q = QuotientRing(ring, gens)
    flag = [Q.ideal([ring.parse(s) for s in fs]) for fs in BROKEN3_FLAG]
    rep1 = flt.verify_filtration(flt.flag_to_cert(Q, flag))
    rep2 = flt.verify_filtration(flt.FiltrationCert(Q, "koszul", [[m] for m in flag]))
    ok &= _check(out, rep1.valid and rep2.valid,
                 "the stated chain is a Groebner flag (linear flag + Koszul filtration)")
    return ok
