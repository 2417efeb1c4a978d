"""Buchberger, normal forms, colon/saturation/equality, and toric ideals."""

import random
from itertools import combinations, product

import pytest

from koszulkit.groebner import (
    IdealS,
    buchberger,
    buchberger_raw,
    colon,
    divide_exact,
    ideal_contains,
    ideal_equals,
    integer_kernel_basis,
    intersect,
    is_groebner_basis,
    is_reduced_basis,
    normal_form,
    saturate,
    substitution_vanishes,
    toric_ideal,
)
from koszulkit.rings import GF, QQ, DegRevLex, Lex, PolyRing


@pytest.fixture(scope="module")
def scroll_ring():
    return PolyRing(QQ, [f"x{i}" for i in range(1, 7)], Lex(6))


@pytest.fixture(scope="module")
def scroll_G(scroll_ring):
    return [scroll_ring.parse(s) for s in
            ["x1*x4-x2*x3", "x2*x5-x3*x4", "x3*x6-x4*x5"]]


def test_scroll_generators_already_reduced_basis(scroll_ring, scroll_G):
    assert is_groebner_basis(scroll_G, scroll_ring.order)
    assert is_reduced_basis(scroll_G, scroll_ring.order)
    gb = buchberger(IdealS(scroll_ring, scroll_G))
    assert sorted(g.key() for g in gb.elements) == sorted(g.key() for g in scroll_G)


def test_principal_monomial_ideal():
    ring = PolyRing(QQ, ["x1", "x2"], DegRevLex(2))
    gb = buchberger(IdealS(ring, [ring.parse("x1^2")]))
    assert [str(g) for g in gb.elements] == ["x1^2"]


def test_normal_form_basics(scroll_ring, scroll_G):
    order = scroll_ring.order
    f = scroll_ring.parse("x1*x4*x5 + x2^2")
    # empty basis: the normal form is the element itself
    assert normal_form(f, [], order) == f
    # members reduce to zero
    for g in scroll_G:
        assert normal_form(g, scroll_G, order).is_zero()
    # idempotence
    r = normal_form(f, scroll_G, order)
    assert normal_form(r, scroll_G, order) == r


def test_normal_form_kills_terms_with_monomial_reducers(scroll_ring):
    # dividing u - v by variables touching only v leaves the bare u
    f = scroll_ring.parse("x1*x4 - x2*x3")
    vars_ = [scroll_ring.parse("x2")]
    assert normal_form(f, vars_, scroll_ring.order) == scroll_ring.parse("x1*x4")


def _random_homogeneous(ring, rng, degree, nterms):
    monos = [m for m in product(range(degree + 1), repeat=3) if sum(m) == degree]
    terms = {}
    for _ in range(nterms):
        terms[rng.choice(monos)] = rng.randrange(1, 5)
    return ring.from_terms(terms)


def test_buchberger_spair_criterion_randomized():
    rng = random.Random(101)
    checked = 0
    trial = 0
    while checked < 200 and trial < 2000:
        trial += 1
        field = GF(5) if trial % 2 else QQ
        ring = PolyRing(field, ["x", "y", "z"], DegRevLex(3) if trial % 3 else Lex(3))
        gens = [
            _random_homogeneous(ring, rng, rng.randrange(1, 3), rng.randrange(1, 4))
            for _ in range(rng.randrange(1, 4))
        ]
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb = buchberger(IdealS(ring, gens))
        assert is_groebner_basis(gb.elements, ring.order)
        assert is_reduced_basis(gb.elements, ring.order)
        # generators lie in the ideal of the output
        for g in gens:
            assert normal_form(g, gb.elements, ring.order).is_zero()
        checked += 1
    assert checked >= 200


def test_reduced_basis_unique_under_shuffling():
    rng = random.Random(33)
    ring = PolyRing(GF(7), ["x", "y", "z"], DegRevLex(3))
    gens = [ring.parse(s) for s in ["x^2 - y*z", "x*y - z^2", "y^2 - x*z", "x*z - y^2"]]
    reference = [g.key() for g in buchberger_raw(gens, ring.order)]
    for _ in range(20):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert [g.key() for g in buchberger_raw(shuffled, ring.order)] == reference


def test_colon_examples():
    ring = PolyRing(QQ, [f"x{i}" for i in range(1, 7)], Lex(6))
    # zero ideal: (0) : f = (0) in a domain
    assert colon([], ring.parse("x1"), ring, ring.order) == []
    # monomial colon
    got = colon([ring.parse("x1*x2")], ring.parse("x1"), ring, ring.order)
    assert [str(g) for g in got] == ["x2"]


def test_colon_membership_oracle_randomized():
    rng = random.Random(7)
    ring = PolyRing(GF(5), ["x", "y", "z"], DegRevLex(3))
    small = [m for m in product(range(4), repeat=3) if 1 <= sum(m) <= 3]
    checked = 0
    trial = 0
    while checked < 200 and trial < 2000:
        trial += 1
        gens = []
        for _ in range(rng.randrange(1, 3)):
            u = rng.choice(small)
            vs = [m for m in small if sum(m) == sum(u)]
            gens.append(ring.monomial(u) - ring.monomial(rng.choice(vs)))
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        f = ring.monomial(rng.choice(small))
        quotient = colon(gens, f, ring, ring.order)
        gb = buchberger_raw(gens, ring.order)
        # soundness: every generator of the colon multiplies f into the ideal
        for q in quotient:
            assert normal_form(q * f, gb, ring.order).is_zero()
        # completeness on random small elements
        colon_gb = buchberger_raw(quotient, ring.order) if quotient else []
        for _ in range(5):
            h = ring.monomial(rng.choice(small))
            in_colon = normal_form(h, colon_gb, ring.order).is_zero() if colon_gb else False
            multiplies_in = normal_form(h * f, gb, ring.order).is_zero()
            assert in_colon == multiplies_in
        checked += 1
    assert checked >= 200


def test_saturation_examples_and_fixpoint():
    ring = PolyRing(QQ, ["x1", "x2"], DegRevLex(2))
    got = saturate([ring.parse("x1^2*x2")], ring.parse("x1"), ring, ring.order)
    assert [str(g) for g in got] == ["x2"]
    # fixpoint
    again = saturate(got, ring.parse("x1"), ring, ring.order)
    assert ideal_equals(got, again, ring, ring.order)
    # already saturated ideal is unchanged
    sat = saturate([ring.parse("x2")], ring.parse("x1"), ring, ring.order)
    assert ideal_equals(sat, [ring.parse("x2")], ring, ring.order)


def test_lattice_ideal_saturates_into_prime(scroll_ring, scroll_G):
    # the minimal prime (H) contains the saturation of (G) by all variables
    ring = scroll_ring
    H = scroll_G + [ring.parse(s) for s in ["x2*x6-x4^2", "x1*x6-x3*x4", "x1*x5-x3^2"]]
    current = scroll_G
    for i in range(6):
        current = saturate(current, ring.var(i), ring, ring.order)
    assert ideal_contains(H, current, ring, ring.order)


def test_ideal_equality_scalars_and_strictness(scroll_ring, scroll_G):
    ring = scroll_ring
    f = ring.parse("x1*x4 - x2*x3")
    assert ideal_equals([f], [f.scale(5)], ring, ring.order)
    H = scroll_G + [ring.parse(s) for s in ["x2*x6-x4^2", "x1*x6-x3*x4", "x1*x5-x3^2"]]
    assert not ideal_equals(scroll_G, H, ring, ring.order)
    assert ideal_contains(H, scroll_G, ring, ring.order)


def test_divide_exact():
    ring = PolyRing(QQ, ["x", "y"], DegRevLex(2))
    f = ring.parse("x^2 - y^2")
    g = ring.parse("x - y")
    assert divide_exact(f * g, g, ring.order) == f
    with pytest.raises(ArithmeticError):
        divide_exact(ring.parse("x^2"), g, ring.order)


def test_intersection_of_principal_ideals():
    ring = PolyRing(QQ, ["x", "y"], DegRevLex(2))
    got = intersect([ring.parse("x")], [ring.parse("y")], ring, ring.order)
    assert ideal_equals(got, [ring.parse("x*y")], ring, ring.order)


# -- toric ideals ---------------------------------------------------------------


def test_twisted_cubic_against_brute_force():
    mat = [[3, 2, 1, 0], [0, 1, 2, 3]]
    ring = PolyRing(QQ, [f"y{i}" for i in range(1, 5)], DegRevLex(4))
    ideal = toric_ideal(mat, ring)
    # brute force: all quadratic binomial relations y_a y_b - y_c y_d
    brute = set()
    for (a, b) in combinations(range(4), 2):
        for (c, d) in combinations(range(4), 2):
            if {a, b} == {c, d}:
                continue
            if mat[0][a] + mat[0][b] == mat[0][c] + mat[0][d] and \
               mat[1][a] + mat[1][b] == mat[1][c] + mat[1][d]:
                brute.add(frozenset([frozenset([a, b]), frozenset([c, d])]))
    assert len(ideal.gens) == 3
    gb = buchberger_raw(ideal.gens, ring.order)
    for pair in brute:
        (a, b), (c, d) = [tuple(sorted(s)) for s in pair]
        mono1 = [0] * 4
        mono1[a] += 1
        mono1[b] += 1
        mono2 = [0] * 4
        mono2[c] += 1
        mono2[d] += 1
        f = ring.monomial(mono1) - ring.monomial(mono2)
        assert normal_form(f, gb, ring.order).is_zero()


def test_identity_matrix_gives_zero_ideal():
    ring = PolyRing(QQ, ["a", "b", "c"], DegRevLex(3))
    ideal = toric_ideal([[1, 0, 0], [0, 1, 0], [0, 0, 1]], ring)
    assert ideal.gens == []


def test_toric_rejects_non_homogeneous():
    ring = PolyRing(QQ, ["a", "b"], DegRevLex(2))
    with pytest.raises(ValueError):
        toric_ideal([[1, 2]], ring)
    with pytest.raises(ValueError):
        toric_ideal([[1, -1]], ring)


def test_toric_contains_no_monomials(pv_ideal):
    ring = pv_ideal.ring
    gb = buchberger(pv_ideal, ring.order)
    for i in range(9):
        for d in range(1, 5):
            assert not gb.normal_form(ring.var(i) ** d).is_zero()
    for g in pv_ideal.gens:
        assert substitution_vanishes(g, [
            [3, 2, 2, 1, 1, 0, 0, 0, 0],
            [0, 1, 0, 2, 0, 3, 2, 1, 0],
            [0, 0, 1, 0, 2, 0, 1, 2, 3],
        ])


def test_integer_kernel_basis():
    mat = [[3, 2, 1, 0], [0, 1, 2, 3]]
    basis = integer_kernel_basis(mat)
    assert len(basis) == 2
    for u in basis:
        assert all(sum(mat[i][j] * u[j] for j in range(4)) == 0 for i in range(2))
        from math import gcd
        assert gcd(gcd(abs(u[0]), abs(u[1])), gcd(abs(u[2]), abs(u[3]))) == 1


def test_buchberger_rejects_inhomogeneous_public_input():
    ring = PolyRing(QQ, ["x", "y"], DegRevLex(2))
    with pytest.raises(ValueError):
        IdealS(ring, [ring.parse("x^2 + y")])


def test_colon_and_saturation_reject_zero():
    ring = PolyRing(QQ, ["x", "y"], DegRevLex(2))
    with pytest.raises(ValueError):
        colon([ring.parse("x")], ring.zero(), ring, ring.order)
    with pytest.raises(ValueError):
        saturate([ring.parse("x")], ring.zero(), ring, ring.order)
