"""Fields, term orders, polynomials, the text format, and form enumeration."""

import random
from fractions import Fraction
from itertools import product

import pytest

from koszulkit.rings import (
    GF,
    QQ,
    Block,
    DegRevLex,
    Lex,
    ParseError,
    PolyRing,
    compare_monomials,
    enumerate_linear_forms,
    linear_form_count,
    mono_mul,
)

RNG_CASES = 300


def random_mono(rng, n, maxdeg=4):
    return tuple(rng.randrange(maxdeg + 1) for _ in range(n))


def brute_degrevlex_gt(u, v):
    """Definition, verbatim: bigger degree wins; on ties the largest index
    with different exponents must carry the smaller exponent."""
    if sum(u) != sum(v):
        return sum(u) > sum(v)
    for i in reversed(range(len(u))):
        if u[i] != v[i]:
            return u[i] < v[i]
    return False


def test_degrevlex_matches_definition_on_all_degree2_monomials():
    order = DegRevLex(3)
    monos = [m for m in product(range(3), repeat=3) if sum(m) == 2]
    for u in monos:
        for v in monos:
            got = compare_monomials(order, u, v)
            if brute_degrevlex_gt(u, v):
                assert got == 1
            elif brute_degrevlex_gt(v, u):
                assert got == -1
            else:
                assert got == 0 and u == v


def test_degrevlex_spec_example():
    order = DegRevLex(3)
    assert compare_monomials(order, (1, 0, 1), (0, 2, 0)) == -1  # x1x3 < x2^2


def test_lex_leading_term_of_scroll_binomial():
    ring = PolyRing(QQ, [f"x{i}" for i in range(1, 7)], Lex(6))
    f = ring.parse("x1*x4 - x2*x3")
    assert f.leading_monomial() == (1, 0, 0, 1, 0, 0)


def test_compare_reflexive():
    order = Lex(4)
    m = (1, 2, 0, 3)
    assert compare_monomials(order, m, m) == 0


def test_arity_mismatch_rejected():
    with pytest.raises(ValueError):
        compare_monomials(Lex(3), (1, 0), (0, 1))


@pytest.mark.parametrize("make", [
    lambda n: Lex(n),
    lambda n: DegRevLex(n),
    lambda n: Lex(n, list(reversed(range(n)))),
    lambda n: DegRevLex(n, list(reversed(range(n)))),
    lambda n: Block((0,), DegRevLex(n)),
    lambda n: Block((n - 1, 0), Lex(n)),
])
def test_order_axioms(make):
    rng = random.Random(11)
    n = 4
    order = make(n)
    one = (0,) * n
    for _ in range(RNG_CASES):
        u, v, w = (random_mono(rng, n) for _ in range(3))
        cu, cv = order.cmp(u, v), order.cmp(v, u)
        assert cu == -cv  # antisymmetric and total
        assert (cu == 0) == (u == v)
        # multiplicative
        assert order.cmp(mono_mul(u, w), mono_mul(v, w)) == cu
        # 1 is minimal
        if u != one:
            assert order.cmp(u, one) == 1


def test_block_order_eliminates_front():
    order = Block((1,), DegRevLex(3))
    assert order.cmp((5, 1, 5), (9, 0, 9)) == 1  # any front beats no front


def test_polynomial_ring_axioms():
    rng = random.Random(5)
    ring = PolyRing(GF(7), ["x", "y", "z"], DegRevLex(3))

    def rand_poly():
        return ring.from_terms(
            {random_mono(rng, 3, 2): rng.randrange(1, 7) for _ in range(rng.randrange(4))}
        )

    for _ in range(RNG_CASES):
        f, g, h = rand_poly(), rand_poly(), rand_poly()
        assert (f + g) + h == f + (g + h)
        assert f * (g + h) == f * g + f * h
        assert (f * g) * h == f * (g * h)
        assert f * g == g * f


def test_homogeneous_product_degrees():
    rng = random.Random(6)
    ring = PolyRing(QQ, ["x", "y"], DegRevLex(2))
    for _ in range(100):
        d1, d2 = rng.randrange(1, 4), rng.randrange(1, 4)
        f = ring.from_terms({(i, d1 - i): rng.randrange(-3, 4) for i in range(d1 + 1)})
        g = ring.from_terms({(i, d2 - i): rng.randrange(-3, 4) for i in range(d2 + 1)})
        assert f.is_homogeneous() and g.is_homogeneous()
        p = f * g
        assert p.is_homogeneous()
        if not p.is_zero():
            assert p.degree() == d1 + d2


# -- parsing -----------------------------------------------------------------


def test_parse_paper_style_product():
    ring = PolyRing(GF(3), list("abcdefghijkl"), DegRevLex(12))
    f = ring.parse("a*(b-j)")
    assert f == ring.var(0) * (ring.var(1) - ring.var(9))


def test_parse_zero():
    ring = PolyRing(QQ, ["x"], Lex(1))
    assert ring.parse("0").is_zero()


def test_parse_binomial_support():
    ring = PolyRing(QQ, [f"x{i}" for i in range(1, 7)], Lex(6))
    f = ring.parse("x1*x4-x2*x3")
    assert set(f.terms) == {(1, 0, 0, 1, 0, 0), (0, 1, 1, 0, 0, 0)}


def test_parse_powers_and_unary_minus():
    ring = PolyRing(QQ, ["x", "y"], DegRevLex(2))
    assert ring.parse("-x^2 + 2*y^2") == -(ring.var(0) ** 2) + ring.var(1) ** 2 * 2


def test_parse_error_reports_position():
    ring = PolyRing(QQ, ["x"], Lex(1))
    with pytest.raises(ParseError) as err:
        ring.parse("x + \n  q")
    assert err.value.line == 2 and err.value.col == 3


def test_parse_rejects_implicit_multiplication():
    ring = PolyRing(QQ, ["x", "y"], Lex(2))
    with pytest.raises(ParseError):
        ring.parse("2x")
    with pytest.raises(ParseError):
        ring.parse("x y")


def test_print_parse_roundtrip():
    rng = random.Random(9)
    for field in (QQ, GF(3), GF(7)):
        ring = PolyRing(field, ["x", "y", "z"], DegRevLex(3))
        for _ in range(200):
            f = ring.from_terms(
                {random_mono(rng, 3, 3): rng.randrange(-6, 7) for _ in range(rng.randrange(5))}
            )
            assert ring.parse(f.to_text()) == f


def test_rational_text_clears_denominators():
    ring = PolyRing(QQ, ["x", "y"], DegRevLex(2))
    f = ring.from_terms({(1, 0): Fraction(1, 2), (0, 1): Fraction(3, 4)})
    text = f.to_text()
    assert "/" not in text
    assert ring.parse(text) == f.scale(4)
    g = ring.from_terms({(1, 0): Fraction(-4)})
    assert ring.parse(g.to_text()) == g


# -- linear form enumeration ---------------------------------------------------


def test_linear_form_count_gf3_12vars():
    assert linear_form_count(3, 12) == 265720


def test_enumerate_small_examples():
    ring = PolyRing(GF(2), ["x1"], Lex(1))
    assert [str(f) for f in enumerate_linear_forms(ring)] == ["x1"]
    ring = PolyRing(GF(3), ["x1", "x2"], Lex(2))
    forms = list(enumerate_linear_forms(ring))
    assert len(forms) == 4
    brute = set()
    for coeffs in product(range(3), repeat=2):
        if coeffs == (0, 0):
            continue
        # normalize: first nonzero coefficient scaled to 1
        lead = next(c for c in coeffs if c)
        inv = 1 if lead == 1 else 2
        brute.add(tuple(c * inv % 3 for c in coeffs))
    got = set()
    for f in forms:
        got.add((f.coeff((1, 0)), f.coeff((0, 1))))
    assert got == brute


@pytest.mark.parametrize("p,n", [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (3, 4)])
def test_enumerate_covers_all_classes_exhaustively(p, n):
    ring = PolyRing(GF(p), [f"x{i}" for i in range(n)], DegRevLex(n))
    forms = list(enumerate_linear_forms(ring))
    assert len(forms) == linear_form_count(p, n)
    seen = set()
    for f in forms:
        vec = tuple(f.coeff(tuple(1 if j == i else 0 for j in range(n))) for i in range(n))
        for c in range(1, p):
            scaled = tuple(v * c % p for v in vec)
            assert scaled not in seen  # pairwise non-proportional
        seen.add(vec)
    # every nonzero vector is proportional to exactly one representative
    all_vecs = {v for v in product(range(p), repeat=n) if any(v)}
    covered = set()
    for f in forms:
        vec = tuple(f.coeff(tuple(1 if j == i else 0 for j in range(n))) for i in range(n))
        for c in range(1, p):
            covered.add(tuple(v * c % p for v in vec))
    assert covered == all_vecs


def test_enumerate_rejects_infinite_field():
    ring = PolyRing(QQ, ["x"], Lex(1))
    with pytest.raises(ValueError):
        list(enumerate_linear_forms(ring))


def test_prime_field_validation():
    with pytest.raises(ValueError):
        GF(6)
    assert GF(2).p == 2 and QQ.p is None
