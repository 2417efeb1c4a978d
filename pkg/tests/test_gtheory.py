"""G-sets, G-sequences, the colon identity, filtration construction, and
binomial edge ideals."""

import random
from itertools import combinations

import pytest

from koszulkit.filtration import verify_filtration
from koszulkit.groebner import (
    GroebnerBasis,
    IdealS,
    buchberger,
    buchberger_raw,
    colon,
    ideal_equals,
    is_groebner_basis,
)
from koszulkit.gtheory import (
    Graph,
    bei_gset_chain,
    binomial_edge_ideal,
    build_gsequence_filtration,
    colon_gb,
    edge_binomials_are_groebner,
    find_gsequence,
    gseq_colon_set,
    gsequence_filtration_cert,
    is_gset,
    mod_out_gset,
)
from koszulkit.rings import GF, QQ, DegRevLex, Lex, PolyRing


@pytest.fixture(scope="module")
def lexG():
    ring = PolyRing(QQ, [f"x{i}" for i in range(1, 7)], Lex(6))
    gens = [ring.parse(s) for s in ["x1*x4-x2*x3", "x2*x5-x3*x4", "x3*x6-x4*x5"]]
    return GroebnerBasis(ring, ring.order, gens, reduced=True)


@pytest.fixture(scope="module")
def drlH():
    ring = PolyRing(QQ, [f"x{i}" for i in range(1, 7)], DegRevLex(6))
    gens = [ring.parse(s) for s in
            ["x1*x4-x2*x3", "x2*x5-x3*x4", "x3*x6-x4*x5",
             "x2*x6-x4^2", "x1*x6-x3*x4", "x1*x5-x3^2"]]
    return buchberger(IdealS(ring, gens))


def test_tail_sets_are_gsets_under_degrevlex(drlH):
    for j in range(6):
        assert is_gset(drlH, range(j, 6))


def test_empty_set_is_gset(lexG):
    assert is_gset(lexG, ())


def test_no_singleton_gsets_for_lex_scroll(lexG):
    for v in range(6):
        assert not is_gset(lexG, {v})


def test_no_nonempty_gsequences_exhaustive(lexG):
    ring = lexG.ring
    H = list(lexG.elements) + [ring.parse(s) for s in
                               ["x2*x6-x4^2", "x1*x6-x3*x4", "x1*x5-x3^2"]]
    lexH = GroebnerBasis(ring, ring.order, H, reduced=True)
    for gb in (lexG, lexH):
        for r in range(1, 7):
            for sub in combinations(range(6), r):
                if not is_gset(gb, sub):
                    continue
                assert find_gsequence(gb, sub) is None


def test_full_chain_under_degrevlex(drlH):
    seq = find_gsequence(drlH, range(6))
    assert seq is not None and seq.verify()
    assert [len(level) for level in seq.chain] == list(range(6, -1, -1))


def test_find_gsequence_requires_gset(lexG):
    with pytest.raises(ValueError):
        find_gsequence(lexG, {0})


def test_mod_out_empty_set_is_identity(lexG):
    got = mod_out_gset(lexG, ())
    assert sorted(g.key() for g in got.elements) == sorted(g.key() for g in lexG.elements)


def test_mod_out_all_variables_leaves_variables(drlH):
    ring = drlH.ring
    got = mod_out_gset(drlH, range(6))
    expected = sorted(ring.var(i).key() for i in range(6))
    assert sorted(g.key() for g in got.elements) == expected


def test_mod_out_produces_groebner_basis(drlH):
    ring = drlH.ring
    for size in (1, 2, 3):
        X = frozenset(range(6 - size, 6))
        got = mod_out_gset(drlH, X)
        assert is_groebner_basis(got.elements, ring.order)
        # generates (G union X)
        target = buchberger_raw(list(drlH.elements) + [ring.var(i) for i in X],
                                ring.order)
        assert ideal_equals(got.elements, target, ring, ring.order)


def test_colon_gb_against_elimination_oracle(drlH):
    ring = drlH.ring
    X = frozenset(range(3, 6))
    x = 3
    got = colon_gb(drlH, X, x)
    assert is_groebner_basis(got.elements, ring.order)
    base = buchberger_raw(
        list(drlH.elements) + [ring.var(i) for i in X - {x}], ring.order
    )
    oracle = colon(base, ring.var(x), ring, ring.order)
    assert ideal_equals(got.elements, oracle, ring, ring.order)


def test_colon_gb_untouched_when_variable_absent():
    # x divides no element of G', so G'' = G'
    ring = PolyRing(QQ, ["x", "y", "z"], DegRevLex(3))
    gb = buchberger(IdealS(ring, [ring.parse("x*y - z^2")]))
    got = colon_gb(gb, frozenset({2}), 2)
    assert [str(g) for g in got.elements] == ["x*y - z^2"]


def test_gseq_colon_set_identity_randomized():
    """The colon identity (G + X1) : x = (G + X'), against the elimination
    oracle, on randomized quadratic binomial bases with disjoint support."""
    rng = random.Random(271)
    checked = 0
    trial = 0
    while checked < 200 and trial < 4000:
        trial += 1
        n = rng.choice([4, 5])
        ring = PolyRing(GF(5) if trial % 2 else QQ, [f"x{i}" for i in range(n)],
                        DegRevLex(n))
        gens = []
        for _ in range(rng.randrange(1, 3)):
            idx = rng.sample(range(n), 4) if n >= 4 else None
            u = ring.var(idx[0]) * ring.var(idx[1])
            v = ring.var(idx[2]) * ring.var(idx[3])
            gens.append(u - v)
        gens = [g for g in gens if not g.is_zero()]
        if not gens:
            continue
        gb = buchberger(IdealS(ring, gens))
        if not (gb.quadratic and gb.binomial and gb.disjoint_support and gb.elements):
            continue
        seq = find_gsequence(gb, range(n))
        if seq is None:
            continue
        # walk the whole chain, checking the identity at every step
        cur = seq
        while len(cur.chain) > 1:
            x = cur.removed_variable()
            x1 = cur.chain[1]
            xprime = gseq_colon_set(gb, cur, x)
            assert xprime.verify()
            base = buchberger_raw(
                list(gb.elements) + [ring.var(i) for i in x1], ring.order
            )
            lhs = colon(base, ring.var(x), ring, ring.order)
            rhs = list(gb.elements) + [ring.var(i) for i in xprime.variables]
            assert ideal_equals(lhs, rhs, ring, ring.order)
            cur = cur.successor()
        checked += 1
    assert checked >= 200


def test_filtration_members_all_verify(drlH):
    members, witnesses = build_gsequence_filtration(drlH)
    assert frozenset() in members and frozenset(range(6)) in members
    for vs, (x1, x, xprime) in witnesses.items():
        assert x1 < vs and x in vs
        assert xprime in members
    cert = gsequence_filtration_cert(drlH)
    report = verify_filtration(cert)
    assert report.valid
    # the paper's 9 monomial ideals are exactly the members here
    expected = [
        [], [5], [3, 5], [4, 5], [1, 3, 5], [3, 4, 5],
        [2, 3, 4, 5], [1, 2, 3, 4, 5], [0, 1, 2, 3, 4, 5],
    ]
    assert sorted(sorted(m) for m in members) == sorted(expected)


def test_zero_ideal_filtration_is_variable_chain():
    ring = PolyRing(QQ, ["x", "y", "z"], DegRevLex(3))
    gb = buchberger(IdealS(ring, []))
    members, _ = build_gsequence_filtration(gb)
    assert sorted(sorted(m) for m in members) == [[], [0, 1, 2], [1, 2], [2]]


def test_filtration_requires_full_gsequence(lexG):
    with pytest.raises(ValueError):
        build_gsequence_filtration(lexG)


# -- binomial edge ideals -------------------------------------------------------


def test_single_edge():
    ideal = binomial_edge_ideal(Graph(2, [(1, 2)]), QQ)
    assert [str(g) for g in ideal.gens] == ["x1*y2 - x2*y1"]
    assert ideal.gens[0].leading_monomial(ideal.ring.order) == (1, 0, 0, 1)


def test_paths_are_closed_and_chains_verify():
    for n in range(2, 7):
        graph = Graph.path(n)
        ideal = binomial_edge_ideal(graph, QQ)
        assert edge_binomials_are_groebner(ideal)
        gb, seq = bei_gset_chain(graph, QQ)
        assert seq.verify()
        assert len(seq.chain) == 2 * n + 1


def test_complete_graph_closed():
    ideal = binomial_edge_ideal(Graph.complete(3), QQ)
    assert len(ideal.gens) == 3
    assert edge_binomials_are_groebner(ideal)


def test_nonclosed_labeling_detected():
    # the 3-path labeled through vertex 1 (edges 1-2, 1-3) is not closed
    ideal = binomial_edge_ideal(Graph(3, [(1, 2), (1, 3)]), QQ)
    assert not edge_binomials_are_groebner(ideal)
    with pytest.raises(ValueError):
        bei_gset_chain(Graph(3, [(1, 2), (1, 3)]), QQ)


def test_bei_filtrations_verify():
    for n in (3, 4):
        gb, seq = bei_gset_chain(Graph.path(n), QQ)
        cert = gsequence_filtration_cert(gb, seq)
        assert verify_filtration(cert).valid


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(1, 4)])
