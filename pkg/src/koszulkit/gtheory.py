"""Variable subsets compatible with a binomial Groebner basis, chains of
them, the constructive colon identity they satisfy, and the monomial Koszul
filtrations this produces; plus binomial edge ideals of graphs.

A subset X of the variables is a *G-set* for a Groebner basis G when every
variable of X dividing some leading term forces a variable of X dividing the
trailing part (divisibility into 0 counts).  A *G-sequence* is a G-set that
can be shrunk to the empty set one variable at a time through G-sets.
"""

from __future__ import annotations

from .groebner import GroebnerBasis, IdealS, is_groebner_basis
from .rings import Lex, Polynomial, mono_div


def _divides_poly(var, f_terms):
    """Does the variable divide every term (vacuously true for zero)?"""
    return all(m[var] > 0 for m in f_terms)


def is_gset(gb, variables):
    """The defining divisibility condition, checked directly."""
    vs = set(variables)
    for g in gb.elements:
        lt = g.leading_monomial(gb.order)
        tail = [m for m in g.terms if m != lt]
        for x in vs:
            if lt[x] > 0 and not any(_divides_poly(y, tail) for y in vs):
                return False
    return True


def find_gsequence(gb, variables):
    """A witness chain X = X_0 > X_1 > ... > empty of G-sets, if one exists.

    Exhaustive depth-first search over one-element removals with memoized
    failures; greedy removal is not known to be complete.  Removal candidates
    are tried largest-first in the order's variable permutation, so the
    witness is deterministic.
    """
    vs = frozenset(variables)
    if not is_gset(gb, vs):
        raise ValueError("the given variable set is not a G-set")
    ranked = sorted(vs, key=gb.order.variable_rank)
    failed = set()

    def dfs(current):
        if not current:
            return [frozenset()]
        if current in failed:
            return None
        for x in sorted(current, key=gb.order.variable_rank):
            nxt = current - {x}
            if not is_gset(gb, nxt):
                continue
            chain = dfs(nxt)
            if chain is not None:
                return [current] + chain
        failed.add(current)
        return None

    chain = dfs(vs)
    if chain is None:
        return None
    return GSequence(gb, chain)


class GSequence:
    """A G-set with a witness chain down to the empty set."""

    def __init__(self, gb, chain):
        self.gb = gb
        self.chain = [frozenset(x) for x in chain]

    @property
    def variables(self):
        return self.chain[0]

    def successor(self):
        """The G-sequence one level down the chain."""
        if len(self.chain) < 2:
            raise ValueError("the empty G-sequence has no successor")
        return GSequence(self.gb, self.chain[1:])

    def removed_variable(self):
        (x,) = self.chain[0] - self.chain[1]
        return x

    def verify(self):
        """Re-check every level against the defining condition."""
        if self.chain[-1]:
            return False
        for a, b in zip(self.chain, self.chain[1:]):
            if not (b < a and len(a - b) == 1):
                return False
        return all(is_gset(self.gb, level) for level in self.chain)

    def __repr__(self):
        return f"GSequence({[sorted(c) for c in self.chain]})"


def mod_out_gset(gb, variables):
    """Groebner basis of (G union X): the X-free parts of G plus X itself.

    Terms meeting a variable of X drop out of each element; if the input
    basis is reduced, so is the output.
    """
    if not is_gset(gb, variables):
        raise ValueError("the given variable set is not a G-set")
    ring = gb.ring
    vs = sorted(variables)
    out = []
    for g in gb.elements:
        kept = {m: c for m, c in g.terms.items() if all(m[x] == 0 for x in vs)}
        if kept:
            out.append(Polynomial(ring, kept))
    for x in vs:
        out.append(ring.var(x))
    out.sort(key=lambda f: gb.order.key(f.leading_monomial(gb.order)))
    return GroebnerBasis(ring, gb.order, out, reduced=gb.reduced)


def colon_gb(gb, variables, x):
    """Groebner basis of (G union X1) : x, where X1 = X minus {x}: divide out
    x wherever it divides a whole element of the basis of (G union X1)."""
    vs = frozenset(variables)
    if x not in vs:
        raise ValueError("the colon variable must lie in the G-set")
    x1 = vs - {x}
    if not is_gset(gb, vs) or not is_gset(gb, x1):
        raise ValueError("both variable sets must be G-sets")
    gprime = mod_out_gset(gb, x1)
    ring = gb.ring
    out = []
    for f in gprime.elements:
        if _divides_poly(x, list(f.terms)):
            xmono = tuple(1 if i == x else 0 for i in range(ring.n))
            out.append(Polynomial(ring, {mono_div(m, xmono): c for m, c in f.terms.items()}))
        else:
            out.append(f)
    seen = set()
    uniq = []
    for f in sorted(out, key=lambda f: gb.order.key(f.leading_monomial(gb.order))):
        if f.key() not in seen:
            seen.add(f.key())
            uniq.append(f)
    return GroebnerBasis(ring, gb.order, uniq, reduced=False)


def gseq_colon_set(gb, gseq, x=None):
    """For a reduced quadratic binomial disjoint-support basis and a
    G-sequence X with successor X1 = X minus {x}: the variable set X' with
    (G union X1) : x = (G union X'), returned as a G-sequence whose chain
    removes the new variables one at a time down to X1's chain."""
    if not (gb.reduced and gb.quadratic and gb.binomial and gb.disjoint_support):
        raise ValueError(
            "the colon identity needs a reduced quadratic binomial basis "
            "with disjoint-support terms"
        )
    if x is None:
        x = gseq.removed_variable()
    x1 = gseq.chain[1]
    lam = []
    for g in gb.elements:
        lt = g.leading_monomial(gb.order)
        tail = [m for m in g.terms if m != lt]
        lead_free = all(lt[v] == 0 for v in x1)
        # a variable divides the zero tail vacuously
        tail_hit = not tail or any(m[v] > 0 for m in tail for v in x1)
        if lead_free and tail_hit and lt[x] > 0:
            # normal form modulo X1 is the bare leading term, divisible by x
            lam.append(lt)
    new_vars = set()
    for u in lam:
        xmono = tuple(1 if i == x else 0 for i in range(gb.ring.n))
        q = mono_div(u, xmono)
        (v,) = [i for i, e in enumerate(q) if e]
        new_vars.add(v)
    xprime = frozenset(x1 | new_vars)
    added = sorted(new_vars - x1, key=gb.order.variable_rank)
    chain = []
    cur = set(xprime)
    chain.append(frozenset(cur))
    for v in added:
        cur.remove(v)
        chain.append(frozenset(cur))
    assert chain[-1] == x1
    chain = chain[:-1] + gseq.chain[1:]
    return GSequence(gb, chain)


def build_gsequence_filtration(gb, full_chain=None):
    """Worklist closure producing a monomial Koszul filtration certificate:
    every discovered G-sequence contributes the ideal of its variables, with
    the witness pair (predecessor ideal, colon variable set).

    Requires the full variable set to be a G-sequence (found by search when
    no chain is supplied).  Returns (members, witnesses): members is a list
    of variable frozensets, witnesses maps a set X to (X1, X') with
    (G + X1) : x = (G + X').
    """
    ring = gb.ring
    allvars = frozenset(range(ring.n))
    if full_chain is None:
        full_chain = find_gsequence(gb, allvars)
        if full_chain is None:
            raise ValueError("the full variable set is not a G-sequence")
    if full_chain.variables != allvars:
        raise ValueError("the seed chain must start from all variables")
    members = {}
    witnesses = {}
    queue = [full_chain]
    while queue:
        seq = queue.pop()
        key = seq.variables
        if key in members:
            continue
        if not seq.verify():
            raise AssertionError("constructed chain failed the G-set re-check")
        members[key] = seq
        if not key:
            continue
        succ = seq.successor()
        x = seq.removed_variable()
        colon_seq = gseq_colon_set(gb, seq, x)
        witnesses[key] = (succ.variables, x, colon_seq.variables)
        queue.append(succ)
        queue.append(colon_seq)
    ordered = sorted(members, key=lambda s: (len(s), sorted(s)))
    return ordered, witnesses


def gsequence_filtration_cert(gb, full_chain=None):
    """Run the worklist closure and package the result as a monomial Koszul
    filtration certificate over S/(G), with witness pairs recorded."""
    from .filtration import FiltrationCert
    from .quotient import QuotientRing, RIdeal

    members, witnesses = build_gsequence_filtration(gb, full_chain)
    R = QuotientRing(gb.ring, gb.elements)
    ring = gb.ring

    def var_ideal(vs):
        return RIdeal(R, [ring.var(v) for v in sorted(vs)])

    levels = {}
    for vs in members:
        levels.setdefault(len(vs), []).append(var_ideal(vs))
    max_level = max(levels) if levels else 0
    level_list = [levels.get(i, []) for i in range(max_level + 1)]
    wit = {}
    for vs, (x1, _x, xprime) in witnesses.items():
        a = var_ideal(vs)
        key = "|".join(sorted(g.to_text() for g in a.gens))
        wit[key] = ([ring.var(v) for v in sorted(x1)], [ring.var(v) for v in sorted(xprime)])
    return FiltrationCert(R, "koszul", level_list, wit)


# ---------------------------------------------------------------------------
# binomial edge ideals


class Graph:
    """Simple graph on vertices 1..n with unordered edges."""

    def __init__(self, n, edges):
        self.n = n
        es = set()
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge ({i},{j}) out of range")
            es.add((min(i, j), max(i, j)))
        self.edges = sorted(es)

    @classmethod
    def path(cls, n):
        return cls(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def complete(cls, n):
        return cls(n, [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)])

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges})"


def binomial_edge_ideal(graph, field):
    """The ideal (x_i y_j - x_j y_i over edges) in k[x_1..x_n, y_1..y_n],
    with the lex order x_1 > ... > x_n > y_1 > ... > y_n attached."""
    from .rings import PolyRing

    n = graph.n
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    ring = PolyRing(field, names, Lex(2 * n))
    gens = []
    for i, j in graph.edges:
        xi, yj = ring.var(i - 1), ring.var(n + j - 1)
        xj, yi = ring.var(j - 1), ring.var(n + i - 1)
        gens.append(xi * yj - xj * yi)
    return IdealS(ring, gens)


def edge_binomials_are_groebner(ideal):
    """Buchberger check: do the edge binomials already form a basis?
    (Holds exactly for closed labelings.)"""
    return is_groebner_basis(ideal.gens, ideal.ring.order)


def bei_gset_chain(graph, field):
    """The alternating chain {y_1, x_1, y_2, x_2, ...} > {x_1, y_2, ...} >
    ... > {x_n} > {} for a closed graph's edge binomials, as a G-sequence."""
    ideal = binomial_edge_ideal(graph, field)
    if not edge_binomials_are_groebner(ideal):
        raise ValueError("edge binomials fail the Buchberger check; the "
                         "labeling is not closed")
    gb = GroebnerBasis(ideal.ring, ideal.ring.order, ideal.gens, reduced=True)
    n = graph.n
    ascending = []
    current = []
    for i in range(n, 0, -1):
        current = [ideal.ring.var_index(f"x{i}")] + current
        ascending.append(frozenset(current))
        current = [ideal.ring.var_index(f"y{i}")] + current
        ascending.append(frozenset(current))
    chain = list(reversed(ascending)) + [frozenset()]
    seq = GSequence(gb, chain)
    if not seq.verify():
        raise AssertionError("alternating chain failed the G-set check")
    return gb, seq
