"""Buchberger's algorithm, reduced Groebner bases, and ideal arithmetic in
the polynomial ring: normal forms, colon ideals via elimination, saturation,
ideal equality, and toric ideals from integer matrices.
"""

from __future__ import annotations

import heapq
from fractions import Fraction

from .linalg import RatMat
from .rings import (
    Block,
    DegRevLex,
    Lex,
    Polynomial,
    mono_degree,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
)


class IdealS:
    """Homogeneous ideal of the polynomial ring, given by generators."""

    def __init__(self, ring, gens, require_homogeneous=True):
        gens = [g for g in gens if not g.is_zero()]
        if require_homogeneous:
            for g in gens:
                if not g.is_homogeneous():
                    raise ValueError(f"generator is not homogeneous: {g}")
        self.ring = ring
        self.gens = gens

    def __repr__(self):
        return f"IdealS({', '.join(str(g) for g in self.gens)})"


class GroebnerBasis:
    """A Groebner basis with its order and structural flags."""

    def __init__(self, ring, order, elements, reduced=False):
        self.ring = ring
        self.order = order
        self.elements = elements
        self.reduced = reduced
        self._lts = None

    @property
    def leading_monomials(self):
        if self._lts is None:
            self._lts = [g.leading_monomial(self.order) for g in self.elements]
        return self._lts

    @property
    def quadratic(self):
        return all(g.degree() == 2 for g in self.elements)

    @property
    def binomial(self):
        return all(g.num_terms() <= 2 for g in self.elements)

    @property
    def disjoint_support(self):
        for g in self.elements:
            monos = list(g.terms)
            if len(monos) == 2 and any(e for e in mono_gcd(monos[0], monos[1])):
                return False
        return True

    def normal_form(self, f):
        return normal_form(f, self.elements, self.order)

    def contains(self, f):
        return self.normal_form(f).is_zero()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GroebnerBasis[{len(self.elements)} elements, {self.order!r}]"


def normal_form(f, reducers, order):
    """The remainder of f under division by `reducers`: no remaining term is
    divisible by any reducer's leading term.  Reducers are tried in list
    order, so the result is deterministic; for a Groebner basis it is the
    unique normal form."""
    ring = f.ring
    fld = ring.field
    table = [
        (g.leading_monomial(order), g.leading(order)[1], g)
        for g in reducers
        if not g.is_zero()
    ]
    work = dict(f.terms)
    out = {}
    while work:
        m = max(work, key=order.key)
        c = work.pop(m)
        hit = None
        for lt, lc, g in table:
            if mono_divides(lt, m):
                hit = (lt, lc, g)
                break
        if hit is None:
            out[m] = c
            continue
        lt, lc, g = hit
        q = mono_div(m, lt)
        factor = fld.div(c, lc)
        for gm, gc in g.terms.items():
            if gm == lt:
                continue
            mm = mono_mul(gm, q)
            s = fld.sub(work.get(mm, fld.zero()), fld.mul(factor, gc))
            if s:
                work[mm] = s
            elif mm in work:
                del work[mm]
    return Polynomial(ring, out)


def s_polynomial(f, g, order):
    fld = f.ring.field
    lf, cf = f.leading(order)
    lg, cg = g.leading(order)
    lcm = mono_lcm(lf, lg)
    a = f.mul_monomial(mono_div(lcm, lf), fld.inv(cf))
    b = g.mul_monomial(mono_div(lcm, lg), fld.inv(cg))
    return a - b


def _interreduce(basis, order):
    """Minimalize + tail-reduce a Groebner basis into the reduced one."""
    basis = [g.monic(order) for g in basis if not g.is_zero()]
    basis.sort(key=lambda g: order.key(g.leading_monomial(order)))
    minimal = []
    for g in basis:
        lt = g.leading_monomial(order)
        if any(mono_divides(h.leading_monomial(order), lt) for h in minimal):
            continue
        minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        r = normal_form(g, others, order).monic(order)
        reduced.append(r)
    reduced.sort(key=lambda g: order.key(g.leading_monomial(order)))
    return reduced


def buchberger_raw(gens, order):
    """Reduced Groebner basis of (gens); no homogeneity requirement.

    Normal selection strategy (smallest lcm degree, then lcm in the order,
    then input index); Buchberger's product and chain criteria prune pairs.
    """
    if not gens:
        return []
    ring = gens[0].ring
    G = []
    seen = set()
    for g in gens:
        if g.is_zero():
            continue
        g = g.monic(order)
        if g.key() not in seen:
            seen.add(g.key())
            G.append(g)
    if not G:
        return []
    lts = [g.leading_monomial(order) for g in G]

    heap = []
    pending = set()

    def push_pairs(j):
        for i in range(j):
            lcm = mono_lcm(lts[i], lts[j])
            heapq.heappush(heap, (mono_degree(lcm), order.key(lcm), i, j))
            pending.add((i, j))

    for j in range(len(G)):
        push_pairs(j)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lcm = mono_lcm(lts[i], lts[j])
        if lcm == mono_mul(lts[i], lts[j]):
            continue  # product criterion
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(lts[k], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a not in pending and b not in pending:
                    skip = True  # chain criterion
                    break
        if skip:
            continue
        s = s_polynomial(G[i], G[j], order)
        r = normal_form(s, G, order)
        if not r.is_zero():
            G.append(r.monic(order))
            lts.append(r.leading_monomial(order))
            push_pairs(len(G) - 1)
    return _interreduce(G, order)


def buchberger(ideal, order=None):
    """The unique reduced Groebner basis of a homogeneous ideal."""
    order = order or ideal.ring.order
    elements = buchberger_raw(ideal.gens, order)
    return GroebnerBasis(ideal.ring, order, elements, reduced=True)


def is_groebner_basis(polys, order):
    """Independent check: every S-polynomial reduces to zero."""
    polys = [g for g in polys if not g.is_zero()]
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j], order)
            if not normal_form(s, polys, order).is_zero():
                return False
    return True


def is_reduced_basis(polys, order):
    """Monic, and no term of any element divisible by another's lead."""
    lts = [g.leading_monomial(order) for g in polys]
    for i, g in enumerate(polys):
        if g.leading(order)[1] != g.ring.field.one():
            return False
        for m in g.terms:
            for j, lt in enumerate(lts):
                if i != j and mono_divides(lt, m):
                    return False
    return True


# ---------------------------------------------------------------------------
# elimination machinery


def _extend_order(order, n):
    """Rebuild an order at arity n (original variables keep their roles; new
    trailing variables are appended least-significant)."""
    extra = tuple(range(order.n, n))
    if isinstance(order, Lex):
        return Lex(n, order.perm + extra)
    if isinstance(order, DegRevLex):
        return DegRevLex(n, order.perm + extra)
    if isinstance(order, Block):
        return Block(order.front, _extend_order(order.back, n))
    raise TypeError(f"cannot extend order {order!r}")


def _lift(f, big):
    pad = big.n - f.ring.n
    return Polynomial(big, {m + (0,) * pad: c for m, c in f.terms.items()})


def _project(f, ring):
    return Polynomial(ring, {m[: ring.n]: c for m, c in f.terms.items()})


def _eliminate_last(gens, ring, order):
    """Reduced GB of (gens) in ring[t] under a block order with t in front;
    returns the elements not involving t, projected back to `ring`."""
    big, t = gens[0].ring, gens[0].ring.n - 1
    elim_order = Block((t,), _extend_order(order, big.n))
    gb = buchberger_raw(gens, elim_order)
    out = []
    for g in gb:
        if all(m[t] == 0 for m in g.terms):
            out.append(_project(g, ring))
    return out


def intersect(a_gens, b_gens, ring, order):
    """Generators of (a_gens) intersected with (b_gens), via t-elimination."""
    big, _ = ring.extended()
    t = big.var(big.n - 1)
    one = big.one()
    lifted = [t * _lift(g, big) for g in a_gens]
    lifted += [(one - t) * _lift(g, big) for g in b_gens]
    if not lifted:
        return []
    return _eliminate_last(lifted, ring, order)


def divide_exact(f, g, order):
    """Quotient f/g when g divides f; raises on inexact division."""
    ring = f.ring
    fld = ring.field
    lg, cg = g.leading(order)
    work = dict(f.terms)
    quot = {}
    while work:
        m = max(work, key=order.key)
        c = work[m]
        if not mono_divides(lg, m):
            raise ArithmeticError("inexact polynomial division")
        q = mono_div(m, lg)
        factor = fld.div(c, cg)
        quot[q] = factor
        for gm, gc in g.terms.items():
            mm = mono_mul(gm, q)
            s = fld.sub(work.get(mm, fld.zero()), fld.mul(factor, gc))
            if s:
                work[mm] = s
            elif mm in work:
                del work[mm]
    return Polynomial(ring, quot)


def colon(a_gens, f, ring, order):
    """Generators of (a_gens) : f, via intersection with (f)."""
    if f.is_zero():
        raise ValueError("colon by the zero polynomial")
    inter = intersect(a_gens, [f], ring, order)
    return [divide_exact(g, f, order) for g in inter]


def saturate(a_gens, f, ring, order):
    """Generators of (a_gens) : f^infinity, via the t*f - 1 trick."""
    if f.is_zero():
        raise ValueError("saturation by the zero polynomial")
    big, _ = ring.extended()
    t = big.var(big.n - 1)
    lifted = [_lift(g, big) for g in a_gens]
    lifted.append(t * _lift(f, big) - big.one())
    return _eliminate_last(lifted, ring, order)


def ideal_equals(a_gens, b_gens, ring, order):
    """True iff the reduced Groebner bases coincide."""
    ga = buchberger_raw(list(a_gens), order)
    gb = buchberger_raw(list(b_gens), order)
    return [g.terms for g in ga] == [g.terms for g in gb]


def ideal_contains(a_gens, b_gens, ring, order):
    """True iff (a_gens) contains every element of b_gens."""
    ga = buchberger_raw(list(a_gens), order)
    return all(normal_form(g, ga, order).is_zero() for g in b_gens)


# ---------------------------------------------------------------------------
# toric ideals


def integer_kernel_basis(mat):
    """Primitive integer basis of {u : mat . u = 0}, via fraction-free
    elimination of the transpose; rows are deterministic (RREF-derived)."""
    if not mat:
        return []
    m = len(mat)
    n = len(mat[0])
    transpose = [[Fraction(mat[i][j]) for i in range(m)] for j in range(n)]
    kern = RatMat(transpose, m).left_kernel()
    basis = []
    for row in kern.rows:
        lcm = 1
        for v in row:
            g = _gcd_int(lcm, v.denominator)
            lcm = lcm // g * v.denominator
        ints = [int(v * lcm) for v in row]
        g = 0
        for v in ints:
            g = _gcd_int(g, abs(v))
        if g > 1:
            ints = [v // g for v in ints]
        lead = next((v for v in ints if v), 0)
        if lead < 0:
            ints = [-v for v in ints]
        basis.append(ints)
    return basis


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


def toric_ideal(mat, ring, saturation_order=None):
    """The toric ideal of an integer matrix whose columns give the exponents
    of the defining monomials.

    Restricted to the homogeneous non-negative case: entries >= 0 and all
    column sums equal.  Computed from a lattice kernel basis, then saturated
    by each variable in turn; the result is order-independent.
    """
    if not mat or not mat[0]:
        raise ValueError("empty matrix")
    n = len(mat[0])
    if n != ring.n:
        raise ValueError("matrix width must match the ring variable count")
    if any(len(row) != n for row in mat):
        raise ValueError("ragged matrix")
    if any(v < 0 for row in mat for v in row):
        raise ValueError("matrix entries must be non-negative")
    sums = {sum(row[j] for row in mat) for j in range(n)}
    if len(sums) != 1:
        raise ValueError("column sums differ: the toric ideal would not be homogeneous")

    basis = integer_kernel_basis(mat)
    gens = []
    for u in basis:
        plus = tuple(max(v, 0) for v in u)
        minus = tuple(max(-v, 0) for v in u)
        gens.append(ring.monomial(plus) - ring.monomial(minus))
    gens = [g for g in gens if not g.is_zero()]
    order = ring.order
    current = gens
    for i in saturation_order if saturation_order is not None else range(ring.n):
        current = saturate(current, ring.var(i), ring, order)
    elements = buchberger_raw(current, order)
    return IdealS(ring, elements)


def substitution_vanishes(g, mat):
    """Does g vanish under x_j -> prod t_i^mat[i][j]?  (binomials only)"""
    monos = list(g.terms)
    if len(monos) == 1:
        return False
    u, v = monos
    m = len(mat)
    for i in range(m):
        if sum(mat[i][j] * u[j] for j in range(len(u))) != sum(
            mat[i][j] * v[j] for j in range(len(v))
        ):
            return False
    return True
