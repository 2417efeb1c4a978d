"""The quotient ring R = S/I as a computational object.

Graded pieces of R and of its ideals are handled as row spaces over the
standard-monomial basis of each degree.  Finite-dimensional (Artinian)
quotients get a pure linear-algebra engine for colon ideals, annihilators and
minimal generators; other quotients fall back to elimination-order Groebner
computations in the ambient polynomial ring.
"""

from __future__ import annotations

from .groebner import (
    GroebnerBasis,
    IdealS,
    buchberger,
    buchberger_raw,
    colon,
    ideal_equals,
    intersect,
)
from .linalg import ModMat, RatMat, new_matrix, stack_all
from .rings import Polynomial, enumerate_linear_forms, mono_divides, mono_mul


def _rat_block(tensor, r, dim_e):
    return RatMat([tensor.rows[r * dim_e + k][:] for k in range(dim_e)], tensor.ncols)


class QuotientRing:
    """S/I with the reduced Groebner basis of I and graded bases cached."""

    def __init__(self, ambient, defining_gens, check=True):
        self.ambient = ambient
        self.order = ambient.order
        gens = [g for g in defining_gens if not g.is_zero()]
        if check:
            for g in gens:
                if not g.is_homogeneous():
                    raise ValueError(f"defining generator not homogeneous: {g}")
                if g.degree() < 2:
                    raise ValueError(
                        f"defining generator below degree 2 (not inside the "
                        f"square of the maximal ideal): {g}"
                    )
        self.defining = IdealS(ambient, gens)
        self.gb = buchberger(self.defining, self.order)
        self._std = {}
        self._stdidx = {}
        self._varmul = {}
        self._polymul = {}
        self._tensor = {}
        self._top = None
        self._artinian = None

    # -- graded bases ---------------------------------------------------------

    def std_basis(self, d):
        """Standard monomials of degree d, in decreasing term order."""
        if d < 0:
            return []
        if d not in self._std:
            lts = self.gb.leading_monomials
            if d == 0:
                monos = [(0,) * self.ambient.n]
            else:
                prev = self.std_basis(d - 1)
                seen = set()
                monos = []
                for m in prev:
                    for i in range(self.ambient.n):
                        mm = list(m)
                        mm[i] += 1
                        mm = tuple(mm)
                        if mm in seen:
                            continue
                        seen.add(mm)
                        if not any(mono_divides(lt, mm) for lt in lts):
                            monos.append(mm)
            monos.sort(key=self.order.key, reverse=True)
            self._std[d] = monos
            self._stdidx[d] = {m: i for i, m in enumerate(monos)}
        return self._std[d]

    def dim(self, d):
        return len(self.std_basis(d))

    @property
    def is_artinian(self):
        if self._artinian is None:
            covered = set()
            for lt in self.gb.leading_monomials:
                nz = [i for i, e in enumerate(lt) if e]
                if len(nz) == 1:
                    covered.add(nz[0])
            self._artinian = len(covered) == self.ambient.n
        return self._artinian

    @property
    def top_degree(self):
        """Largest degree with a nonzero graded piece (Artinian only)."""
        if self._top is None:
            if not self.is_artinian:
                raise ValueError("top degree only exists for Artinian quotients")
            d = 0
            while self.dim(d + 1) > 0:
                d += 1
            self._top = d
        return self._top

    # -- normal forms and coordinates ----------------------------------------

    def nf(self, f):
        return self.gb.normal_form(f)

    def coords(self, f, d=None):
        """Coordinate row of the class of f in the degree-d standard basis."""
        r = self.nf(f)
        if d is None:
            d = r.degree()
            if d < 0:
                raise ValueError("cannot infer the degree of zero")
        self.std_basis(d)
        basis_idx = self._stdidx[d]
        vec = [self.ambient.field.zero()] * len(self.std_basis(d))
        for m, c in r.terms.items():
            if sum(m) != d:
                raise ValueError("inhomogeneous element in graded coordinates")
            vec[basis_idx[m]] = c
        return vec

    def poly_from_coords(self, vec, d):
        basis = self.std_basis(d)
        terms = {}
        for m, c in zip(basis, vec):
            if c:
                terms[m] = c
        return Polynomial(self.ambient, terms)

    def var_matrix(self, i, d):
        """Matrix of multiplication by variable i from degree d to d + 1."""
        key = (i, d)
        if key not in self._varmul:
            rows = []
            for m in self.std_basis(d):
                mm = list(m)
                mm[i] += 1
                rows.append(self.coords(self.ambient.monomial(mm), d + 1))
            self._varmul[key] = new_matrix(
                self.ambient.field, rows, self.dim(d + 1)
            )
        return self._varmul[key]

    def var_tensor(self, d):
        """All variable matrices at degree d stacked as an n x (dim_d*dim_{d+1})
        matrix, for fast linear-form multiplication maps (prime fields)."""
        if d not in self._tensor:
            n = self.ambient.n
            w = self.dim(d) * self.dim(d + 1)
            data = bytearray(n * w)
            for i in range(n):
                data[i * w : (i + 1) * w] = self.var_matrix(i, d).data
            self._tensor[d] = ModMat(data, n, w, self.ambient.field.p)
        return self._tensor[d]

    def linear_form_matrix(self, coeffs, d):
        """Matrix of multiplication by a linear form (coefficient vector)."""
        fld = self.ambient.field
        key = ("lin", tuple(coeffs), d)
        if key in self._polymul:
            return self._polymul[key]
        if fld.p is not None:
            flat = self.var_tensor(d)
            out = ModMat(bytes(c % fld.p for c in coeffs), 1, self.ambient.n, fld.p).matmul(flat)
            mat = ModMat(out.data, self.dim(d), self.dim(d + 1), fld.p)
        else:
            mat = None
            for i, c in enumerate(coeffs):
                if c:
                    term = self.var_matrix(i, d)
                    mat = term.copy().scaled_add(term, c - 1) if mat is None else mat.scaled_add(term, c)
            if mat is None:
                from .linalg import zero_matrix

                mat = zero_matrix(fld, self.dim(d), self.dim(d + 1))
        self._polymul[key] = mat
        return mat

    def pair_tensor(self, s, t):
        """Multiplication table R_s x R_t -> R_{s+t} on standard monomials,
        as a (dim_s * dim_t) x dim_{s+t} matrix, row-major in (m, m')."""
        key = ("pair", s, t)
        if key not in self._polymul:
            rows = []
            for m in self.std_basis(s):
                for mm in self.std_basis(t):
                    rows.append(self.coords(self.ambient.monomial(mono_mul(m, mm)), s + t))
            self._polymul[key] = new_matrix(self.ambient.field, rows, self.dim(s + t))
        return self._polymul[key]

    def elem_mult_matrix(self, coords, s_elem, s_from):
        """Matrix of multiplication by the degree-s_elem element with the
        given standard-basis coordinates, from degree s_from."""
        coords = tuple(coords)
        key = ("elem", coords, s_elem, s_from)
        if key in self._polymul:
            return self._polymul[key]
        fld = self.ambient.field
        target = s_from + s_elem
        if s_elem == 0:
            c = coords[0] if coords else fld.zero()
            dim = self.dim(s_from)
            mat = new_matrix(
                fld,
                [[c if i == j else fld.zero() for j in range(dim)] for i in range(dim)],
                dim,
            )
        elif s_from == 0:
            mat = new_matrix(fld, [list(coords)], self.dim(target))
        elif s_elem == 1:
            varcoeffs = [fld.zero()] * self.ambient.n
            for idx, m in enumerate(self.std_basis(1)):
                v = next(i for i, e in enumerate(m) if e)
                varcoeffs[v] = coords[idx]
            mat = self.linear_form_matrix(varcoeffs, s_from)
        else:
            tensor = self.pair_tensor(s_from, s_elem)
            dim_e = self.dim(s_elem)
            cmat = new_matrix(fld, [list(coords)], dim_e)
            rows = []
            for r in range(self.dim(s_from)):
                block = ModMat(
                    tensor.data[r * dim_e * tensor.ncols : (r + 1) * dim_e * tensor.ncols],
                    dim_e,
                    tensor.ncols,
                    fld.p,
                ) if fld.p is not None else _rat_block(tensor, r, dim_e)
                rows.append(list(cmat.matmul(block).row(0)))
            mat = new_matrix(fld, rows, self.dim(target))
        self._polymul[key] = mat
        return mat

    def mult_matrix(self, g, d):
        """Matrix of multiplication by a homogeneous g from degree d on."""
        key = (g.key(), d)
        if key not in self._polymul:
            dg = g.degree()
            rows = []
            for m in self.std_basis(d):
                rows.append(self.coords(g.mul_monomial(m), d + dg))
            self._polymul[key] = new_matrix(
                self.ambient.field, rows, self.dim(d + dg)
            )
        return self._polymul[key]

    def empty_piece(self, d):
        from .linalg import zero_matrix

        m = zero_matrix(self.ambient.field, 0, self.dim(d))
        m.pivots = []
        return m

    def full_piece(self, d):
        from .linalg import new_matrix

        fld = self.ambient.field
        dim = self.dim(d)
        one, zero = fld.one(), fld.zero()
        m = new_matrix(fld, [[one if i == j else zero for j in range(dim)] for i in range(dim)], dim)
        m.pivots = list(range(dim))
        return m

    # -- distinguished ideals --------------------------------------------------

    def ideal(self, gens):
        return RIdeal(self, list(gens))

    def zero_ideal(self):
        return RIdeal(self, [])

    def maximal_ideal(self):
        return RIdeal(self, self.ambient.gens())

    def __repr__(self):
        return f"QuotientRing({self.ambient!r} / {len(self.defining.gens)} gens)"


class RIdeal:
    """Homogeneous ideal of a quotient ring, by generators in the ambient ring."""

    def __init__(self, ring, gens, pieces=None):
        for g in gens:
            if not g.is_homogeneous():
                raise ValueError(f"ideal generator not homogeneous: {g}")
        self.ring = ring
        self.gens = gens
        self._pieces = pieces if pieces is not None else {}
        self._pre_gb = None
        self._min_gens = None

    # -- graded pieces ----------------------------------------------------------

    def piece(self, d):
        """RREF basis of the degree-d part, over the standard-monomial basis."""
        if d < 0:
            return self.ring.empty_piece(0)
        if d not in self._pieces:
            R = self.ring
            mats = []
            if d > 0:
                prev = self.piece(d - 1)
                if prev.nrows:
                    for i in range(R.ambient.n):
                        mats.append(prev.matmul(R.var_matrix(i, d - 1)))
            gen_rows = [
                R.coords(g, d)
                for g in self.gens
                if not g.is_zero() and g.degree() == d
            ]
            if gen_rows:
                mats.append(new_matrix(R.ambient.field, gen_rows, R.dim(d)))
            mat = stack_all(mats, R.ambient.field, R.dim(d))
            mat.rref()
            self._pieces[d] = mat
        return self._pieces[d]

    def piece_dim(self, d):
        return self.piece(d).nrows

    def is_zero(self):
        return all(self.ring.nf(g).is_zero() for g in self.gens)

    def max_gen_degree(self):
        return max((g.degree() for g in self.gens), default=0)

    # -- preimage Groebner basis (generic engine) -------------------------------

    def preimage_gb(self):
        """Reduced GB of (gens) + I in the ambient polynomial ring."""
        if self._pre_gb is None:
            R = self.ring
            elems = buchberger_raw(list(self.gens) + R.defining.gens, R.order)
            self._pre_gb = GroebnerBasis(R.ambient, R.order, elems, reduced=True)
        return self._pre_gb

    # -- identity ----------------------------------------------------------------

    def key(self):
        """Canonical hashable key; equal ideals share it."""
        R = self.ring
        if R.is_artinian:
            return tuple(self.piece(d).key() for d in range(R.top_degree + 1))
        return tuple(g.key() for g in self.preimage_gb().elements)

    def linear_span_key(self):
        """Canonical key of the degree-1 part (enough to distinguish ideals
        generated by linear forms)."""
        return self.piece(1).key()

    def equals(self, other):
        if self.ring is not other.ring and self.ring.ambient != other.ring.ambient:
            raise ValueError("ideals from different rings")
        return self.key() == other.key()

    def contains_poly(self, f):
        r = self.ring.nf(f)
        if r.is_zero():
            return True
        d = r.degree()
        if not r.is_homogeneous():
            raise ValueError("membership test needs a homogeneous element")
        return self.piece(d).contains(self.ring.coords(r, d))

    def contains_ideal(self, other):
        return all(self.contains_poly(g) for g in other.gens)

    # -- minimal generators --------------------------------------------------------

    def min_gens(self):
        """Minimal homogeneous generating set, degree by degree."""
        if self._min_gens is None:
            R = self.ring
            D = self.max_gen_degree()
            if R.is_artinian:
                D = min(D, R.top_degree)
            mins = []
            for d in range(D + 1):
                pd = self.piece(d)
                if not pd.nrows:
                    continue
                mats = []
                if d > 0:
                    prev = self.piece(d - 1)
                    if prev.nrows:
                        for i in range(R.ambient.n):
                            mats.append(prev.matmul(R.var_matrix(i, d - 1)))
                grown = stack_all(mats, R.ambient.field, R.dim(d))
                grown.rref()
                if grown.nrows == pd.nrows:
                    continue
                rem = pd.copy()
                rem.reduce_rows(grown)
                rem.rref()
                for i in range(rem.nrows):
                    mins.append(R.poly_from_coords(list(rem.row(i)), d))
            self._min_gens = mins
        return self._min_gens

    def is_linearly_generated(self):
        """True iff every minimal generator has degree 1 (true for (0))."""
        return all(g.degree() == 1 for g in self.min_gens())

    def plus_element(self, w):
        """The ideal self + (w)."""
        return RIdeal(self.ring, self.gens + [w])

    def __repr__(self):
        inner = ", ".join(str(g) for g in self.gens) or "0"
        return f"RIdeal({inner})"


def trim(a):
    """Minimal homogeneous generating set of an ideal of R."""
    return a.min_gens()


def is_linearly_generated(a):
    return a.is_linearly_generated()


# ---------------------------------------------------------------------------
# colon ideals over R


def colon_element(b, w):
    """The colon ideal b : (w) for a nonzero homogeneous w, as an RIdeal with
    a minimal generating set."""
    R = b.ring
    if R.nf(w).is_zero():
        # b : 0 would be the unit ideal of R
        raise ValueError("colon by an element of the defining ideal")
    if R.is_artinian:
        return _colon_pieces(b, [w])
    gens = colon(
        b.preimage_gb().elements if (b.gens or R.defining.gens) else [],
        w,
        R.ambient,
        R.order,
    )
    out = RIdeal(R, [g for g in gens if not R.nf(g).is_zero()])
    return RIdeal(R, out.min_gens(), pieces=out._pieces)


def colon_r(b, a):
    """The colon ideal b : a; a must be nonzero."""
    R = b.ring
    if a.is_zero():
        raise ValueError("colon by the zero ideal is the unit ideal")
    agens = [g for g in a.min_gens() if not R.nf(g).is_zero()]
    if R.is_artinian:
        return _colon_pieces(b, agens)
    current = None
    for g in agens:
        cg = colon(b.preimage_gb().elements, g, R.ambient, R.order)
        current = cg if current is None else intersect(current, cg, R.ambient, R.order)
    out = RIdeal(R, [g for g in current if not R.nf(g).is_zero()])
    return RIdeal(R, out.min_gens(), pieces=out._pieces)


def _colon_pieces(b, mult_gens):
    """Artinian engine: degreewise kernels of the multiplication maps into
    R/b; returns the colon ideal with minimal generators extracted."""
    R = b.ring
    top = R.top_degree
    pieces = {}
    for d in range(top + 1):
        stacked = None
        for g in mult_gens:
            dg = g.degree()
            img_deg = d + dg
            if img_deg <= top:
                C = R.mult_matrix(g, d).copy()
                bp = b.piece(img_deg)
                if bp.nrows:
                    C.reduce_rows(bp)
            else:
                C = _zero_like(R, d, 0)
            stacked = C if stacked is None else stacked.hstack(C)
        pieces[d] = stacked.left_kernel()
    return _ideal_from_pieces(R, pieces)


def _zero_like(R, d, ncols):
    from .linalg import zero_matrix

    return zero_matrix(R.ambient.field, R.dim(d), ncols)


def _ideal_from_pieces(R, pieces):
    """Extract minimal generators from full graded-piece data (Artinian)."""
    top = R.top_degree
    mins = []
    for d in range(top + 1):
        pd = pieces.get(d)
        if pd is None or not pd.nrows:
            continue
        mats = []
        if d > 0:
            prev = pieces.get(d - 1)
            if prev is not None and prev.nrows:
                for i in range(R.ambient.n):
                    mats.append(prev.matmul(R.var_matrix(i, d - 1)))
        grown = stack_all(mats, R.ambient.field, R.dim(d))
        grown.rref()
        if grown.nrows == pd.nrows:
            continue
        rem = pd.copy()
        rem.reduce_rows(grown)
        rem.rref()
        for i in range(rem.nrows):
            mins.append(R.poly_from_coords(list(rem.row(i)), d))
    return RIdeal(R, mins, pieces=pieces)


def annihilator(w, R):
    """The annihilator (0) : w of a nonzero homogeneous element."""
    return colon_element(R.zero_ideal(), w)


# ---------------------------------------------------------------------------
# the linear-annihilator scan


def linear_forms_with_linear_annihilator(R, require_nonzero_annihilator=True):
    """Scan all linear forms (one per scalar class, leading coefficient 1)
    and keep those whose annihilator is generated by linear forms.

    With `require_nonzero_annihilator` (the default) a form whose annihilator
    is zero is dropped; in an Artinian quotient that never happens (the socle
    is a nonzero common annihilator).  Returns forms in scan order.
    """
    fld = R.ambient.field
    if fld.p is None:
        raise ValueError("the scan needs a finite coefficient field")
    if R.is_artinian:
        return [
            w
            for w, ok in _artinian_scan(R)
            if ok
        ]
    out = []
    for w in enumerate_linear_forms(R.ambient):
        ann = annihilator(w, R)
        if ann.is_zero():
            if not require_nonzero_annihilator:
                out.append(w)
            continue
        if ann.is_linearly_generated():
            out.append(w)
    return out


def _artinian_scan(R):
    """Yield (form, has_linear_annihilator) over all normalized linear forms."""
    top = R.top_degree
    n = R.ambient.n
    p = R.ambient.field.p
    tensors = [R.var_tensor(d) for d in range(top + 1)]
    dims = [R.dim(d) for d in range(top + 2)]
    varmats = [[R.var_matrix(i, d) for i in range(n)] for d in range(top)]
    for w in enumerate_linear_forms(R.ambient):
        cvec = bytes(_linear_coeffs(w, n, p))
        W1 = ModMat(ModMat(cvec, 1, n, p).matmul(tensors[1]).data, dims[1], dims[2], p)
        K = W1.left_kernel()
        if K.nrows == 0:
            # Artinian socle is a nonzero annihilator, so the annihilator has
            # generators only in degree >= 2
            yield w, False
            continue
        ok = True
        prev = K
        for d in range(2, top + 1):
            if d < top:
                Wd = ModMat(
                    ModMat(cvec, 1, n, p).matmul(tensors[d]).data, dims[d], dims[d + 1], p
                )
                Kd = Wd.left_kernel()
            else:
                Kd = _full_space(R, d)
            grown_rows = bytearray()
            for i in range(n):
                grown_rows += prev.matmul(varmats[d - 1][i]).data
            grown = ModMat(grown_rows, prev.nrows * n, dims[d], p)
            grown.rref()
            if grown.nrows != Kd.nrows:
                ok = False
                break
            prev = Kd
        yield w, ok


def _full_space(R, d):
    p = R.ambient.field.p
    dim = R.dim(d)
    data = bytearray(dim * dim)
    for i in range(dim):
        data[i * dim + i] = 1
    m = ModMat(data, dim, dim, p)
    m.pivots = list(range(dim))
    return m


def _linear_coeffs(w, n, p):
    vec = [0] * n
    for m, c in w.terms.items():
        for i, e in enumerate(m):
            if e:
                vec[i] = c % p
    return vec


# ---------------------------------------------------------------------------
# variable-permutation automorphisms


def permutation_preserves_ideal(R, perm):
    """Does the variable permutation map the defining ideal onto itself?"""
    permuted = [permute_polynomial(g, perm) for g in R.defining.gens]
    return ideal_equals(permuted, R.defining.gens, R.ambient, R.order)


def permute_polynomial(f, perm):
    """Image of f under x_i -> x_{perm[i]}."""
    out = {}
    for m, c in f.terms.items():
        mm = [0] * len(m)
        for i, e in enumerate(m):
            mm[perm[i]] = e
        out[tuple(mm)] = c
    return Polynomial(f.ring, out)


def apply_permutation(perm, obj, check=True):
    """Apply a defining-ideal-preserving variable permutation to a polynomial
    or an ideal of R."""
    if isinstance(obj, RIdeal):
        R = obj.ring
        if check and not permutation_preserves_ideal(R, perm):
            raise ValueError("permutation does not preserve the defining ideal")
        return RIdeal(R, [permute_polynomial(g, perm) for g in obj.gens])
    if isinstance(obj, Polynomial):
        return permute_polynomial(obj, perm)
    raise TypeError("expected a polynomial or an ideal of R")


def perm_from_cycles(ring, cycles):
    """Permutation (as an index map) from cycles of variable names."""
    perm = list(range(ring.n))
    for cyc in cycles:
        idx = [ring.var_index(nm) for nm in cyc]
        for k, i in enumerate(idx):
            perm[i] = idx[(k + 1) % len(idx)]
    return perm
