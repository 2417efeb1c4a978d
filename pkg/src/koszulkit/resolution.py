"""Degree-truncated graded minimal free resolutions over R, Betti tables,
linearity tests, and Hilbert series of monomial quotients.

Resolutions are computed by pure graded linear algebra: free modules carry
generator degrees, maps are assembled degree by degree over standard-monomial
coordinates, kernels come from exact row reduction.  The resolved module is
the cyclic module R/a, so the displayed tables line up with the usual
resolution printouts for an ideal.
"""

from __future__ import annotations

from .linalg import new_matrix, stack_all
from .rings import mono_degree, mono_divides, mono_div


class BettiTable:
    """Graded Betti numbers beta_{i,j} of R/a, truncated to i <= steps and
    j <= cutoff; entries with j = cutoff are lower bounds (flagged)."""

    def __init__(self, entries, steps, cutoff):
        self.entries = dict(entries)
        self.steps = steps
        self.cutoff = cutoff

    def get(self, i, j):
        return self.entries.get((i, j), 0)

    def unreliable(self, i, j):
        return j >= self.cutoff

    def total(self, i):
        return sum(v for (ii, _), v in self.entries.items() if ii == i)

    def row(self, r):
        """Entries with j - i == r, as a list over i = 0..steps."""
        return [self.get(i, i + r) for i in range(self.steps + 1)]

    def rows_present(self):
        return sorted({j - i for (i, j) in self.entries})

    def render(self):
        cols = list(range(self.steps + 1))
        rows = self.rows_present()
        if not rows:
            rows = [0]
        lines = []
        head = ["     "] + [f"{i:>6}" for i in cols]
        lines.append("".join(head))
        tot = ["total"] + [f"{self.total(i):>6}" for i in cols]
        lines.append("".join(tot))
        for r in range(min(rows), max(rows) + 1):
            cells = []
            for i in cols:
                v = self.get(i, i + r)
                if v == 0:
                    cells.append(f"{'.':>6}")
                else:
                    mark = "+" if self.unreliable(i, i + r) else ""
                    cells.append(f"{str(v) + mark:>6}")
            lines.append("".join([f"{r}:".ljust(5)] + cells))
        return "\n".join(lines)

    def __repr__(self):
        return f"BettiTable(steps={self.steps}, cutoff={self.cutoff})"


class _FreeModule:
    """Graded free module over R: generator degrees plus, per generator, its
    image in the previous module as a list of per-block coordinate vectors."""

    def __init__(self, R, gen_degrees, images=None):
        self.R = R
        self.gen_degrees = list(gen_degrees)
        self.images = images  # per gen: list over target gens of coords or None
        self._dims = {}

    def dim(self, j):
        if j not in self._dims:
            self._dims[j] = sum(self.R.dim(j - d) for d in self.gen_degrees)
        return self._dims[j]

    def offsets(self, j):
        """Starting column of each generator block at internal degree j."""
        out = []
        off = 0
        for d in self.gen_degrees:
            out.append(off)
            off += self.R.dim(j - d)
        return out

    def apply_variable(self, mat, i, j):
        """Multiply a matrix of degree-j vectors by variable i, blockwise."""
        R = self.R
        from .linalg import zero_matrix

        out = zero_matrix(R.ambient.field, mat.nrows, self.dim(j + 1))
        src_off = self.offsets(j)
        tgt_off = self.offsets(j + 1)
        for k, d in enumerate(self.gen_degrees):
            sdim = R.dim(j - d)
            if sdim == 0:
                continue
            block = mat.col_block(src_off[k], src_off[k] + sdim)
            out.paste(0, tgt_off[k], block.matmul(R.var_matrix(i, j - d)))
        return out

    def map_matrix(self, tgt, j):
        """Matrix of the map into `tgt` at internal degree j (rows = images
        of the (generator, standard monomial) basis)."""
        R = self.R
        from .linalg import zero_matrix

        out = zero_matrix(R.ambient.field, self.dim(j), tgt.dim(j))
        row_off = self.offsets(j)
        col_off = tgt.offsets(j)
        for k, dgk in enumerate(self.gen_degrees):
            if R.dim(j - dgk) == 0:
                continue
            for h, dgh in enumerate(tgt.gen_degrees):
                comp = self.images[k][h]
                if comp is None or R.dim(j - dgh) == 0:
                    continue
                M = R.elem_mult_matrix(comp, dgk - dgh, j - dgk)
                out.paste(row_off[k], col_off[h], M)
        return out

    def split_vector(self, vec, j):
        """Per-generator-block components of a flattened degree-j vector,
        with None for zero blocks."""
        comps = []
        off = 0
        for d in self.gen_degrees:
            dim = self.R.dim(j - d)
            block = list(vec[off : off + dim])
            comps.append(block if any(block) else None)
            off += dim
        return comps


def _grow_sub(R, fmod, sub_prev, j):
    """Row space of R_1 times a subspace of (fmod)_{j-1}, as an RREF basis."""
    mats = []
    if sub_prev is not None and sub_prev.nrows:
        for i in range(R.ambient.n):
            mats.append(fmod.apply_variable(sub_prev, i, j - 1))
    grown = stack_all(mats, R.ambient.field, fmod.dim(j))
    grown.rref()
    return grown


def _min_gens_of_pieces(R, fmod, pieces, D, stop_off_degree=None):
    """Minimal generators (degree -> list of vectors) of a graded submodule
    given by RREF pieces up to degree D.  With `stop_off_degree` set, returns
    None as soon as a generator appears in any other degree (degrees are
    processed in increasing order, so the scan aborts early)."""
    out = {}
    for j in sorted(pieces):
        if j > D:
            continue
        pj = pieces[j]
        if pj is None or not pj.nrows:
            continue
        grown = _grow_sub(R, fmod, pieces.get(j - 1), j)
        if grown.nrows == pj.nrows:
            continue
        if stop_off_degree is not None and j != stop_off_degree:
            return None
        rem = pj.copy()
        rem.reduce_rows(grown)
        rem.rref()
        out[j] = rem.rows_list()
    return out


def betti_truncated(a, steps, cutoff=None, stop_off_strand_above=None):
    """Graded Betti numbers of the cyclic module R/a, for homological steps
    0..steps and internal degrees <= cutoff.

    Default cutoff: steps + (max generator degree of a) + 2.  Raises when the
    cutoff cannot certify the requested steps.  With `stop_off_strand_above`
    set to a degree d0, computation aborts early once a generator of some
    syzygy module falls off the strand j = i - 1 + d0, returning None.
    """
    R = a.ring
    mins = a.min_gens()
    d0 = max((g.degree() for g in mins), default=0)
    D = cutoff if cutoff is not None else steps + d0 + 2
    if D < steps + d0:
        raise ValueError(
            f"degree cutoff {D} cannot certify {steps} steps for generators "
            f"of degree {d0}"
        )
    entries = {(0, 0): 1}
    fmod = _FreeModule(R, [0])
    pieces = {j: a.piece(j) for j in range(D + 1)}

    for i in range(1, steps + 1):
        strand = None
        if stop_off_strand_above is not None:
            strand = i - 1 + stop_off_strand_above
        gens_by_deg = _min_gens_of_pieces(R, fmod, pieces, D, stop_off_degree=strand)
        if gens_by_deg is None:
            return None
        for j in sorted(gens_by_deg):
            entries[(i, j)] = len(gens_by_deg[j])
        if i == steps:
            break
        new_degs = []
        new_images = []
        for j in sorted(gens_by_deg):
            for v in gens_by_deg[j]:
                new_degs.append(j)
                new_images.append(fmod.split_vector(v, j))
        nxt = _FreeModule(R, new_degs, new_images)
        new_pieces = {}
        for j in range(D + 1):
            if nxt.dim(j) == 0:
                new_pieces[j] = new_matrix(R.ambient.field, [], 0)
                new_pieces[j].rref()
                continue
            new_pieces[j] = nxt.map_matrix(fmod, j).left_kernel()
        fmod = nxt
        pieces = new_pieces
    return BettiTable(entries, steps, D)


def res_looks_linear(a, steps, cutoff=None):
    """True iff the truncated resolution of a stays on its linear strand:
    every computed beta_{i,j} of R/a with i >= 1 has j = i - 1 + d0, where d0
    is the common degree of a's minimal generators."""
    mins = a.min_gens()
    degs = {g.degree() for g in mins}
    if len(degs) > 1:
        raise ValueError("linearity test needs generators in a single degree")
    if not degs:
        return True
    d0 = degs.pop()
    table = betti_truncated(a, steps, cutoff, stop_off_strand_above=d0)
    return table is not None


# ---------------------------------------------------------------------------
# Hilbert series of monomial quotients


class HilbertSeries:
    """numerator / (1 - T)^denominator_exponent, numerator an integer poly."""

    def __init__(self, numerator, denominator_exponent):
        self.numerator = list(numerator)
        while self.numerator and self.numerator[-1] == 0:
            self.numerator.pop()
        self.denominator_exponent = denominator_exponent

    def reduced(self):
        """Cancel all common factors of (1 - T)."""
        num = list(self.numerator)
        n = self.denominator_exponent
        while n > 0 and num and sum(num) == 0:
            # synthetic division by (1 - T)
            out = [0] * (len(num) - 1)
            carry = 0
            for k in range(len(num) - 1):
                carry = num[k] + carry
                out[k] = carry
            num = out
            n -= 1
        return HilbertSeries(num, n)

    def coefficients(self, upto):
        """Power-series coefficients through degree `upto`."""
        coeffs = [0] * (upto + 1)
        for k, c in enumerate(self.numerator):
            if k <= upto:
                coeffs[k] = c
        for _ in range(self.denominator_exponent):
            for k in range(1, upto + 1):
                coeffs[k] += coeffs[k - 1]
        return coeffs

    def __eq__(self, other):
        a, b = self.reduced(), other.reduced()
        return (
            a.numerator == b.numerator
            and a.denominator_exponent == b.denominator_exponent
        )

    def __str__(self):
        terms = []
        for k, c in enumerate(self.numerator):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                t = f"{mag}T" if k == 1 else f"{mag}T^{k}"
                terms.append(t if not terms and c > 0 else ("+ " if c > 0 else "- ") + t)
        num = " ".join(terms) if terms else "0"
        if self.denominator_exponent == 0:
            return num
        return f"({num}) / (1 - T)^{self.denominator_exponent}"

    def __repr__(self):
        return f"HilbertSeries({self.numerator}, {self.denominator_exponent})"


def _minimalize_monos(monos):
    out = []
    for m in sorted(monos, key=lambda m: (mono_degree(m), m)):
        if not any(mono_divides(g, m) for g in out):
            out.append(m)
    return out


def _poly_mul_1_minus_T(coeffs, d):
    """coeffs * (1 - T^d)."""
    out = coeffs + [0] * d
    for k, c in enumerate(coeffs):
        out[k + d] -= c
    return out


def _numerator(monos, n, memo):
    monos = tuple(_minimalize_monos(monos))
    if monos in memo:
        return memo[monos]
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in monos]
    coprime = all(
        not (supports[i] & supports[j])
        for i in range(len(monos))
        for j in range(i + 1, len(monos))
    )
    if coprime:
        out = [1]
        for m in monos:
            out = _poly_mul_1_minus_T(out, mono_degree(m))
        memo[monos] = out
        return out
    counts = [0] * n
    for s in supports:
        if len(s) > 1:
            for i in s:
                counts[i] += 1
    pivot = max(range(n), key=lambda i: counts[i])
    pv = tuple(1 if i == pivot else 0 for i in range(n))
    plus = [m for m in monos if not mono_divides(pv, m)] + [pv]
    quot = [mono_div(m, pv) if mono_divides(pv, m) else m for m in monos]
    a = _numerator(tuple(plus), n, memo)
    b = _numerator(tuple(quot), n, memo)
    out = [0] * max(len(a), len(b) + 1)
    for k, c in enumerate(a):
        out[k] += c
    for k, c in enumerate(b):
        out[k + 1] += c
    while out and out[-1] == 0:
        out.pop()
    memo[monos] = out
    return out


def hilbert_series(ideal):
    """Hilbert series of S/J for a monomial ideal J, as numerator/(1-T)^n,
    by pivot-splitting recursion on the minimal monomial generators."""
    ring = ideal.ring
    monos = []
    for g in ideal.gens:
        if not g.is_monomial():
            raise ValueError(f"non-monomial generator: {g}")
        monos.append(next(iter(g.terms)))
    num = _numerator(tuple(monos), ring.n, {})
    return HilbertSeries(num, ring.n)


def dim_graded_piece(R, d):
    """Number of standard monomials of R in degree d."""
    return R.dim(d)
