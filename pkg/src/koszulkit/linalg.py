"""Exact dense linear algebra used by the graded engines.

Prime-field matrices route through the hot kernels: the compiled extension
`_kernels` when it was built, else the pure-Python `_kernels_py` twin.  Set
KOSZULKIT_PUREPYTHON=1 to force the fallback.  Rational matrices always use
Fraction arithmetic in Python (they only occur in small computations).

Vectors are rows; a matrix represents the map x -> x @ A.
"""

from __future__ import annotations

import os
from fractions import Fraction

if os.environ.get("KOSZULKIT_PUREPYTHON"):
    from . import _kernels_py as K
else:
    try:
        from . import _kernels as K  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as K

BACKEND = K.IMPL


class ModMat:
    """Dense matrix over GF(p), flat row-major bytearray storage."""

    __slots__ = ("data", "nrows", "ncols", "p", "pivots")

    def __init__(self, data, nrows, ncols, p, pivots=None):
        self.data = data
        self.nrows = nrows
        self.ncols = ncols
        self.p = p
        self.pivots = pivots

    @classmethod
    def zeros(cls, nrows, ncols, p):
        return cls(bytearray(nrows * ncols), nrows, ncols, p)

    @classmethod
    def from_rows(cls, rows, ncols, p):
        data = bytearray(len(rows) * ncols)
        off = 0
        for row in rows:
            for j, v in enumerate(row):
                data[off + j] = v % p
            off += ncols
        return cls(data, len(rows), ncols, p)

    def copy(self):
        return ModMat(bytearray(self.data), self.nrows, self.ncols, self.p, self.pivots)

    def row(self, i):
        return self.data[i * self.ncols : (i + 1) * self.ncols]

    def rows_list(self):
        return [list(self.row(i)) for i in range(self.nrows)]

    def rref(self):
        rank, pivots = K.rref(self.data, self.nrows, self.ncols, self.p)
        self.pivots = pivots
        if rank < self.nrows:
            self.data = self.data[: rank * self.ncols]
            self.nrows = rank
        return self

    def rank(self):
        r, _ = K.rref(bytearray(self.data), self.nrows, self.ncols, self.p)
        return r

    def left_kernel(self):
        kd, k = K.left_kernel(self.data, self.nrows, self.ncols, self.p)
        kern = ModMat(kd, k, self.nrows, self.p)
        kern.rref()
        return kern

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("matrix shapes do not match")
        out = K.matmul(self.data, self.nrows, self.ncols, other.data, other.ncols, self.p)
        return ModMat(out, self.nrows, other.ncols, self.p)

    def vecmat(self, vec):
        """Row vector (length nrows) times this matrix."""
        out = K.matmul(bytes(vec), 1, self.nrows, self.data, self.ncols, self.p)
        return out

    def stack(self, other):
        if other.ncols != self.ncols:
            raise ValueError("matrix shapes do not match")
        return ModMat(
            self.data + other.data, self.nrows + other.nrows, self.ncols, self.p
        )

    def reduce_vec(self, vec):
        """Reduce a row vector modulo this RREF basis, in place."""
        if self.pivots is None:
            raise ValueError("basis is not in reduced form")
        K.reduce_row(vec, self.data, self.nrows, self.ncols, self.pivots, self.p)
        return vec

    def reduce_rows(self, basis):
        """Reduce every row of self modulo an RREF basis, in place."""
        for i in range(self.nrows):
            row = bytearray(self.row(i))
            basis.reduce_vec(row)
            self.data[i * self.ncols : (i + 1) * self.ncols] = row
        return self

    def hstack(self, other):
        if other.nrows != self.nrows:
            raise ValueError("matrix shapes do not match")
        w = self.ncols + other.ncols
        data = bytearray(self.nrows * w)
        for i in range(self.nrows):
            data[i * w : i * w + self.ncols] = self.row(i)
            data[i * w + self.ncols : (i + 1) * w] = other.row(i)
        return ModMat(data, self.nrows, w, self.p)

    def scaled_add(self, other, c):
        """self + c * other, entrywise."""
        if (other.nrows, other.ncols) != (self.nrows, self.ncols):
            raise ValueError("matrix shapes do not match")
        p = self.p
        data = bytearray(len(self.data))
        a, b = self.data, other.data
        for i in range(len(data)):
            data[i] = (a[i] + c * b[i]) % p
        return ModMat(data, self.nrows, self.ncols, p)

    def contains(self, vec):
        v = bytearray(vec)
        self.reduce_vec(v)
        return not any(v)

    def col_block(self, a, b):
        """Columns a..b-1 as a new matrix."""
        w = b - a
        data = bytearray(self.nrows * w)
        for i in range(self.nrows):
            data[i * w : (i + 1) * w] = self.data[i * self.ncols + a : i * self.ncols + b]
        return ModMat(data, self.nrows, w, self.p)

    def paste(self, row_off, col_off, other):
        """Overwrite a block with `other`, in place."""
        for i in range(other.nrows):
            dst = (row_off + i) * self.ncols + col_off
            self.data[dst : dst + other.ncols] = other.row(i)
        return self

    def key(self):
        """Canonical key of the row space (matrix must be in RREF)."""
        return (self.nrows, self.ncols, bytes(self.data))

    def __repr__(self):
        return f"<ModMat {self.nrows}x{self.ncols} mod {self.p}>"


class RatMat:
    """Dense matrix over the rationals; rows are lists of Fraction."""

    __slots__ = ("rows", "ncols", "pivots")

    def __init__(self, rows, ncols, pivots=None):
        self.rows = rows
        self.ncols = ncols
        self.pivots = pivots

    @classmethod
    def zeros(cls, nrows, ncols, p=None):
        return cls([[Fraction(0)] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def from_rows(cls, rows, ncols, p=None):
        return cls([[Fraction(v) for v in row] for row in rows], ncols)

    @property
    def nrows(self):
        return len(self.rows)

    def copy(self):
        return RatMat([row[:] for row in self.rows], self.ncols, self.pivots)

    def row(self, i):
        return self.rows[i]

    def rows_list(self):
        return [row[:] for row in self.rows]

    def rref(self):
        rows = self.rows
        ncols = self.ncols
        pivots = []
        r = 0
        for c in range(ncols):
            piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = 1 / rows[r][c]
            if inv != 1:
                rows[r] = [v * inv for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
            if r == len(rows):
                break
        del rows[r:]
        self.pivots = pivots
        return self

    def rank(self):
        return self.copy().rref().nrows

    def left_kernel(self):
        n = self.nrows
        aug = RatMat(
            [row[:] + [Fraction(i == j) for j in range(n)] for i, row in enumerate(self.rows)],
            self.ncols + n,
        )
        rows = aug.rows
        r = 0
        for c in range(self.ncols):
            piv = next((i for i in range(r, n) if rows[i][c]), None)
            if piv is None:
                continue
            rows[r], rows[piv] = rows[piv], rows[r]
            inv = 1 / rows[r][c]
            if inv != 1:
                rows[r] = [v * inv for v in rows[r]]
            for i in range(n):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            r += 1
            if r == n:
                break
        kern = RatMat([rows[i][self.ncols :] for i in range(r, n)], n)
        kern.rref()
        return kern

    def matmul(self, other):
        if self.ncols != other.nrows:
            raise ValueError("matrix shapes do not match")
        out = []
        for row in self.rows:
            orow = [Fraction(0)] * other.ncols
            for t, f in enumerate(row):
                if f:
                    brow = other.rows[t]
                    for j in range(other.ncols):
                        if brow[j]:
                            orow[j] += f * brow[j]
            out.append(orow)
        return RatMat(out, other.ncols)

    def vecmat(self, vec):
        out = [Fraction(0)] * self.ncols
        for t, f in enumerate(vec):
            if f:
                brow = self.rows[t]
                for j in range(self.ncols):
                    if brow[j]:
                        out[j] += f * brow[j]
        return out

    def stack(self, other):
        if other.ncols != self.ncols:
            raise ValueError("matrix shapes do not match")
        return RatMat(self.rows_list() + other.rows_list(), self.ncols)

    def reduce_vec(self, vec):
        if self.pivots is None:
            raise ValueError("basis is not in reduced form")
        for i, c in enumerate(self.pivots):
            f = vec[c]
            if f:
                brow = self.rows[i]
                for j in range(self.ncols):
                    if brow[j]:
                        vec[j] -= f * brow[j]
        return vec

    def reduce_rows(self, basis):
        for row in self.rows:
            basis.reduce_vec(row)
        return self

    def col_block(self, a, b):
        return RatMat([row[a:b] for row in self.rows], b - a)

    def paste(self, row_off, col_off, other):
        for i, row in enumerate(other.rows):
            self.rows[row_off + i][col_off : col_off + other.ncols] = row
        return self

    def hstack(self, other):
        if other.nrows != self.nrows:
            raise ValueError("matrix shapes do not match")
        return RatMat(
            [a + b for a, b in zip(self.rows_list(), other.rows_list())],
            self.ncols + other.ncols,
        )

    def scaled_add(self, other, c):
        if (other.nrows, other.ncols) != (self.nrows, self.ncols):
            raise ValueError("matrix shapes do not match")
        return RatMat(
            [[a + c * b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
            self.ncols,
        )

    def contains(self, vec):
        v = [Fraction(x) for x in vec]
        self.reduce_vec(v)
        return not any(v)

    def key(self):
        return (self.nrows, self.ncols, tuple(tuple(r) for r in self.rows))

    def __repr__(self):
        return f"<RatMat {self.nrows}x{self.ncols}>"


def new_matrix(field, rows, ncols):
    """Matrix over the given field from an iterable of coefficient rows."""
    if field.p is not None:
        return ModMat.from_rows(rows, ncols, field.p)
    return RatMat.from_rows(rows, ncols)


def stack_all(mats, field, ncols):
    """Vertical stack of matrices (may be empty), minimizing copies."""
    mats = [m for m in mats if m.nrows]
    if not mats:
        if field.p is not None:
            return ModMat(bytearray(0), 0, ncols, field.p)
        return RatMat([], ncols)
    if field.p is not None:
        data = bytearray()
        total = 0
        for m in mats:
            data += m.data
            total += m.nrows
        return ModMat(data, total, ncols, field.p)
    rows = []
    for m in mats:
        rows.extend(r[:] for r in m.rows)
    return RatMat(rows, ncols)


def zero_matrix(field, nrows, ncols):
    if field.p is not None:
        return ModMat.zeros(nrows, ncols, field.p)
    return RatMat.zeros(nrows, ncols)
