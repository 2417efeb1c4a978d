"""Pure-Python mod-p dense linear algebra kernels.

Matrices are flat row-major bytearrays (entries in [0, p), p < 256 prime).
The compiled extension `_kernels` exports the same functions; either backend
must produce byte-identical results.
"""

from __future__ import annotations

IMPL = "python"


def _inv(a, p):
    return pow(a, p - 2, p)


def rref(data, nrows, ncols, p):
    """In-place reduced row echelon form; returns (rank, pivot columns)."""
    pivots = []
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if data[i * ncols + c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a, b = piv * ncols, r * ncols
            for j in range(ncols):
                data[a + j], data[b + j] = data[b + j], data[a + j]
        base = r * ncols
        v = data[base + c]
        if v != 1:
            inv = _inv(v, p)
            for j in range(c, ncols):
                data[base + j] = data[base + j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            f = data[i * ncols + c]
            if f:
                off = i * ncols
                for j in range(c, ncols):
                    x = data[off + j] - f * data[base + j]
                    data[off + j] = x % p
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots


def rank(data, nrows, ncols, p):
    """Rank; destroys data."""
    r, _ = rref(data, nrows, ncols, p)
    return r


def left_kernel(data, nrows, ncols, p):
    """Canonical basis of {x : x A = 0} as rows; returns (kdata, knrows).

    The input buffer is not modified.
    """
    w = ncols + nrows
    aug = bytearray(nrows * w)
    for i in range(nrows):
        aug[i * w : i * w + ncols] = data[i * ncols : (i + 1) * ncols]
        aug[i * w + ncols + i] = 1
    r = 0
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if aug[i * w + c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            a, b = piv * w, r * w
            for j in range(w):
                aug[a + j], aug[b + j] = aug[b + j], aug[a + j]
        base = r * w
        v = aug[base + c]
        if v != 1:
            inv = _inv(v, p)
            for j in range(w):
                aug[base + j] = aug[base + j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            f = aug[i * w + c]
            if f:
                off = i * w
                for j in range(w):
                    x = aug[off + j] - f * aug[base + j]
                    aug[off + j] = x % p
        r += 1
        if r == nrows:
            break
    k = nrows - r
    kd = bytearray(k * nrows)
    for i in range(k):
        src = (r + i) * w + ncols
        kd[i * nrows : (i + 1) * nrows] = aug[src : src + nrows]
    rref(kd, k, nrows, p)
    return kd, k


def matmul(a, n, m, b, k, p):
    """(n x m) times (m x k) mod p; returns a new buffer."""
    out = bytearray(n * k)
    for i in range(n):
        arow = a[i * m : (i + 1) * m]
        orow = [0] * k
        for t in range(m):
            f = arow[t]
            if f:
                boff = t * k
                for j in range(k):
                    orow[j] += f * b[boff + j]
        off = i * k
        for j in range(k):
            out[off + j] = orow[j] % p
    return out


def reduce_row(vec, basis, bnrows, ncols, pivots, p):
    """Reduce vec (length ncols) in place modulo an RREF basis."""
    for i in range(bnrows):
        c = pivots[i]
        f = vec[c]
        if f:
            off = i * ncols
            for j in range(ncols):
                x = vec[j] - f * basis[off + j]
                vec[j] = x % p
