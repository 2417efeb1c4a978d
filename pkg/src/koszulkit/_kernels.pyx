# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled mod-p dense linear algebra kernels.

Same contract as `_kernels_py`: flat row-major bytearrays, entries in [0, p),
p < 256 prime, byte-identical results to the pure-Python twin.
"""

from libc.stdlib cimport malloc, free

IMPL = "compiled"


cdef inline int _inv(int a, int p):
    cdef int r = 1
    cdef int e = p - 2
    cdef int b = a % p
    while e:
        if e & 1:
            r = (r * b) % p
        b = (b * b) % p
        e >>= 1
    return r


def rref(data, int nrows, int ncols, int p):
    """In-place reduced row echelon form; returns (rank, pivot columns)."""
    if nrows == 0 or ncols == 0:
        return 0, []
    cdef unsigned char[::1] m = data
    cdef int r = 0, c, i, j, piv, f, v, base, off
    cdef unsigned char tmp
    pivots = []
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i * ncols + c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = m[piv * ncols + j]
                m[piv * ncols + j] = m[r * ncols + j]
                m[r * ncols + j] = tmp
        base = r * ncols
        v = m[base + c]
        if v != 1:
            v = _inv(v, p)
            for j in range(c, ncols):
                m[base + j] = <unsigned char>((m[base + j] * v) % p)
        for i in range(nrows):
            if i == r:
                continue
            f = m[i * ncols + c]
            if f:
                f = p - f
                off = i * ncols
                for j in range(c, ncols):
                    m[off + j] = <unsigned char>((m[off + j] + f * m[base + j]) % p)
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return r, pivots


def rank(data, int nrows, int ncols, int p):
    """Rank; destroys data."""
    r, _ = rref(data, nrows, ncols, p)
    return r


def left_kernel(data, int nrows, int ncols, int p):
    """Canonical basis of {x : x A = 0} as rows; returns (kdata, knrows)."""
    if nrows == 0:
        return bytearray(0), 0
    if ncols == 0:
        ident = bytearray(nrows * nrows)
        for ii in range(nrows):
            ident[ii * nrows + ii] = 1
        return ident, nrows
    cdef int w = ncols + nrows
    aug = bytearray(nrows * w)
    cdef unsigned char[::1] m = aug
    cdef const unsigned char[::1] src = data
    cdef int r = 0, c, i, j, piv, f, v
    cdef unsigned char tmp
    for i in range(nrows):
        for j in range(ncols):
            m[i * w + j] = src[i * ncols + j]
        m[i * w + ncols + i] = 1
    for c in range(ncols):
        piv = -1
        for i in range(r, nrows):
            if m[i * w + c]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(w):
                tmp = m[piv * w + j]
                m[piv * w + j] = m[r * w + j]
                m[r * w + j] = tmp
        v = m[r * w + c]
        if v != 1:
            v = _inv(v, p)
            for j in range(w):
                m[r * w + j] = <unsigned char>((m[r * w + j] * v) % p)
        for i in range(nrows):
            if i == r:
                continue
            f = m[i * w + c]
            if f:
                f = p - f
                for j in range(w):
                    m[i * w + j] = <unsigned char>((m[i * w + j] + f * m[r * w + j]) % p)
        r += 1
        if r == nrows:
            break
    cdef int k = nrows - r
    kd = bytearray(k * nrows)
    cdef unsigned char[::1] kv = kd if k else bytearray(1)
    for i in range(k):
        for j in range(nrows):
            kv[i * nrows + j] = m[(r + i) * w + ncols + j]
    rref(kd, k, nrows, p)
    return kd, k


def matmul(a, int n, int m, b, int k, int p):
    """(n x m) times (m x k) mod p; returns a new buffer."""
    out = bytearray(n * k)
    if n == 0 or m == 0 or k == 0:
        return out
    cdef unsigned char[::1] o = out
    cdef const unsigned char[::1] av = a
    cdef const unsigned char[::1] bv = b
    cdef int i, j, t, f, boff, off
    cdef long *acc = <long *> malloc(k * sizeof(long))
    if acc == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            for j in range(k):
                acc[j] = 0
            for t in range(m):
                f = av[i * m + t]
                if f:
                    boff = t * k
                    for j in range(k):
                        acc[j] += f * bv[boff + j]
            off = i * k
            for j in range(k):
                o[off + j] = <unsigned char>(acc[j] % p)
    finally:
        free(acc)
    return out


def reduce_row(vec, basis, int bnrows, int ncols, pivots, int p):
    """Reduce vec (length ncols) in place modulo an RREF basis."""
    if bnrows == 0 or ncols == 0:
        return None
    cdef unsigned char[::1] v = vec
    cdef const unsigned char[::1] bs = basis if bnrows else bytearray(1)
    cdef int i, j, c, f, off
    for i in range(bnrows):
        c = pivots[i]
        f = v[c]
        if f:
            f = p - f
            off = i * ncols
            for j in range(ncols):
                v[j] = <unsigned char>((v[j] + f * bs[off + j]) % p)
    return None
