# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled inner loops.  Signatures mirror ``_pykernels`` exactly.

Tables are int8 arrays of length n indexed by discrete log; a log of -1
stands for the zero element, whose term contributes trace 0.
"""

import numpy as np
cimport numpy as cnp
from libc.stdint cimport int8_t, int64_t

cnp.import_array()


cdef inline void _row_counts(const int8_t[::1] ta, Py_ssize_t la, Py_ssize_t u,
                             const int8_t[::1] tb, Py_ssize_t lb, Py_ssize_t v,
                             Py_ssize_t n, int p, int64_t* out) noexcept nogil:
    cdef Py_ssize_t i, ia, ib
    cdef int t
    for i in range(p):
        out[i] = 0
    # logs >= 0 are taken mod n; -1 (zero element) stays as is
    ia = la % n if la >= 0 else la
    ib = lb % n if lb >= 0 else lb
    if la < 0 and lb < 0:
        out[0] = n
        return
    if la < 0:
        for i in range(n):
            out[tb[ib]] += 1
            ib += v
            if ib >= n:
                ib -= n
        return
    if lb < 0:
        for i in range(n):
            out[ta[ia]] += 1
            ia += u
            if ia >= n:
                ia -= n
        return
    for i in range(n):
        t = ta[ia] + tb[ib]
        if t >= p:
            t -= p
        out[t] += 1
        ia += u
        if ia >= n:
            ia -= n
        ib += v
        if ib >= n:
            ib -= n


cdef inline Py_ssize_t _step(Py_ssize_t e, Py_ssize_t n) noexcept:
    e = e % n
    return e + n if e < 0 else e


def trace_counts(const int8_t[::1] ta, Py_ssize_t la, Py_ssize_t u,
                 const int8_t[::1] tb, const int64_t[::1] lbs, Py_ssize_t v, int p):
    cdef Py_ssize_t n = ta.shape[0], r, rows = lbs.shape[0]
    u, v = _step(u, n), _step(v, n)
    out = np.zeros((rows, p), dtype=np.int64)
    cdef int64_t[:, ::1] o = out
    with nogil:
        for r in range(rows):
            _row_counts(ta, la, u, tb, lbs[r], v, n, p, &o[r, 0])
    return out


def weight_histogram(const int8_t[::1] ta, Py_ssize_t la, Py_ssize_t u,
                     const int8_t[::1] tb, const int64_t[::1] lbs, Py_ssize_t v, int p):
    cdef Py_ssize_t n = ta.shape[0], r, rows = lbs.shape[0]
    cdef int64_t buf[64]
    u, v = _step(u, n), _step(v, n)
    hist = np.zeros(n + 1, dtype=np.int64)
    cdef int64_t[::1] h = hist
    if p > 64:
        raise ValueError("characteristic too large for the compiled kernel")
    with nogil:
        for r in range(rows):
            _row_counts(ta, la, u, tb, lbs[r], v, n, p, buf)
            h[n - buf[0]] += 1
    return hist


def pair_sums(const int64_t[::1] zech, Py_ssize_t u, Py_ssize_t v):
    """Logs of a^(iu) + c a^(ju) and a^(iv) + c a^(jv) for i < j, c in {1, 2}.

    Rows are ordered by (i, j, c).  Characteristic 3 only: c = 2 = -1 is the
    shift by n/2 in log space.
    """
    cdef Py_ssize_t n = zech.shape[0], half = n // 2
    cdef Py_ssize_t total = n * (n - 1), k = 0, i, j, c, x, y, d
    ii = np.empty(total, dtype=np.int64)
    jj = np.empty(total, dtype=np.int64)
    cc = np.empty(total, dtype=np.int64)
    l1 = np.empty(total, dtype=np.int64)
    l2 = np.empty(total, dtype=np.int64)
    cdef int64_t[::1] I = ii, J = jj, C = cc, L1 = l1, L2 = l2
    cdef int64_t z
    with nogil:
        for i in range(n):
            for j in range(i + 1, n):
                for c in range(1, 3):
                    I[k] = i
                    J[k] = j
                    C[k] = c
                    x = (i * u) % n
                    y = (j * u) % n
                    if c == 2:
                        y = (y + half) % n
                    d = y - x
                    if d < 0:
                        d += n
                    z = zech[d]
                    L1[k] = -1 if z < 0 else (x + z) % n
                    x = (i * v) % n
                    y = (j * v) % n
                    if c == 2:
                        y = (y + half) % n
                    d = y - x
                    if d < 0:
                        d += n
                    z = zech[d]
                    L2[k] = -1 if z < 0 else (x + z) % n
                    k += 1
    return ii, jj, cc, l1, l2
