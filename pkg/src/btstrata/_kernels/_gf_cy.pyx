# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled row reduction over table-encoded finite fields (see ``_gf_py``)."""

import numpy as np


cdef class Tables:
    cdef readonly object add, sub, mul, inv, frob

    def __init__(self, add, sub, mul, inv, frob=None):
        self.add = np.ascontiguousarray(add, dtype=np.int64)
        self.sub = np.ascontiguousarray(sub, dtype=np.int64)
        self.mul = np.ascontiguousarray(mul, dtype=np.int64)
        self.inv = np.ascontiguousarray(inv, dtype=np.int64)
        self.frob = None if frob is None else np.ascontiguousarray(frob, dtype=np.int64)


cdef Py_ssize_t _rref_inplace(long long[:, ::1] m, const long long[:, ::1] sub,
                              const long long[:, ::1] mul, const long long[::1] inv,
                              long long[::1] pivots) noexcept nogil:
    cdef Py_ssize_t nrows = m.shape[0], ncols = m.shape[1]
    cdef Py_ssize_t r = 0, c, i, j
    cdef long long f, pinv, tmp
    for c in range(ncols):
        if r == nrows:
            break
        i = r
        while i < nrows and m[i, c] == 0:
            i += 1
        if i == nrows:
            continue
        if i != r:
            for j in range(ncols):
                tmp = m[r, j]
                m[r, j] = m[i, j]
                m[i, j] = tmp
        pinv = inv[m[r, c]]
        if pinv != 1:
            for j in range(c, ncols):
                m[r, j] = mul[pinv, m[r, j]]
        for i in range(nrows):
            if i != r:
                f = m[i, c]
                if f != 0:
                    for j in range(c, ncols):
                        m[i, j] = sub[m[i, j], mul[f, m[r, j]]]
        pivots[r] = c
        r += 1
    return r


def rref(mat, Tables T):
    cdef long long[:, ::1] m = np.array(mat, dtype=np.int64, order="C", copy=True)
    cdef long long[::1] piv = np.zeros(max(m.shape[0], 1), dtype=np.int64)
    cdef Py_ssize_t r
    r = _rref_inplace(m, T.sub, T.mul, T.inv, piv)
    return np.asarray(m[:r]).copy(), tuple(int(piv[k]) for k in range(r))


def rank(mat, Tables T):
    cdef long long[:, ::1] m = np.array(mat, dtype=np.int64, order="C", copy=True)
    cdef long long[::1] piv = np.zeros(max(m.shape[0], 1), dtype=np.int64)
    return int(_rref_inplace(m, T.sub, T.mul, T.inv, piv))


def lagrangian_profile(basis, Tables T, int depth):
    cdef long long[:, ::1] b = np.ascontiguousarray(basis, dtype=np.int64)
    cdef const long long[::1] frob = T.frob
    cdef Py_ssize_t theta = b.shape[0], width = b.shape[1]
    cdef Py_ssize_t k, i, j, nrows
    cdef long long[:, ::1] stack = np.empty(((depth + 1) * theta, width), dtype=np.int64)
    cdef long long[:, ::1] work = np.empty(((depth + 1) * theta, width), dtype=np.int64)
    cdef long long[::1] piv = np.zeros((depth + 1) * theta, dtype=np.int64)
    dims = []
    for i in range(theta):
        for j in range(width):
            stack[i, j] = b[i, j]
    for k in range(1, depth + 1):
        for i in range(theta):
            for j in range(width):
                stack[k * theta + i, j] = frob[stack[(k - 1) * theta + i, j]]
        nrows = (k + 1) * theta
        for i in range(nrows):
            for j in range(width):
                work[i, j] = stack[i, j]
        dims.append(int(width - _rref_inplace(work[:nrows], T.sub, T.mul, T.inv, piv)))
    return dims
