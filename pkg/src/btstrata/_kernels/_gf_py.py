"""Pure-Python row reduction over table-encoded finite fields.

Reference implementation of the kernel API; ``_gf_cy`` must agree with it
element for element.
"""

import numpy as np


class Tables:
    __slots__ = ("add", "sub", "mul", "inv", "frob")

    def __init__(self, add, sub, mul, inv, frob=None):
        self.add = np.asarray(add).tolist()
        self.sub = np.asarray(sub).tolist()
        self.mul = np.asarray(mul).tolist()
        self.inv = np.asarray(inv).tolist()
        self.frob = None if frob is None else np.asarray(frob).tolist()


def _rref_rows(rows, T):
    sub, mul, inv = T.sub, T.mul, T.inv
    nrows = len(rows)
    ncols = len(rows[0]) if rows else 0
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        i = r
        while i < nrows and rows[i][c] == 0:
            i += 1
        if i == nrows:
            continue
        rows[r], rows[i] = rows[i], rows[r]
        prow = rows[r]
        pinv = inv[prow[c]]
        if pinv != 1:
            mrow = mul[pinv]
            for j in range(c, ncols):
                prow[j] = mrow[prow[j]]
        for i in range(nrows):
            if i != r:
                row = rows[i]
                f = row[c]
                if f:
                    mf = mul[f]
                    for j in range(c, ncols):
                        row[j] = sub[row[j]][mf[prow[j]]]
        pivots.append(c)
        r += 1
    return r, pivots


def rref(mat, T):
    """Reduced row-echelon form; returns ``(nonzero rows as int64 array, pivots)``."""
    mat = np.asarray(mat, dtype=np.int64)
    rows = mat.tolist()
    r, pivots = _rref_rows(rows, T)
    out = np.array(rows[:r], dtype=np.int64).reshape(r, mat.shape[1])
    return out, tuple(pivots)


def rank(mat, T):
    rows = np.asarray(mat, dtype=np.int64).tolist()
    return _rref_rows(rows, T)[0]


def lagrangian_profile(basis, T, depth):
    """``[dim(U & tau U), dim(U & tau U & tau^2 U), ...]`` up to ``depth`` iterates.

    Uses ``dim(U_0 & ... & U_j) = 2 theta - rank[U_0; ...; U_j]``, valid because
    every ``tau^k U`` is Lagrangian and so equals its own orthogonal.
    """
    basis = np.asarray(basis, dtype=np.int64).tolist()
    frob = T.frob
    width = len(basis[0])
    stack = [list(row) for row in basis]
    cur = basis
    dims = []
    for _ in range(depth):
        cur = [[frob[x] for x in row] for row in cur]
        stack.extend(list(row) for row in cur)
        dims.append(width - _rref_rows([list(row) for row in stack], T)[0])
    return dims
