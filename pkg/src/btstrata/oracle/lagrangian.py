"""Brute-force enumeration of Lagrangian subspaces and Frobenius-twisted
intersections, used as ground truth for the Lefschetz point counts.

The symplectic form on ``k^(2 theta)`` is ``Omega = [[0, A], [-A, 0]]`` with
``A`` the anti-diagonal identity, i.e. coordinate ``c`` pairs with
``2 theta - 1 - c`` with sign ``+1`` for ``c < theta`` and ``-1`` otherwise.
"""

import itertools
import os
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .. import _kernels
from ..errors import ScaleGuard
from .field import get_field, prime_power

DEFAULT_MAX_WORK = 10 ** 7
WORK_ENV = "BTSTRATA_MAX_WORK"


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace given by its reduced row-echelon basis (the canonical key)."""

    rows: tuple
    pivots: tuple

    @property
    def dim(self):
        return len(self.rows)

    def array(self):
        if not self.rows:
            return np.zeros((0, 0), dtype=np.int64)
        return np.array(self.rows, dtype=np.int64)


def field_tables(field, q0=None):
    frob = field.frobenius_table(q0) if q0 is not None else None
    return _tables_cached(field, q0, frob)


_TABLES = {}


def _tables_cached(field, q0, frob):
    key = (field, q0, _kernels.BACKEND)
    if key not in _TABLES:
        _TABLES[key] = _kernels.Tables(field.add, field.sub, field.mul, field.inv, frob)
    return _TABLES[key]


def echelon(mat, field):
    out, pivots = _kernels.rref(mat, field_tables(field))
    return SubspaceBasis(tuple(tuple(int(x) for x in row) for row in out), pivots)


def gram_matrix(theta, field):
    n = 2 * theta
    omega = np.zeros((n, n), dtype=np.int64)
    minus_one = int(field.neg[1])
    for c in range(n):
        omega[c, n - 1 - c] = 1 if c < theta else minus_one
    return omega


def _matmul(a, b, field):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = field.add[out, field.mul[a[:, k][:, None], b[k, :][None, :]]]
    return out


def is_lagrangian(s, field):
    """Direct check ``M Omega M^T == 0`` with ``dim == theta``."""
    m = s.array()
    theta = m.shape[1] // 2
    if s.dim != theta:
        return False
    gram = _matmul(_matmul(m, gram_matrix(theta, field), field), m.T, field)
    return not gram.any()


def estimated_work(theta, order):
    return order ** (theta * theta)


def _max_work(max_work):
    if max_work is not None:
        return max_work
    env = os.environ.get(WORK_ENV)
    return int(env) if env else DEFAULT_MAX_WORK


def check_scale(theta, order, max_work=None):
    bound = _max_work(max_work)
    work = estimated_work(theta, order)
    if work > bound:
        raise ScaleGuard(
            f"enumerating L({theta}) over GF({order}) needs ~{work} steps, bound is {bound} "
            f"(raise it with --max-work or {WORK_ENV})")


def _solutions(constraints, rhs, nvars, field):
    """All ``x`` in ``k^nvars`` with ``constraints @ x == rhs``."""
    order = field.order
    if nvars == 0:
        if all(int(v) == 0 for v in rhs):
            yield ()
        return
    if not constraints:
        yield from itertools.product(range(order), repeat=nvars)
        return
    aug = np.array([list(c) + [r] for c, r in zip(constraints, rhs)], dtype=np.int64)
    red, pivots = _kernels.rref(aug, field_tables(field))
    if pivots and pivots[-1] == nvars:
        return
    free = [j for j in range(nvars) if j not in pivots]
    red = red.tolist()
    sub, mul = field.sub, field.mul
    for values in itertools.product(range(order), repeat=len(free)):
        x = [0] * nvars
        for j, v in zip(free, values):
            x[j] = v
        for row, pc in zip(red, pivots):
            acc = row[nvars]
            for j, v in zip(free, values):
                if v and row[j]:
                    acc = int(sub[acc, mul[row[j], v]])
            x[pc] = acc
        yield tuple(x)


def _lagrangians_with_pivots(theta, pivots, field):
    n = 2 * theta
    sign = [1 if c < theta else int(field.neg[1]) for c in range(n)]
    mul, neg = field.mul, field.neg
    pivot_set = set(pivots)

    def extend(r, rows_below):
        if r < 0:
            yield tuple(rows_below)
            return
        p = pivots[r]
        free = [c for c in range(p + 1, n) if c not in pivot_set]
        constraints, rhs = [], []
        for other in rows_below:
            # omega(x, y) = sum_c sign[c] x_c y_(n-1-c), linear in x
            coeff = [int(mul[sign[c], other[n - 1 - c]]) for c in range(n)]
            constraints.append([coeff[c] for c in free])
            rhs.append(int(neg[coeff[p]]))
        for sol in _solutions(constraints, rhs, len(free), field):
            row = [0] * n
            row[p] = 1
            for c, v in zip(free, sol):
                row[c] = v
            yield from extend(r - 1, [tuple(row)] + rows_below)

    yield from extend(theta - 1, [])


def enumerate_lagrangians(theta, field, max_work=None, pivot_sets=None):
    """Yield every Lagrangian subspace of ``field^(2 theta)`` exactly once.

    Subspaces are grown one echelon row at a time, from the bottom row up;
    each new row is constrained to be orthogonal to the rows already chosen,
    so every partial span is isotropic and every leaf is a reduced echelon
    basis of a Lagrangian.
    """
    if theta < 0:
        raise ValueError("theta must be non-negative")
    check_scale(theta, field.order, max_work)
    if pivot_sets is None:
        pivot_sets = itertools.combinations(range(2 * theta), theta)
    for pivots in pivot_sets:
        for rows in _lagrangians_with_pivots(theta, pivots, field):
            yield SubspaceBasis(rows, tuple(pivots))


def tau(s, field, q0):
    """Entrywise ``x -> x**q0``, re-echelonized."""
    frob = field.frobenius_table(q0)
    return echelon(frob[s.array()], field)


def intersect(u, w, field):
    """Intersection of two subspaces by a nullspace computation.

    Independent of the Lagrangian duality shortcut used in
    :func:`intersection_profile`.
    """
    a, b = u.array(), w.array()
    if a.shape[0] == 0 or b.shape[0] == 0:
        return SubspaceBasis((), ())
    # x a = y b  <=>  [x | y] @ [[a], [-b]] = 0 ; find left nullspace
    stacked = np.vstack([a, field.neg[b]])
    m = stacked.shape[0]
    aug = np.hstack([stacked, np.eye(m, dtype=np.int64)])
    red, pivots = _kernels.rref(aug, field_tables(field))
    width = a.shape[1]
    null_rows = [row[width:] for row, pc in zip(red.tolist(), pivots) if pc >= width]
    vecs = []
    for coeffs in null_rows:
        x = np.array(coeffs[: a.shape[0]], dtype=np.int64)
        v = np.zeros(width, dtype=np.int64)
        for i, c in enumerate(x):
            if c:
                v = field.add[v, field.mul[c, a[i]]]
        vecs.append(v)
    if not vecs:
        return SubspaceBasis((), ())
    return echelon(np.array(vecs), field)


def intersection_profile(s, field, q0, depth):
    """``[dim(U & tau U), dim(U & tau U & tau^2 U), ...]`` with ``depth`` entries."""
    if depth < 1:
        return []
    return _kernels.lagrangian_profile(s.array(), field_tables(field, q0), depth)


def stratum_index(profile, theta):
    """Stratum ``theta'`` with ``dim(U & ... & tau^(theta'+1) U) == theta - theta'``.

    ``profile[j]`` is the dimension after ``j + 1`` applications of tau.
    Returns ``None`` for points outside S_theta.
    """
    if theta == 0:
        return 0
    if profile[0] < theta - 1:
        return None
    hits = [tp for tp in range(theta + 1) if profile[tp] == theta - tp]
    if len(hits) != 1:
        raise AssertionError(f"profile {profile} does not select a unique stratum")
    return hits[0]


def _count_block(theta, p, e, n, pivot_sets, max_work):
    field = get_field(p, e * n)
    q0 = p ** e
    tables = field_tables(field, q0)
    total = 0
    per = Counter()
    for s in enumerate_lagrangians(theta, field, max_work, pivot_sets):
        prof = _kernels.lagrangian_profile(s.array(), tables, theta + 1)
        tp = stratum_index(prof, theta)
        if tp is None:
            continue
        total += 1
        per[tp] += 1
    return total, per


def oracle_counts(theta, q0, n, max_work=None, jobs=1):
    """Count F_(q0^n)-points of S_theta and of each stratum by brute force.

    Returns ``(total, {theta': count})`` with every stratum index present.
    ``jobs > 1`` splits the enumeration by pivot pattern across processes.
    """
    if n < 1:
        raise ValueError("n must be positive")
    p, e = prime_power(q0)
    field = get_field(p, e * n)
    check_scale(theta, field.order, max_work)
    all_pivots = list(itertools.combinations(range(2 * theta), theta))
    if jobs <= 1 or len(all_pivots) <= 1:
        total, per = _count_block(theta, p, e, n, all_pivots, max_work)
    else:
        from concurrent.futures import ProcessPoolExecutor

        blocks = [all_pivots[i::jobs] for i in range(jobs)]
        total, per = 0, Counter()
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_count_block, theta, p, e, n, b, max_work) for b in blocks]
            for fut in futures:
                t, c = fut.result()
                total += t
                per.update(c)
    per_stratum = {tp: per.get(tp, 0) for tp in range(theta + 1)}
    if sum(per_stratum.values()) != total:
        raise AssertionError("stratum buckets do not partition the points")
    return total, per_stratum
