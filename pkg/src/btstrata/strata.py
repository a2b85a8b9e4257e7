"""Cohomology of the closed stratum S_theta via its stratification by
parabolically induced Coxeter varieties.

The E1 page of the stratification spectral sequence is built in two
independent ways (Harish-Chandra induction of the Coxeter tables, and the
closed-form bipartition lists), then split into the A/B eigenspaces and the
finer A0/A1, B0/B1 pieces.  The final cohomology and Lefschetz point counts
are polynomials in q.
"""

from collections import Counter
from dataclasses import dataclass, field
from typing import NamedTuple

from .coxeter import FrobEigenvalue, coxeter_cohomology
from .harish_chandra import induce
from .partitions import bipartition
from .qpoly import ZERO, Q, QPoly
from .symbols import Symbol, UnipotentLabel, degree, label_to_symbol, symbol_to_label


class E1Term(NamedTuple):
    """Eigenspaces of one E1 entry: A for ``q^i``, B for ``-q^(i+1)``."""

    A: Counter
    B: Counter


class ABSplit(NamedTuple):
    A0: Counter
    A1: Counter
    B0: Counter
    B1: Counter


@dataclass
class E1Page:
    theta: int
    terms: dict = field(default_factory=dict)

    def __getitem__(self, key):
        return self.terms[key]

    def total_degree(self, key):
        theta_p, i = key
        return theta_p + i

    def eigenvalues(self, key):
        _, i = key
        return FrobEigenvalue(1, i), FrobEigenvalue(-1, i + 1)


def _check_indices(theta, theta_p, i):
    if not 0 <= i <= theta_p <= theta:
        raise ValueError(f"need 0 <= i <= theta' <= theta, got ({theta}, {theta_p}, {i})")


def e1_page(theta):
    """E1 page built by inducing the Coxeter cohomology of each Sp(2 theta')."""
    if theta < 0:
        raise ValueError("theta must be non-negative")
    page = E1Page(theta)
    for theta_p in range(theta + 1):
        table = coxeter_cohomology(theta_p)
        for i in range(theta_p + 1):
            A, B = Counter(), Counter()
            for s, ev in table[theta_p + i]:
                target = A if ev.sign > 0 else B
                target.update(induce(theta - theta_p, s))
            page.terms[(theta_p, i)] = E1Term(A, B)
    return page


def _two_row(i, d):
    return [(i + d - s, s) for s in range(min(d, i) + 1)]


def _hook_options(first, ones):
    # (first, 1^ones) and (first + 1, 1^(ones - 1)); the latter only if ones >= 1
    opts = [(first,) + (1,) * ones]
    if ones >= 1:
        opts.append((first + 1,) + (1,) * (ones - 1))
    return opts


def e1_closed_form(theta, theta_p, i):
    """E1 entry from the explicit bipartition lists, independent of :func:`induce`."""
    _check_indices(theta, theta_p, i)
    a_bips, b_bips = set(), set()
    for d in range(theta - theta_p + 1):
        for alpha in _two_row(i, d):
            for beta in _hook_options(theta - theta_p - d, theta_p - i):
                a_bips.add(bipartition(alpha, beta))
        if i <= theta_p - 2:
            for gamma in _two_row(i, d):
                for dlt in _hook_options(theta - theta_p - d, theta_p - 2 - i):
                    b_bips.add(bipartition(gamma, dlt))
    A = Counter(label_to_symbol(UnipotentLabel(0, b)) for b in a_bips)
    B = Counter(label_to_symbol(UnipotentLabel(1, b)) for b in b_bips)
    return E1Term(A, B)


def ab_split(theta, theta_p, i, page=None):
    """Refine the E1 entry by the number of parts of the second partition."""
    _check_indices(theta, theta_p, i)
    term = (page or e1_page(theta))[(theta_p, i)]
    parts = ABSplit(Counter(), Counter(), Counter(), Counter())
    for s, m in term.A.items():
        r = len(symbol_to_label(s).bip[1])
        if r == theta_p - i:
            parts.A0[s] += m
        elif r == theta_p - i + 1:
            parts.A1[s] += m
        else:
            raise AssertionError(f"unexpected A component {s} at ({theta_p}, {i})")
    for s, m in term.B.items():
        r = len(symbol_to_label(s).bip[1])
        if r == theta_p - 2 - i:
            parts.B0[s] += m
        elif r == theta_p - 1 - i:
            parts.B1[s] += m
        else:
            raise AssertionError(f"unexpected B component {s} at ({theta_p}, {i})")
    return parts


@dataclass
class CohomologyOfS:
    """``even[i] = (plus, minus)``: the parts of H^(2i) with eigenvalues ``q^i`` and ``-q^i``."""

    theta: int
    even: dict

    def graded(self):
        """``{degree: [(Symbol, FrobEigenvalue), ...]}``; odd degrees are absent."""
        out = {}
        for i, (plus, minus) in sorted(self.even.items()):
            terms = [(s, FrobEigenvalue(1, i)) for s in sorted(plus.elements())]
            terms += [(s, FrobEigenvalue(-1, i)) for s in sorted(minus.elements())]
            out[2 * i] = terms
        return out

    def symbols_in_degree(self, k):
        if k % 2:
            return Counter()
        plus, minus = self.even.get(k // 2, (Counter(), Counter()))
        return plus + minus


def cohomology_of_S(theta):
    if theta < 0:
        raise ValueError("theta must be non-negative")
    even = {}
    for i in range(theta + 1):
        plus = Counter(Symbol((s, theta + 1 - s), (0,)) for s in range(min(i, theta - i) + 1))
        minus = Counter(
            Symbol((0, s + 1, theta - s), ()) for s in range(min(i - 1, theta - 1 - i) + 1)
        )
        even[i] = (plus, minus)
    return CohomologyOfS(theta, even)


def cohomology_from_e1(theta, page=None):
    """``H^(2i) = A0[i, i] + B0[i+1, i-1]`` read off the E1 page."""
    page = page or e1_page(theta)
    even = {}
    for i in range(theta + 1):
        plus = ab_split(theta, i, i, page).A0
        minus = Counter()
        if 1 <= i and i + 1 <= theta:
            minus = ab_split(theta, i + 1, i - 1, page).B0
        even[i] = (plus, minus)
    return CohomologyOfS(theta, even)


def total_degree(reps):
    acc = ZERO
    for s, m in reps.items():
        acc = acc + m * degree(s)
    return acc


def point_count_S(theta, n):
    """Number of F_(q^n)-points of S_theta as a polynomial in q (Lefschetz)."""
    if n < 1:
        raise ValueError("n must be positive")
    sign = -1 if n % 2 else 1
    acc = ZERO
    for i, (plus, minus) in cohomology_of_S(theta).even.items():
        acc = acc + Q ** (i * n) * (total_degree(plus) + sign * total_degree(minus))
    return acc


def point_count_stratum(theta, theta_p, n, page=None):
    """Points of the stratum indexed by ``theta_p`` over F_(q^n), from its E1 row."""
    if n < 1:
        raise ValueError("n must be positive")
    if not 0 <= theta_p <= theta:
        raise ValueError(f"need 0 <= theta' <= theta, got {theta_p}, {theta}")
    page = page or e1_page(theta)
    sign_n = -1 if n % 2 else 1
    acc = ZERO
    for i in range(theta_p + 1):
        term = page[(theta_p, i)]
        contrib = Q ** (i * n) * total_degree(term.A)
        contrib = contrib + sign_n * Q ** ((i + 1) * n) * total_degree(term.B)
        acc = acc + (-1) ** (theta_p + i) * contrib
    return acc


def lagrangian_count(theta):
    """``prod_(i=1..theta) (q^i + 1)``, the number of rational Lagrangians."""
    acc = QPoly.const(1)
    for i in range(1, theta + 1):
        acc = acc * (Q ** i + 1)
    return acc


def e1_grid(theta, page=None):
    """Rows of the E1 diagram: one dict per (i, theta') cell with the four pieces."""
    page = page or e1_page(theta)
    rows = []
    for i in range(theta + 1):
        for theta_p in range(i, theta + 1):
            split = ab_split(theta, theta_p, i, page)
            rows.append({"i": i, "theta_prime": theta_p, "degree": theta_p + i, **split._asdict()})
    return rows
