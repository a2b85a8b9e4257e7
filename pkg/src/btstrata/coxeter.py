"""Cohomology of the Coxeter variety of Sp(2*theta) with Frobenius eigenvalues.

Degree ``theta + i`` of the compactly supported cohomology holds ``S(theta, i)``
with eigenvalue ``q^i`` and, for ``i <= theta - 2``, ``T(theta, i)`` with
eigenvalue ``-q^(i+1)``.  Everything else vanishes.
"""

from collections import Counter
from typing import NamedTuple

from .harish_chandra import restrict_sp
from .qpoly import Q, exact_div, product, q_pow
from .symbols import Symbol


class FrobEigenvalue(NamedTuple):
    """The scalar ``sign * q**exp``."""

    sign: int
    exp: int

    def twist(self, k=1):
        """Tate twist ``(-k)``: multiply by ``q**k``."""
        return FrobEigenvalue(self.sign, self.exp + k)

    def __str__(self):
        return f"{'+' if self.sign > 0 else '-'}q^{self.exp}"


def s_symbol(theta, i):
    if not 0 <= i <= theta:
        raise ValueError(f"need 0 <= i <= theta, got i={i}, theta={theta}")
    return Symbol(tuple(range(theta - i)) + (theta,), tuple(range(1, theta - i + 1)))


def t_symbol(theta, j):
    if not 0 <= j <= theta - 2:
        raise ValueError(f"need 0 <= j <= theta-2, got j={j}, theta={theta}")
    return Symbol(tuple(range(theta - j)) + (theta,), tuple(range(1, theta - j - 1)))


def coxeter_cohomology(theta):
    """Graded table ``{degree: [(symbol, eigenvalue), ...]}``.

    ``theta = 0`` is accepted: the Coxeter variety of Sp(0) is a point.
    """
    if theta < 0:
        raise ValueError("theta must be non-negative")
    table = {}
    for i in range(theta + 1):
        terms = [(s_symbol(theta, i), FrobEigenvalue(1, i))]
        if i <= theta - 2:
            terms.append((t_symbol(theta, i), FrobEigenvalue(-1, i + 1)))
        table[theta + i] = terms
    return table


def lusztig_degree_S(theta, i):
    if not 0 <= i <= theta:
        raise ValueError(f"need 0 <= i <= theta, got i={i}, theta={theta}")
    num = Q ** ((theta - i) ** 2)
    num = num * product(q_pow(s + i) for s in range(1, theta - i + 1))
    num = num * product(q_pow(s + i, +1) for s in range(0, theta - i))
    den = product(q_pow(s) for s in range(1, theta - i + 1))
    den = den * product(q_pow(s, +1) for s in range(0, theta - i))
    return exact_div(num, den)


def lusztig_degree_T(theta, j):
    if not 0 <= j <= theta - 2:
        raise ValueError(f"need 0 <= j <= theta-2, got j={j}, theta={theta}")
    num = Q ** ((theta - j - 1) ** 2) * q_pow(theta - 1) * q_pow(theta)
    num = num * product(q_pow(s + j) for s in range(1, theta - j - 1))
    num = num * product(q_pow(s + j, +1) for s in range(2, theta - j))
    den = 2 * q_pow(1, +1)
    den = den * product(q_pow(s) for s in range(1, theta - j - 1))
    den = den * product(q_pow(s, +1) for s in range(2, theta - j))
    return exact_div(num, den)


def _graded_counter(table):
    return {deg: Counter(terms) for deg, terms in table.items()}


def restriction_identity_sides(theta):
    """Both sides of the one-step restriction identity, degree by degree.

    Left: restriction to Sp(2(theta-1)) of degree ``theta+i`` of X^theta.
    Right: degree ``theta-1+i`` of X^(theta-1) plus degree ``theta-2+i`` of
    X^(theta-1) Tate-twisted once.
    """
    upper = coxeter_cohomology(theta)
    lower = _graded_counter(coxeter_cohomology(theta - 1))
    sides = {}
    for i in range(theta + 1):
        lhs = Counter()
        for s, ev in upper[theta + i]:
            for t, m in restrict_sp(1, s).items():
                lhs[(t, ev)] += m
        rhs = Counter(lower.get(theta - 1 + i, Counter()))
        for (t, ev), m in lower.get(theta - 2 + i, Counter()).items():
            rhs[(t, ev.twist())] += m
        sides[theta + i] = (lhs, rhs)
    return sides


def verify_restriction_identity(theta):
    if theta < 2:
        raise ValueError("theta must be at least 2")
    return all(lhs == rhs for lhs, rhs in restriction_identity_sides(theta).values())
