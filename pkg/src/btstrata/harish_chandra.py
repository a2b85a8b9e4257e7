"""Harish-Chandra induction and restriction along GL(a) x Sp(2*theta') < Sp(2*theta).

Both functors act on the bipartition part of a unipotent label by adding or
removing horizontal strips, leaving the series index ``delta`` untouched.
Results are :class:`collections.Counter` multisets of reduced symbols.
"""

from collections import Counter

from .errors import RankUnderflow
from .partitions import bipartition_contractions, bipartition_expansions
from .symbols import UnipotentLabel, label_to_symbol, rank, symbol_to_label


def induce(a, s):
    """``R(1 x rho_s)`` from ``GL(a) x Sp(2 rank(s))`` up to ``Sp(2 (rank(s)+a))``."""
    if a < 0:
        raise ValueError("a must be non-negative")
    delta, bip = symbol_to_label(s)
    return Counter(
        label_to_symbol(UnipotentLabel(delta, b)) for b in bipartition_expansions(bip, a)
    )


def restrict_sp(a, s):
    """Symplectic part of the Harish-Chandra restriction of ``rho_s`` to ``GL(a) x Sp``."""
    if a < 0:
        raise ValueError("a must be non-negative")
    if a > rank(s):
        raise RankUnderflow(f"cannot restrict rank {rank(s)} symbol by {a}")
    delta, bip = symbol_to_label(s)
    return Counter(
        label_to_symbol(UnipotentLabel(delta, b)) for b in bipartition_contractions(bip, a)
    )


def induce_multiset(a, reps):
    """Apply :func:`induce` to every member of a multiset, adding multiplicities."""
    out = Counter()
    for s, mult in reps.items():
        for t, m in induce(a, s).items():
            out[t] += mult * m
    return out


def restrict_multiset(a, reps):
    out = Counter()
    for s, mult in reps.items():
        for t, m in restrict_sp(a, s).items():
            out[t] += mult * m
    return out
