"""Lusztig symbols of odd defect and their combinatorics.

A symbol is a pair of strictly increasing rows of non-negative integers,
taken modulo the shift ``(X, Y) -> ({0} + (X+1), {0} + (Y+1))``.  The
:class:`Symbol` class always stores the reduced representative, in which
the two rows do not both contain 0.  The free functions below accept either
a :class:`Symbol` or a raw ``(top, bottom)`` pair so that shift invariance
can be checked on non-reduced representatives.
"""

import json
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import NamedTuple

from .errors import InvalidLabel, InvalidSymbol
from .partitions import (
    bipartition_size,
    bipartitions_of,
    format_bipartition,
    partition,
)
from .qpoly import Q, exact_div, product, q_pow


def _check_row(row):
    row = tuple(int(x) for x in row)
    if any(x < 0 for x in row):
        raise InvalidSymbol(f"negative entry in row {row}")
    if any(b <= a for a, b in zip(row, row[1:])):
        raise InvalidSymbol(f"row {row} is not strictly increasing")
    return row


def reduce_rows(top, bottom):
    """Strip common leading zeros (inverse shift) until the pair is reduced."""
    top, bottom = tuple(top), tuple(bottom)
    while top and bottom and top[0] == 0 and bottom[0] == 0:
        top = tuple(x - 1 for x in top[1:])
        bottom = tuple(y - 1 for y in bottom[1:])
    return top, bottom


def shift(s, times=1):
    """Apply the shift operation; returns raw rows, not a :class:`Symbol`."""
    top, bottom = _rows(s)
    for _ in range(times):
        top = (0,) + tuple(x + 1 for x in top)
        bottom = (0,) + tuple(y + 1 for y in bottom)
    return top, bottom


@dataclass(frozen=True, order=True)
class Symbol:
    top: tuple
    bottom: tuple

    def __post_init__(self):
        top = _check_row(self.top)
        bottom = _check_row(self.bottom)
        d = len(top) - len(bottom)
        if d <= 0 or d % 2 == 0:
            raise InvalidSymbol(f"defect {d} of ({top}; {bottom}) is not a positive odd integer")
        top, bottom = reduce_rows(top, bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)

    @property
    def rank(self):
        return rank(self)

    @property
    def defect(self):
        return defect(self)

    def __str__(self):
        return format_symbol(self)

    def to_json(self):
        return {"top": list(self.top), "bottom": list(self.bottom)}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(tuple(data["top"]), tuple(data["bottom"]))


def normalize(top, bottom):
    return Symbol(tuple(top), tuple(bottom))


def _rows(s):
    if isinstance(s, Symbol):
        return s.top, s.bottom
    top, bottom = s
    return tuple(top), tuple(bottom)


def rank(s):
    top, bottom = _rows(s)
    n = len(top) + len(bottom)
    return sum(top) + sum(bottom) - (n - 1) ** 2 // 4


def defect(s):
    top, bottom = _rows(s)
    return len(top) - len(bottom)


def hooks(s):
    """Sorted list of hook lengths (a multiset)."""
    top, bottom = _rows(s)
    out = []
    for row in (top, bottom):
        members = set(row)
        for z in row:
            out.extend(k for k in range(1, z + 1) if z - k not in members)
    return sorted(out)


def cohooks(s):
    """Sorted list of cohook lengths (a multiset)."""
    top, bottom = _rows(s)
    out = []
    for row, other in ((top, set(bottom)), (bottom, set(top))):
        for z in row:
            out.extend(k for k in range(1, z + 1) if z - k not in other)
    return sorted(out)


def a_value(s):
    top, bottom = _rows(s)
    entries = top + bottom
    n = len(entries)
    pair_sum = sum(min(x, y) for x, y in combinations(entries, 2))
    correction = sum(comb(n - 2 * i, 2) for i in range(1, n // 2 + 1) if n - 2 * i >= 2)
    return pair_sum - correction


def b_prime(s):
    top, bottom = _rows(s)
    return (len(top) + len(bottom) - 1) // 2 - len(set(top) & set(bottom))


def degree(s):
    """Generic degree of the unipotent character labelled by ``s`` (hook formula)."""
    theta = rank(s)
    num = Q ** a_value(s) * product(q_pow(2 * i) for i in range(1, theta + 1))
    den = product(q_pow(h) for h in hooks(s))
    den = den * product(q_pow(c, +1) for c in cohooks(s))
    den = den * 2 ** b_prime(s)
    return exact_div(num, den)


def cuspidal_symbol(delta):
    """The cuspidal symbol ``(0, 1, ..., 2*delta ; )`` of rank ``delta*(delta+1)``."""
    return Symbol(tuple(range(2 * delta + 1)), ())


def trivial_symbol(theta):
    return Symbol((theta,), ())


def steinberg_symbol(theta):
    return Symbol(tuple(range(theta + 1)), tuple(range(1, theta + 1)))


def core(s):
    return cuspidal_symbol((defect(s) - 1) // 2)


def is_cuspidal(s):
    return Symbol(*_rows(s)) == core(s)


class UnipotentLabel(NamedTuple):
    """Harish-Chandra series index ``delta`` plus a bipartition."""

    delta: int
    bip: tuple

    @property
    def rank(self):
        return self.delta * (self.delta + 1) + bipartition_size(self.bip)

    def __str__(self):
        return f"rho[{self.delta},{format_bipartition(self.bip)}]"


def symbol_to_label(s):
    top, bottom = _rows(s)
    d = len(top) - len(bottom)
    if d <= 0 or d % 2 == 0:
        raise InvalidSymbol(f"defect {d} is not a positive odd integer")
    alpha = partition(x - i for i, x in enumerate(top))
    beta = partition(y - j for j, y in enumerate(bottom))
    return UnipotentLabel((d - 1) // 2, (alpha, beta))


def label_to_symbol(label, theta=None):
    """Inverse of :func:`symbol_to_label`.

    If ``theta`` is given the label must describe a symbol of that rank.
    """
    delta, (alpha, beta) = label
    if delta < 0:
        raise InvalidLabel(f"negative series index {delta}")
    alpha, beta = partition(alpha), partition(beta)
    if theta is not None:
        if delta * (delta + 1) > theta:
            raise InvalidLabel(f"delta={delta} needs rank >= {delta * (delta + 1)}, got {theta}")
        if delta * (delta + 1) + sum(alpha) + sum(beta) != theta:
            raise InvalidLabel(f"label ({delta}, {alpha}, {beta}) does not have rank {theta}")
    d = 2 * delta + 1
    r = max(len(beta), len(alpha) - d, 0)
    a = sorted(alpha + (0,) * (r + d - len(alpha)))
    b = sorted(beta + (0,) * (r - len(beta)))
    return Symbol(tuple(i + x for i, x in enumerate(a)), tuple(j + y for j, y in enumerate(b)))


def enumerate_symbols(theta):
    """All reduced symbols of rank ``theta`` and odd defect, grouped by defect."""
    out = []
    delta = 0
    while delta * (delta + 1) <= theta:
        for bip in bipartitions_of(theta - delta * (delta + 1)):
            out.append(label_to_symbol(UnipotentLabel(delta, bip)))
        delta += 1
    return out


# text form: "0,2;1", rows comma separated, rows split by ';'


def format_symbol(s):
    top, bottom = _rows(s)
    return ",".join(map(str, top)) + ";" + ",".join(map(str, bottom))


def parse_symbol(text):
    if text.count(";") != 1:
        raise InvalidSymbol(f"expected exactly one ';' in {text!r}")
    rows = []
    for part in text.split(";"):
        part = part.strip()
        try:
            rows.append(tuple(int(x) for x in part.split(",")) if part else ())
        except ValueError:
            raise InvalidSymbol(f"malformed symbol {text!r}") from None
    return Symbol(*rows)


__all__ = [
    "Symbol", "UnipotentLabel", "normalize", "reduce_rows", "shift", "rank", "defect",
    "hooks", "cohooks", "a_value", "b_prime", "degree", "core", "is_cuspidal",
    "cuspidal_symbol", "trivial_symbol", "steinberg_symbol", "symbol_to_label",
    "label_to_symbol", "enumerate_symbols", "format_symbol", "parse_symbol",
]
