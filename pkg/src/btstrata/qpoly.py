"""Exact univariate polynomials in q with rational coefficients."""

from fractions import Fraction
from numbers import Rational

from .errors import NonExactDivision


def _strip(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


class QPoly:
    """Immutable polynomial ``c_0 + c_1 q + ... + c_k q^k``.

    ``coeffs[i]`` is the coefficient of ``q**i``; trailing zeros are always
    stripped so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        object.__setattr__(self, "coeffs", _strip(Fraction(c) for c in coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def const(cls, c):
        return cls((c,))

    @classmethod
    def monomial(cls, exp, coeff=1):
        if exp < 0:
            raise ValueError("negative exponent")
        return cls([0] * exp + [coeff])

    @property
    def degree(self):
        """Degree of the polynomial, ``-1`` for zero."""
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def has_integer_coeffs(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, Rational):
            return self.coeffs == QPoly.const(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"QPoly({str(self)!r})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for exp in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[exp]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if exp == 0:
                body = str(mag)
            elif exp == 1:
                body = f"{mag}*q"
            else:
                body = f"{mag}*q^{exp}"
            if not out:
                out.append(body if sign == "+" else "-" + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def to_json(self):
        """Coefficient list (low degree first) as exact strings."""
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data):
        return cls(Fraction(c) for c in data)

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(self, other)

    __radd__ = __add__

    def __neg__(self):
        return QPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(self, -other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return add(other, -self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, q0):
        return eval_at(self, q0)

    def substitute_power(self, n):
        """Return ``p(q**n)``."""
        if n < 1:
            raise ValueError("n must be positive")
        coeffs = [Fraction(0)] * (n * max(self.degree, 0) + 1)
        for i, c in enumerate(self.coeffs):
            coeffs[i * n] = c
        return QPoly(coeffs)


def add(a, b):
    n = max(len(a.coeffs), len(b.coeffs))
    ca = a.coeffs + (0,) * (n - len(a.coeffs))
    cb = b.coeffs + (0,) * (n - len(b.coeffs))
    return QPoly(x + y for x, y in zip(ca, cb))


def mul(a, b):
    if not a.coeffs or not b.coeffs:
        return ZERO
    out = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
    for i, x in enumerate(a.coeffs):
        if x == 0:
            continue
        for j, y in enumerate(b.coeffs):
            out[i + j] += x * y
    return QPoly(out)


def divmod_poly(num, den):
    """Euclidean division over the rationals: ``num = quot*den + rem``."""
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(num.coeffs)
    dd = den.degree
    lead = den.coeffs[-1]
    quot = [Fraction(0)] * max(len(rem) - dd, 0)
    for k in range(len(rem) - 1 - dd, -1, -1):
        c = rem[k + dd] / lead
        quot[k] = c
        if c:
            for j, d in enumerate(den.coeffs):
                rem[k + j] -= c * d
    return QPoly(quot), QPoly(rem)


def exact_div(num, den):
    """Quotient ``num / den``; raises :class:`NonExactDivision` on a remainder."""
    quot, rem = divmod_poly(num, den)
    if not rem.is_zero():
        raise NonExactDivision(f"({num}) / ({den}) leaves remainder {rem}")
    return quot


def eval_at(p, q0):
    """Exact Horner evaluation; returns a :class:`Fraction`."""
    acc = Fraction(0)
    for c in reversed(p.coeffs):
        acc = acc * q0 + c
    return acc


def product(polys):
    acc = ONE
    for p in polys:
        acc = acc * p
    return acc


def q_pow(k, sign=-1):
    """``q^k + sign`` as a polynomial; the usual ``q^k - 1`` by default."""
    return QPoly.monomial(k) + sign


ZERO = QPoly()
ONE = QPoly.const(1)
Q = QPoly.monomial(1)
