"""Table-driven arithmetic in small finite fields GF(p^k).

Elements are encoded as integers ``0 .. p^k - 1`` whose base-``p`` digits are
the coefficients (low degree first) of a polynomial modulo a fixed monic
irreducible.  ``0`` and ``1`` encode the field's zero and one.
"""

from functools import lru_cache

import numpy as np

MAX_FIELD_ORDER = 1024

# Conway polynomials, coefficients low degree first (monic).
CONWAY = {
    (2, 1): (1, 1),
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (3, 1): (1, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 1): (3, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 1, 4, 0, 1),
    (7, 1): (4, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 1): (9, 1),
    (11, 2): (2, 7, 1),
    (13, 1): (11, 1),
    (13, 2): (2, 12, 1),
    (17, 1): (14, 1),
    (17, 2): (3, 16, 1),
    (19, 1): (17, 1),
    (19, 2): (2, 18, 1),
    (23, 1): (18, 1),
    (29, 1): (27, 1),
    (31, 1): (28, 1),
}


def is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_power(q):
    """Return ``(p, e)`` with ``q == p**e``; raise ValueError otherwise."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = next(f for f in range(2, q + 1) if q % f == 0)
    e = 0
    while q % p == 0:
        q //= p
        e += 1
    if q != 1:
        raise ValueError(f"not a prime power")
    return p, e


def _polymulmod(a, b, modulus, p):
    k = len(modulus) - 1
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for j in range(k + 1):
                prod[d - k + j] = (prod[d - k + j] - c * modulus[j]) % p
    return (prod + [0] * k)[:k]


def _is_irreducible(poly, p):
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        for code in range(p ** deg):
            div = [(code // p ** i) % p for i in range(deg)] + [1]
            rem = list(poly)
            for d in range(k, deg - 1, -1):
                c = rem[d]
                if c:
                    for j in range(deg + 1):
                        rem[d - deg + j] = (rem[d - deg + j] - c * div[j]) % p
            if not any(rem[:deg]):
                return False
    return True


def find_modulus(p, k):
    """Conway polynomial when tabulated, else the first monic irreducible found."""
    if (p, k) in CONWAY:
        return CONWAY[(p, k)]
    for code in range(p ** k):
        poly = tuple((code // p ** i) % p for i in range(k)) + (1,)
        if poly[0] and _is_irreducible(poly, p):
            return poly
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


class GF:
    """The field with ``p**k`` elements.

    Tables ``add``, ``sub``, ``mul`` (order x order), ``neg`` and ``inv``
    (length order, ``inv[0] == 0``) are numpy int64 arrays.
    """

    def __init__(self, p, k=1, modulus=None):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be positive")
        order = p ** k
        if order > MAX_FIELD_ORDER:
            raise ValueError(f"field order {order} exceeds {MAX_FIELD_ORDER}")
        self.p, self.k, self.order = p, k, order
        self.modulus = tuple(modulus) if modulus is not None else find_modulus(p, k)
        if len(self.modulus) != k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")

        weights = p ** np.arange(k, dtype=np.int64)
        digits = (np.arange(order, dtype=np.int64)[:, None] // weights) % p
        self.add = (((digits[:, None, :] + digits[None, :, :]) % p) @ weights).astype(np.int64)
        self.neg = ((-digits % p) @ weights).astype(np.int64)
        self.sub = np.ascontiguousarray(self.add[:, self.neg])

        gen, powers = self._primitive_powers(digits.tolist())
        self.generator = gen
        exp = np.array(powers, dtype=np.int64)
        log = np.zeros(order, dtype=np.int64)
        log[exp] = np.arange(order - 1, dtype=np.int64)
        self.exp, self.log = exp, log
        mul = exp[(log[:, None] + log[None, :]) % (order - 1)]
        mul[0, :] = 0
        mul[:, 0] = 0
        self.mul = np.ascontiguousarray(mul)
        inv = exp[(-log) % (order - 1)]
        inv[0] = 0
        self.inv = inv

    def _primitive_powers(self, digits):
        p, order = self.p, self.order
        weights = [p ** i for i in range(self.k)]

        def encode(vec):
            return sum(c * w for c, w in zip(vec, weights))

        for g in range(1, order):
            seen = [1]
            cur = digits[1]
            while True:
                cur = _polymulmod(cur, digits[g], self.modulus, p)
                x = encode(cur)
                if x == 1 or x == 0:
                    break
                seen.append(x)
            if x == 1 and len(seen) == order - 1:
                return g, seen
        raise ValueError(f"modulus {self.modulus} is not irreducible over GF({p})")

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    def __eq__(self, other):
        return isinstance(other, GF) and (self.p, self.k, self.modulus) == (
            other.p, other.k, other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def power(self, x, e):
        if x == 0:
            return 0 if e > 0 else 1
        return int(self.exp[(int(self.log[x]) * e) % (self.order - 1)])

    def frobenius_table(self, q0):
        """Table of ``x -> x**q0``; ``q0`` must be a power of the characteristic."""
        bp, _ = prime_power(q0)
        if bp != self.p:
            raise ValueError(f"{q0} is not a power of the characteristic {self.p}")
        table = self.exp[(self.log * q0) % (self.order - 1)]
        table[0] = 0
        return np.ascontiguousarray(table)

    def fixed_field(self, q0):
        frob = self.frobenius_table(q0)
        return [x for x in range(self.order) if frob[x] == x]


@lru_cache(maxsize=None)
def get_field(p, k):
    return GF(p, k)
