"""Small finite fields F_q for the projective and linear constructions.

Supported q: prime powers p^e with q <= 32, e <= 5.  An element is the
integer encoding of its coefficient vector in base p: the element
sum(a_i x^i) has index sum(a_i p^i).  Extension fields reduce modulo
the fixed irreducible polynomials below; the table is part of the
package interface, so the chosen multiplicative generator (and with it
every construction that mentions one) is reproducible.

The distinguished generator ``primitive`` is the least primitive root
for prime q, and the class of x for extension fields (the polynomials
are Conway polynomials, whose root is primitive by construction; this
is asserted when the field is built).
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

# coefficients in ascending degree: (c0, c1, ..., 1)
IRREDUCIBLE_POLYS = {
    (2, 2): (1, 1, 1),            # x^2 + x + 1
    (2, 3): (1, 1, 0, 1),         # x^3 + x + 1
    (2, 4): (1, 1, 0, 0, 1),      # x^4 + x + 1
    (2, 5): (1, 0, 1, 0, 0, 1),   # x^5 + x^2 + 1
    (3, 2): (2, 2, 1),            # x^2 + 2x + 2
    (3, 3): (1, 2, 0, 1),         # x^3 + 2x + 1
    (5, 2): (2, 4, 1),            # x^2 + 4x + 2
}

MAX_Q = 32


def prime_power(n):
    """(p, e) with n = p^e, or None."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if p * p > n:
            return (n, 1)
        if n % p == 0:
            e = 0
            m = n
            while m % p == 0:
                m //= p
                e += 1
            return (p, e) if m == 1 else None
    return None


def _least_primitive_root(p):
    order = p - 1
    factors = set()
    m = order
    d = 2
    while d * d <= m:
        while m % d == 0:
            factors.add(d)
            m //= d
        d += 1
    if m > 1:
        factors.add(m)
    for g in range(1, p):
        if all(pow(g, order // f, p) != 1 for f in factors):
            return g
    raise RuntimeError(f"no primitive root mod {p}")


class GF:
    """Arithmetic tables for F_q."""

    def __init__(self, q):
        pe = prime_power(q)
        if pe is None or q > MAX_Q:
            raise ValueError(f"q={q} is not a supported prime power (q <= {MAX_Q})")
        self.q = q
        self.p, self.e = pe
        if self.e == 1:
            self.poly = None
        else:
            self.poly = IRREDUCIBLE_POLYS[(self.p, self.e)]
        self._build_tables()
        self.primitive = (
            _least_primitive_root(self.p) if self.e == 1 else self.p
        )
        if self._mult_order(self.primitive) != q - 1:
            raise RuntimeError(f"generator of F_{q} is not primitive")

    def _digits(self, a):
        out = []
        for _ in range(self.e):
            out.append(a % self.p)
            a //= self.p
        return out

    def _index(self, digits):
        a = 0
        for d in reversed(digits):
            a = a * self.p + d
        return a

    def _poly_mul(self, a, b):
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce modulo the defining polynomial (monic)
        for k in range(len(prod) - 1, self.e - 1, -1):
            c = prod[k]
            if c:
                prod[k] = 0
                for j in range(self.e):
                    prod[k - self.e + j] = (
                        prod[k - self.e + j] - c * self.poly[j]
                    ) % self.p
        return self._index(prod[: self.e])

    def _build_tables(self):
        q, p = self.q, self.p
        self.add = np.empty((q, q), dtype=np.int32)
        self.mul = np.empty((q, q), dtype=np.int32)
        if self.e == 1:
            for a in range(q):
                for b in range(q):
                    self.add[a, b] = (a + b) % p
                    self.mul[a, b] = (a * b) % p
        else:
            for a in range(q):
                da = self._digits(a)
                for b in range(q):
                    db = self._digits(b)
                    self.add[a, b] = self._index(
                        [(x + y) % p for x, y in zip(da, db)]
                    )
                    self.mul[a, b] = self._poly_mul(a, b)
        self.neg = np.empty(q, dtype=np.int32)
        self.inv = np.zeros(q, dtype=np.int32)
        for a in range(q):
            row = self.add[a]
            self.neg[a] = int(np.nonzero(row == 0)[0][0])
            if a:
                self.inv[a] = int(np.nonzero(self.mul[a] == 1)[0][0])

    def _mult_order(self, a):
        n, x = 1, a
        while x != 1:
            x = int(self.mul[x, a])
            n += 1
            if n > self.q:
                raise RuntimeError("multiplicative order overflow")
        return n


@lru_cache(maxsize=None)
def gf(q):
    return GF(q)
