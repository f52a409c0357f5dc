"""Arithmetic for GF(q), q a prime power <= 9, and its cubic extension GF(q^3).

Elements of GF(q), q = p^e, are the integers 0..q-1, read as base-p digit
strings: the integer sum(d_i * p^i) stands for the polynomial sum(d_i * a^i)
in GF(p)[a] modulo a fixed irreducible polynomial.  Elements of GF(q^3) are
the integers 0..q^3-1 with base-q digits over GF(q) in the same way, modulo a
fixed irreducible cubic.  Addition is digit-wise; multiplication goes through
log/antilog tables built on a generator of the multiplicative group.

Fixed moduli (coefficients ascending, leading 1 omitted from the tables):

    GF(4) = GF(2)[a]/(a^2+a+1)      GF(8) = GF(2)[a]/(a^3+a+1)
    GF(9) = GF(3)[a]/(a^2+1)

    GF(q^3) = GF(q)[t]/(m_q(t)) with
      m_2 = t^3+t^2+1     (so t plays the role of a root b with b^3 = b^2+1)
      m_3 = t^3+2t+1      m_4 = t^3+w       (w = element 2 of GF(4))
      m_5 = t^3+t+1       m_7 = t^3+2
      m_8 = t^3+t+g       (g = element 2 of GF(8))
      m_9 = t^3+t+a       (a = element 3 of GF(9))

The cubic for q = 2 is chosen so that GF(8) has the normal basis
(b, b^2, b^4); coordinates for q = 2 are taken relative to that basis, and
then the matrix of multiplication-by-b is

    B = (0 1 0; 1 0 1; 0 1 1)   and of squaring   Phi = (0 1 0; 0 0 1; 1 0 0),

acting on row coordinate vectors from the right.  For q > 2 the cubics are
the first irreducible ones in lexicographic coefficient order and coordinates
use the polynomial basis (1, t, t^2).
"""

from __future__ import annotations

from functools import lru_cache

SUPPORTED_Q = (2, 3, 4, 5, 7, 8, 9)

# Irreducible polynomial over GF(p) for each non-prime q, coefficients
# ascending including the leading 1.
_BASE_MODULUS = {
    4: (1, 1, 1),
    8: (1, 1, 0, 1),
    9: (1, 0, 1),
}

# Irreducible cubic over GF(q) for GF(q^3), coefficients ascending.  The
# q = 2 entry is pinned to t^3+t^2+1 (normal-basis setup above); the others
# are the first monic irreducible cubics in lex order of (c2, c1, c0).
_EXT_MODULUS = {
    2: (1, 0, 1, 1),
    3: (1, 2, 0, 1),
    4: (2, 0, 0, 1),
    5: (1, 1, 0, 1),
    7: (2, 0, 0, 1),
    8: (2, 1, 0, 1),
    9: (3, 1, 0, 1),
}

_PRIMES = (2, 3, 5, 7)


class GF:
    """Arithmetic tables for GF(q).

    Attributes:
        q: field order
        p: characteristic
        e: degree over the prime field
        modulus: irreducible polynomial over GF(p) (ascending coefficients),
            or None for prime fields
        exp, log: antilog/log tables for the fixed generator; log[0] is None
    """

    def __init__(self, q: int):
        p = _char_of(q)
        self.q = q
        self.p = p
        self.e = _degree_of(q, p)
        self.modulus = _BASE_MODULUS.get(q)
        self._add = [[self._add_raw(a, b) for b in range(q)] for a in range(q)]
        self._mul = [[self._mul_raw(a, b) for b in range(q)] for a in range(q)]
        self._neg = [next(b for b in range(q) if self._add[a][b] == 0) for a in range(q)]
        self._inv = [None] + [
            next(b for b in range(1, q) if self._mul[a][b] == 1) for a in range(1, q)
        ]
        self.generator = self._find_generator()
        self.exp = [0] * (q - 1)
        self.log = [None] * q
        x = 1
        for i in range(q - 1):
            self.exp[i] = x
            self.log[x] = i
            x = self._mul[x][self.generator]

    def __repr__(self):
        return f"GF({self.q})"

    def _add_raw(self, a, b):
        if self.e == 1:
            return (a + b) % self.p
        p = self.p
        out, mult = 0, 1
        for _ in range(self.e):
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    def _mul_raw(self, a, b):
        if self.e == 1:
            return (a * b) % self.p
        p, e = self.p, self.e
        da = [(a // p**i) % p for i in range(e)]
        db = [(b // p**i) % p for i in range(e)]
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = (prod[i + j] + x * y) % p
        for i in range(len(prod) - 1, e - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(e):
                    prod[i - e + j] = (prod[i - e + j] - c * self.modulus[j]) % p
        return sum(prod[i] * p**i for i in range(e))

    def _find_generator(self):
        for g in range(1, self.q):
            x, order = g, 1
            while x != 1:
                x = self._mul[x][g]
                order += 1
            if order == self.q - 1:
                return g
        raise AssertionError("no generator found")

    # element iteration: 0..q-1 are exactly the field elements
    def elements(self):
        return range(self.q)

    def add(self, a, b):
        return self._add[a][b]

    def neg(self, a):
        return self._neg[a]

    def sub(self, a, b):
        return self._add[a][self._neg[b]]

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def div(self, a, b):
        return self._mul[a][self.inv(b)]

    def pow(self, a, n):
        if a == 0:
            return 0 if n > 0 else 1
        return self.exp[(self.log[a] * n) % (self.q - 1)]


class ExtGF:
    """GF(q^3) as a cubic extension of a GF(q) instance.

    Elements are 0..q^3-1 with base-q digits (c0, c1, c2) meaning
    c0 + c1*t + c2*t^2 modulo the fixed cubic.  `basis` is the ordered
    GF(q)-basis used by coords()/from_coords().
    """

    def __init__(self, base: GF):
        q = base.q
        self.base = base
        self.q = q
        self.order = q**3
        self.modulus = _EXT_MODULUS[q]
        self._xor_add = base.p == 2 and q & (q - 1) == 0 and q in (2, 4, 8)
        self.generator = self._find_generator()
        n = self.order
        self.exp = [0] * (n - 1)
        self.log = [None] * n
        x = 1
        for i in range(n - 1):
            self.exp[i] = x
            self.log[x] = i
            x = self._mul_raw(x, self.generator)
        t = q  # the residue class of t has digits (0, 1, 0)
        if q == 2:
            b = t
            self.basis = (b, self.mul(b, b), self.pow(b, 4))
        else:
            self.basis = (1, t, self.mul(t, t))
        self._coords_inv = _invert_3x3(base, [self._digit_vec(b) for b in self.basis])

    def __repr__(self):
        return f"ExtGF(GF({self.q})^3)"

    def _digit_vec(self, x):
        q = self.q
        return ((x // 1) % q, (x // q) % q, (x // q**2) % q)

    def _from_digit_vec(self, d):
        q = self.q
        return d[0] + d[1] * q + d[2] * q * q

    def _mul_raw(self, a, b):
        base, q = self.base, self.q
        da, db = self._digit_vec(a), self._digit_vec(b)
        prod = [0] * 5
        for i, x in enumerate(da):
            for j, y in enumerate(db):
                prod[i + j] = base.add(prod[i + j], base.mul(x, y))
        for i in (4, 3):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(3):
                    prod[i - 3 + j] = base.sub(prod[i - 3 + j], base.mul(c, self.modulus[j]))
        return self._from_digit_vec(prod[:3])

    def _find_generator(self):
        n = self.order
        for g in range(2, n):
            x, order = g, 1
            while x != 1:
                x = self._mul_raw(x, g)
                order += 1
            if order == n - 1:
                return g
        raise AssertionError("no generator found")

    def elements(self):
        return range(self.order)

    def add(self, a, b):
        if self._xor_add:
            return a ^ b
        da, db, base = self._digit_vec(a), self._digit_vec(b), self.base
        return self._from_digit_vec([base.add(x, y) for x, y in zip(da, db)])

    def neg(self, a):
        if self._xor_add:
            return a
        da, base = self._digit_vec(a), self.base
        return self._from_digit_vec([base.neg(x) for x in da])

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[a]) % (self.order - 1)]

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if a == 0:
            return 0 if n > 0 else 1
        return self.exp[(self.log[a] * n) % (self.order - 1)]

    def frobenius(self, x):
        """x -> x^q; the third iterate is the identity."""
        return self.pow(x, self.q)

    def trace(self, x):
        """x + x^q + x^(q^2), an element of the base field GF(q)."""
        xq = self.frobenius(x)
        t = self.add(self.add(x, xq), self.frobenius(xq))
        assert t < self.q, "trace left the base field"
        return t

    def norm(self, x):
        """x^(q^2+q+1), an element of the base field GF(q)."""
        n = self.pow(x, self.q * self.q + self.q + 1) if x else 0
        assert n < self.q, "norm left the base field"
        return n

    def coords(self, x):
        """Coordinates of x relative to `basis`, as a length-3 GF(q) tuple."""
        d = self._digit_vec(x)
        base = self.base
        return tuple(
            _dot(base, d, [row[j] for row in self._coords_inv]) for j in range(3)
        )

    def from_coords(self, c):
        """Inverse of coords(): the element with the given basis coordinates."""
        acc = 0
        for ci, b in zip(c, self.basis):
            acc = self.add(acc, self.mul(ci, b))
        return acc


def _char_of(q):
    for p in _PRIMES:
        e = 0
        n = q
        while n % p == 0:
            n //= p
            e += 1
        if n == 1 and e >= 1:
            return p
    raise ValueError(f"order {q} is not a supported prime power (need q in {SUPPORTED_Q})")


def _degree_of(q, p):
    e = 0
    while q > 1:
        q //= p
        e += 1
    return e


def _dot(base, u, v):
    acc = 0
    for x, y in zip(u, v):
        acc = base.add(acc, base.mul(x, y))
    return acc


def _invert_3x3(base, rows):
    """Invert a 3x3 matrix over GF(q), rows as length-3 lists."""
    a = [list(r) + [int(i == j) for j in range(3)] for i, r in enumerate(rows)]
    for col in range(3):
        piv = next(i for i in range(col, 3) if a[i][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        s = base.inv(a[col][col])
        a[col] = [base.mul(s, x) for x in a[col]]
        for i in range(3):
            if i != col and a[i][col]:
                c = a[i][col]
                a[i] = [base.sub(x, base.mul(c, y)) for x, y in zip(a[i], a[col])]
    return [row[3:] for row in a]


@lru_cache(maxsize=None)
def make_field(q: int) -> GF:
    """GF(q) with fixed modulus and log/antilog tables; q in SUPPORTED_Q."""
    if q not in SUPPORTED_Q:
        raise ValueError(f"order {q} is not a supported prime power (need q in {SUPPORTED_Q})")
    return GF(q)


@lru_cache(maxsize=None)
def ext_field(q: int) -> ExtGF:
    """GF(q^3) over make_field(q) with the fixed cubic and basis."""
    return ExtGF(make_field(q))
