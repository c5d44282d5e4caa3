"""GF(2^m) arithmetic for 2 <= m <= 16, polynomial basis, table-accelerated.

Field elements are plain ints whose binary digits are the coefficients in
the polynomial basis (bit i = coefficient of x^i).  Addition is xor.
Multiplication, inversion and exponentiation go through discrete-log
tables built at construction time from a primitive element.

Default reduction polynomials (one per degree, all primitive, so the
element x = 0b10 generates the multiplicative group):

    m=2  : x^2+x+1                   0x7
    m=3  : x^3+x+1                   0xB
    m=4  : x^4+x+1                   0x13
    m=5  : x^5+x^2+1                 0x25
    m=6  : x^6+x+1                   0x43
    m=7  : x^7+x^3+1                 0x89
    m=8  : x^8+x^4+x^3+x^2+1         0x11D
    m=9  : x^9+x^4+1                 0x211
    m=10 : x^10+x^3+1                0x409
    m=11 : x^11+x^2+1                0x805
    m=12 : x^12+x^6+x^4+x+1          0x1053
    m=13 : x^13+x^4+x^3+x+1          0x201B
    m=14 : x^14+x^10+x^6+x+1         0x4443
    m=15 : x^15+x+1                  0x8003
    m=16 : x^16+x^12+x^3+x+1         0x1100B

Any irreducible polynomial of the right degree is accepted in place of
the default; every quantity this package reports (spectra multisets,
ideal dimensions, validity of binomial coefficients) is basis-independent.
"""

from __future__ import annotations

import math
from functools import lru_cache

DEFAULT_POLYS: dict[int, int] = {
    2: 0x7,
    3: 0xB,
    4: 0x13,
    5: 0x25,
    6: 0x43,
    7: 0x89,
    8: 0x11D,
    9: 0x211,
    10: 0x409,
    11: 0x805,
    12: 0x1053,
    13: 0x201B,
    14: 0x4443,
    15: 0x8003,
    16: 0x1100B,
}

MIN_DEGREE = 2
MAX_DEGREE = 16


class UnsupportedDegree(ValueError):
    """Extension degree outside the supported range 2..16."""


class RejectedPolynomial(ValueError):
    """Candidate reduction polynomial is reducible or has the wrong degree."""


class ZeroHasNoOrder(ValueError):
    """The zero element has no multiplicative order."""


class NotASubfield(ValueError):
    """GF(2^k) is a subfield of GF(2^m) only when k divides m."""


def clmul(a: int, b: int) -> int:
    """Carry-less (polynomial) product of two ints over F2."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        a <<= 1
        b >>= 1
    return r


def polymod(a: int, p: int) -> int:
    """Reduce polynomial a modulo polynomial p over F2."""
    dp = p.bit_length() - 1
    while a.bit_length() - 1 >= dp and a:
        a ^= p << (a.bit_length() - 1 - dp)
    return a


def polygcd(a: int, b: int) -> int:
    """gcd of two F2[x] polynomials (ints)."""
    while b:
        a, b = b, _polyrem(a, b)
    return a


def _polyrem(a: int, b: int) -> int:
    db = b.bit_length() - 1
    while a and a.bit_length() - 1 >= db:
        a ^= b << (a.bit_length() - 1 - db)
    return a


def is_irreducible(p: int, m: int) -> bool:
    """Test a degree-m polynomial over F2 for irreducibility.

    A reducible degree-m polynomial has an irreducible factor of degree
    <= m/2, and x^(2^k) - x is the product of all irreducibles of degree
    dividing k; so p is irreducible iff gcd(x^(2^k) + x, p) = 1 for
    every k <= m/2.
    """
    if p.bit_length() - 1 != m:
        return False
    if not (p & 1):
        return False  # divisible by x
    r = 2  # the polynomial x
    for _ in range(m // 2):
        r = polymod(clmul(r, r), p)  # r = x^(2^k) mod p
        if polygcd(r ^ 2, p) != 1:
            return False
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[int, ...]:
    """Prime factors of n (distinct, ascending), by trial division."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


class Field:
    """A concrete model of GF(2^m) with log/antilog tables.

    Immutable after construction; safe to share across workers.
    """

    def __init__(self, m: int, poly: int | None = None):
        if not MIN_DEGREE <= m <= MAX_DEGREE:
            raise UnsupportedDegree(f"m={m} not in {MIN_DEGREE}..{MAX_DEGREE}")
        if poly is None:
            poly = DEFAULT_POLYS[m]
        if poly.bit_length() - 1 != m:
            raise RejectedPolynomial(
                f"reduction polynomial {poly:#x} has degree "
                f"{poly.bit_length() - 1}, need {m}"
            )
        if not is_irreducible(poly, m):
            raise RejectedPolynomial(f"{poly:#x} is reducible over F2")
        self.m = m
        self.poly = poly
        self.order = 1 << m          # number of field elements
        self.group_order = self.order - 1

        self.generator = self._find_generator()
        self.antilog = [0] * self.group_order   # antilog[k] = g^k
        self.log = [0] * self.order             # log[g^k] = k; log[0] unused
        v = 1
        for k in range(self.group_order):
            self.antilog[k] = v
            self.log[v] = k
            v = self.mul_raw(v, self.generator)

    def __repr__(self) -> str:
        return f"Field(m={self.m}, poly={self.poly:#x})"

    def __eq__(self, other) -> bool:
        return isinstance(other, Field) and (self.m, self.poly) == (other.m, other.poly)

    def __hash__(self) -> int:
        return hash((self.m, self.poly))

    # -- table-free arithmetic (construction and oracle paths) --------

    def mul_raw(self, a: int, b: int) -> int:
        """Schoolbook carry-less multiply followed by reduction."""
        return polymod(clmul(a, b), self.poly)

    def _pow_raw(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self.mul_raw(r, a)
            a = self.mul_raw(a, a)
            e >>= 1
        return r

    def _find_generator(self) -> int:
        n = self.group_order
        primes = factorize(n)
        for g in range(2, self.order):
            if all(self._pow_raw(g, n // q) != 1 for q in primes):
                return g
        raise RejectedPolynomial(f"no generator found for {self!r}")  # unreachable

    # -- table-backed operations ---------------------------------------

    def add(self, a: int, b: int) -> int:
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.antilog[(self.log[a] + self.log[b]) % self.group_order]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.antilog[(-self.log[a]) % self.group_order]

    def pow(self, a: int, e: int) -> int:
        """a^e with 0^0 = 1 and 0^e = 0 for e > 0.

        Exponents are reduced mod 2^m - 1 only for nonzero bases, so
        x^d and x^(d mod 2^m-1) agree on the multiplicative group but
        may differ at 0.
        """
        if e < 0:
            raise ValueError("negative exponent; use inv() explicitly")
        if a == 0:
            return 1 if e == 0 else 0
        return self.antilog[(self.log[a] * e) % self.group_order]

    def element_order(self, a: int) -> int:
        """Multiplicative order of a nonzero element."""
        if a == 0:
            raise ZeroHasNoOrder("order of 0 is undefined")
        return self.group_order // math.gcd(self.log[a], self.group_order)

    def element_of_order(self, n: int) -> int:
        """A fixed element of multiplicative order n (n must divide 2^m - 1)."""
        if n <= 0 or self.group_order % n != 0:
            raise ValueError(f"no element of order {n} in {self!r}")
        return self.antilog[self.group_order // n]

    def in_subfield(self, a: int, k: int) -> bool:
        """True iff a lies in the subfield GF(2^k); requires k | m."""
        if k <= 0 or self.m % k != 0:
            raise NotASubfield(f"GF(2^{k}) is not a subfield of GF(2^{self.m})")
        return self.pow(a, 1 << k) == a

    def subfield_elements(self, k: int) -> list[int]:
        """All 2^k elements of the subfield GF(2^k) inside this field."""
        return [a for a in range(self.order) if self.in_subfield(a, k)]

    def trace(self, a: int) -> int:
        """Absolute trace to F2: sum of a^(2^i) for i < m, projected to {0,1}."""
        t = 0
        v = a
        for _ in range(self.m):
            t ^= v
            v = self.mul(v, v)
        return t & 1  # t is 0 or 1 in the polynomial basis

    def elements(self) -> range:
        return range(self.order)

    def nonzero_elements(self) -> range:
        return range(1, self.order)


def build_field(m: int, poly: int | None = None) -> Field:
    """Construct GF(2^m), validating the reduction polynomial."""
    return Field(m, poly)
