"""Known APN function families: the power-mapping catalog plus the two
quadratic binomials over GF(2^10) and GF(2^12).

Power families and their applicability conditions:

    Gold       2^i+1                  gcd(i, m) = 1, 1 <= i <= (m-1)/2
    Kasami     2^(2i)-2^i+1           gcd(i, m) = 1, 1 <= i <= (m-1)/2
    Welch      2^t+3                  m = 2t+1
    Niho       2^t+2^(t/2)-1          m = 2t+1, t even
               2^t+2^((3t+1)/2)-1     m = 2t+1, t odd
    Inverse    2^(2t)-1               m = 2t+1
    Dobbertin  2^(4i)+2^(3i)+2^(2i)+2^i-1   m = 5i

Entries whose exponent duplicates an earlier family's (e.g. Kasami i=1 is
Gold i=1) are dropped; inverses of bijective APN maps are not listed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import Field
from .function import VectorialFunction, from_polynomial, power_function


class WrongField(ValueError):
    """The binomial constructions are tied to one extension degree each."""


@dataclass(frozen=True)
class CatalogEntry:
    family: str          # Gold | Kasami | Welch | Niho | Inverse | Dobbertin
    param: int           # the i or t of the family condition
    exponent: int
    condition: str

    def build(self, f: Field) -> VectorialFunction:
        return power_function(f, self.exponent)


def known_apn_functions(m: int) -> list[CatalogEntry]:
    """All power-family entries applicable at extension degree m."""
    entries: list[CatalogEntry] = []
    seen: set[int] = set()

    def add(family: str, param: int, exponent: int, condition: str):
        if exponent not in seen:
            seen.add(exponent)
            entries.append(CatalogEntry(family, param, exponent, condition))

    half = (m - 1) // 2
    for i in range(1, half + 1):
        if math.gcd(i, m) == 1:
            add("Gold", i, (1 << i) + 1, f"gcd({i},{m})=1, {i}<=(m-1)/2")
    for i in range(1, half + 1):
        if math.gcd(i, m) == 1:
            add("Kasami", i, (1 << (2 * i)) - (1 << i) + 1, f"gcd({i},{m})=1, {i}<=(m-1)/2")
    if m % 2 == 1:
        t = (m - 1) // 2
        add("Welch", t, (1 << t) + 3, f"m=2t+1, t={t}")
        if t % 2 == 0:
            niho = (1 << t) + (1 << (t // 2)) - 1
        else:
            niho = (1 << t) + (1 << ((3 * t + 1) // 2)) - 1
        add("Niho", t, niho, f"m=2t+1, t={t}")
        add("Inverse", t, (1 << (2 * t)) - 1, f"m=2t+1, t={t}")
    if m % 5 == 0:
        i = m // 5
        dob = (1 << (4 * i)) + (1 << (3 * i)) + (1 << (2 * i)) + (1 << i) - 1
        add("Dobbertin", i, dob, f"m=5i, i={i}")
    return entries


# -- the quadratic APN binomial on GF(2^10): x^3 + u*x^36 -------------------

BINOMIAL_T1_DEGREE = 10
BINOMIAL_T1_EXPONENTS = (3, 36)

BINOMIAL_T2_DEGREE = 12
BINOMIAL_T2_EXPONENTS = (3, 528)


def _require_degree(f: Field, m: int):
    if f.m != m:
        raise WrongField(f"construction lives on GF(2^{m}), got m={f.m}")


def binomial_t1(f: Field, u: int) -> VectorialFunction:
    """x -> x^3 + u*x^36 over GF(2^10)."""
    _require_degree(f, BINOMIAL_T1_DEGREE)
    return from_polynomial(f, [(3, 1), (36, u)])


def binomial_t1_valid_us(f: Field) -> set[int]:
    """The 62 coefficients making binomial_t1 APN: w*S union w^2*S where
    w has order 3 and S is the nonzero part of the order-32 subfield."""
    _require_degree(f, BINOMIAL_T1_DEGREE)
    w = f.element_of_order(3)
    w2 = f.mul(w, w)
    sub = [s for s in f.subfield_elements(5) if s != 0]
    return {f.mul(w, s) for s in sub} | {f.mul(w2, s) for s in sub}


def binomial_t1_u_is_valid(f: Field, u: int) -> bool:
    return u in binomial_t1_valid_us(f)


# -- the quadratic APN binomial on GF(2^12): x^3 + u*x^528 ------------------

def binomial_t2(f: Field, u: int) -> VectorialFunction:
    """x -> x^3 + u*x^528 over GF(2^12)."""
    _require_degree(f, BINOMIAL_T2_DEGREE)
    return from_polynomial(f, [(3, 1), (528, u)])


def binomial_t2_u_is_valid(f: Field, u: int) -> bool:
    """APN criterion: ord(u) divisible by 45 dividing 45*13, or divisible
    by 7 dividing 3*7*13."""
    _require_degree(f, BINOMIAL_T2_DEGREE)
    if u == 0:
        return False
    ordu = f.element_order(u)
    if ordu % 45 == 0 and (45 * 13) % ordu == 0:
        return True
    return ordu % 7 == 0 and (3 * 7 * 13) % ordu == 0


def binomial_t2_valid_us(f: Field) -> set[int]:
    _require_degree(f, BINOMIAL_T2_DEGREE)
    return {u for u in f.nonzero_elements() if binomial_t2_u_is_valid(f, u)}
