"""Vectorial Boolean functions F: GF(2^m) -> GF(2^m).

The canonical internal form is the lookup table; a sparse univariate
polynomial, when given, is kept only as provenance.  All analysis in
this package works from the LUT.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .field import Field


class NotLinear(ValueError):
    """LUT fails the exhaustive F2-linearity check."""


class NotBijective(ValueError):
    """LUT is not a permutation of the field."""


class FieldMismatch(ValueError):
    """Operands live over different fields."""


@dataclass(frozen=True)
class VectorialFunction:
    """F: GF(2^m) -> GF(2^m) as a LUT plus optional source polynomial."""

    field: Field
    lut: tuple[int, ...]
    source: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if len(self.lut) != self.field.order:
            raise ValueError(f"LUT length {len(self.lut)} != 2^{self.field.m}")

    def __call__(self, x: int) -> int:
        return self.lut[x]

    def lut_array(self) -> np.ndarray:
        return np.asarray(self.lut, dtype=np.int64)

    def __repr__(self) -> str:
        src = f", source={poly_string(self.source)!r}" if self.source else ""
        return f"VectorialFunction(m={self.field.m}{src})"


def from_lut(f: Field, lut, source=None) -> VectorialFunction:
    """Wrap a raw value table (length 2^m) as a VectorialFunction."""
    lut = tuple(int(v) for v in lut)
    if any(not 0 <= v < f.order for v in lut):
        raise ValueError("LUT entry out of field range")
    return VectorialFunction(f, lut, source)


def from_polynomial(f: Field, terms) -> VectorialFunction:
    """Evaluate a sparse univariate polynomial into a LUT.

    terms: iterable of (exponent, coefficient).  Duplicate exponents have
    their coefficients summed (xor).  0^0 evaluates to 1.
    """
    merged: dict[int, int] = {}
    for e, c in terms:
        if e < 0:
            raise ValueError(f"negative exponent {e}")
        if not 0 <= c < f.order:
            raise ValueError(f"coefficient {c:#x} out of field range")
        merged[e] = merged.get(e, 0) ^ c
    merged = {e: c for e, c in merged.items() if c}
    lut = []
    for x in f.elements():
        acc = 0
        for e, c in merged.items():
            acc ^= f.mul(c, f.pow(x, e))
        lut.append(acc)
    return VectorialFunction(f, tuple(lut), tuple(sorted(merged.items())))


def power_function(f: Field, d: int) -> VectorialFunction:
    """The power mapping x -> x^d."""
    if d < 0:
        raise ValueError("exponent must be >= 0")
    return VectorialFunction(f, tuple(f.pow(x, d) for x in f.elements()), ((d, 1),))


def add_functions(f1: VectorialFunction, f2: VectorialFunction) -> VectorialFunction:
    """Pointwise sum (xor of outputs)."""
    if f1.field != f2.field:
        raise FieldMismatch("functions live over different fields")
    return VectorialFunction(f1.field, tuple(a ^ b for a, b in zip(f1.lut, f2.lut)))


# -- algebraic normal form ------------------------------------------------

def mobius_transform(bits: list[int]) -> list[int]:
    """Self-inverse subset-sum transform of a truth table over F2."""
    n = len(bits).bit_length() - 1
    out = list(bits)
    for i in range(n):
        step = 1 << i
        for x in range(len(out)):
            if x & step:
                out[x] ^= out[x ^ step]
    return out


@dataclass(frozen=True)
class ANF:
    """Per-coordinate algebraic normal forms of a vectorial function.

    monomials[j] is the set of input-variable masks whose monomial has
    coefficient 1 in output coordinate j.
    """

    m: int
    monomials: tuple[frozenset[int], ...]

    @property
    def degree(self) -> int:
        return max(
            (mask.bit_count() for coord in self.monomials for mask in coord),
            default=0,
        )


def anf(F: VectorialFunction) -> ANF:
    """Compute the ANF of every output coordinate via the Mobius transform."""
    m = F.field.m
    coords = []
    for j in range(m):
        tt = [(v >> j) & 1 for v in F.lut]
        coeffs = mobius_transform(tt)
        coords.append(frozenset(mask for mask, c in enumerate(coeffs) if c))
    return ANF(m, tuple(coords))


def algebraic_degree(F: VectorialFunction) -> int:
    """Max monomial weight over the ANF of all m coordinate functions."""
    return anf(F).degree


# -- affine equivalence machinery -----------------------------------------

def check_linear_bijection(f: Field, L) -> tuple[int, ...]:
    """Validate a LUT as an F2-linear bijection; returns it as a tuple."""
    L = tuple(int(v) for v in L)
    if len(L) != f.order:
        raise NotLinear(f"LUT length {len(L)} != 2^{f.m}")
    if len(set(L)) != f.order:
        raise NotBijective("LUT is not a permutation")
    arr = np.asarray(L, dtype=np.int64)
    xs = np.arange(f.order, dtype=np.int64)
    xor = np.bitwise_xor.outer(xs, xs)
    if not np.array_equal(arr[xor], np.bitwise_xor.outer(arr, arr)):
        raise NotLinear("L(x)+L(y) != L(x+y) for some pair")
    return L


def compose_with_linear(F: VectorialFunction, L1, L2, a: int = 0, b: int = 0) -> VectorialFunction:
    """Affine-equivalent function x -> L2(F(L1(x + a))) + b.

    L1 and L2 are LUTs of F2-linear bijections over the same field; both
    are validated exhaustively.
    """
    f = F.field
    L1 = check_linear_bijection(f, L1)
    L2 = check_linear_bijection(f, L2)
    lut = tuple(L2[F.lut[L1[x ^ a]]] ^ b for x in f.elements())
    return VectorialFunction(f, lut)


def linear_map_from_matrix(f: Field, cols: list[int]) -> tuple[int, ...]:
    """LUT of the linear map sending basis vector e_i to cols[i]."""
    lut = [0] * f.order
    for i, c in enumerate(cols):
        step = 1 << i
        for x in range(step):
            lut[x | step] = lut[x] ^ c
    return tuple(lut)


def random_linear_permutation(f: Field, rng: random.Random) -> tuple[int, ...]:
    """LUT of a uniformly sampled invertible m x m bit matrix (rejection)."""
    m = f.m
    while True:
        cols = [rng.randrange(1, f.order) for _ in range(m)]
        if _gf2_rank(cols) == m:
            return linear_map_from_matrix(f, cols)


def _gf2_rank(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    rank = 0
    for r in rows:
        while r:
            p = r.bit_length() - 1
            if p in pivots:
                r ^= pivots[p]
            else:
                pivots[p] = r
                rank += 1
                break
    return rank


# -- input formats ---------------------------------------------------------

def parse_polynomial_terms(s: str) -> list[tuple[int, int]]:
    """Parse "3:1,36:0x2f4" into [(3, 1), (36, 0x2f4)].

    Coefficients accept decimal or 0x-prefixed hex.
    """
    terms = []
    for part in s.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            e_str, c_str = part.split(":")
            terms.append((int(e_str), int(c_str, 0)))
        except ValueError:
            raise ValueError(f"bad polynomial term {part!r}; expected exp:coeff") from None
    if not terms:
        raise ValueError("empty polynomial string")
    return terms


def poly_string(terms) -> str:
    """Inverse of parse_polynomial_terms (coefficients in hex)."""
    return ",".join(f"{e}:{c:#x}" for e, c in terms)


def read_lut_file(f: Field, path) -> VectorialFunction:
    """Read a LUT file: one hex value per line, line i = F(i), 2^m lines."""
    values = []
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            try:
                values.append(int(line, 16))
            except ValueError:
                raise ValueError(f"{path}:{lineno}: not a hex value: {line!r}") from None
    if len(values) != f.order:
        raise ValueError(f"{path}: expected {f.order} lines, found {len(values)}")
    return from_lut(f, values)
