"""F2 group-algebra elements over (Z/2)^(2m) and ideal dimensions.

An element of F2[U x V] is a bit vector of length 2^(2m); the bit for the
pair (a, b) sits at index (a << m) | b.  The dimension of the ideal an
element generates (the F2 span of all its group translates) is invariant
under CCZ equivalence, which is what makes it useful for telling APN
functions apart when their spectra agree.

Two independent paths compute that dimension:

* ``ideal_dimension`` - generator closure.  Seed a reduced echelon basis
  with the element, translate every basis row by each of the 2m group
  generators, reduce, insert what is new, repeat until stable.  The span
  is then closed under the generators, hence under the whole group.
  Memory is (dimension) x 2^(2m) bits, which is what makes 2m = 20
  feasible where a dense translate matrix (2^20 x 2^20) is not.

* ``ideal_dimension_oracle`` - materialize all 2^(2m) translates and run
  plain Gaussian elimination on bit-packed rows.  Feasible for 2m <= 14;
  used to cross-check the closure path.

Rows are mutated in place to keep the basis fully reduced.  That is still
sound: row updates only xor in later-inserted rows, so the change of
basis from "candidate values at insertion" to "current values" is
unitriangular and the span never changes.
"""

from __future__ import annotations

import struct
from collections import deque
from dataclasses import dataclass

import numpy as np

from .function import VectorialFunction
from .spectra import is_apn


class NotAPN(ValueError):
    """The two-solutions element is defined only for APN functions."""


class EmptyElement(ValueError):
    """The zero element generates the zero ideal; dimension is undefined here."""


class TooLarge(ValueError):
    """Dense-matrix path refused beyond 2m = 14."""


class DimensionCapExceeded(RuntimeError):
    """Closure grew past the caller-supplied safety cap."""


@dataclass(frozen=True)
class GroupAlgebraElement:
    """An element of F2[(Z/2)^n] as a 2^n-bit integer."""

    n: int
    bits: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> (1 << self.n):
            raise ValueError("bit vector longer than 2^n")

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def contains(self, idx: int) -> bool:
        return (self.bits >> idx) & 1 == 1

    def support(self) -> np.ndarray:
        """Sorted indices of the set bits."""
        L = 1 << self.n
        raw = np.frombuffer(self.bits.to_bytes(L // 8 if L >= 8 else 1, "little"), dtype=np.uint8)
        return np.flatnonzero(np.unpackbits(raw, bitorder="little")[:L]).astype(np.int64)


def element_from_support(n: int, indices) -> GroupAlgebraElement:
    """Build an element from the indices of its set bits."""
    L = 1 << n
    arr = np.zeros(L, dtype=np.uint8)
    arr[np.asarray(indices, dtype=np.int64)] = 1
    bits = int.from_bytes(np.packbits(arr, bitorder="little").tobytes(), "little")
    return GroupAlgebraElement(n, bits)


def translate(e: GroupAlgebraElement, g: int) -> GroupAlgebraElement:
    """Multiply by the group element g: bit h moves to h xor g."""
    if not 0 <= g < (1 << e.n):
        raise ValueError("group element out of range")
    bits = e.bits
    for i in range(e.n):
        if (g >> i) & 1:
            bits = _translate_bits_by_generator(bits, i, 1 << e.n)
    return GroupAlgebraElement(e.n, bits)


def _translate_bits_by_generator(bits: int, i: int, L: int) -> int:
    # swap the halves of every block of 2^(i+1) consecutive positions
    s = 1 << i
    mask = ((1 << L) - 1) // ((1 << (2 * s)) - 1) * ((1 << s) - 1)
    return ((bits & mask) << s) | ((bits >> s) & mask)


# -- elements derived from functions ---------------------------------------

def build_graph_element(F: VectorialFunction) -> GroupAlgebraElement:
    """The graph {(x, F(x))} as a group-algebra element."""
    m = F.field.m
    lut = F.lut_array()
    idx = (np.arange(len(lut)) << m) | lut
    return element_from_support(2 * m, idx)


def build_aF(F: VectorialFunction) -> GroupAlgebraElement:
    """Support: pairs (a, b), a != 0, where F(x+a)+F(x) = b has exactly
    two solutions.  Defined only for APN F (raises NotAPN otherwise)."""
    m = F.field.m
    lut = F.lut_array()
    n = len(lut)
    xs = np.arange(n)
    pieces = []
    for a in range(1, n):
        counts = np.bincount(lut[xs ^ a] ^ lut, minlength=n)
        if counts.max() > 2:
            raise NotAPN(f"delta({a}, b) > 2 for some b")
        pieces.append((a << m) | np.flatnonzero(counts == 2))
    return element_from_support(2 * m, np.concatenate(pieces))


# -- numpy word-row helpers --------------------------------------------------

def _words_for(n: int) -> int:
    return max(1, (1 << n) // 64)


def _int_to_row(bits: int, W: int) -> np.ndarray:
    return np.frombuffer(bits.to_bytes(W * 8, "little"), dtype="<u8").copy()

def _row_to_int(row: np.ndarray) -> int:
    return int.from_bytes(np.ascontiguousarray(row, dtype="<u8").tobytes(), "little")


def _subword_mask(s: int) -> np.uint64:
    # ones at word-bit positions whose index-bit for this generator is 0
    block = (1 << s) - 1
    out = 0
    for j in range(0, 64, 2 * s):
        out |= block << j
    return np.uint64(out)


def _translate_row_by_generator(row: np.ndarray, i: int) -> np.ndarray:
    s = 1 << i
    if s >= 64:
        ws = s // 64
        return row.reshape(-1, 2, ws)[:, ::-1, :].reshape(row.shape).copy()
    mask = _subword_mask(s)
    sh = np.uint64(s)
    return ((row & mask) << sh) | ((row >> sh) & mask)


class EchelonBasis:
    """Fully reduced GF(2) row basis over bit vectors of length 2^n.

    Rows live in fixed-size numpy blocks of 64-bit words; each row's
    pivot is its highest set bit and appears in no other row.
    """

    BLOCK = 1024

    def __init__(self, n: int):
        self.n = n
        self.W = _words_for(n)
        self.blocks: list[np.ndarray] = []
        self.nrows = 0
        self._piv_word = np.zeros(self.BLOCK, dtype=np.int64)
        self._piv_shift = np.zeros(self.BLOCK, dtype=np.uint64)
        self._piv_pos: list[int] = []

    @property
    def dimension(self) -> int:
        return self.nrows

    def row(self, i: int) -> np.ndarray:
        return self.blocks[i // self.BLOCK][i % self.BLOCK]

    def pivots(self) -> list[int]:
        return sorted(self._piv_pos)

    def rows_by_pivot(self) -> list[int]:
        """Row values as ints, ordered by increasing pivot position."""
        order = np.argsort(np.asarray(self._piv_pos))
        return [_row_to_int(self.row(int(i))) for i in order]

    def reduce(self, r: np.ndarray) -> np.ndarray:
        """Clear every pivot bit from r (one pass; the basis is fully
        reduced, so eliminations cannot reintroduce pivot bits)."""
        k = self.nrows
        if k == 0:
            return r
        hits = (r[self._piv_word[:k]] >> self._piv_shift[:k]) & np.uint64(1)
        sel = np.flatnonzero(hits)
        if len(sel) == 0:
            return r
        for b in range(len(self.blocks)):
            lo = b * self.BLOCK
            part = sel[(sel >= lo) & (sel < lo + self.BLOCK)]
            if len(part):
                r ^= np.bitwise_xor.reduce(self.blocks[b][part - lo], axis=0)
        return r

    def leading_bit(self, r: np.ndarray) -> int:
        """Highest set bit position, or -1 if r is zero."""
        nz = np.flatnonzero(r)
        if len(nz) == 0:
            return -1
        w = int(nz[-1])
        return (w << 6) + int(r[w]).bit_length() - 1

    def insert(self, r: np.ndarray, pivot: int) -> int:
        """Add an already-reduced nonzero row; keeps full reduction by
        clearing the new pivot from every existing row.  Returns the
        row index."""
        wp, sp = pivot >> 6, np.uint64(pivot & 63)
        one = np.uint64(1)
        for b, blk in enumerate(self.blocks):
            cnt = min(self.nrows - b * self.BLOCK, self.BLOCK)
            if cnt <= 0:
                break
            hit = np.flatnonzero((blk[:cnt, wp] >> sp) & one)
            if len(hit):
                blk[hit] ^= r
        i = self.nrows
        if i % self.BLOCK == 0:
            self.blocks.append(np.zeros((self.BLOCK, self.W), dtype=np.uint64))
        self.blocks[i // self.BLOCK][i % self.BLOCK] = r
        if i >= len(self._piv_word):
            self._piv_word = np.concatenate([self._piv_word, np.zeros(len(self._piv_word), dtype=np.int64)])
            self._piv_shift = np.concatenate([self._piv_shift, np.zeros(len(self._piv_shift), dtype=np.uint64)])
        self._piv_word[i] = pivot >> 6
        self._piv_shift[i] = pivot & 63
        self._piv_pos.append(pivot)
        self.nrows += 1
        return i

    def check_fully_reduced(self) -> bool:
        """Structural invariant: each pivot bit set in exactly one row."""
        for p in self._piv_pos:
            wp, sp = p >> 6, np.uint64(p & 63)
            count = 0
            for b, blk in enumerate(self.blocks):
                cnt = min(self.nrows - b * self.BLOCK, self.BLOCK)
                if cnt <= 0:
                    break
                count += int(((blk[:cnt, wp] >> sp) & np.uint64(1)).sum())
            if count != 1:
                return False
        return True


def ideal_dimension(
    A: GroupAlgebraElement,
    max_dim: int | None = None,
    progress=None,
    seed_rows: list[int] | None = None,
    return_basis: bool = False,
):
    """Dimension of the F2 span of all group translates of A.

    ``max_dim`` aborts (DimensionCapExceeded) if the basis grows past it.
    ``progress(candidates_done, dimension)`` is called periodically.
    ``seed_rows`` (ints) pre-load a previously saved basis; every seeded
    row is re-enqueued, so resuming is always sound.
    """
    if A.bits == 0:
        raise EmptyElement("zero element")
    n = A.n
    basis = EchelonBasis(n)
    queue: deque[int] = deque()

    def feed(bits: int):
        r = basis.reduce(_int_to_row(bits, basis.W))
        p = basis.leading_bit(r)
        if p >= 0:
            if max_dim is not None and basis.nrows >= max_dim:
                raise DimensionCapExceeded(f"dimension exceeds cap {max_dim}")
            queue.append(basis.insert(r, p))

    feed(A.bits)
    for bits in seed_rows or ():
        feed(bits)

    done = 0
    while queue:
        i = queue.popleft()
        src = basis.row(i)
        for gen in range(n):
            cand = basis.reduce(_translate_row_by_generator(src, gen))
            p = basis.leading_bit(cand)
            if p >= 0:
                if max_dim is not None and basis.nrows >= max_dim:
                    raise DimensionCapExceeded(f"dimension exceeds cap {max_dim}")
                queue.append(basis.insert(cand, p))
        done += 1
        if progress is not None and done % 64 == 0:
            progress(done, basis.nrows)
    if return_basis:
        return basis.nrows, basis
    return basis.nrows


def ideal_dimension_oracle(A: GroupAlgebraElement) -> int:
    """Rank of the full 2^n x 2^n translate matrix by Gaussian elimination
    on bit-packed int rows.  Refuses n > 14."""
    if A.n > 14:
        raise TooLarge(f"dense path needs a 2^{A.n} square bit matrix")
    if A.bits == 0:
        raise EmptyElement("zero element")
    L = 1 << A.n
    support = A.support()
    row_buf = np.zeros(L, dtype=np.uint8)
    pivots: dict[int, int] = {}
    for g in range(L):
        row_buf[:] = 0
        row_buf[support ^ g] = 1
        r = int.from_bytes(np.packbits(row_buf, bitorder="little").tobytes(), "little")
        while r:
            p = r.bit_length() - 1
            other = pivots.get(p)
            if other is None:
                pivots[p] = r
                break
            r ^= other
    return len(pivots)


# -- support permutations (automorphism invariance checks) ------------------

def linear_index_map(n: int, cols: list[int]) -> np.ndarray:
    """Index permutation of 0..2^n-1 induced by the F2-linear map sending
    basis vector e_i to cols[i]."""
    lut = np.zeros(1 << n, dtype=np.int64)
    for i, c in enumerate(cols):
        step = 1 << i
        lut[step : 2 * step] = lut[:step] ^ c
    return lut


def permute_support(e: GroupAlgebraElement, perm: np.ndarray) -> GroupAlgebraElement:
    """Apply an index permutation pointwise to the support."""
    return element_from_support(e.n, perm[e.support()])


# -- basis persistence -------------------------------------------------------

_BASIS_MAGIC = b"APNKBAS1"


def save_basis(path, n: int, rows: list[int]) -> None:
    """Raw bit-rows with a small header (magic, group rank, row count)."""
    nbytes = max(1, (1 << n) // 8)
    with open(path, "wb") as fh:
        fh.write(_BASIS_MAGIC)
        fh.write(struct.pack("<II", n, len(rows)))
        for r in rows:
            fh.write(r.to_bytes(nbytes, "little"))


def load_basis(path) -> tuple[int, list[int]]:
    with open(path, "rb") as fh:
        magic = fh.read(8)
        if magic != _BASIS_MAGIC:
            raise ValueError(f"{path}: not a basis file")
        n, count = struct.unpack("<II", fh.read(8))
        nbytes = max(1, (1 << n) // 8)
        rows = [int.from_bytes(fh.read(nbytes), "little") for _ in range(count)]
    return n, rows
