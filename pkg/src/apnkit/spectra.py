"""Differential and Walsh (Fourier) spectra, and the APN/AB/crooked tests.

delta(a, b) counts solutions x of F(x+a) + F(x) = b.  The Walsh spectrum
is the multiset of character sums sum_x (-1)^(<alpha,x> + <beta,F(x)>)
over all character indices (alpha, beta); characters of the ambient
elementary abelian group are enumerated by bit masks with the dot-product
pairing, which is the same character group as any trace-based labelling,
so all multisets and maxima are identical.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .function import FieldMismatch, VectorialFunction


@dataclass(frozen=True)
class DifferentialSpectrum:
    """Histogram of delta(a,b) over all (a,b) != (0,0), plus the max."""

    m: int
    histogram: dict[int, int]
    uniformity: int


@dataclass(frozen=True)
class WalshSpectrum:
    """Multisets of graph character values and the linearity max."""

    m: int
    values: dict[int, int]        # signed value -> count
    abs_values: dict[int, int]    # |value| -> count
    linearity: int                # max |value| over nontrivial characters


def derivative_row(F: VectorialFunction, a: int) -> np.ndarray:
    """Counts of each output difference F(x+a)+F(x) over x (length 2^m)."""
    lut = F.lut_array()
    n = len(lut)
    d = lut[np.arange(n) ^ a] ^ lut
    return np.bincount(d, minlength=n)


def differential_spectrum(F: VectorialFunction) -> DifferentialSpectrum:
    """Full histogram of delta values; O(2^2m), no early abort."""
    lut = F.lut_array()
    n = len(lut)
    xs = np.arange(n)
    hist: Counter[int, int] = Counter()
    hist[0] += n - 1  # a = 0, b != 0 rows are identically zero
    uniformity = 0
    for a in range(1, n):
        counts = np.bincount(lut[xs ^ a] ^ lut, minlength=n)
        row_max = int(counts.max())
        if row_max > uniformity:
            uniformity = row_max
        tally = np.bincount(counts)
        for v in np.nonzero(tally)[0]:
            hist[int(v)] += int(tally[v])
    return DifferentialSpectrum(F.field.m, dict(hist), uniformity)


def differential_uniformity(F: VectorialFunction) -> int:
    return differential_spectrum(F).uniformity


def is_apn(F: VectorialFunction) -> bool:
    """True iff every delta(a,b) with a != 0 is at most 2.

    Aborts on the first derivative row with a count >= 4.
    """
    lut = F.lut_array()
    n = len(lut)
    xs = np.arange(n)
    for a in range(1, n):
        counts = np.bincount(lut[xs ^ a] ^ lut, minlength=n)
        if counts.max() > 2:
            return False
    return True


_PARITY_CACHE: dict[int, np.ndarray] = {}


def _parity_table(n: int) -> np.ndarray:
    table = _PARITY_CACHE.get(n)
    if table is None:
        v = np.arange(n, dtype=np.int64)
        p = v.copy()
        for s in (32, 16, 8, 4, 2, 1):
            p ^= p >> s
        table = (p & 1).astype(np.int32)
        _PARITY_CACHE[n] = table
    return table


def walsh_table(F: VectorialFunction) -> np.ndarray:
    """All character sums as a (2^m x 2^m) array indexed [beta, alpha].

    Row beta is the fast Walsh-Hadamard transform of the sign vector
    x -> (-1)^<beta, F(x)>.
    """
    n = F.field.order
    parity = _parity_table(n)
    lut = F.lut_array()
    betas = np.arange(n, dtype=np.int64)
    signs = 1 - 2 * parity[np.bitwise_and.outer(betas, lut)]
    t = signs.astype(np.int32)
    h = 1
    while h < n:
        t = t.reshape(n, -1, 2, h)
        even = t[:, :, 0, :] + t[:, :, 1, :]
        odd = t[:, :, 0, :] - t[:, :, 1, :]
        t = np.stack((even, odd), axis=2)
        h *= 2
    return t.reshape(n, n)


def walsh_spectrum(F: VectorialFunction) -> WalshSpectrum:
    """Signed and absolute character-value multisets plus linearity."""
    table = walsh_table(F)
    flat = table.ravel().copy()
    signed = Counter(flat.tolist())
    abs_vals = Counter(np.abs(flat).tolist())
    flat[0] = 0  # mask the trivial character at (alpha, beta) = (0, 0)
    linearity = int(np.abs(flat).max())
    return WalshSpectrum(F.field.m, dict(signed), dict(abs_vals), linearity)


def linearity(F: VectorialFunction) -> int:
    return walsh_spectrum(F).linearity


def is_ab(F: VectorialFunction) -> bool:
    """Almost bent: odd m and linearity exactly 2^((m+1)/2)."""
    m = F.field.m
    if m % 2 == 0:
        return False
    return walsh_spectrum(F).linearity == 1 << ((m + 1) // 2)


def is_crooked(F: VectorialFunction) -> bool:
    """True iff every derivative image set {F(x+a)+F(x)} is an affine hyperplane."""
    lut = F.lut_array()
    n = len(lut)
    half = n // 2
    xs = np.arange(n)
    for a in range(1, n):
        image = np.unique(lut[xs ^ a] ^ lut)
        if len(image) != half:
            return False
        h0 = int(image[0])
        # a set of size 2^(m-1) containing 0 is a subspace iff its rank is m-1
        pivots: dict[int, int] = {}
        for v in image:
            v = int(v) ^ h0
            while v:
                p = v.bit_length() - 1
                if p in pivots:
                    v ^= pivots[p]
                else:
                    pivots[p] = v
                    break
        if len(pivots) != F.field.m - 1:
            return False
    return True


def spectra_equal(F1: VectorialFunction, F2: VectorialFunction) -> bool:
    """Necessary condition for CCZ equivalence: same differential histogram
    and same Walsh absolute-value multiset."""
    if F1.field != F2.field:
        raise FieldMismatch("cannot compare spectra over different fields")
    if differential_spectrum(F1).histogram != differential_spectrum(F2).histogram:
        return False
    return walsh_spectrum(F1).abs_values == walsh_spectrum(F2).abs_values
