"""Exhaustive search for APN binomials x^d1 + u*x^d2 over GF(2^m).

Candidate triples (d1, d2, u) are grouped into orbits of affine-equivalent
functions generated by:

* substitution x -> a*x followed by dividing out the d1 coefficient,
  which multiplies u by a^(d2-d1);
* outer Frobenius conjugation, doubling both exponents mod 2^m-1 and
  squaring u;
* inner-times-outer Frobenius conjugation (substitute x^(2^(m-1)), then
  square), which squares u while fixing both exponents;
* whenever an operation puts the unit coefficient on the larger exponent,
  the function is divided by the other coefficient, swapping roles and
  inverting u.

The canonical representative is the lexicographically least triple in the
orbit.  Exponent pairs themselves are deduplicated by the doubling action
before any u loop runs.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .field import Field
from .function import VectorialFunction
from .spectra import differential_spectrum

_PROGRESS_EVERY = 64


@dataclass(frozen=True)
class SearchSpace:
    """What to sweep: exponent pairs (None = all canonical pairs) and an
    inclusive coefficient range over the nonzero field elements."""

    m: int
    poly: int | None = None
    pairs: tuple[tuple[int, int], ...] | None = None
    u_lo: int = 1
    u_hi: int | None = None  # default 2^m - 1

    def resolve(self) -> tuple[Field, list[tuple[int, int]], int, int]:
        f = Field(self.m, self.poly)
        pairs = list(self.pairs) if self.pairs is not None else enumerate_canonical_pairs(self.m)
        u_hi = self.u_hi if self.u_hi is not None else f.group_order
        if not 1 <= self.u_lo <= u_hi <= f.group_order:
            raise ValueError(f"bad u range [{self.u_lo}, {u_hi}]")
        return f, pairs, self.u_lo, u_hi


@dataclass(frozen=True)
class SearchHit:
    """One canonical orbit of APN binomials found in the swept space."""

    d1: int
    d2: int
    u: int                          # least hit coefficient in this slice
    canonical: tuple[int, int, int] # orbit representative triple
    witness: bool                   # re-verified on the non-aborting path
    orbit_size: int                 # swept triples collapsing to this orbit
    members: tuple[int, ...]        # the u values found in this slice
    monomial_equivalent: bool       # d2 = 2^k * d1: collapses onto a power map

    def key(self):
        return self.canonical


def _normalize(f: Field, e1: int, e2: int, u: int) -> tuple[int, int, int]:
    if e1 > e2:
        return e2, e1, f.inv(u)
    return e1, e2, u


def orbit_of(f: Field, d1: int, d2: int, u: int) -> set[tuple[int, int, int]]:
    """All triples equivalent to (d1, d2, u) under the documented moves."""
    n = f.group_order
    d1, d2, u = d1 % n, d2 % n, u
    if d1 == d2 or d1 == 0 or d2 == 0 or u == 0:
        raise ValueError("need two distinct nonzero exponents and nonzero u")
    start = _normalize(f, d1, d2, u)
    seen = {start}
    todo = deque([start])
    while todo:
        e1, e2, v = todo.popleft()
        mult = f.antilog[(e2 - e1) % n]  # generator of the a^(d2-d1) subgroup
        succs = (
            _normalize(f, e1, e2, f.mul(v, mult)),
            _normalize(f, (2 * e1) % n, (2 * e2) % n, f.mul(v, v)),
            _normalize(f, e1, e2, f.mul(v, v)),
        )
        for s in succs:
            if s not in seen:
                seen.add(s)
                todo.append(s)
    return seen


def canonical_orbit_representative(f: Field, d1: int, d2: int, u: int) -> tuple[int, int, int]:
    """Lexicographically least triple in the orbit of (d1, d2, u)."""
    return min(orbit_of(f, d1, d2, u))


def enumerate_canonical_pairs(m: int) -> list[tuple[int, int]]:
    """Exponent pairs 1 <= d1 < d2 <= 2^m-2, one per doubling class."""
    n = (1 << m) - 1
    out = []
    for d1 in range(1, n):
        for d2 in range(d1 + 1, n):
            cls = min(
                tuple(sorted(((d1 << k) % n, (d2 << k) % n)))
                for k in range(m)
            )
            if cls == (d1, d2):
                out.append((d1, d2))
    return out


def is_monomial_equivalent(m: int, d1: int, d2: int) -> bool:
    """True when d2 = 2^k * d1 mod 2^m-1: then x^d1 + u*x^d2 is a linear
    image of the power map x^d1."""
    n = (1 << m) - 1
    return any((d1 << k) % n == d2 % n for k in range(1, m))


# -- slice sweep -------------------------------------------------------------

def _apn_us_in_slice(f: Field, d1: int, d2: int, u_lo: int, u_hi: int) -> list[int]:
    """All u in [u_lo, u_hi] making x^d1 + u*x^d2 APN (early-abort test)."""
    order = f.order
    n = f.group_order
    exp = np.asarray(f.antilog + f.antilog, dtype=np.int64)  # doubled, avoids a mod
    log = np.asarray(f.log, dtype=np.int64)
    p1 = np.asarray([f.pow(x, d1) for x in range(order)], dtype=np.int64)
    p2 = np.asarray([f.pow(x, d2) for x in range(order)], dtype=np.int64)
    nz = np.flatnonzero(p2)
    logp2 = log[p2[nz]]
    xs = np.arange(order)
    hits = []
    lut = np.empty(order, dtype=np.int64)
    for u in range(u_lo, u_hi + 1):
        lut[:] = p1
        lut[nz] ^= exp[f.log[u] + logp2]  # doubled table covers the wrap
        for a in range(1, order):
            if np.bincount(lut[xs ^ a] ^ lut, minlength=order).max() > 2:
                break
        else:
            hits.append(u)
    return hits


def _slice_worker(args) -> tuple[tuple[int, int], list[int]]:
    m, poly, d1, d2, u_lo, u_hi = args
    f = Field(m, poly)
    return (d1, d2), _apn_us_in_slice(f, d1, d2, u_lo, u_hi)


def search_binomials(space: SearchSpace, jobs: int = 1, progress=None,
                     skip_slices=None) -> list[SearchHit]:
    """Sweep the space; return canonicalized, deduplicated, re-verified hits.

    Output is sorted and independent of the worker count.  ``skip_slices``
    (a set of (d1, d2)) supports resuming a partial sweep.
    """
    f, pairs, u_lo, u_hi = space.resolve()
    skip = set(skip_slices or ())
    tasks = [(space.m, f.poly, d1, d2, u_lo, u_hi) for d1, d2 in pairs if (d1, d2) not in skip]

    raw: dict[tuple[int, int], list[int]] = {}
    if jobs <= 1 or len(tasks) <= 1:
        for i, t in enumerate(tasks):
            key, us = _slice_worker(t)
            raw[key] = us
            if progress is not None:
                progress(i + 1, len(tasks))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for i, (key, us) in enumerate(pool.map(_slice_worker, tasks)):
                raw[key] = us
                if progress is not None:
                    progress(i + 1, len(tasks))

    hits = []
    for (d1, d2), us in sorted(raw.items()):
        if not us:
            continue
        orbits: dict[tuple[int, int, int], list[int]] = {}
        for u in us:
            rep = canonical_orbit_representative(f, d1, d2, u)
            orbits.setdefault(rep, []).append(u)
        for rep in sorted(orbits):
            members = tuple(sorted(orbits[rep]))
            witness = all(
                differential_spectrum(_binomial(f, d1, d2, u)).uniformity == 2
                for u in members
            )
            hits.append(SearchHit(
                d1=d1, d2=d2, u=members[0], canonical=rep,
                witness=witness, orbit_size=len(members), members=members,
                monomial_equivalent=is_monomial_equivalent(space.m, d1, d2),
            ))
    return hits


def _binomial(f: Field, d1: int, d2: int, u: int) -> VectorialFunction:
    from .function import from_polynomial

    return from_polynomial(f, [(d1, 1), (d2, u)])
