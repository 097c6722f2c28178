"""Weak compositions, block partial sums and row/block index splitting.

All indices are 1-based, as in the formulas they implement.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from math import comb
from typing import NamedTuple

import numpy as np

from .errors import InvalidArgument


class Composition(tuple):
    """A weak composition n = n_1 + ... + n_k with every n_i >= 0."""

    def __new__(cls, parts):
        parts = tuple(int(p) for p in parts)
        if len(parts) == 0:
            raise InvalidArgument("a composition needs at least one part")
        if any(p < 0 for p in parts):
            raise InvalidArgument(f"negative part in {parts}")
        return super().__new__(cls, parts)

    @property
    def k(self) -> int:
        return len(self)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple:
        return tuple(self)

    def prefix(self) -> np.ndarray:
        """Array P with P[s-1] = partial_sum(self, s) for s = 1..k+1."""
        return _prefix(tuple(self))

    def block_of(self, a: int) -> int:
        """The block s with P^s < a <= P^{s+1}."""
        if not 1 <= a <= self.n:
            raise InvalidArgument(f"index {a} outside [1, {self.n}]")
        return int(np.searchsorted(self.prefix(), a, side="left"))

    def __repr__(self):
        return f"Composition{tuple(self)}"


@lru_cache(maxsize=None)
def _prefix(parts: tuple) -> np.ndarray:
    out = np.zeros(len(parts) + 1, dtype=np.int64)
    np.cumsum(parts, out=out[1:])
    out.setflags(write=False)
    return out


def as_composition(c) -> Composition:
    return c if isinstance(c, Composition) else Composition(c)


def enumerate_compositions(k: int, n: int) -> list[Composition]:
    """Every weak composition of n into k parts, in lexicographic order."""
    if k < 1:
        raise InvalidArgument(f"k must be positive, got {k}")
    if n < 0:
        raise InvalidArgument(f"n must be nonnegative, got {n}")
    return list(_compositions(k, n))


@lru_cache(maxsize=None)
def _compositions(k: int, n: int) -> tuple:
    # first part ascending, then the tail recursively: lexicographic order
    if k == 1:
        return (Composition((n,)),)
    out = []
    for first in range(n + 1):
        for rest in _compositions(k - 1, n - first):
            out.append(Composition((first,) + tuple(rest)))
    return tuple(out)


def count_compositions(k: int, n: int) -> int:
    return comb(n + k - 1, k - 1)


def partial_sum(c, s: int) -> int:
    """n^s = n_1 + ... + n_{s-1}; n^1 = 0 and n^{k+1} = n."""
    c = as_composition(c)
    if not 1 <= s <= c.k + 1:
        raise InvalidArgument(f"s={s} outside [1, {c.k + 1}]")
    return int(c.prefix()[s - 1])


class IndexDecomposition(NamedTuple):
    i: int
    a: int
    r: int


def decompose_index(i: int, m: int) -> IndexDecomposition:
    """Split i into block a and row r with i = (a - 1) m + r, 1 <= r <= m."""
    if i < 1 or m < 1:
        raise InvalidArgument(f"need i >= 1 and m >= 1, got i={i}, m={m}")
    a, r = divmod(i - 1, m)
    return IndexDecomposition(i, a + 1, r + 1)


def recompose_index(a: int, r: int, m: int) -> int:
    return (a - 1) * m + r


def composite(outer, inner) -> Composition:
    """Compose c (k parts summing to l) with c' (l parts summing to p).

    Part s of the result is the sum of the parts of c' that fall in block s of c.
    Acting by c and then by c' agrees with acting once by this composite.
    """
    outer, inner = as_composition(outer), as_composition(inner)
    if outer.n != inner.k:
        raise InvalidArgument(f"{outer} sums to {outer.n} but {inner} has {inner.k} parts")
    P = outer.prefix()
    return Composition(sum(inner[P[s]:P[s + 1]]) for s in range(outer.k))


def split(outer, inner) -> list[Composition]:
    """Cut c' (l parts) into the k consecutive pieces singled out by c."""
    outer, inner = as_composition(outer), as_composition(inner)
    if outer.n != inner.k:
        raise InvalidArgument(f"{outer} sums to {outer.n} but {inner} has {inner.k} parts")
    P = outer.prefix()
    return [tuple(inner[P[s]:P[s + 1]]) for s in range(outer.k)]


def coface_composition(k: int, i: int) -> Composition:
    """(1, ..., 2, ..., 1) with k parts and the 2 in slot i."""
    if not 1 <= i <= k:
        raise InvalidArgument(f"coface slot {i} outside [1, {k}]")
    return Composition(2 if s == i else 1 for s in range(1, k + 1))


def codegeneracy_composition(k: int, j: int) -> Composition:
    """(1, ..., 0, ..., 1) with k parts and the 0 in slot j + 1."""
    if not 0 <= j <= k - 1:
        raise InvalidArgument(f"codegeneracy index {j} outside [0, {k - 1}]")
    return Composition(0 if s == j + 1 else 1 for s in range(1, k + 1))


# -- pairs 1 <= i < j <= n, ranked in colex order so B(n) is an initial
# -- segment of B(n + 1); rank 0 is reserved for the basepoint.

def pair_rank(i: int, j: int) -> int:
    return (j - 1) * (j - 2) // 2 + i


def pair_unrank(rank: int) -> tuple[int, int]:
    if rank < 1:
        raise InvalidArgument("rank 0 is the basepoint")
    j = int((1 + np.sqrt(8 * (rank - 1) + 1)) // 2) + 1
    while (j - 1) * (j - 2) // 2 >= rank:
        j -= 1
    while j * (j - 1) // 2 < rank:
        j += 1
    return rank - (j - 1) * (j - 2) // 2, j


def num_pairs(n: int) -> int:
    return n * (n - 1) // 2 if n >= 2 else 0


@lru_cache(maxsize=None)
def pair_arrays(n: int) -> tuple[np.ndarray, np.ndarray]:
    """Arrays (I, J) listing the pairs of {1..n} in rank order."""
    pairs = sorted(combinations(range(1, n + 1), 2), key=lambda p: (p[1], p[0]))
    I = np.array([p[0] for p in pairs], dtype=np.int64)
    J = np.array([p[1] for p in pairs], dtype=np.int64)
    I.setflags(write=False)
    J.setflags(write=False)
    return I, J


def pairs(n: int) -> list[tuple[int, int]]:
    I, J = pair_arrays(n)
    return list(zip(I.tolist(), J.tolist()))
