"""Straight 3-chains on a four-element index set.

A chain is an ordering (i_s(1), i_s(2), i_s(3), i_s(4)) of T = {i1 < i2 < i3 < i4},
taken up to reversal, so there are 12 of them.  Read as a path in the
complete graph on T it uses three of the six edges; the dual chain uses the
other three.

Permutations are stored in one-line form: ``sigma[j - 1] = sigma(j)``, and the
chain of sigma visits positions sigma(1), ..., sigma(4).
"""
from __future__ import annotations

from itertools import combinations, permutations
from typing import Callable, NamedTuple

import numpy as np

from .errors import InvalidArgument
from .report import Check, Report

# the 4-cycle 1 -> 2 -> 4 -> 3 -> 1 that pairs a chain with its dual
DUAL_CYCLE = (2, 4, 1, 3)
REVERSAL = (4, 3, 2, 1)


def compose(p: tuple, q: tuple) -> tuple:
    """p o q, i.e. apply q first."""
    return tuple(p[q[j] - 1] for j in range(len(q)))


def sign(p: tuple) -> int:
    """+1 for even permutations, -1 for odd ones."""
    s, seen = 1, set()
    for start in range(1, len(p) + 1):
        if start in seen:
            continue
        length, j = 0, start
        while j not in seen:
            seen.add(j)
            j = p[j - 1]
            length += 1
        if length % 2 == 0:
            s = -s
    return s


def from_cycles(text: str, size: int = 4) -> tuple:
    """Parse cycle notation such as "(12)(34)" or "id" into one-line form."""
    p = list(range(1, size + 1))
    text = text.strip()
    if text in ("", "id", "()"):
        return tuple(p)
    for cyc in text.replace(")", " ").split("("):
        digits = [int(ch) for ch in cyc if ch.isdigit()]
        if any(not 1 <= d <= size for d in digits):
            raise InvalidArgument(f"cycle entry outside 1..{size}: {text!r}")
        for a, b in zip(digits, digits[1:] + digits[:1]):
            p[a - 1] = b
    if sorted(p) != list(range(1, size + 1)):
        raise InvalidArgument(f"not a permutation of 1..{size}: {text!r}")
    return tuple(p)


def canonical(p: tuple) -> tuple:
    """The representative of p or its reversal whose first entry is smaller than its last."""
    return p if p[0] < p[3] else compose(p, REVERSAL)


class Chain3Class(NamedTuple):
    T: tuple
    rep: tuple
    parity: int

    @property
    def indices(self) -> tuple:
        return tuple(self.T[j - 1] for j in self.rep)

    @property
    def dual_rep(self) -> tuple:
        """sigma* = sigma o (1243) for the stored representative, before canonicalizing."""
        return compose(self.rep, DUAL_CYCLE)


def _check_T(T) -> tuple:
    T = tuple(sorted(int(t) for t in T))
    if len(T) != 4 or len(set(T)) != 4:
        raise InvalidArgument(f"need four distinct indices, got {T}")
    return T


def chain(T, p) -> Chain3Class:
    """The class of the chain visiting positions p of T (p in one-line form or cycle notation)."""
    if isinstance(p, str):
        p = from_cycles(p)
    p = canonical(tuple(p))
    return Chain3Class(_check_T(T), p, sign(p))


def enumerate_chains(T=(1, 2, 3, 4)) -> list[Chain3Class]:
    T = _check_T(T)
    return [Chain3Class(T, p, sign(p)) for p in permutations(range(1, 5)) if p[0] < p[3]]


def dual(ch: Chain3Class) -> Chain3Class:
    return chain(ch.T, ch.dual_rep)


def left_dual(ch: Chain3Class) -> Chain3Class:
    """Negative control: (1243) applied after sigma instead of before it."""
    return chain(ch.T, compose(DUAL_CYCLE, ch.rep))


def edges(ch: Chain3Class) -> frozenset:
    idx = ch.indices
    return frozenset(tuple(sorted(idx[j:j + 2])) for j in range(3))


def _path_edges(idx):
    return [(idx[j], idx[j + 1]) for j in range(3)]


def summand(f: Callable, ch: Chain3Class, v, w, literal: bool = False) -> float:
    """The term of the four-consistency sum attached to one chain class.

    ``f(i, j)`` must return the pair vector, with f(j, i) = -f(i, j).  By
    default each edge of a path is read as the unordered pair {i, j} and
    evaluated at f(min, max); the sum of these terms vanishes on Gauss maps.
    ``literal=True`` reads each path edge in its traversal direction instead.
    """
    v, w = np.asarray(v, dtype=float), np.asarray(w, dtype=float)
    idx = ch.indices
    didx = tuple(ch.T[j - 1] for j in ch.dual_rep)
    if literal:
        first, second = _path_edges(idx), _path_edges(didx)
    else:
        first = [tuple(sorted(e)) for e in _path_edges(idx)]
        second = [tuple(sorted(e)) for e in _path_edges(didx)]
    a = np.prod([np.dot(f(i, j), v) for i, j in first])
    b = np.prod([np.dot(f(i, j), w) for i, j in second])
    return ch.parity * a * b


def summand_factors(f: Callable, ch: Chain3Class, literal: bool = False):
    """The three v-side and three w-side vectors of a summand, and its sign."""
    idx = ch.indices
    didx = tuple(ch.T[j - 1] for j in ch.dual_rep)
    first, second = _path_edges(idx), _path_edges(didx)
    if not literal:
        first = [tuple(sorted(e)) for e in first]
        second = [tuple(sorted(e)) for e in second]
    A = np.array([f(i, j) for i, j in first], dtype=float)
    B = np.array([f(i, j) for i, j in second], dtype=float)
    return ch.parity, A, B


def reversed_summand(f: Callable, ch: Chain3Class, v, w, literal: bool = False) -> float:
    """Same term computed from the other representative of the class."""
    other = Chain3Class(ch.T, compose(ch.rep, REVERSAL), sign(compose(ch.rep, REVERSAL)))
    return summand(f, other, v, w, literal)


def verify_chains(T=(1, 2, 3, 4), samples: int = 100, seed: int = 0, tol: float = 1e-12,
                  n: int = 3, dual_fn=None):
    """Class count, duality, edge complements, parity and summand well-definedness."""
    dual_fn = dual_fn or dual
    T = _check_T(T)
    rep = Report("chains", parameters={"T": T, "samples": samples, "seed": seed, "tol": tol})
    cls = enumerate_chains(T)
    brute = {min(p, compose(p, REVERSAL)) for p in permutations(range(1, 5))}
    rep.add(Check("twelve classes", len(cls) == 12 and len(set(cls)) == 12 and len(brute) == 12,
                  witness=None if len(cls) == 12 else {"count": len(cls)}, count=len(cls)))
    bad = [ch.rep for ch in cls if dual_fn(dual_fn(ch)) != ch]
    rep.add(Check("dual is an involution", not bad, witness=bad[:1] or None, count=12))
    all_edges = frozenset(tuple(e) for e in combinations(T, 2))
    bad = [ch.rep for ch in cls
           if edges(ch) & edges(dual_fn(ch)) or edges(ch) | edges(dual_fn(ch)) != all_edges]
    rep.add(Check("dual edges complement", not bad, witness=bad[:1] or None, count=12))
    bad = [ch.rep for ch in cls if sign(compose(ch.rep, REVERSAL)) != ch.parity]
    rep.add(Check("parity well defined", not bad, witness=bad[:1] or None, count=12))

    rng = np.random.default_rng(np.random.SeedSequence([int(seed), 0]))
    worst, wit = 0.0, None
    for t in range(samples):
        vecs = rng.normal(size=(6, n))
        vecs /= np.linalg.norm(vecs, axis=1)[:, None]
        table = {e: vecs[q] for q, e in enumerate(sorted(all_edges))}

        def f(i, j):
            return table[(i, j)] if i < j else -table[(j, i)]
        v, w = rng.normal(size=n), rng.normal(size=n)
        for ch in cls:
            for literal in (False, True):
                d = abs(summand(f, ch, v, w, literal) - reversed_summand(f, ch, v, w, literal))
                if d > worst:
                    worst, wit = d, {"sample": t, "chain": ch.rep, "literal": literal}
    rep.add(Check("summand independent of representative", worst <= tol, residual=worst,
                  witness=wit if worst > tol else None, count=samples * 24))
    return rep
