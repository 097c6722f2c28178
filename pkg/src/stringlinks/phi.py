"""Realizing the choose-two operad in finite pointed sets.

For a finite pointed set X, Phi_X(S) is the set of pointed maps S -> X.  Since
Phi_X turns wedges into products, applying it arity by arity to B gives an
honest operad; applying it to gamma_m B gives a bimodule over the associative
operad.  A pointed map B(k) -> X is stored as a tuple of values on the
non-basepoint pairs of B(k), in colex rank order, so pointedness holds by
construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

import numpy as np

from . import choose_two
from .choose_two import BASEPOINT
from .combinatorics import (
    Composition, as_composition, composite, enumerate_compositions, num_pairs, pair_rank, split,
)
from .divided_powers import lambda_m_table, rho_m_table
from .errors import InvalidArgument, PreconditionError
from .report import Budget, Check, Report

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class FinitePointedSet:
    """Elements 0..size-1; 0 is the basepoint."""
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise InvalidArgument("a pointed set has at least its basepoint")


def pointed_maps(X: FinitePointedSet, arity: int) -> list[tuple]:
    """Every pointed map B(arity) -> X; the constant basepoint map comes first."""
    return list(product(range(X.size), repeat=num_pairs(arity)))


@lru_cache(maxsize=None)
def _mu_table(k: int, c: Composition) -> tuple[np.ndarray, np.ndarray]:
    """mu_{k,c} on the pairs of B(n): (slot, zero-based position in that factor)."""
    slots, pos = [], []
    for e in choose_two.elements(c.n)[1:]:
        w = choose_two.mu(k, c, e)
        slots.append(w.slot)
        pos.append(pair_rank(*w.pair) - 1)
    return np.array(slots, dtype=np.int64), np.array(pos, dtype=np.int64)


def phi_compose(k: int, c, g: tuple, gs: tuple) -> tuple:
    """gamma(g; g_1, ..., g_k) in Phi_X(B): evaluate g or g_s on the wedge slot mu picks."""
    c = as_composition(c)
    if len(gs) != k or c.k != k:
        raise InvalidArgument("need one input per part of the composition")
    slots, pos = _mu_table(k, c)
    factors = (g,) + tuple(gs)
    return tuple(factors[s][p] for s, p in zip(slots.tolist(), pos.tolist()))


@dataclass
class FinitePointedOperad:
    """A finite operad in pointed sets, with composition stored as tables.

    ``spaces[n]`` lists the elements of arity n (index 0 is the basepoint).
    ``table[(k, c)]`` is an integer array of shape (|P(k)|, |P(n_1)|, ...,
    |P(n_k)|) whose entries are indices into ``spaces[c.n]``.  The unit is
    index 0 of arity 1.
    """
    max_arity: int
    spaces: dict
    table: dict = field(repr=False)
    unit: int = 0

    def compose(self, k, c, g: int, gs: tuple) -> int:
        if k == 0:
            return g
        return int(self.table[(k, as_composition(c))][(g,) + tuple(gs)])


def _digits(X: FinitePointedSet, n: int) -> np.ndarray:
    """Row i holds the values of spaces[n][i] (first pair most significant)."""
    maps = pointed_maps(X, n)
    return np.array(maps, dtype=np.int64).reshape(len(maps), num_pairs(n))


def _weights(X: FinitePointedSet, n: int) -> np.ndarray:
    r = num_pairs(n)
    return X.size ** np.arange(r - 1, -1, -1, dtype=np.int64)


def realize_operad(X: FinitePointedSet, max_arity: int, budget: int | None = DEFAULT_BUDGET
                   ) -> FinitePointedOperad:
    """Phi_X(B) through the given arity, composition tables included."""
    if max_arity < 1:
        raise InvalidArgument("max_arity must be at least 1")
    spend = Budget(budget, "table entries")
    spaces = {n: pointed_maps(X, n) for n in range(0, max_arity + 1)}
    digits = {n: _digits(X, n) for n in spaces}
    table = {}
    for k in range(1, max_arity + 1):
        for n in range(0, max_arity + 1):
            for c in enumerate_compositions(k, n):
                sizes = [len(spaces[k])] + [len(spaces[ns]) for ns in c]
                spend.spend(int(np.prod(sizes)))
                slots, pos = _mu_table(k, c)
                arities = (k,) + tuple(c)
                out = np.zeros(sizes, dtype=np.int64)
                w = _weights(X, n)
                for t, (s, p) in enumerate(zip(slots.tolist(), pos.tolist())):
                    # value of the composite on pair t comes from factor s alone
                    shape = [1] * len(sizes)
                    shape[s] = sizes[s]
                    out = out + (digits[arities[s]][:, p] * w[t]).reshape(shape)
                table[(k, c)] = out
    return FinitePointedOperad(max_arity, spaces, table)


def _axis(values: np.ndarray, axis: int, ndim: int) -> np.ndarray:
    shape = [1] * ndim
    shape[axis] = len(values)
    return values.reshape(shape)


def verify_operad_axioms(op: FinitePointedOperad, max_arity: int | None = None,
                         budget: int | None = DEFAULT_BUDGET) -> Report:
    """Exhaustive associativity and unit laws over every composable tuple.

    For each pair of compositions (c, d) the whole space of tuples
    (g; g_1..g_k; h_1..h_n) is checked at once by broadcasting.
    """
    N = op.max_arity if max_arity is None else max_arity
    if N > op.max_arity:
        raise InvalidArgument(f"operad only stored through arity {op.max_arity}")
    rep = Report("operad", parameters={"max_arity": N})
    spend = Budget(budget)
    size = {n: len(op.spaces[n]) for n in range(N + 1)}
    T = op.table

    count, bad = 0, None
    for k in range(1, N + 1):
        for n in range(1, N + 1):
            for c in enumerate_compositions(k, n):
                offsets = c.prefix()
                for p in range(0, N + 1):
                    for d in enumerate_compositions(n, p):
                        ndim = 1 + k + n
                        total = size[k] * int(np.prod([size[x] for x in c])) * \
                            int(np.prod([size[x] for x in d]))
                        spend.spend(total)
                        count += total
                        G = _axis(np.arange(size[k]), 0, ndim)
                        GS = [_axis(np.arange(size[c[s]]), 1 + s, ndim) for s in range(k)]
                        HS = [_axis(np.arange(size[d[t]]), 1 + k + t, ndim) for t in range(n)]
                        lhs = T[(n, d)][(T[(k, c)][(G, *GS)], *HS)]
                        inner = []
                        for s in range(k):
                            hs = HS[offsets[s]:offsets[s + 1]]
                            if c[s] == 0:
                                inner.append(GS[s])
                            else:
                                piece = Composition(d[offsets[s]:offsets[s + 1]])
                                inner.append(T[(c[s], piece)][(GS[s], *hs)])
                        rhs = T[(k, composite(c, d))][(G, *inner)]
                        lhs, rhs = np.broadcast_arrays(lhs, rhs)
                        if not np.array_equal(lhs, rhs):
                            idx = tuple(int(x) for x in np.argwhere(lhs != rhs)[0])
                            bad = {"k": k, "c": c, "d": d, "g": idx[0], "gs": idx[1:1 + k],
                                   "hs": idx[1 + k:], "left_nested": int(lhs[idx]),
                                   "right_nested": int(rhs[idx])}
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    rep.add(Check("associativity", bad is None, witness=bad, count=count))

    count, bad = 0, None
    for n in range(0, N + 1):
        for g in range(size[n]):
            count += 1
            left = op.compose(1, Composition((n,)), op.unit, (g,))
            right = op.compose(n, Composition((1,) * n), g, (op.unit,) * n) if n else g
            if left != g or right != g:
                bad = {"arity": n, "element": g, "unit_left": left, "unit_right": right}
                break
        if bad:
            break
    rep.add(Check("unit", bad is None, witness=bad, count=count))
    return rep


# -- bimodules from gamma_m B ------------------------------------------------

@dataclass
class FiniteBimodule:
    """Phi_X(gamma_m B) through ``max_arity`` blocks, with action tables.

    ``right[(k, c, f)]`` is the index of f . rho^(m)_{k,c} in arity c.n;
    ``left[(k, c, fs)]`` is the index of the map assembled from fs through
    lambda^(m)_{k,c}.
    """
    m: int
    max_arity: int
    spaces: dict
    right: dict = field(repr=False)
    left: dict = field(repr=False)


def _pull_right(f: tuple, T: np.ndarray) -> tuple:
    # value on the basepoint is the basepoint of X
    full = (0,) + f
    return tuple(full[t] for t in T[1:].tolist())


def _pull_left(fs: tuple, slot: np.ndarray, rank: np.ndarray) -> tuple:
    return tuple(0 if s == 0 else fs[s - 1][r - 1]
                 for s, r in zip(slot[1:].tolist(), rank[1:].tolist()))


def realize_bimodule(X: FinitePointedSet, m: int, max_arity: int,
                     budget: int | None = DEFAULT_BUDGET) -> FiniteBimodule:
    if m < 1:
        raise InvalidArgument("m must be positive")
    spend = Budget(budget, "table entries")
    spaces = {n: pointed_maps(X, m * n) for n in range(0, max_arity + 1)}
    index = {n: {g: i for i, g in enumerate(sp)} for n, sp in spaces.items()}
    right, left = {}, {}
    for k in range(1, max_arity + 1):
        for n in range(0, max_arity + 1):
            for c in enumerate_compositions(k, n):
                T = rho_m_table(k, c, m)
                spend.spend(len(spaces[k]))
                for fi, f in enumerate(spaces[k]):
                    right[(k, c, fi)] = index[n][_pull_right(f, T)]
                slot, rank = lambda_m_table(k, c, m)
                sizes = [len(spaces[ns]) for ns in c]
                spend.spend(int(np.prod(sizes)))
                for fis in product(*(range(s) for s in sizes)):
                    fs = tuple(spaces[ns][i] for ns, i in zip(c, fis))
                    left[(k, c, fis)] = index[n][_pull_left(fs, slot, rank)]
    return FiniteBimodule(m, max_arity, spaces, right, left)


def induced_bimodule(X: FinitePointedSet, max_arity: int) -> FiniteBimodule:
    """The bimodule structure of Phi_X(B) induced pointwise by lambda and rho of B."""
    spaces = {n: pointed_maps(X, n) for n in range(0, max_arity + 1)}
    index = {n: {g: i for i, g in enumerate(sp)} for n, sp in spaces.items()}
    right, left = {}, {}
    for k in range(1, max_arity + 1):
        for n in range(0, max_arity + 1):
            for c in enumerate_compositions(k, n):
                els = choose_two.elements(n)[1:]
                for fi, f in enumerate(spaces[k]):
                    vals = []
                    for e in els:
                        out = choose_two.rho_action(k, c, e)
                        vals.append(0 if out is BASEPOINT else f[pair_rank(*out) - 1])
                    right[(k, c, fi)] = index[n][tuple(vals)]
                for fis in product(*(range(len(spaces[ns])) for ns in c)):
                    vals = []
                    for e in els:
                        w = choose_two.lambda_action(k, c, e)
                        if w is BASEPOINT:
                            vals.append(0)
                        else:
                            vals.append(spaces[c[w.slot - 1]][fis[w.slot - 1]][pair_rank(*w.pair) - 1])
                    left[(k, c, fis)] = index[n][tuple(vals)]
    return FiniteBimodule(1, max_arity, spaces, right, left)


def phi_gamma_commutes(X: FinitePointedSet, m: int, max_total: int = 8,
                       budget: int | None = DEFAULT_BUDGET) -> Check:
    """Phi_X(gamma_m B)(k) equals gamma_m Phi_X(B)(k) = Phi_X(B)(mk) for all m k <= max_total.

    Both sides are pointed maps out of the same pointed set, so the check
    compares the domains (the elements gamma_m B(k) carries through the
    divided-power tables against B(mk)) and, when small enough, the map sets.
    """
    count, bad = 0, None
    for k in range(1, max_total // m + 1):
        count += 1
        slot, rank = lambda_m_table(1, Composition((k,)), m)
        domain = len(rank)
        if domain != num_pairs(m * k) + 1 or slot[0] != 0:
            bad = {"k": k, "domain": domain, "expected": num_pairs(m * k) + 1}
            break
        if budget is None or X.size ** num_pairs(m * k) <= budget:
            # maps out of the gamma_m B(k) domain, listed by its own ranks
            lhs = set(product(range(X.size), repeat=domain - 1))
            if lhs != set(pointed_maps(X, m * k)):
                bad = {"k": k, "reason": "map sets differ"}
                break
    return Check("Phi commutes with gamma_m", bad is None, witness=bad, count=count)


# -- extending a point map ----------------------------------------------------

@dataclass
class PointMapExtension:
    """Operad map P -> Phi_X(B) extending a pointed map P(2) -> X.

    ``components[n][p]`` is the image of element p of P(n), a tuple over B(n).
    """
    components: dict
    report: Report


def _choose_two_inputs(n, i, j):
    return Composition(1 if t in (i, j) else 0 for t in range(1, n + 1))


def extend_point_map(P: FinitePointedOperad, g, budget: int | None = DEFAULT_BUDGET
                     ) -> PointMapExtension:
    """Arity n sends p to the map (i, j) |-> g(p with the unit fed at i and j
    and the nullary element everywhere else)."""
    if len(P.spaces.get(0, ())) != 1 or len(P.spaces.get(1, ())) != 1:
        raise PreconditionError("P(0) and P(1) must be singletons")
    g = list(g)
    if len(g) != len(P.spaces[2]):
        raise PreconditionError("g must be defined on every element of P(2)")
    if g[0] != 0:
        raise PreconditionError("g must send the basepoint of P(2) to the basepoint")
    comps = {}
    for n in range(0, P.max_arity + 1):
        prs = choose_two.elements(n)[1:]
        comps[n] = [
            tuple(g[P.compose(n, _choose_two_inputs(n, i, j), p, (0,) * n)] for i, j in prs)
            for p in range(len(P.spaces[n]))]

    rep = Report("extend-point-map")
    spend = Budget(budget)
    count, bad = 0, None
    for k in range(1, P.max_arity + 1):
        for n in range(0, P.max_arity + 1):
            for c in enumerate_compositions(k, n):
                for p in range(len(P.spaces[k])):
                    for qs in product(*(range(len(P.spaces[ns])) for ns in c)):
                        spend.spend()
                        count += 1
                        lhs = comps[n][P.compose(k, c, p, qs)]
                        rhs = phi_compose(k, c, comps[k][p], tuple(comps[ns][q] for ns, q in zip(c, qs)))
                        if lhs != rhs:
                            bad = {"k": k, "c": c, "p": p, "qs": qs}
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    rep.add(Check("multiplicative", bad is None, witness=bad, count=count))
    restricted = [comps[2][p][0] for p in range(len(P.spaces[2]))]
    rep.add(Check("restricts to g in arity 2", restricted == g,
                  witness=None if restricted == g else {"restricted": restricted, "g": g},
                  count=len(g)))
    return PointMapExtension(comps, rep)
