"""Divided powers of the choose-two operad.

gamma_m B(n) = B(mn).  An index i in [1, mn] splits as i = (a - 1) m + r
with block (column) a and row r, so an element is an m x n 0/1 matrix with two
ones.  The associative operad acts row by row: pairs whose two ones share a
row are acted on as in B, everything else goes to the basepoint.

Pointed-set maps are materialised on demand as integer tables indexed by the
colex rank of a pair (rank 0 is the basepoint); see ``combinatorics.pair_rank``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from . import choose_two
from .choose_two import BASEPOINT, WedgeElement
from .combinatorics import (
    Composition, as_composition, composite, decompose_index, enumerate_compositions,
    num_pairs, pair_arrays, pair_rank, split,
)
from .errors import InvalidArgument
from .report import Budget, Check, Report


def _check_shape(k, c, m):
    c = as_composition(c)
    if m < 1:
        raise InvalidArgument(f"m must be positive, got {m}")
    if c.k != k:
        raise InvalidArgument(f"composition {c} does not have {k} parts")
    return c


def _check_pair(e, arity):
    return choose_two.check_element(e, arity)


# -- pointwise maps -----------------------------------------------------------

def lambda_m(k: int, c, m: int, e):
    """Left action on gamma_m B(n): a same-row pair inside one block survives."""
    c = _check_shape(k, c, m)
    e = _check_pair(e, m * c.n)
    if e is BASEPOINT:
        return BASEPOINT
    _, ai, ri = decompose_index(e[0], m)
    _, aj, rj = decompose_index(e[1], m)
    if ri != rj:
        return BASEPOINT
    P = c.prefix()
    for s in range(1, k + 1):
        if P[s - 1] < ai < aj <= P[s]:
            off = int(P[s - 1])
            return WedgeElement(s, ((ai - off - 1) * m + ri, (aj - off - 1) * m + ri))
    return BASEPOINT


def rho_m(k: int, c, m: int, e):
    """Right action on gamma_m B(n), landing in gamma_m B(k) = B(mk)."""
    c = _check_shape(k, c, m)
    e = _check_pair(e, m * c.n)
    if e is BASEPOINT:
        return BASEPOINT
    _, ai, ri = decompose_index(e[0], m)
    _, aj, rj = decompose_index(e[1], m)
    if ri != rj:
        return BASEPOINT
    s, t = c.block_of(ai), c.block_of(aj)
    if s >= t:
        return BASEPOINT
    return ((s - 1) * m + ri, (t - 1) * m + ri)


def alpha_m_embed(m: int, r: int, e):
    """Strand r of the wedge of m copies of B(n), injected into gamma_m B(n).

    As a morphism of bimodules alpha_m runs gamma_m B -> v_r B in the opposite
    category; this is its underlying map of pointed sets.
    """
    if m < 1 or not 1 <= r <= m:
        raise InvalidArgument(f"row {r} outside [1, {m}]")
    if e is BASEPOINT:
        return BASEPOINT
    i, j = e
    if not 1 <= i < j:
        raise InvalidArgument(f"{e!r} is not a pair")
    return ((i - 1) * m + r, (j - 1) * m + r)


# -- tables -------------------------------------------------------------------

def _blocks(prefix: np.ndarray, a: np.ndarray) -> np.ndarray:
    # block s with P[s-1] < a <= P[s]; empty blocks are never hit
    return np.searchsorted(prefix, a, side="left")


@lru_cache(maxsize=None)
def _rows_cols(total: int, m: int):
    I, J = pair_arrays(total)
    ai, ri = (I - 1) // m + 1, (I - 1) % m + 1
    aj, rj = (J - 1) // m + 1, (J - 1) % m + 1
    return ai, ri, aj, rj


def _ranks(I, J):
    return (J - 1) * (J - 2) // 2 + I


@lru_cache(maxsize=None)
def rho_m_table(k: int, c: Composition, m: int) -> np.ndarray:
    """rho^(m)_{k,c} as an array: rank in B(m n) -> rank in B(m k)."""
    c = _check_shape(k, c, m)
    ai, ri, aj, rj = _rows_cols(m * c.n, m)
    P = c.prefix()
    s, t = _blocks(P, ai), _blocks(P, aj)
    ok = (ri == rj) & (s < t)
    out = np.zeros(len(ai) + 1, dtype=np.int64)
    out[1:] = np.where(ok, _ranks((s - 1) * m + ri, (t - 1) * m + ri), 0)
    out.setflags(write=False)
    return out


@lru_cache(maxsize=None)
def lambda_m_table(k: int, c: Composition, m: int) -> tuple[np.ndarray, np.ndarray]:
    """lambda^(m)_{k,c} as (slot, rank) arrays; slot 0 marks the wedge basepoint."""
    c = _check_shape(k, c, m)
    ai, ri, aj, rj = _rows_cols(m * c.n, m)
    P = c.prefix()
    s, t = _blocks(P, ai), _blocks(P, aj)
    ok = (ri == rj) & (s == t)
    off = P[s - 1]
    slot = np.zeros(len(ai) + 1, dtype=np.int64)
    rank = np.zeros(len(ai) + 1, dtype=np.int64)
    slot[1:] = np.where(ok, s, 0)
    rank[1:] = np.where(ok, _ranks((ai - off - 1) * m + ri, (aj - off - 1) * m + ri), 0)
    slot.setflags(write=False)
    rank.setflags(write=False)
    return slot, rank


def alpha_m_table(m: int, n: int) -> np.ndarray:
    """Array of shape (m, |B(n)|): strand r, rank in B(n) -> rank in B(mn)."""
    I, J = pair_arrays(n)
    out = np.zeros((m, len(I) + 1), dtype=np.int64)
    for r in range(1, m + 1):
        out[r - 1, 1:] = _ranks((I - 1) * m + r, (J - 1) * m + r)
    return out


# -- matrix picture -----------------------------------------------------------

@dataclass(frozen=True)
class ZeroOneMatrix:
    """An m x n matrix with two unit entries (or none, for the basepoint).

    ``slot`` records which wedge summand a left-action result lives in
    (0 for right-action results and for the basepoint).
    """
    entries: np.ndarray
    slot: int = 0

    def __post_init__(self):
        E = np.asarray(self.entries)
        if E.ndim != 2 or not np.isin(E, (0, 1)).all():
            raise InvalidArgument("entries must be a 2-d 0/1 array")
        if int(E.sum()) not in (0, 2):
            raise InvalidArgument(f"expected zero or two unit entries, got {int(E.sum())}")

    @property
    def is_zero(self) -> bool:
        return not np.asarray(self.entries).any()

    def __eq__(self, other):
        if not isinstance(other, ZeroOneMatrix):
            return NotImplemented
        a, b = np.asarray(self.entries), np.asarray(other.entries)
        if self.is_zero and other.is_zero:
            return True
        return self.slot == other.slot and a.shape == b.shape and bool((a == b).all())

    __hash__ = None


def encode_matrix(e, m: int, n: int) -> ZeroOneMatrix:
    """Place the two ones of pair (i, j) at (row r_i, column a_i), (row r_j, column a_j)."""
    M = np.zeros((m, n), dtype=np.int8)
    if e is not BASEPOINT:
        for idx in e:
            _, a, r = decompose_index(idx, m)
            if a > n:
                raise InvalidArgument(f"index {idx} exceeds arity {m * n}")
            M[r - 1, a - 1] = 1
    return ZeroOneMatrix(M)


def decode_matrix(M: ZeroOneMatrix):
    E = np.asarray(M.entries)
    if M.is_zero:
        return BASEPOINT
    m = E.shape[0]
    rows, cols = np.nonzero(E)
    idx = sorted(int(c) * m + int(r) + 1 for r, c in zip(rows, cols))
    return tuple(idx)


def matrix_oracle(k: int, c, m: int, M: ZeroOneMatrix, side: str) -> ZeroOneMatrix:
    """Row-by-row action computed from the plain choose-two maps."""
    c = _check_shape(k, c, m)
    if side not in ("left", "right"):
        raise InvalidArgument(f"side must be 'left' or 'right', got {side!r}")
    E = np.asarray(M.entries)
    if E.shape != (m, c.n):
        raise InvalidArgument(f"matrix shape {E.shape} does not match ({m}, {c.n})")
    zero_right = ZeroOneMatrix(np.zeros((m, k), dtype=np.int8))
    zero_left = ZeroOneMatrix(np.zeros((m, c.n), dtype=np.int8))
    rows, cols = np.nonzero(E)
    if len(rows) == 0 or rows[0] != rows[1]:
        return zero_right if side == "right" else zero_left
    r = int(rows[0])
    a, b = sorted(int(x) + 1 for x in cols)
    if side == "right":
        out = choose_two.rho_action(k, c, (a, b))
        if out is BASEPOINT:
            return zero_right
        R = np.zeros((m, k), dtype=np.int8)
        R[r, out[0] - 1] = R[r, out[1] - 1] = 1
        return ZeroOneMatrix(R)
    out = choose_two.lambda_action(k, c, (a, b))
    if out is BASEPOINT:
        return zero_left
    L = np.zeros((m, c[out.slot - 1]), dtype=np.int8)
    L[r, out.pair[0] - 1] = L[r, out.pair[1] - 1] = 1
    return ZeroOneMatrix(L, slot=out.slot)


def _elementary(k: int, n: int) -> list[Composition]:
    """Compositions of n into k parts with at most one part different from 1."""
    q = n - (k - 1)
    if q < 0:
        return []
    if q == 1:
        return [Composition((1,) * k)]
    return [Composition((1,) * s + (q,) + (1,) * (k - s - 1)) for s in range(k)]


def _compositions(k, n, full):
    return enumerate_compositions(k, n) if full else _elementary(k, n)


def verify_matrix_oracle(m: int, max_total_arity: int, full_blocks: int = 5) -> Report:
    """Compare lambda_m / rho_m with the row-wise matrix oracle on every element.

    Compositions are enumerated as in ``verify_bimodule_axioms``.
    """
    rep = Report("matrix-oracle", parameters={"m": m, "max_total_arity": max_total_arity,
                                              "full_blocks": full_blocks})
    N = max_total_arity // m
    count = 0
    for n in range(0, N + 1):
        elems = choose_two.elements(m * n)
        for k in range(1, N + 1):
            for c in _compositions(k, n, max(k, n) <= full_blocks):
                for e in elems:
                    M = encode_matrix(e, m, n)
                    count += 1
                    got_r = rho_m(k, c, m, e)
                    want_r = decode_matrix(matrix_oracle(k, c, m, M, "right"))
                    if got_r != want_r:
                        rep.add(Check("row-wise oracle agreement", False, witness={
                            "side": "right", "k": k, "c": c, "element": e,
                            "rho_m": got_r, "oracle": want_r}, count=count))
                        return rep
                    got_l = lambda_m(k, c, m, e)
                    ol = matrix_oracle(k, c, m, M, "left")
                    want_l = BASEPOINT if ol.is_zero else WedgeElement(ol.slot, decode_matrix(ol))
                    if got_l != want_l:
                        rep.add(Check("row-wise oracle agreement", False, witness={
                            "side": "left", "k": k, "c": c, "element": e,
                            "lambda_m": got_l, "oracle": want_l}, count=count))
                        return rep
    rep.add(Check("row-wise oracle agreement", True, count=count))
    return rep


# -- bimodule axioms ----------------------------------------------------------

def _lam_apply(lam, k, c, m, ranks):
    slot, rank = lam(k, c, m)
    return slot[ranks], rank[ranks]


def verify_bimodule_axioms(m: int, max_total_arity: int, full_blocks: int = 5,
                           rho=rho_m_table, lam=lambda_m_table,
                           budget: int | None = 10**6) -> Report:
    """Check the bimodule axioms for gamma_m B exhaustively over elements.

    Arities up to N = max_total_arity // m blocks are covered.  When every
    arity in an axiom instance is at most ``full_blocks`` all compositions are
    enumerated; above that, compositions with a single part different from 1
    (these include every coface, codegeneracy and unit composition).
    ``rho`` and ``lam`` may be replaced by other table builders.
    """
    N = max_total_arity // m
    rep = Report("bimodule", parameters={"m": m, "max_total_arity": max_total_arity,
                                         "full_blocks": full_blocks})
    spend = Budget(budget)
    rng_arity = range(1, N + 1)

    # (a) right actions compose: rho(c) . rho(c') == rho(c o c')
    count, bad = 0, None
    for k, l, p in product(rng_arity, rng_arity, range(0, N + 1)):
        full = max(k, l, p) <= full_blocks
        for cp in _compositions(l, p, full):
            T2 = rho(l, cp, m)
            for c in _compositions(k, l, full):
                spend.spend()
                count += 1
                lhs = rho(k, c, m)[T2]
                rhs = rho(k, composite(c, cp), m)
                if not np.array_equal(lhs, rhs):
                    e = int(np.flatnonzero(lhs != rhs)[0])
                    bad = {"c": c, "c_prime": cp, "element_rank": e,
                           "iterated": int(lhs[e]), "composite": int(rhs[e])}
                    break
            if bad:
                break
        if bad:
            break
    rep.add(Check("right associativity", bad is None, witness=bad, count=count))

    # (b) left actions compose
    count, bad = 0, None
    for k, J, n in product(rng_arity, rng_arity, range(0, N + 1)):
        full = max(k, J, n) <= full_blocks
        for c in _compositions(J, n, full):
            lhs_slot, lhs_rank = lam(J, c, m)
            for g in _compositions(k, J, full):
                spend.spend()
                count += 1
                cg = composite(g, c)
                pieces = split(g, c)
                G = g.prefix()
                slot1, rank1 = lam(k, cg, m)
                slot2 = np.zeros_like(slot1)
                rank2 = np.zeros_like(rank1)
                for s in range(1, k + 1):
                    mask = slot1 == s
                    if not mask.any():
                        continue
                    if g[s - 1] == 0:
                        slot2[mask] = -1
                        continue
                    ps, pr = lam(g[s - 1], Composition(pieces[s - 1]), m)
                    inner = rank1[mask]
                    slot2[mask] = np.where(ps[inner] > 0, ps[inner] + G[s - 1], 0)
                    rank2[mask] = pr[inner]
                if not (np.array_equal(lhs_slot, slot2) and np.array_equal(lhs_rank, rank2)):
                    e = int(np.flatnonzero((lhs_slot != slot2) | (lhs_rank != rank2))[0])
                    bad = {"c": c, "grouping": g, "element_rank": e,
                           "direct": (int(lhs_slot[e]), int(lhs_rank[e])),
                           "iterated": (int(slot2[e]), int(rank2[e]))}
                    break
            if bad:
                break
        if bad:
            break
    rep.add(Check("left associativity", bad is None, witness=bad, count=count))

    # (c) left and right actions commute
    count, bad = 0, None
    for k, n, p in product(rng_arity, rng_arity, range(0, N + 1)):
        full = max(k, n, p) <= full_blocks
        for c in _compositions(k, n, full):
            for d in _compositions(n, p, full):
                spend.spend()
                count += 1
                T = rho(n, d, m)
                s1, r1 = _lam_apply(lam, k, c, m, T)
                cd = composite(c, d)
                pieces = split(c, d)
                s2, r2 = lam(k, cd, m)
                s2, r2 = s2.copy(), r2.copy()
                for s in range(1, k + 1):
                    mask = s2 == s
                    if not mask.any():
                        continue
                    if c[s - 1] == 0:
                        s2[mask] = -1
                        continue
                    inner = rho(c[s - 1], Composition(pieces[s - 1]), m)[r2[mask]]
                    s2[mask] = np.where(inner > 0, s, 0)
                    r2[mask] = inner
                if not (np.array_equal(s1, s2) and np.array_equal(r1, r2)):
                    e = int(np.flatnonzero((s1 != s2) | (r1 != r2))[0])
                    bad = {"left": c, "right": d, "element_rank": e,
                           "right_then_left": (int(s1[e]), int(r1[e])),
                           "left_then_right": (int(s2[e]), int(r2[e]))}
                    break
            if bad:
                break
        if bad:
            break
    rep.add(Check("left/right commutation", bad is None, witness=bad, count=count))

    # (d) unit compositions act as the identity
    count, bad = 0, None
    for n in rng_arity:
        ident = np.arange(num_pairs(m * n) + 1)
        count += 1
        T = rho(n, Composition((1,) * n), m)
        if not np.array_equal(T, ident):
            e = int(np.flatnonzero(T != ident)[0])
            bad = {"side": "right", "n": n, "element_rank": e, "element": _unrank(e),
                   "image_rank": int(T[e])}
            break
        slot, rank = lam(1, Composition((n,)), m)
        want_slot = np.where(ident > 0, 1, 0)
        if not (np.array_equal(slot, want_slot) and np.array_equal(rank, ident)):
            e = int(np.flatnonzero((slot != want_slot) | (rank != ident))[0])
            bad = {"side": "left", "n": n, "element_rank": e, "element": _unrank(e),
                   "image": (int(slot[e]), int(rank[e]))}
            break
    rep.add(Check("unit", bad is None, witness=bad, count=count))
    return rep


def _unrank(rank):
    from .combinatorics import pair_unrank
    return "+" if rank == 0 else pair_unrank(rank)


def same_row_ranks(m: int, n: int) -> np.ndarray:
    """Ranks of the elements of B(mn) whose two indices share a row (plus the basepoint)."""
    _, ri, _, rj = _rows_cols(m * n, m)
    return np.concatenate([[0], np.flatnonzero(ri == rj) + 1])


def verify_unit_on_same_row(m: int, max_total_arity: int) -> Check:
    """Unit laws restricted to the same-row elements (the image of alpha_m)."""
    count, bad = 0, None
    for n in range(1, max_total_arity // m + 1):
        keep = same_row_ranks(m, n)
        T = rho_m_table(n, Composition((1,) * n), m)[keep]
        slot, rank = lambda_m_table(1, Composition((n,)), m)
        count += len(keep)
        if not (np.array_equal(T, keep) and np.array_equal(rank[keep], keep)):
            bad = {"n": n}
            break
    return Check("unit on same-row elements", bad is None, witness=bad, count=count)


# -- alpha_m ------------------------------------------------------------------

def verify_alpha_morphism(m: int, max_total_arity: int, embed=alpha_m_embed) -> Report:
    """alpha_m is injective and intertwines the actions of B and gamma_m B."""
    rep = Report("alpha", parameters={"m": m, "max_total_arity": max_total_arity})
    N = max_total_arity // m
    count, bad = 0, None
    for n in range(0, N + 1):
        seen = {}
        for r in range(1, m + 1):
            for e in choose_two.elements(n)[1:]:
                img = embed(m, r, e)
                count += 1
                if img is BASEPOINT or img in seen:
                    bad = {"n": n, "element": (r, e), "collides_with": seen.get(img)}
                    break
                seen[img] = (r, e)
            if bad:
                break
        if bad:
            break
    rep.add(Check("injective", bad is None, witness=bad, count=count))

    count, bad = 0, None
    for n in range(0, N + 1):
        for k in range(1, N + 1):
            for c in enumerate_compositions(k, n):
                for r in range(1, m + 1):
                    for e in choose_two.elements(n):
                        count += 1
                        up = embed(m, r, e)
                        # right: rho^(m)(alpha(e)) == alpha(rho(e))
                        a1 = rho_m(k, c, m, up)
                        b = choose_two.rho_action(k, c, e)
                        a2 = BASEPOINT if b is BASEPOINT else embed(m, r, b)
                        if a1 != a2:
                            bad = {"side": "right", "k": k, "c": c, "row": r, "element": e,
                                   "act_then_embed": a2, "embed_then_act": a1}
                            break
                        l1 = lambda_m(k, c, m, up)
                        w = choose_two.lambda_action(k, c, e)
                        l2 = BASEPOINT if w is BASEPOINT else WedgeElement(w.slot, embed(m, r, w.pair))
                        if l1 != l2:
                            bad = {"side": "left", "k": k, "c": c, "row": r, "element": e,
                                   "act_then_embed": l2, "embed_then_act": l1}
                            break
                    if bad:
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    rep.add(Check("intertwines actions", bad is None, witness=bad, count=count))
    return rep


def verify_gamma_one(max_arity: int) -> Check:
    """With m = 1 the tables agree element by element with the actions on B itself."""
    count, bad = 0, None
    for k in range(1, max_arity + 1):
        for n in range(0, max_arity + 1):
            for c in enumerate_compositions(k, n):
                T = rho_m_table(k, c, 1)
                slot, rank = lambda_m_table(k, c, 1)
                for e in choose_two.elements(n)[1:]:
                    count += 1
                    q = pair_rank(*e)
                    r = choose_two.rho_action(k, c, e)
                    want_r = 0 if r is BASEPOINT else pair_rank(*r)
                    w = choose_two.lambda_action(k, c, e)
                    want_l = (0, 0) if w is BASEPOINT else (w.slot, pair_rank(*w.pair))
                    if T[q] != want_r or (slot[q], rank[q]) != want_l:
                        bad = {"k": k, "c": c, "element": e}
                        break
                if bad:
                    break
            if bad:
                break
        if bad:
            break
    return Check("gamma_1 reproduces the B-bimodule", bad is None, witness=bad, count=count)
