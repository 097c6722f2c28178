"""The choose-two operad B in pointed sets.

B(n) is the set of pairs (i, j), 1 <= i < j <= n, plus a disjoint basepoint.
The structure maps run "backwards" (the operad lives in the opposite category
of pointed sets), so composition is a co-operation

    mu_{k,c}: B(n) -> B(k) v B(n_1) v ... v B(n_k)

and the associative operad acts through the two projections lambda (keep the
same-block pairs) and rho (keep the cross-block pairs).
"""
from __future__ import annotations

from typing import NamedTuple

from .combinatorics import Composition, as_composition
from .errors import InvalidArgument


class _Basepoint:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "+"

    def __reduce__(self):
        return (_Basepoint, ())


BASEPOINT = _Basepoint()


class WedgeElement(NamedTuple):
    """Non-basepoint element of a wedge: slot 0 is the B(k) factor, slot s the B(n_s) factor."""
    slot: int
    pair: tuple


def is_basepoint(x) -> bool:
    return x is BASEPOINT


def elements(n: int) -> list:
    """B(n) listed as [+, (1,2), (1,3), (2,3), (1,4), ...] (colex order)."""
    from .combinatorics import pairs
    return [BASEPOINT] + pairs(n)


def check_element(e, n: int):
    if e is BASEPOINT:
        return e
    try:
        i, j = e
    except (TypeError, ValueError):
        raise InvalidArgument(f"{e!r} is neither the basepoint nor a pair") from None
    if not (1 <= i < j <= n):
        raise InvalidArgument(f"{e!r} is not an element of B({n})")
    return (int(i), int(j))


def _blocks(c: Composition, e):
    i, j = e
    return c.block_of(i), c.block_of(j)


def mu(k: int, c, e):
    """Operad co-multiplication of B for the composition c of n into k parts."""
    c = as_composition(c)
    if c.k != k:
        raise InvalidArgument(f"composition {c} does not have {k} parts")
    e = check_element(e, c.n)
    if e is BASEPOINT:
        return BASEPOINT
    s, t = _blocks(c, e)
    if s == t:
        off = int(c.prefix()[s - 1])
        return WedgeElement(s, (e[0] - off, e[1] - off))
    return WedgeElement(0, (s, t))


def lambda_action(k: int, c, e):
    """Left action of the associative operad: same-block pairs survive, shifted."""
    c = as_composition(c)
    if c.k != k:
        raise InvalidArgument(f"composition {c} does not have {k} parts")
    e = check_element(e, c.n)
    if e is BASEPOINT:
        return BASEPOINT
    P = c.prefix()
    for s in range(1, k + 1):
        if P[s - 1] < e[0] and e[1] <= P[s]:
            return WedgeElement(s, (e[0] - int(P[s - 1]), e[1] - int(P[s - 1])))
    return BASEPOINT


def rho_action(k: int, c, e):
    """Right action of the associative operad, landing in B(k)."""
    c = as_composition(c)
    if c.k != k:
        raise InvalidArgument(f"composition {c} does not have {k} parts")
    e = check_element(e, c.n)
    if e is BASEPOINT:
        return BASEPOINT
    P = c.prefix()
    for s in range(1, k + 1):
        if not (P[s - 1] < e[0] <= P[s]):
            continue
        for t in range(s + 1, k + 1):
            if P[t - 1] < e[1] <= P[t]:
                return (s, t)
        return BASEPOINT
    return BASEPOINT
