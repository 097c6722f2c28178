from itertools import product

import numpy as np
import pytest

from stringlinks.combinatorics import Composition, num_pairs
from stringlinks.errors import PreconditionError, ResourceLimitError
from stringlinks.phi import (
    FinitePointedOperad, FinitePointedSet, extend_point_map, induced_bimodule, phi_compose,
    phi_gamma_commutes, pointed_maps, realize_bimodule, realize_operad, verify_operad_axioms,
)


def test_pointed_maps_count():
    for size in (1, 2, 3):
        for n in range(0, 5):
            assert len(pointed_maps(FinitePointedSet(size), n)) == size ** num_pairs(n)


def test_phi_compose_by_hand():
    # X = {0, 1}; g on B(2) = {(1,2)}, inner maps on B(2) and B(1)
    # composite on B(3): (1,2) from the first inner map, (1,3) and (2,3) from g
    assert phi_compose(2, (2, 1), (1,), ((0,), ())) == (0, 1, 1)
    assert phi_compose(2, (2, 1), (0,), ((1,), ())) == (1, 0, 0)


@pytest.mark.parametrize("size,arity", [(1, 4), (2, 3), (3, 3)])
def test_realized_operad_axioms(size, arity):
    op = realize_operad(FinitePointedSet(size), arity)
    rep = verify_operad_axioms(op, arity)
    assert rep.passed, str(rep)


def test_table_agrees_with_phi_compose():
    X = FinitePointedSet(2)
    op = realize_operad(X, 3)
    for k in range(1, 4):
        for c in [Composition(p) for p in product(range(0, 3), repeat=k) if sum(p) <= 3]:
            for gi, g in enumerate(op.spaces[k]):
                for gs in product(*(range(len(op.spaces[n])) for n in c)):
                    want = phi_compose(k, c, g, tuple(op.spaces[n][i] for n, i in zip(c, gs)))
                    assert op.spaces[c.n][op.compose(k, c, gi, gs)] == want


def test_corrupted_table_fails():
    op = realize_operad(FinitePointedSet(2), 3)
    T = op.table[(2, Composition((1, 1)))].copy()
    T[1, 0, 0], T[0, 0, 0] = T[0, 0, 0], T[1, 0, 0]
    op.table[(2, Composition((1, 1)))] = T
    rep = verify_operad_axioms(op, 3)
    assert not rep.passed
    for c in rep.failures():
        assert c.witness is not None


def test_budget_enforced():
    with pytest.raises(ResourceLimitError):
        realize_operad(FinitePointedSet(2), 4, budget=100)


def test_realized_bimodule_m1_matches_induced():
    X = FinitePointedSet(2)
    a, b = realize_bimodule(X, 1, 3), induced_bimodule(X, 3)
    assert a.right == b.right and a.left == b.left


@pytest.mark.parametrize("m", [1, 2, 3])
def test_phi_commutes_with_gamma(m):
    assert phi_gamma_commutes(FinitePointedSet(2), m).passed


def test_extend_point_map():
    op = realize_operad(FinitePointedSet(2), 3)
    ext = extend_point_map(op, [0, 1])
    assert ext.report.passed
    with pytest.raises(PreconditionError):
        extend_point_map(op, [1, 0])
