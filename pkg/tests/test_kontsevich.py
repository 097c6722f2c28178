import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import nnls

from stringlinks.choose_two import BASEPOINT
from stringlinks.errors import (
    DegenerateConfigurationError, InvalidArgument, PreconditionError, ResourceLimitError,
    SamplingError,
)
from stringlinks.kontsevich import (
    Configuration, DecoratedConfiguration, SphereMap, alpha_component, constant_map,
    distance_witness, four_consistency_residuals, gauss_map, in_K, is_four_consistent,
    is_three_dependent, left_action_K, membership_C, normalize_configuration, right_action_K,
    sample_configuration, sample_gauss_map, solve_three, south_pole, stale_left_action,
    stale_right_action, verify_action_closure, verify_alpha_numeric, verify_cancellation_pairings,
    verify_gauss_conditions, verify_right_functoriality,
)


def test_south_pole():
    assert south_pole(3).tolist() == [0, 0, -1]


def test_sphere_map_basics():
    f = gauss_map(Configuration([[0, 0, 0], [1, 0, 0], [0, 2, 0]]))
    assert np.allclose(f(1, 2), [-1, 0, 0])
    assert np.array_equal(f(2, 1), -f(1, 2))
    assert np.array_equal(f(BASEPOINT), south_pole(3))
    with pytest.raises(InvalidArgument):
        f(1, 1)
    with pytest.raises(InvalidArgument):
        SphereMap(2, 3, [[1, 1, 0]])


def test_degenerate_configuration():
    with pytest.raises(DegenerateConfigurationError) as err:
        gauss_map(Configuration([[0, 0], [1, 1], [0, 0]]))
    assert err.value.pair == (1, 3)


def test_normalize():
    c = normalize_configuration(Configuration([[0, 0], [2, 0], [4, 0]]))
    assert np.allclose(c.points.mean(axis=0), 0)
    assert np.isclose(np.linalg.norm(c.points, axis=1).max(), 1)


def test_sampling_deterministic_and_separated():
    a = sample_configuration(5, 3, "cube", 0.1, seed=4, task=2)
    b = sample_configuration(5, 3, "cube", 0.1, seed=4, task=2)
    assert np.array_equal(a.points, b.points)
    assert a.min_separation >= 0.1 and a.in_cube()
    c = sample_configuration(5, 3, "ball", 0.0, seed=4, task=2)
    assert np.all(np.linalg.norm(c.points, axis=1) <= 1)


def test_sampling_failure():
    with pytest.raises(SamplingError):
        sample_configuration(10, 2, "cube", 0.9, max_tries=200)
    with pytest.raises(InvalidArgument):
        sample_configuration(3, 2, "torus")


def _nnls_residual(U, weight=1e4):
    # b >= 0 with sum b = 1 enforced by a heavily weighted extra row
    A = np.vstack([U.T, weight * np.ones(3)])
    y = np.concatenate([np.zeros(U.shape[1]), [weight]])
    b, _ = nnls(A, y)
    return np.linalg.norm(b @ U)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.integers(2, 5))
def test_solve_three_matches_scipy(seed, n):
    rng = np.random.default_rng(seed)
    U = rng.normal(size=(3, n))
    b, res = solve_three(U)
    assert b.min() >= 0 and abs(b.sum() - 1) < 1e-12
    assert abs(res - np.linalg.norm(b @ U)) < 1e-12
    assert res <= _nnls_residual(U) + 1e-6


def test_gauss_maps_are_in_K():
    for t in range(10):
        c = sample_configuration(5, 3, "cube", 0.05, seed=1, task=t)
        f = gauss_map(c)
        assert in_K(f).passed
        assert distance_witness(c, (1, 2, 3)).residual <= 1e-12


def test_tensor_and_probe_agree():
    for t in range(10):
        f = sample_gauss_map(5, 4, seed=2, task=t)
        assert is_four_consistent(f, mode="tensor").passed
        assert is_four_consistent(f, mode="probe").passed
        u = np.random.default_rng(t).normal(size=4)
        g = f.replace(1, 2, u / np.linalg.norm(u))
        assert not is_four_consistent(g, mode="tensor").passed
        assert not is_four_consistent(g, mode="probe").passed


def test_literal_reading_does_not_vanish():
    f = sample_gauss_map(4, 3, seed=0)
    assert is_four_consistent(f, literal=False).passed
    chk = is_four_consistent(f, literal=True)
    assert not chk.passed and chk.residual > 1e-2


def test_tensor_dimension_bound():
    f = sample_gauss_map(4, 7, seed=0)
    with pytest.raises(ResourceLimitError):
        four_consistency_residuals(f, mode="tensor")
    assert is_four_consistent(f, mode="auto").passed


def test_three_dependence_negative():
    e = np.array([0.0, 0.0, 1.0])
    f = constant_map(3, 3, e)
    # f(1,2) = f(2,3) = e, f(3,1) = -e: still dependent
    assert is_three_dependent(f).passed
    g = SphereMap(3, 3, [e, -e, e])  # f(1,2)=e, f(1,3)=-e so f(3,1)=e, f(2,3)=e
    chk = is_three_dependent(g)
    assert not chk.passed and chk.witness["triple"] == (1, 2, 3)


def test_membership_C():
    c = sample_configuration(5, 3, "cube", 0.05, seed=5)
    f = gauss_map(c)
    assert membership_C(DecoratedConfiguration(c, f)).passed
    bad = f.replace(1, 2, -f(1, 2))
    rep = membership_C(DecoratedConfiguration(c, bad))
    assert not rep.check("alignment").passed
    assert rep.check("alignment").witness == {"pair": (1, 2)}


def test_actions_shapes_and_basepoint():
    f = sample_gauss_map(4, 3, seed=0)
    F = right_action_K(f, 2, (1, 2), 2)
    assert F.k == 6
    assert np.array_equal(F(3, 5), south_pole(3))  # same block
    assert np.array_equal(F(1, 5), f(1, 3))
    with pytest.raises(InvalidArgument):
        right_action_K(f, 3, (1, 1, 1), 2)
    fs = [sample_gauss_map(2, 3, seed=0, task=1), sample_gauss_map(4, 3, seed=0, task=2)]
    G = left_action_K(fs, 2, (1, 2), 2)
    assert np.array_equal(G(3, 5), fs[1](1, 3))
    assert np.array_equal(G(1, 3), south_pole(3))


@pytest.mark.parametrize("k,c", [(1, (3,)), (2, (1, 2)), (2, (2, 1)), (2, (0, 3))])
def test_closure_m1(k, c):
    rep = verify_action_closure(1, k, c, samples=10, seed=1)
    assert rep.passed, str(rep)


@pytest.mark.parametrize("k,c,side", [(2, (3, 1), "left"), (3, (0, 0, 4), "right")])
def test_stale_actions_fail(k, c, side):
    rep = verify_action_closure(1, k, c, samples=5, right=stale_right_action,
                                left=stale_left_action)
    bad = rep.check(f"{side} action: three-dependent")
    assert not bad.passed and bad.witness["triple"]


def test_cancellation_pairings_both_cases():
    f = sample_gauss_map(8, 4, seed=0)
    rep = verify_cancellation_pairings(f, 4, (1, 1, 1, 1), 2, (1, 3, 6, 8), "mixed-rows")
    assert rep.passed, str(rep)
    g = sample_gauss_map(4, 4, seed=0, task=1)
    rep = verify_cancellation_pairings(g, 2, (3, 1), 2, (1, 3, 5, 7), "three-blocks")
    assert rep.passed, str(rep)


def test_cancellation_precondition():
    f = sample_gauss_map(8, 4, seed=0)
    with pytest.raises(PreconditionError):
        verify_cancellation_pairings(f, 4, (1, 1, 1, 1), 2, (1, 2, 3, 4), "mixed-rows")
    with pytest.raises(InvalidArgument):
        verify_cancellation_pairings(f, 4, (1, 1, 1, 1), 2, (1, 3, 6, 8), "other")


def test_alpha_component():
    f = sample_gauss_map(6, 3, seed=0)
    g = alpha_component(f, 2, 2)
    assert g.k == 3 and np.array_equal(g(1, 3), f(2, 6))
    with pytest.raises(InvalidArgument):
        alpha_component(f, 4, 1)


def test_alpha_numeric_and_functoriality():
    assert verify_alpha_numeric(2, samples=3, max_blocks=2).passed
    assert verify_right_functoriality(2, samples=2).passed


def test_gauss_conditions_small():
    rep = verify_gauss_conditions(samples=20, max_k=5)
    assert rep.passed, str(rep)
