import json

import numpy as np
import pytest

from stringlinks.cosimplicial import (
    BoundaryAnchors, codegeneracy_origin, coface_origin, config_codegeneracy, config_coface,
    config_ladder, exact_ladder, ladder_to_dict, numeric_ladder, projection_p_r, sample_decorated,
    verify_alpha_ladder, verify_cosimplicial_identities, verify_projections,
    verify_realization_commutes, verify_single_point_reduction,
)
from stringlinks.errors import InvalidArgument, PreconditionError
from stringlinks.kontsevich import membership_C


def test_exact_ladder_m1():
    rep = verify_cosimplicial_identities(exact_ladder(1, 5))
    assert rep.passed, str(rep)


def test_exact_ladder_m2_fails_only_sd_id():
    rep = verify_cosimplicial_identities(exact_ladder(2, 4))
    assert [c.name for c in rep.failures()] == ["s d = id"]
    assert "s0d0=id" in rep.check("s d = id").witness["failing"]


def test_swapped_cofaces_fail():
    rep = verify_cosimplicial_identities(exact_ladder(1, 4).swap_cofaces(2, 1, 2))
    assert not rep.check("coface identities").passed
    assert rep.check("coface identities").witness["level"] is not None


def test_numeric_ladder_m1():
    rep = verify_cosimplicial_identities(numeric_ladder(1, 4, 4, corpus_size=5))
    assert rep.passed, str(rep)
    assert all(c.residual in (None, 0.0) for c in rep.checks)


def test_numeric_swap_fails():
    # levels 0 and 1 of gamma_1 K_n hold only the basepoint, so swap at level 2
    lad = numeric_ladder(1, 4, 4, corpus_size=5).swap_cofaces(2, 1, 2)
    rep = verify_cosimplicial_identities(lad)
    assert not rep.check("coface identities").passed
    assert rep.check("coface identities").residual > 0


def test_alpha_ladder_m2():
    assert verify_alpha_ladder(2, 4, 2, corpus_size=4).passed


def test_origins():
    # level 1, m = 2: points are anchor, x1, x2, anchor
    assert coface_origin(1, 0, 2).tolist() == [1, 1, 1, 2, 3, 4]
    assert coface_origin(1, 1, 2).tolist() == [1, 2, 3, 2, 3, 4]
    assert coface_origin(1, 2, 2).tolist() == [1, 2, 3, 4, 4, 4]
    assert codegeneracy_origin(2, 0, 2).tolist() == [1, 4, 5, 6]
    assert codegeneracy_origin(2, 1, 2).tolist() == [1, 2, 3, 6]
    with pytest.raises(InvalidArgument):
        coface_origin(1, 3, 2)


def test_anchors():
    A = BoundaryAnchors.default(3)
    assert A.x_minus.tolist() == [0.5, 0.5, 0] and A.u.tolist() == [0, 0, 1]
    with pytest.raises(InvalidArgument):
        BoundaryAnchors([0, 0.5], [0.5, 1], [1, 1])
    dc = sample_decorated(1, 1, 3, A)
    other = BoundaryAnchors.default(3, u=[1.0, 0, 0])
    shifted = BoundaryAnchors([0.2, 0.5, 0], [0.5, 0.5, 1], [0, 0, 1.0])
    assert config_coface(dc, 0, 1, other).f.k == 4
    with pytest.raises(PreconditionError):
        config_coface(dc, 0, 1, shifted)


def test_doubled_points_get_u():
    A = BoundaryAnchors.default(3, u=[0, 1.0, 0])
    dc = sample_decorated(2, 2, 3, A, seed=1)
    out = config_coface(dc, 1, 2, A)
    # block 1 occupies positions 2, 3 and its copy positions 4, 5
    assert np.array_equal(out.f(2, 4), A.u) and np.array_equal(out.f(3, 5), A.u)
    assert np.array_equal(out.f(3, 4), -dc.f(2, 3))


@pytest.mark.parametrize("m", [1, 2])
def test_config_cofaces_preserve_C(m):
    lad = config_ladder(m, 3, 2, corpus_size=3)
    for (k, j), g in lad.cofaces.items():
        for dc in lad.corpus[k]:
            assert membership_C(g(dc)).passed


def test_config_ladder_m1():
    lad = config_ladder(1, 3, 3, corpus_size=5)
    rep = verify_cosimplicial_identities(lad)
    assert rep.passed, str(rep)
    assert verify_single_point_reduction(lad).passed
    assert verify_projections(lad).passed


def test_config_ladder_m2():
    lad = config_ladder(2, 3, 3, corpus_size=5)
    rep = verify_cosimplicial_identities(lad)
    assert rep.check("s d = id").passed and rep.check("s d = id").residual == 0
    assert rep.check("codegeneracy identities").passed
    assert rep.check("s d = d s").passed
    bad = rep.check("coface identities")
    assert not bad.passed and bad.witness["failing"] == ["d1d0=d0d0"]
    assert verify_projections(lad).passed


def test_projection_shape_and_errors():
    A = BoundaryAnchors.default(3)
    dc = sample_decorated(2, 2, 3, A)
    p = projection_p_r(dc, 2, 2)
    assert p.config.k == 4 and np.array_equal(p.config.points[1], dc.config.points[2])
    with pytest.raises(InvalidArgument):
        projection_p_r(dc, 2, 3)
    with pytest.raises(InvalidArgument):
        config_codegeneracy(sample_decorated(0, 2, 3, A), 0, 2)


def test_realization_commutes():
    assert verify_realization_commutes(2, 3).passed


def test_ladder_serialization_round_trip():
    lad = numeric_ladder(1, 3, 2, corpus_size=2)
    doc = json.loads(json.dumps(ladder_to_dict(lad)))
    v = doc["levels"][2]["elements"][1]["vectors"]
    assert np.array_equal(np.array(v), lad.corpus[2][1].vectors)
    ex = ladder_to_dict(exact_ladder(1, 2))
    assert ex["tables"]["d1@1"] == np.asarray(exact_ladder(1, 2).cofaces[(1, 1)]).tolist()
