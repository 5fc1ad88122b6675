from __future__ import annotations

import pytest

from ltheta.exactlin import gr
from ltheta.homext import ExtProblem, adjunction_hom_dim, ext_cg, ext_cp, resolution_window, verify_resolution
from ltheta.repthy import PCharacter as P
from ltheta.suites import expected_ext_cg, expected_ext_cp, ext_grid


def dims(res):
    return res.hom_dim, res.ext1_dim


def test_ext_cp_examples():
    assert dims(ext_cp(P(2, 1), P(2, 1))) == (1, 1)
    assert dims(ext_cp(P(2, 1), P(3, 1))) == (0, 0)
    assert dims(ext_cp(P(2, 1), P(2, -1))) == (0, 0)
    assert ext_cp(P(2, 1), P(2, 1)).to_json() == {"hom": 1, "ext1": 1}


def test_ext_cg_examples():
    assert ext_cg(P(2, 1), P(2, 1)).ext1_dim == 1
    assert ext_cg(P(gr("1/2"), 1), P(2, 1)).ext1_dim == 1
    assert ext_cg(P(1, 1), P(1, 1)).ext1_dim == 2
    assert ext_cg(P(-1, -1), P(-1, -1)).ext1_dim == 2
    assert ext_cg(P(2, 1), P(3, 1)).ext1_dim == 0
    assert ext_cg(P(1, 1), P(1, -1)).ext1_dim == 0


def test_problem_wrapper():
    assert dims(ExtProblem("cg", P(1, 1), P(1, 1)).solve()) == (2, 2)
    assert ExtProblem("cp", P(2, 1), P(2, 1)).resolution_sign == gr(1)
    with pytest.raises(ValueError):
        ExtProblem("cx", P(2, 1), P(2, 1))


def test_boundary_matrix_shapes():
    assert ext_cp(P(2, 1), P(2, 1)).boundary_matrix.shape == (1, 1)
    assert ext_cg(P(2, 1), P(3, 1)).boundary_matrix.shape == (2, 2)
    assert ext_cg(P(2, 1), P(3, -1)).boundary_matrix.shape == (0, 0)


def test_grid_tables():
    grid = ext_grid()
    assert len(grid) == 12
    for chi in grid:
        for psi in grid:
            assert ext_cp(chi, psi).ext1_dim == expected_ext_cp(chi, psi)
            r = ext_cg(chi, psi)
            assert r.ext1_dim == expected_ext_cg(chi, psi)
            assert r.hom_dim == r.ext1_dim
            assert r.hom_dim == adjunction_hom_dim(chi, psi)


def test_resolutions():
    for chi in ext_grid():
        assert verify_resolution(chi)
    assert not verify_resolution(P(2, 1), j_root=gr(3))
    assert not verify_resolution(P(2, -1), sign=gr(1))
    chk = resolution_window(P(3, 1), j_root=gr(2))
    assert chk.j_injective and not chk.composite_zero
