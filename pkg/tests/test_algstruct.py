from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ltheta.algstruct import (
    algebras_equal,
    center,
    central_idempotents,
    close_algebra,
    dickson_radical,
    is_nilpotent_ideal,
    is_two_sided_ideal,
    mat2_model,
    minimal_polynomial,
    nilpotency_index,
    regular_algebra,
    structure_report,
)
from ltheta.exactlin import ExactMatrix, GaussRational, Subspace, block_diag
from ltheta.groupalg import xyz_matrices


def unit(n, i, j):
    e = [0] * (n * n)
    e[i * n + j] = 1
    return ExactMatrix(n, n, e)


def test_m_theta_dimensions_and_center():
    X, Y, Z = xyz_matrices(2)
    a = close_algebra([X, Y, Z])
    assert a.dim == 8 and a.contains_identity and a.rounds >= 1
    c = center(a)
    assert c.dim == 2
    u = X @ Y + Y @ X
    assert c.contains(u.vec())
    X1, Y1, Z1 = xyz_matrices(1)
    assert close_algebra([X1, Y1, Z1]).dim == 4


def test_upper_triangular_radical():
    a = close_algebra([unit(3, 0, 0), unit(3, 1, 1), unit(3, 0, 1), unit(3, 1, 2)])
    assert a.dim == 6
    rad = dickson_radical(a)
    assert rad.dim == 3
    assert is_two_sided_ideal(a, rad) and is_nilpotent_ideal(a, rad)
    assert nilpotency_index(a, rad) == 3
    rep = structure_report(a)
    assert rep.to_json()["blocks"] == [1, 1, 1]
    assert rep.semisimple_quotient_dim == 3 and rep.quotient_commutative


def test_left_ideal_is_not_two_sided():
    a = close_algebra([unit(2, 0, 1), unit(2, 1, 0)])
    assert a.dim == 4
    left = Subspace.span([unit(2, 0, 0).vec(), unit(2, 1, 0).vec()], 4)
    assert not is_two_sided_ideal(a, left)
    assert nilpotency_index(a, Subspace.zero(4)) == 0


def test_mat2_blocks_certified():
    g1 = block_diag(unit(2, 0, 1), unit(2, 0, 1))
    g2 = block_diag(unit(2, 1, 0), unit(2, 1, 0))
    e = block_diag(ExactMatrix.identity(2), ExactMatrix.zeros(2))
    a = close_algebra([g1, g2, e])
    assert a.dim == 8
    rep = structure_report(a)
    assert rep.block_dims == [4, 4] and len(rep.mat2_models) == 2
    for model in rep.mat2_models:
        assert all(m.shape == (2, 2) for m in model.images)


def test_nonsplit_center_reported():
    a = close_algebra([ExactMatrix.from_rows([[0, 2], [1, 0]])])
    assert a.dim == 2
    assert central_idempotents(a) is None
    rep = structure_report(a)
    assert "does not split" in rep.notes and rep.block_dims == []


def test_quaternion_like_block_over_gaussian_field_splits():
    # i and j of the quaternions generate Mat_2 once i is in the field
    qi = ExactMatrix.from_rows([["i", 0], [0, "-i"]])
    qj = ExactMatrix.from_rows([[0, 1], [-1, 0]])
    a = close_algebra([qi, qj])
    e = a.unit
    assert mat2_model(a, e) is not None


def test_regular_algebra_of_mat2():
    a = close_algebra([unit(2, 0, 1), unit(2, 1, 0)])
    reg = regular_algebra(a.structure_constants)
    assert reg.dim == 4 and reg.ambient_n == 4
    assert structure_report(reg).block_dims == [4]


def test_errors():
    with pytest.raises(ValueError):
        close_algebra([])
    with pytest.raises(ValueError):
        close_algebra([ExactMatrix.identity(2), ExactMatrix.identity(3)])
    nonunital = close_algebra([unit(2, 0, 1)], include_identity=False)
    with pytest.raises(ValueError):
        dickson_radical(nonunital)
    with pytest.raises(ValueError):
        nonunital.coords(ExactMatrix.identity(2))


entries = st.builds(GaussRational, st.builds(Fraction, st.integers(-3, 3), st.integers(1, 2)))


@settings(max_examples=20, deadline=None)
@given(st.lists(entries, min_size=9, max_size=9), st.lists(entries, min_size=9, max_size=9))
def test_random_closure_properties(e1, e2):
    m1, m2 = ExactMatrix(3, 3, e1), ExactMatrix(3, 3, e2)
    single = close_algebra([m1])
    assert single.dim == len(minimal_polynomial(single, single.coords(m1))) - 1
    a = close_algebra([m1, m2])
    assert algebras_equal(close_algebra(list(a.basis)), a)
    rad = dickson_radical(a)
    assert is_nilpotent_ideal(a, rad)
