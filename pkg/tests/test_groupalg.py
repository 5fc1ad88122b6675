from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ltheta.algstruct import algebras_equal, close_algebra, structure_report
from ltheta.exactlin import ONE, ZERO, ExactMatrix, GaussRational, gr
from ltheta.groupalg import (
    E,
    G,
    X,
    Y,
    Z,
    GroupAlgElement,
    GroupWord,
    atheta,
    atheta_center_basis,
    atheta_regular_representation,
    cx_involution,
    format_element,
    lift,
    negate_g,
    parse_element,
    phi,
    phi_on_atheta,
    phi_rank,
    project_to_atheta,
    word_mul,
    xyz_matrices,
)

THETAS = [gr(t) for t in ("2", "3", "1/2", "5/3", "i", "1+1*i", "1", "-1")]

words = st.builds(GroupWord, st.integers(-10, 10), st.integers(0, 1), st.integers(0, 1))
small_words = st.builds(GroupWord, st.integers(-5, 5), st.integers(0, 1), st.integers(0, 1))
coeffs = st.builds(GaussRational, st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3)),
                   st.builds(Fraction, st.integers(-2, 2), st.integers(1, 2)))
elements = st.lists(st.tuples(small_words, coeffs), min_size=1, max_size=4).map(GroupAlgElement)
p_elements = st.lists(st.tuples(st.builds(GroupWord, st.integers(-5, 5), st.integers(0, 1)), coeffs),
                      min_size=1, max_size=4).map(GroupAlgElement)
thetas = st.sampled_from(THETAS)


def el(text):
    return parse_element(text)


def test_word_examples():
    assert word_mul(X, G) == GroupWord(-1, 0, 1)
    assert X * X == E
    assert (G * Z) * GroupWord(-1, 1, 0) == E
    assert Y == X * G and Y * Y == E


@given(words, words, words)
def test_word_group_axioms(a, b, c):
    assert a * (b * c) == (a * b) * c
    assert a * a.inverse() == E == a.inverse() * a
    assert a * E == a


def test_cx_examples():
    u = el("g + g^-1")
    assert cx_involution(u) == u
    assert cx_involution(el("g")) == el("g^-1")
    assert cx_involution(el("1")) == el("1")
    with pytest.raises(ValueError):
        cx_involution(el("x"))


@given(p_elements, p_elements)
def test_cx_is_involutive_algebra_map(a, b):
    assert cx_involution(cx_involution(a)) == a
    assert cx_involution(a * b) == cx_involution(a) * cx_involution(b)


def test_projection_examples():
    rel = el("x y z + y x z")
    assert project_to_atheta(rel, 2) == project_to_atheta(el("5/2"), 2)
    z_i = project_to_atheta(el("z"), gr("i"))
    assert z_i.coords == atheta(gr("i")).basis_element("z").coords
    assert project_to_atheta(el("1"), 3).coords[0] == ONE
    with pytest.raises(ValueError):
        project_to_atheta(el("1"), 0)


def test_b_zero_relations():
    a = gr("i")
    assert project_to_atheta(el("g^2"), a) == project_to_atheta(el("-1"), a)
    assert project_to_atheta(el("g + g^-1"), a).is_zero()


def test_generic_quartic_relation():
    t = gr(2)
    b = t + t.inverse()
    quartic = el("g^4") + el("g^2") * (2 - b * b) + el("1")
    assert project_to_atheta(quartic, t).is_zero()
    assert project_to_atheta(el("g^-1"), t) == project_to_atheta(el("g") * (b * b - 2) - el("g^3"), t)


def test_regular_representation_reports():
    r2 = structure_report(atheta_regular_representation(2))
    assert (r2.dim, r2.radical_dim, r2.block_dims) == (8, 0, [4, 4])
    r1 = structure_report(atheta_regular_representation(1))
    assert (r1.radical_dim, r1.semisimple_quotient_dim, r1.quotient_commutative) == (4, 4, True)
    ri = structure_report(atheta_regular_representation(gr("i")))
    assert (ri.dim, ri.radical_dim) == (8, 0)
    with pytest.raises(ValueError):
        atheta_regular_representation(0)


def test_phi_examples():
    assert phi(el("x y z + y x z"), 3) == ExactMatrix.identity(4).scale(gr("10/3"))
    assert phi(el("x x"), 5) == ExactMatrix.identity(4)
    X_, Y_, Z_ = xyz_matrices(2)
    assert phi(el("y"), 2) == Y_ and phi(el("g"), 2) == X_ @ Y_
    image = close_algebra(phi_on_atheta(2))
    assert algebras_equal(image, close_algebra([X_, Y_, Z_]))
    assert phi_rank(2) == 8 and phi_rank(1) == 4 and phi_rank(-1) == 4
    with pytest.raises(ValueError):
        phi(el("x"), 0)


@settings(max_examples=40, deadline=None)
@given(elements, elements, thetas)
def test_phi_and_projection_are_homomorphisms(a, b, t):
    assert phi(a * b, t) == phi(a, t) @ phi(b, t)
    assert project_to_atheta(a * b, t) == project_to_atheta(a, t) * project_to_atheta(b, t)
    assert phi(a, t) == phi(lift(project_to_atheta(a, t)), t)


@settings(max_examples=30, deadline=None)
@given(p_elements, thetas)
def test_cx_realised_by_x_conjugation(e, t):
    Xm = phi(el("x"), t)
    assert phi(cx_involution(e), t) == Xm @ phi(e, t) @ Xm


def test_center_basis():
    one, u = atheta_center_basis(2)
    assert u * u == one * gr("25/4")
    assert [str(c) for c in atheta_center_basis(gr("i"))] == ["(1)*1", "(1)*z"]


def test_symmetry_theta_inverse():
    for t in map(gr, ("2", "3", "1+1*i", "i")):
        assert atheta(t).const == atheta(t.inverse()).const


@settings(max_examples=25, deadline=None)
@given(elements, thetas)
def test_negating_g_maps_a_theta_to_a_minus_theta(e, t):
    alg = atheta(t)
    signs = [(-ONE if w.g_exp % 2 else ONE) for w in alg.words]
    image = project_to_atheta(negate_g(e), -t)
    assert image.coords == tuple(s * c for s, c in zip(signs, project_to_atheta(e, t).coords))


def test_negating_g_and_z_preserves_the_relation_instead():
    # (g + g^-1) z - b is fixed by g -> -g, z -> -z, so that map stays on A_theta
    t = gr(2)
    rel = el("g z + g^-1 z") - el("5/2")
    flipped = GroupAlgElement({GroupWord(w.g_exp, w.z_bit, w.x_bit): c * (-1) ** (w.g_exp + w.z_bit)
                               for w, c in rel.terms.items()})
    assert flipped == rel
    assert not project_to_atheta(rel, -t).is_zero()
    assert project_to_atheta(negate_g(rel), -t).is_zero()


def test_mixing_theta_is_an_error():
    a = project_to_atheta(el("g"), 2)
    b = project_to_atheta(el("g"), 3)
    with pytest.raises(ValueError):
        a * b
    with pytest.raises(ValueError):
        a + b


@given(elements)
def test_text_roundtrip(e):
    assert parse_element(format_element(e)) == e


def test_text_examples_and_errors():
    e = el("1*g^2 z x - 1/2*1")
    assert e.terms == {GroupWord(2, 1, 1): ONE, E: gr("-1/2")}
    assert el("(1+1*i)*y") == GroupAlgElement({Y: GaussRational(1, 1)})
    assert el("x y") == el("g") and el("x - x") == GroupAlgElement()
    for bad in ("", "3 +", "q", "(1+"):
        with pytest.raises(ValueError):
            el(bad)
    with pytest.raises(ValueError):
        GroupWord(0, 2, 0)
    assert str(GroupAlgElement()) == "0" and ZERO == 0
