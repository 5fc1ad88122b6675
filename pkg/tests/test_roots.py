from __future__ import annotations

from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from ltheta.exactlin import I_UNIT, ONE, GaussRational, gr, poly_eval
from ltheta.roots import distinct_roots, gaussian_divisors, gaussian_roots, splits, sqrt_exact


def poly_from_roots(roots):
    coeffs = [ONE]
    for r in roots:
        shifted = [GaussRational(0)] + coeffs
        for k, c in enumerate(coeffs):
            shifted[k] = shifted[k] - r * c
        coeffs = shifted
    return coeffs


def test_quartic_with_rational_roots():
    roots, left = gaussian_roots(poly_from_roots([gr("5/3"), gr("-5/3"), gr("3/5"), gr("-3/5")]))
    assert left == 0
    assert [r for r, _ in roots] == sorted([gr("5/3"), gr("-5/3"), gr("3/5"), gr("-3/5")], key=GaussRational.sort_key)


def test_gaussian_and_irreducible_cases():
    assert distinct_roots([1, 0, 1]) == sorted([I_UNIT, -I_UNIT], key=GaussRational.sort_key)
    roots, left = gaussian_roots([-2, 0, 1])
    assert roots == [] and left == 2
    assert not splits([-2, 0, 1])
    assert gaussian_roots([1, -2, 1]) == ([(ONE, 2)], 0)
    assert distinct_roots([1, -2, 1]) is None
    assert gaussian_roots([0, 0, 3]) == ([(GaussRational(0), 2)], 0)


def test_sqrt_exact():
    assert sqrt_exact(gr("2+3/2*i")) ** 2 == gr("2+3/2*i")
    assert sqrt_exact(-4) ** 2 == gr(-4)
    assert sqrt_exact(2) is None


def test_divisors_of_gaussian_integer():
    divs = gaussian_divisors((5, 0))
    # 5 = (2+i)(2-i); divisors up to units: 1, 2+i, 2-i, 5
    assert len(divs) == 16
    assert (2, 1) in divs or (1, -2) in divs


small = st.builds(GaussRational, st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4)),
                  st.builds(Fraction, st.integers(-3, 3), st.integers(1, 3)))


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=1, max_size=4), small.filter(bool))
def test_recovers_random_roots(roots, lead):
    coeffs = [lead * c for c in poly_from_roots(roots)]
    found, left = gaussian_roots(coeffs)
    assert left == 0
    expect = {}
    for r in roots:
        expect[r] = expect.get(r, 0) + 1
    assert dict(found) == expect
    for r, _ in found:
        assert poly_eval(coeffs, r) == 0
