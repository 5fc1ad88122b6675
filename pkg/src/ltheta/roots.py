"""Roots in Q(i) of polynomials with Gaussian rational coefficients.

The search is the rational root theorem transported to Z[i]: after scaling to a
monic polynomial with Gaussian integer coefficients every root in Q(i) is a
Gaussian integer dividing the constant term, so it suffices to enumerate the
divisors of one Gaussian integer.  Integer factorisation of its norm is
delegated to :func:`sympy.factorint`.
"""

from __future__ import annotations

import math
from itertools import product
from typing import Sequence

from .exactlin import ONE, ZERO, GaussRational, gr

GaussInt = tuple  # (a, b) meaning a + b i

_UNITS = ((1, 0), (0, 1), (-1, 0), (0, -1))


def _gmul(p, q):
    return (p[0] * q[0] - p[1] * q[1], p[0] * q[1] + p[1] * q[0])


def _gdivexact(p, q):
    """``p / q`` if it is a Gaussian integer, else ``None``."""
    n = q[0] * q[0] + q[1] * q[1]
    re = p[0] * q[0] + p[1] * q[1]
    im = p[1] * q[0] - p[0] * q[1]
    if re % n or im % n:
        return None
    return (re // n, im // n)


def _gmod(p, q):
    n = q[0] * q[0] + q[1] * q[1]
    re = p[0] * q[0] + p[1] * q[1]
    im = p[1] * q[0] - p[0] * q[1]
    k = (_round_div(re, n), _round_div(im, n))
    kq = _gmul(k, q)
    return (p[0] - kq[0], p[1] - kq[1])


def _round_div(a, n):
    return (2 * a + n) // (2 * n)


def _ggcd(p, q):
    while q != (0, 0):
        p, q = q, _gmod(p, q)
    return p


def _split_prime(p: int) -> GaussInt:
    """A Gaussian prime of norm ``p`` for a rational prime ``p = 1 mod 4``."""
    from sympy.ntheory import sqrt_mod

    s = sqrt_mod(p - 1, p)
    return _ggcd((p, 0), (s, 1))


def gaussian_prime_factors(c: GaussInt) -> list[tuple[GaussInt, int]]:
    """Gaussian primes (up to units) dividing ``c`` with multiplicities."""
    from sympy import factorint

    n = c[0] * c[0] + c[1] * c[1]
    if n == 0:
        raise ValueError("zero has no finite factorisation")
    out = []
    rest = c
    for p in sorted(factorint(n)):
        if p == 2:
            cands = [(1, 1)]
        elif p % 4 == 3:
            cands = [(p, 0)]
        else:
            pi = _split_prime(p)
            cands = [pi, (pi[0], -pi[1])]
        for pi in cands:
            k = 0
            while True:
                q = _gdivexact(rest, pi)
                if q is None:
                    break
                rest, k = q, k + 1
            if k:
                out.append((pi, k))
    return out


def gaussian_divisors(c: GaussInt) -> list[GaussInt]:
    """All Gaussian integer divisors of ``c`` including unit multiples."""
    factors = gaussian_prime_factors(c)
    divs = [(1, 0)]
    for pi, k in factors:
        powers = [(1, 0)]
        for _ in range(k):
            powers.append(_gmul(powers[-1], pi))
        divs = [_gmul(d, q) for d, q in product(divs, powers)]
    return [_gmul(u, d) for d in divs for u in _UNITS]


def _horner_int(coeffs, t):
    acc = (0, 0)
    for c in reversed(coeffs):
        acc = _gmul(acc, t)
        acc = (acc[0] + c[0], acc[1] + c[1])
    return acc


def _deflate_int(coeffs, t):
    """Divide a monic integer polynomial by ``(X - t)``; assumes ``t`` is a root."""
    n = len(coeffs) - 1
    out = [None] * n
    acc = (0, 0)
    for k in range(n, 0, -1):
        prod_ = _gmul(acc, t)
        acc = (coeffs[k][0] + prod_[0], coeffs[k][1] + prod_[1])
        out[k - 1] = acc
    return out


def gaussian_roots(coeffs: Sequence) -> tuple[list[tuple[GaussRational, int]], int]:
    """Roots in Q(i) of ``sum coeffs[k] t**k``.

    Returns ``(roots, leftover)``, where ``roots`` lists ``(root, multiplicity)``
    pairs and ``leftover`` is the degree of the factor with no root in Q(i).
    The polynomial splits over Q(i) exactly when ``leftover == 0``.
    """
    cs = [gr(c) for c in coeffs]
    while cs and not cs[-1]:
        cs.pop()
    if not cs:
        raise ValueError("the zero polynomial has no finite root set")
    lead = cs[-1]
    cs = [c / lead for c in cs]
    roots: list[tuple[GaussRational, int]] = []
    k0 = 0
    while len(cs) > 1 and not cs[0]:
        cs.pop(0)
        k0 += 1
    if k0:
        roots.append((ZERO, k0))
    n = len(cs) - 1
    if n == 0:
        return roots, 0
    den = 1
    for c in cs:
        den = math.lcm(den, c.re.denominator, c.im.denominator)
    # X = den * t turns f into a monic polynomial with Z[i] coefficients
    icoeffs = []
    for k, c in enumerate(cs):
        s = den ** (n - k)
        icoeffs.append((int(c.re * s), int(c.im * s)))
    found: dict[GaussInt, int] = {}
    for d in gaussian_divisors(icoeffs[0]):
        if len(icoeffs) == 1:
            break
        if d in found:
            continue
        while len(icoeffs) > 1 and _horner_int(icoeffs, d) == (0, 0):
            icoeffs = _deflate_int(icoeffs, d)
            found[d] = found.get(d, 0) + 1
    for d, mult in found.items():
        roots.append((GaussRational(d[0], d[1]) / den, mult))
    roots.sort(key=lambda rm: rm[0].sort_key())
    return roots, len(icoeffs) - 1


def splits(coeffs: Sequence) -> bool:
    return gaussian_roots(coeffs)[1] == 0


def distinct_roots(coeffs: Sequence) -> list[GaussRational] | None:
    """The roots when the polynomial splits over Q(i) into distinct linear factors, else ``None``."""
    roots, left = gaussian_roots(coeffs)
    if left or any(m > 1 for _, m in roots):
        return None
    return [r for r, _ in roots]


def sqrt_exact(x) -> GaussRational | None:
    """A square root of ``x`` in Q(i), or ``None``."""
    x = gr(x)
    if not x:
        return ZERO
    roots, left = gaussian_roots([-x, ZERO, ONE])
    if left:
        return None
    return roots[-1][0]
