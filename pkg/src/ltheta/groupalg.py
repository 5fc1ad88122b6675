"""The group G = (Z + Z_2) x| Z_2, its group algebra, the quotients A_theta and the map phi.

Elements of G are kept in the normal form ``g^n z^e x^d`` with ``g = xy``;
``y`` itself is the word ``x g = g^-1 x``.  The relations used throughout are
``x^2 = z^2 = 1``, ``z`` central and ``x g x = g^-1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .algstruct import SpannedAlgebra, regular_algebra
from .exactlin import ONE, ZERO, ExactMatrix, GaussRational, format_scalar, gr, parse_scalar, rank


def check_theta(theta) -> GaussRational:
    theta = gr(theta)
    if not theta:
        raise ValueError("theta must be nonzero")
    return theta


def b_value(theta) -> GaussRational:
    """``b = theta + 1/theta`` (the positive sign choice)."""
    theta = check_theta(theta)
    return theta + theta.inverse()


def xyz_matrices(theta):
    """The 4x4 generators ``X, Y, Z`` whose span with ``I`` is the operator graph L_theta."""
    t = check_theta(theta)
    ti = t.inverse()
    X = ExactMatrix.from_rows([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]])
    Y = ExactMatrix.from_rows([[0, 0, t, 0], [0, 0, 0, ti], [ti, 0, 0, 0], [0, t, 0, 0]])
    Z = ExactMatrix.from_rows([[0, 0, 0, 1], [0, 0, 1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])
    return X, Y, Z


# group words ----------------------------------------------------------------

@dataclass(frozen=True, order=True)
class GroupWord:
    g_exp: int = 0
    z_bit: int = 0
    x_bit: int = 0

    def __post_init__(self):
        if self.z_bit not in (0, 1) or self.x_bit not in (0, 1):
            raise ValueError("z_bit and x_bit must be 0 or 1")

    def __mul__(self, other: GroupWord) -> GroupWord:
        # x^d g^m = g^(+-m) x^d
        m = -other.g_exp if self.x_bit else other.g_exp
        return GroupWord(self.g_exp + m, self.z_bit ^ other.z_bit, self.x_bit ^ other.x_bit)

    def inverse(self) -> GroupWord:
        if self.x_bit:
            return self  # g^n z^e x is an involution
        return GroupWord(-self.g_exp, self.z_bit, 0)

    @property
    def in_p(self) -> bool:
        return not self.x_bit

    def __str__(self):
        parts = []
        if self.g_exp == 1:
            parts.append("g")
        elif self.g_exp:
            parts.append(f"g^{self.g_exp}")
        if self.z_bit:
            parts.append("z")
        if self.x_bit:
            parts.append("x")
        return " ".join(parts) if parts else "1"


E = GroupWord()
G = GroupWord(1, 0, 0)
Z = GroupWord(0, 1, 0)
X = GroupWord(0, 0, 1)
Y = X * G  # = g^-1 x


def word_mul(a: GroupWord, b: GroupWord) -> GroupWord:
    return a * b


# group algebra elements -----------------------------------------------------

class GroupAlgElement:
    """Finitely supported element of CG; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[GroupWord, object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[GroupWord, GaussRational] = {}
        for w, c in items:
            c = gr(c)
            acc[w] = acc.get(w, ZERO) + c
        self.terms = {w: c for w, c in acc.items() if c}

    @classmethod
    def word(cls, w: GroupWord, c=1) -> GroupAlgElement:
        return cls({w: c})

    @classmethod
    def scalar(cls, c) -> GroupAlgElement:
        return cls({E: c})

    def __add__(self, other):
        other = _as_element(other)
        return GroupAlgElement(list(self.terms.items()) + list(other.terms.items()))

    __radd__ = __add__

    def __neg__(self):
        return GroupAlgElement({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_element(other))

    def __rsub__(self, other):
        return _as_element(other) - self

    def __mul__(self, other):
        if not isinstance(other, GroupAlgElement):
            c = gr(other)
            return GroupAlgElement({w: c * v for w, v in self.terms.items()})
        out = []
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                out.append((w1 * w2, c1 * c2))
        return GroupAlgElement(out)

    def __rmul__(self, c):
        c = gr(c)
        return GroupAlgElement({w: c * v for w, v in self.terms.items()})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not defined in CG")
        result = GroupAlgElement.scalar(1)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, GroupAlgElement):
            try:
                other = _as_element(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def supported_on_p(self) -> bool:
        return all(w.in_p for w in self.terms)

    def __repr__(self):
        return f"GroupAlgElement({format_element(self)!r})"

    def __str__(self):
        return format_element(self)


def _as_element(x) -> GroupAlgElement:
    if isinstance(x, GroupAlgElement):
        return x
    return GroupAlgElement.scalar(gr(x))


def cx_involution(e: GroupAlgElement) -> GroupAlgElement:
    """Conjugation by ``x`` on CP: ``g -> g^-1``, ``z -> z``."""
    if not e.supported_on_p():
        raise ValueError("c_x is defined on CP only (terms without x)")
    return GroupAlgElement({GroupWord(-w.g_exp, w.z_bit, 0): c for w, c in e.terms.items()})


def negate_g(e: GroupAlgElement) -> GroupAlgElement:
    """The substitution ``g -> -g`` (``z``, ``x`` fixed); it carries A_theta onto A_-theta."""
    return GroupAlgElement({w: (-c if w.g_exp % 2 else c) for w, c in e.terms.items()})


# text format ------------------------------------------------------------------

def _split_terms(text: str) -> list[str]:
    """Split at top-level ``+``/``-`` that separate terms."""
    terms, depth, cur, prev = [], 0, "", ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch in "+-" and depth == 0 and prev not in ("^", "*", "/", "+", "-", "") and cur.strip():
            terms.append(cur)
            cur = ch
        else:
            cur += ch
        if not ch.isspace():
            prev = ch
    if depth:
        raise ValueError(f"unbalanced parentheses in {text!r}")
    if cur.strip():
        terms.append(cur)
    return terms


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<paren>\()|(?P<gen>g(?:\^\(?-?\d+\)?)?|z|x|y)(?![A-Za-z0-9])"
    r"|(?P<num>\d+(?:/\d+)?|i(?![A-Za-z0-9]))|(?P<star>\*))"
)


def _term_factors(t: str):
    pos = 0
    while pos < len(t):
        if t[pos:].strip() == "":
            return
        m = _TOKEN_RE.match(t, pos)
        if not m:
            raise ValueError(f"cannot parse {t[pos:]!r}")
        if m.group("paren"):
            depth, k = 0, m.start("paren")
            for k in range(m.start("paren"), len(t)):
                depth += {"(": 1, ")": -1}.get(t[k], 0)
                if depth == 0:
                    break
            yield "scalar", parse_scalar(t[m.start("paren"):k + 1])
            pos = k + 1
            continue
        if m.group("gen"):
            tok = m.group("gen")
            if tok == "g":
                w = G
            elif tok.startswith("g"):
                w = GroupWord(int(tok[2:].strip("()")), 0, 0)
            else:
                w = {"x": X, "y": Y, "z": Z}[tok]
            yield "word", w
        elif m.group("num"):
            yield "scalar", parse_scalar(m.group("num"))
        pos = m.end()


def parse_element(text: str) -> GroupAlgElement:
    """Parse a sum of terms like ``"2*g^2 z x - 1/2 + (1+1*i)*y"``."""
    out = []
    for term in _split_terms(text):
        t = term.strip()
        coef = ONE
        while t and t[0] in "+-":
            if t[0] == "-":
                coef = -coef
            t = t[1:].strip()
        if not t:
            raise ValueError(f"dangling sign in {text!r}")
        word = E
        for kind, val in _term_factors(t):
            if kind == "word":
                word = word * val
            else:
                coef = coef * val
        out.append((word, coef))
    if not out:
        raise ValueError(f"empty group algebra element: {text!r}")
    return GroupAlgElement(out)


def format_element(e: GroupAlgElement) -> str:
    if not e.terms:
        return "0"
    pieces = []
    for w in sorted(e.terms):
        c = e.terms[w]
        neg = c.re < 0 if c.re else c.im < 0
        if c.re and c.im:
            neg = False
        cs = format_scalar(-c if neg else c)
        if c.re and c.im:
            cs = f"({cs})"
        body = f"{cs}*{w}"
        if not pieces:
            pieces.append(f"-{body}" if neg else body)
        else:
            pieces.append(f" - {body}" if neg else f" + {body}")
    return "".join(pieces)


# the quotient algebras A_theta --------------------------------------------------

class AThetaAlgebra:
    """Structure of A_theta = CG / ((g + g^-1) z = b) in the basis of the Theorem.

    ``b != 0``: basis ``1, g, g^2, g^3, x, xg, xg^2, xg^3`` with
    ``g^4 + (2 - b^2) g^2 + 1 = 0``.  ``b = 0``: basis
    ``1, g, x, z, xg, xz, gz, xgz`` with ``g^2 = -1``.
    """

    def __init__(self, theta):
        self.theta = check_theta(theta)
        self.b = b_value(self.theta)
        self.generic = bool(self.b)
        if self.generic:
            self.labels = ("1", "g", "g^2", "g^3", "x", "xg", "xg^2", "xg^3")
            self.words = tuple([GroupWord(k, 0, 0) for k in range(4)]
                               + [X * GroupWord(k, 0, 0) for k in range(4)])
            b2 = self.b * self.b
            self._b2m2 = b2 - 2
            # g^-1 = (b^2 - 2) g - g^3
            self._ginv = (ZERO, self._b2m2, ZERO, -ONE)
            self._gpow = {0: (ONE, ZERO, ZERO, ZERO)}
        else:
            self.labels = ("1", "g", "x", "z", "xg", "xz", "gz", "xgz")
            self.words = (E, G, X, Z, X * G, X * Z, G * Z, X * G * Z)
        self._cache: dict[GroupWord, tuple] = {}
        self.const = tuple(tuple(self.project_word(u * v) for v in self.words) for u in self.words)

    # P-part arithmetic for b != 0: polynomials in g modulo the quartic
    def _pmul(self, p, q):
        prod = [ZERO] * 7
        for i, a in enumerate(p):
            if a:
                for j, c in enumerate(q):
                    if c:
                        prod[i + j] = prod[i + j] + a * c
        # g^k = (b^2 - 2) g^(k-2) - g^(k-4)  for k >= 4
        for k in range(6, 3, -1):
            c = prod[k]
            if c:
                prod[k - 2] = prod[k - 2] + c * self._b2m2
                prod[k - 4] = prod[k - 4] - c
                prod[k] = ZERO
        return tuple(prod[:4])

    def _g_power(self, n: int):
        if n in self._gpow:
            return self._gpow[n]
        step = 1 if n > 0 else -1
        k = n - step
        prev = self._g_power(k)
        factor = (ZERO, ONE, ZERO, ZERO) if step > 0 else self._ginv
        val = self._pmul(prev, factor)
        self._gpow[n] = val
        return val

    def project_word(self, w: GroupWord) -> tuple:
        hit = self._cache.get(w)
        if hit is not None:
            return hit
        # g^n z^e x = x g^-n z^e
        m = -w.g_exp if w.x_bit else w.g_exp
        if self.generic:
            p = self._g_power(m)
            if w.z_bit:
                # z = (g + g^-1) / b
                binv = self.b.inverse()
                zpoly = (ZERO, (ONE + self._b2m2) * binv, ZERO, -binv)
                p = self._pmul(p, zpoly)
            out = (ZERO,) * 4 + p if w.x_bit else p + (ZERO,) * 4
        else:
            sign = -ONE if (m % 4) in (2, 3) else ONE
            r = m % 2
            idx = self.labels.index(_b0_label(w.x_bit, r, w.z_bit))
            out = tuple(sign if k == idx else ZERO for k in range(8))
        self._cache[w] = out
        return out

    def mul(self, u, v) -> tuple:
        out = [ZERO] * 8
        for i, a in enumerate(u):
            if a:
                for j, c in enumerate(v):
                    if c:
                        f = a * c
                        for k, s in enumerate(self.const[i][j]):
                            if s:
                                out[k] = out[k] + f * s
        return tuple(out)

    def element(self, coords) -> AThetaElement:
        return AThetaElement(self.theta, tuple(gr(c) for c in coords))

    def basis_element(self, label: str) -> AThetaElement:
        i = self.labels.index(label)
        return self.element([ONE if k == i else ZERO for k in range(8)])


def _b0_label(x_bit, g_bit, z_bit):
    s = ("x" if x_bit else "") + ("g" if g_bit else "") + ("z" if z_bit else "")
    return s or "1"


@lru_cache(maxsize=64)
def atheta(theta) -> AThetaAlgebra:
    return AThetaAlgebra(check_theta(theta))


@dataclass(frozen=True)
class AThetaElement:
    theta: GaussRational
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != 8:
            raise ValueError("A_theta elements have 8 coordinates")

    @property
    def algebra(self) -> AThetaAlgebra:
        return atheta(self.theta)

    @property
    def b(self) -> GaussRational:
        return self.algebra.b

    def _check(self, other):
        if not isinstance(other, AThetaElement):
            raise TypeError("expected an A_theta element")
        if other.theta != self.theta:
            raise ValueError("cannot combine elements of A_theta for different theta")

    def __add__(self, other):
        self._check(other)
        return AThetaElement(self.theta, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return AThetaElement(self.theta, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return AThetaElement(self.theta, tuple(-a for a in self.coords))

    def __mul__(self, other):
        if isinstance(other, AThetaElement):
            self._check(other)
            return AThetaElement(self.theta, self.algebra.mul(self.coords, other.coords))
        c = gr(other)
        return AThetaElement(self.theta, tuple(c * a for a in self.coords))

    def __rmul__(self, c):
        c = gr(c)
        return AThetaElement(self.theta, tuple(c * a for a in self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __str__(self):
        labels = self.algebra.labels
        parts = [f"({format_scalar(c)})*{l}" for c, l in zip(self.coords, labels) if c]
        return " + ".join(parts) if parts else "0"


def project_to_atheta(e: GroupAlgElement, theta) -> AThetaElement:
    """Image of ``e`` under the quotient map CG -> A_theta."""
    alg = atheta(check_theta(theta))
    out = [ZERO] * 8
    for w, c in e.terms.items():
        for k, s in enumerate(alg.project_word(w)):
            if s:
                out[k] = out[k] + c * s
    return AThetaElement(alg.theta, tuple(out))


def lift(a: AThetaElement) -> GroupAlgElement:
    """The element of CG with the same coordinates on the basis words."""
    words = a.algebra.words
    return GroupAlgElement([(w, c) for w, c in zip(words, a.coords) if c])


def atheta_regular_representation(theta) -> SpannedAlgebra:
    """Faithful 8x8 left-regular model of A_theta (generators L_x, L_g, L_z)."""
    alg = atheta(check_theta(theta))
    gens = [alg.project_word(w) for w in (X, G, Z)]
    return regular_algebra(alg.const, gens)


def atheta_center_basis(theta) -> list[AThetaElement]:
    alg = atheta(check_theta(theta))
    one = alg.element(alg.project_word(E))
    if alg.generic:
        u = project_to_atheta(GroupAlgElement.word(G) + GroupAlgElement.word(G.inverse()), alg.theta)
        basis = [one, u]
    else:
        basis = [one, alg.element(alg.project_word(Z))]
    for c in basis:
        for w in alg.words:
            bw = alg.element(alg.project_word(w))
            if not (c * bw - bw * c).is_zero():
                raise RuntimeError(f"center element {c} fails to commute with {w}")
    return basis


# the representation phi --------------------------------------------------------

@lru_cache(maxsize=64)
def _phi_data(theta):
    X_, Y_, Z_ = xyz_matrices(theta)
    g = X_ @ Y_
    return X_, Z_, g, Y_ @ X_


def phi_word(w: GroupWord, theta) -> ExactMatrix:
    Xm, Zm, g, ginv = _phi_data(check_theta(theta))
    m = (g ** w.g_exp) if w.g_exp >= 0 else (ginv ** (-w.g_exp))
    if w.z_bit:
        m = m @ Zm
    if w.x_bit:
        m = m @ Xm
    return m


def phi(e: GroupAlgElement, theta) -> ExactMatrix:
    """Algebra map CG -> Mat_4 with ``x -> X``, ``y -> Y``, ``z -> Z``."""
    theta = check_theta(theta)
    acc = ExactMatrix.zeros(4)
    for w, c in e.terms.items():
        acc = acc + phi_word(w, theta).scale(c)
    return acc


def phi_on_atheta(theta) -> list[ExactMatrix]:
    """Images of the eight A_theta basis elements in Mat_4."""
    alg = atheta(check_theta(theta))
    return [phi_word(w, alg.theta) for w in alg.words]


def phi_rank(theta) -> int:
    return rank(ExactMatrix.from_rows([m.vec() for m in phi_on_atheta(theta)]))
