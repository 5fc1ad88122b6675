"""Two-dimensional representations of CG up to semisimplification.

Points of the moduli space are identified with their trace tuple
``(Tr x, Tr y, Tr z, Tr xy, Tr xz, Tr yz)``; these six functions generate the
invariant ring.  The space splits into two one-parameter families (z scalar,
x and y reflections) and a finite set of isolated points, which
:func:`bullet_reports` builds case by case.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .exactlin import ONE, ZERO, ExactMatrix, GaussRational, format_scalar, gr, kernel, rank, vstack, hstack

I2 = ExactMatrix.identity(2)
R = ExactMatrix.diag([1, -1])
SCALARS = (I2, -I2)
REFLECTIONS = (R, -R)


@dataclass(frozen=True)
class Rep2Point:
    """Images of x, y, z in Mat_2 with x^2 = y^2 = z^2 = 1 and z central."""

    x_img: ExactMatrix
    y_img: ExactMatrix
    z_img: ExactMatrix

    def __post_init__(self):
        for name in ("x_img", "y_img", "z_img"):
            m = getattr(self, name)
            if m.shape != (2, 2):
                raise ValueError(f"{name} must be 2x2")
            if m @ m != I2:
                raise ValueError(f"{name} is not an involution")
        if not self.z_img.commutes_with(self.x_img) or not self.z_img.commutes_with(self.y_img):
            raise ValueError("z must commute with x and y")

    @property
    def g_img(self) -> ExactMatrix:
        return self.x_img @ self.y_img

    def conjugate(self, t: ExactMatrix) -> Rep2Point:
        ti = t.inverse()
        return Rep2Point(ti @ self.x_img @ t, ti @ self.y_img @ t, ti @ self.z_img @ t)


class TraceTuple(NamedTuple):
    tr_x: GaussRational
    tr_y: GaussRational
    tr_z: GaussRational
    tr_xy: GaussRational
    tr_xz: GaussRational
    tr_yz: GaussRational

    def sort_key(self):
        return tuple(v.sort_key() for v in self)

    def to_json(self) -> list[str]:
        return [format_scalar(v) for v in self]

    @classmethod
    def of(cls, *values) -> TraceTuple:
        return cls(*(gr(v) for v in values))


_INVOLUTION_TRACES = {gr(-2), ZERO, gr(2)}


def trace_tuple(p: Rep2Point) -> TraceTuple:
    x, y, z = p.x_img, p.y_img, p.z_img
    t = TraceTuple(x.trace(), y.trace(), z.trace(), (x @ y).trace(), (x @ z).trace(), (y @ z).trace())
    if any(v not in _INVOLUTION_TRACES for v in t[:3]):
        raise RuntimeError("trace of an involution outside {-2, 0, 2}")
    return t


def on_family(t: TraceTuple) -> bool:
    """Tuples of the one-parameter families: z scalar, x and y of trace 0."""
    return t.tr_z in (gr(2), gr(-2)) and not t.tr_x and not t.tr_y and not t.tr_xz and not t.tr_yz


# the case analysis ---------------------------------------------------------

@dataclass(frozen=True)
class BulletReport:
    index: int
    description: str
    stated_count: int
    tuples: tuple

    @property
    def found_count(self) -> int:
        return len(self.tuples)

    def to_json(self) -> dict:
        return {
            "bullet": self.index,
            "case": self.description,
            "stated": self.stated_count,
            "found": self.found_count,
        }


# (description, shapes of x, y, z, count asserted for the case)
_CASES = (
    ("x, y, z reflections", (REFLECTIONS, REFLECTIONS, REFLECTIONS), 3),
    ("y, z reflections, x scalar", (SCALARS, REFLECTIONS, REFLECTIONS), 2),
    ("x, z reflections, y scalar", (REFLECTIONS, SCALARS, REFLECTIONS), 2),
    ("x reflection, y, z scalar", (REFLECTIONS, SCALARS, SCALARS), 4),
    ("y reflection, x, z scalar", (SCALARS, REFLECTIONS, SCALARS), 4),
    ("x, y, z scalar", (SCALARS, SCALARS, SCALARS), 8),
    ("z reflection, x, y scalar", (SCALARS, SCALARS, REFLECTIONS), 4),
)

STATED_BULLET_COUNTS = tuple(c for _, _, c in _CASES)
STATED_TOTAL = 27


def bullet_reports() -> list[BulletReport]:
    """One report per isolated case.

    A reflection that commutes with z (or is forced to commute by a reflection
    z) is diagonal in a common eigenbasis, so each case is realised by every
    choice of signs on diagonal representatives; deduplication by trace tuple
    gives the points of the case.
    """
    out = []
    for k, (desc, shapes, stated) in enumerate(_CASES, start=1):
        found = set()
        for x, y, z in product(*shapes):
            t = trace_tuple(Rep2Point(x, y, z))
            if not on_family(t):
                found.add(t)
        out.append(BulletReport(k, desc, stated, tuple(sorted(found, key=TraceTuple.sort_key))))
    return out


def enumerate_isolated_points() -> list[TraceTuple]:
    pts = set()
    for rep in bullet_reports():
        pts.update(rep.tuples)
    return sorted(pts, key=TraceTuple.sort_key)


def diagonal_sign_points() -> list[tuple[tuple, TraceTuple]]:
    """All 4^3 assignments of diagonal sign matrices to x, y, z with their tuples."""
    diags = [ExactMatrix.diag([a, b]) for a in (1, -1) for b in (1, -1)]
    out = []
    for x, y, z in product(diags, repeat=3):
        key = tuple((m[0, 0], m[1, 1]) for m in (x, y, z))
        out.append((key, trace_tuple(Rep2Point(x, y, z))))
    return out


def semisimple_oracle() -> list[TraceTuple]:
    """Isolated points from sums of two one-dimensional characters."""
    pts = {t for _, t in diagonal_sign_points() if not on_family(t)}
    return sorted(pts, key=TraceTuple.sort_key)


# families and the map to the moduli of CP ---------------------------------------

def family_point(sign, s) -> Rep2Point:
    """z = sign * I, x = diag(1, -1), y = [[c, 1], [1 - c^2, -c]] with 2c = s."""
    if isinstance(sign, str):
        if sign not in ("+", "-"):
            raise ValueError("sign must be '+' or '-'")
        sign = ONE if sign == "+" else -ONE
    sign = gr(sign)
    if sign not in (ONE, -ONE):
        raise ValueError("sign must be +1 or -1")
    c = gr(s) / 2
    y = ExactMatrix.from_rows([[c, ONE], [ONE - c * c, -c]])
    return Rep2Point(R, y, I2.scale(sign))


def restrict_to_p(p: Rep2Point) -> tuple:
    g = p.g_img
    return g.trace(), (g @ g).trace(), p.z_img.trace()


@dataclass(frozen=True)
class ComponentReport:
    label: str
    tr_g: GaussRational
    tr_g2: GaussRational
    open_condition: bool

    def to_json(self) -> dict:
        return {
            "component": self.label,
            "tr_g": format_scalar(self.tr_g),
            "tr_g2": format_scalar(self.tr_g2),
            "open_condition": self.open_condition,
        }


_LABELS = {gr(-2): "U-", ZERO: "U0", gr(2): "U+"}


def moduli_component(p: Rep2Point) -> ComponentReport:
    tg, tg2, tz = restrict_to_p(p)
    ok = bool(tg * tg - tg2)
    if not ok:
        raise RuntimeError("Tr(g)^2 - Tr(g^2) vanishes: g is not invertible")
    return ComponentReport(_LABELS[tz], tg, tg2, ok)


# random points and the commuting-involution lemma ---------------------------

def random_invertible(rng: random.Random, n: int = 2, bound: int = 4) -> ExactMatrix:
    while True:
        entries = [GaussRational(rng.randint(-bound, bound), rng.randint(-bound, bound) if rng.random() < 0.3 else 0)
                   for _ in range(n * n)]
        m = ExactMatrix(n, n, entries)
        if m.det():
            return m


def random_point(rng: random.Random) -> Rep2Point:
    """A valid point: a diagonal sign pattern or a family point, conjugated."""
    if rng.random() < 0.5:
        diags = [ExactMatrix.diag([a, b]) for a in (1, -1) for b in (1, -1)]
        base = Rep2Point(rng.choice(diags), rng.choice(diags), rng.choice(diags))
    else:
        s = GaussRational(rng.randint(-9, 9), rng.randint(-3, 3)) / rng.randint(1, 5)
        base = family_point(rng.choice("+-"), s)
    return base.conjugate(random_invertible(rng))


def common_eigenbasis(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """Columns form a basis of joint eigenvectors of commuting involutions."""
    if not a.commutes_with(b):
        raise ValueError("involutions do not commute")
    n = a.rows
    eye = ExactMatrix.identity(n)
    cols = []
    for ea, eb in product((ONE, -ONE), repeat=2):
        space = kernel(vstack((a - eye.scale(ea)).to_rows() + (b - eye.scale(eb)).to_rows()))
        cols.extend(space.basis)
    t = hstack(cols)
    if rank(t) != n:
        raise RuntimeError("no joint eigenbasis")
    return t
