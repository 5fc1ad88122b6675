"""Exact scalars over the Gaussian rationals Q(i) and dense linear algebra on them.

Everything downstream (operator algebras, representations, channels) is built
on three value types defined here:

* :class:`GaussRational` -- ``a + b*i`` with ``a, b`` arbitrary precision rationals,
* :class:`ExactMatrix`   -- a dense row-major matrix of those scalars,
* :class:`Subspace`      -- a subspace stored by its reduced row echelon basis,
  so that two subspaces are equal exactly when their stored bases agree.

There is no floating point anywhere in this module.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple of GaussRational


class GaussRational:
    """Immutable Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if type(other) is not GaussRational:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return GaussRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        if type(other) is not GaussRational:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return GaussRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if type(other) is not GaussRational:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b:
            if not d:
                return GaussRational(a * c, _FZERO)
            return GaussRational(a * c, a * d)
        if not d:
            return GaussRational(a * c, b * c)
        return GaussRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if type(other) is not GaussRational:
            other = _coerce(other)
            if other is NotImplemented:
                return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __neg__(self):
        return GaussRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ONE, self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> GaussRational:
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussRational(self.re / n, -self.im / n)

    def conj(self) -> GaussRational:
        return GaussRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    @property
    def is_real(self) -> bool:
        return not self.im

    # comparison / hashing ---------------------------------------------------
    def __eq__(self, other):
        if type(other) is GaussRational:
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def sort_key(self):
        return (self.re, self.im)

    def __repr__(self):
        return f"GaussRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


_FZERO = Fraction(0)
ZERO = GaussRational(0, 0)
ONE = GaussRational(1, 0)
I_UNIT = GaussRational(0, 1)


def _coerce(x):
    if type(x) is GaussRational:
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return GaussRational(x, 0)
    return NotImplemented


def gr(x) -> GaussRational:
    """Coerce ints, Fractions, strings and GaussRationals to a GaussRational."""
    if type(x) is GaussRational:
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise TypeError(f"cannot use {type(x).__name__} as an exact scalar")
    return GaussRational(x, 0)


# text format -------------------------------------------------------------

_IMAG_RE = re.compile(r"^(?P<real>.*?)(?P<imag>[+-]?[^+-]*i)$")


def parse_scalar(text: str) -> GaussRational:
    """Parse ``"a/b"``, ``"a/b+c/d*i"``, ``"i"``, ``"-1/2*i"``, ``"(1+i)"`` ..."""
    s = text.strip().replace(" ", "")
    while s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    if not s:
        raise ValueError(f"empty scalar: {text!r}")
    try:
        if not s.endswith("i"):
            return GaussRational(Fraction(s), 0)
        m = _IMAG_RE.match(s)
        real_txt, imag_txt = m.group("real"), m.group("imag")[:-1]
        if imag_txt.endswith("*"):
            imag_txt = imag_txt[:-1]
        if imag_txt in ("", "+"):
            im = Fraction(1)
        elif imag_txt == "-":
            im = Fraction(-1)
        else:
            im = Fraction(imag_txt)
        re_ = Fraction(real_txt) if real_txt else Fraction(0)
        return GaussRational(re_, im)
    except (ValueError, ZeroDivisionError, AttributeError):
        raise ValueError(f"not a Gaussian rational: {text!r}") from None


def format_scalar(x: GaussRational) -> str:
    x = gr(x)
    if not x.im:
        return str(x.re)
    if not x.re:
        return f"{x.im}*i"
    sign = "+" if x.im > 0 else "-"
    return f"{x.re}{sign}{abs(x.im)}*i"


# matrices ----------------------------------------------------------------

class ExactMatrix:
    """Dense immutable matrix over Q(i), entries stored row-major."""

    __slots__ = ("rows", "cols", "entries", "_hash")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        entries = tuple(e if type(e) is GaussRational else gr(e) for e in entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        self.rows = rows
        self.cols = cols
        self.entries = entries
        self._hash = None

    @classmethod
    def _raw(cls, rows, cols, entries):
        m = cls.__new__(cls)
        m.rows, m.cols, m.entries, m._hash = rows, cols, tuple(entries), None
        return m

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> ExactMatrix:
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [e for r in rows for e in r])

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls._raw(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> ExactMatrix:
        cols = rows if cols is None else cols
        return cls._raw(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def diag(cls, values: Sequence) -> ExactMatrix:
        values = [gr(v) for v in values]
        n = len(values)
        return cls._raw(n, n, [values[i] if i == j else ZERO for i in range(n) for j in range(n)])

    @classmethod
    def from_vec(cls, v: Sequence, rows: int, cols: int | None = None) -> ExactMatrix:
        return cls(rows, rows if cols is None else cols, v)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return self.entries[j::self.cols]

    def to_rows(self) -> list[list[GaussRational]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def vec(self) -> tuple:
        return self.entries

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def _same_shape(self, other):
        if not isinstance(other, ExactMatrix) or self.shape != other.shape:
            raise ValueError(f"shape mismatch: {self.shape} vs {getattr(other, 'shape', None)}")

    def __add__(self, other):
        self._same_shape(other)
        return ExactMatrix._raw(self.rows, self.cols,
                                [a + b for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other):
        self._same_shape(other)
        return ExactMatrix._raw(self.rows, self.cols,
                                [a - b for a, b in zip(self.entries, other.entries)])

    def __neg__(self):
        return ExactMatrix._raw(self.rows, self.cols, [-a for a in self.entries])

    def scale(self, c) -> ExactMatrix:
        c = gr(c)
        if not c:
            return ExactMatrix.zeros(self.rows, self.cols)
        return ExactMatrix._raw(self.rows, self.cols, [c * a if a else ZERO for a in self.entries])

    def __mul__(self, c):
        if isinstance(c, ExactMatrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        n, k, m = self.rows, self.cols, other.cols
        a, b = self.entries, other.entries
        bcols = [b[j::m] for j in range(m)]
        out = []
        for i in range(n):
            arow = [(t, x) for t, x in enumerate(a[i * k:(i + 1) * k]) if x]
            for j in range(m):
                bc = bcols[j]
                s = ZERO
                for t, x in arow:
                    y = bc[t]
                    if y:
                        s = s + x * y
                out.append(s)
        return ExactMatrix._raw(n, m, out)

    def __pow__(self, k: int):
        if not self.is_square:
            raise ValueError("power of a non-square matrix")
        if k < 0:
            return self.inverse() ** (-k)
        result, base = ExactMatrix.identity(self.rows), self
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def transpose(self) -> ExactMatrix:
        return ExactMatrix._raw(self.cols, self.rows,
                                [self.entries[i * self.cols + j]
                                 for j in range(self.cols) for i in range(self.rows)])

    def adjoint(self) -> ExactMatrix:
        """Conjugate transpose."""
        return ExactMatrix._raw(self.cols, self.rows,
                                [self.entries[i * self.cols + j].conj()
                                 for j in range(self.cols) for i in range(self.rows)])

    def trace(self) -> GaussRational:
        if not self.is_square:
            raise ValueError("trace of a non-square matrix")
        s = ZERO
        for i in range(self.rows):
            s = s + self.entries[i * self.cols + i]
        return s

    def is_zero(self) -> bool:
        return not any(self.entries)

    def commutes_with(self, other: ExactMatrix) -> bool:
        return self @ other == other @ self

    def inverse(self) -> ExactMatrix:
        if not self.is_square:
            raise ValueError("inverse of a non-square matrix")
        n = self.rows
        aug = [list(self.row(i)) + [ONE if i == j else ZERO for j in range(n)] for i in range(n)]
        red, piv = _rref_rows(aug, n)
        if piv != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return ExactMatrix._raw(n, n, [e for r in red for e in r[n:]])

    def det(self) -> GaussRational:
        if not self.is_square:
            raise ValueError("determinant of a non-square matrix")
        n = self.rows
        m = self.to_rows()
        d = ONE
        for c in range(n):
            p = next((r for r in range(c, n) if m[r][c]), None)
            if p is None:
                return ZERO
            if p != c:
                m[c], m[p] = m[p], m[c]
                d = -d
            pv = m[c][c]
            d = d * pv
            inv = pv.inverse()
            for r in range(c + 1, n):
                f = m[r][c]
                if f:
                    f = f * inv
                    m[r] = [x - f * y for x, y in zip(m[r], m[c])]
        return d

    def block(self, r0: int, r1: int, c0: int, c1: int) -> ExactMatrix:
        return ExactMatrix._raw(r1 - r0, c1 - c0,
                                [self.entries[i * self.cols + j]
                                 for i in range(r0, r1) for j in range(c0, c1)])

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.rows, self.cols, self.entries))
        return self._hash

    def __repr__(self):
        body = "; ".join(", ".join(format_scalar(e) for e in self.row(i)) for i in range(self.rows))
        return f"ExactMatrix([{body}])"

    # JSON ---------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(e.re), str(e.im)] for e in self.entries],
        }

    def to_rows_json(self) -> list[list[str]]:
        """Nested rows of scalar strings, e.g. ``[["1", "1/2*i"], ...]``."""
        return [[format_scalar(e) for e in self.row(i)] for i in range(self.rows)]

    @classmethod
    def from_json(cls, data) -> ExactMatrix:
        """Accept either :meth:`to_json` output or a nested list of rows."""
        if isinstance(data, list):
            try:
                return cls.from_rows([[_json_scalar(e) for e in row] for row in data])
            except (TypeError, ValueError) as exc:
                raise ValueError(f"malformed matrix JSON: {exc}") from None
        try:
            rows, cols = int(data["rows"]), int(data["cols"])
            entries = []
            for e in data["entries"]:
                if isinstance(e, str):
                    entries.append(parse_scalar(e))
                else:
                    re_, im = e
                    entries.append(GaussRational(Fraction(re_), Fraction(im)))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed matrix JSON: {exc}") from None
        return cls(rows, cols, entries)


def _json_scalar(e):
    if isinstance(e, str):
        return parse_scalar(e)
    if isinstance(e, bool) or not isinstance(e, int):
        raise ValueError(f"matrix entries must be strings or integers, got {e!r}")
    return gr(e)


def block_diag(*blocks: ExactMatrix) -> ExactMatrix:
    n = sum(b.rows for b in blocks)
    m = sum(b.cols for b in blocks)
    rows = [[ZERO] * m for _ in range(n)]
    r0 = c0 = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                rows[r0 + i][c0 + j] = b[i, j]
        r0 += b.rows
        c0 += b.cols
    return ExactMatrix._raw(n, m, [e for r in rows for e in r])


def hstack(columns: Sequence[Sequence]) -> ExactMatrix:
    """Matrix whose j-th column is ``columns[j]``."""
    n = len(columns[0])
    return ExactMatrix(n, len(columns), [columns[j][i] for i in range(n) for j in range(len(columns))])


def vstack(rows: Sequence[Sequence]) -> ExactMatrix:
    return ExactMatrix.from_rows(rows)


# row reduction -----------------------------------------------------------

def _rref_rows(rows: list[list], ncols: int | None = None):
    """Gauss-Jordan elimination in place on a list of rows.

    Pivots are searched only in the first ``ncols`` columns. Returns the nonzero
    reduced rows and the pivot columns.
    """
    if not rows:
        return [], []
    width = len(rows[0])
    ncols = width if ncols is None else ncols
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    nrows = len(m)
    for c in range(ncols):
        p = None
        for k in range(r, nrows):
            if m[k][c]:
                p = k
                break
        if p is None:
            continue
        if p != r:
            m[r], m[p] = m[p], m[r]
        pr = m[r]
        pv = pr[c]
        if pv != ONE:
            inv = pv.inverse()
            pr = [x * inv if x else ZERO for x in pr]
            m[r] = pr
        nz = [j for j in range(c, width) if pr[j]]
        for k in range(nrows):
            if k != r:
                f = m[k][c]
                if f:
                    row = m[k]
                    for j in nz:
                        row[j] = row[j] - f * pr[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return m[:r], pivots


def rref(m: ExactMatrix):
    """Reduced row echelon form. Returns ``(R, rank, pivot_columns)``; ``R`` keeps the shape of ``m``."""
    red, piv = _rref_rows(m.to_rows())
    rank = len(piv)
    padded = [e for r in red for e in r] + [ZERO] * ((m.rows - rank) * m.cols)
    return ExactMatrix._raw(m.rows, m.cols, padded), rank, piv


def rank(m: ExactMatrix) -> int:
    return len(_rref_rows(m.to_rows())[1])


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q(i)^n stored by its canonical RREF basis."""

    ambient_dim: int
    basis: tuple  # tuple of row vectors (tuples), RREF
    pivots: tuple = ()

    @classmethod
    def zero(cls, n: int) -> Subspace:
        return cls(n, (), ())

    @classmethod
    def full(cls, n: int) -> Subspace:
        return cls.span([[ONE if i == j else ZERO for j in range(n)] for i in range(n)], n)

    @classmethod
    def span(cls, vectors: Iterable[Sequence], n: int) -> Subspace:
        rows = []
        for v in vectors:
            v = [x if type(x) is GaussRational else gr(x) for x in v]
            if len(v) != n:
                raise ValueError(f"vector of length {len(v)} in ambient dimension {n}")
            rows.append(v)
        red, piv = _rref_rows(rows)
        return cls(n, tuple(tuple(r) for r in red), tuple(piv))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self):
        return len(self.basis)

    def join(self, vectors: Iterable[Sequence]) -> Subspace:
        return span_join(self, vectors)

    def contains(self, v: Sequence) -> bool:
        return contains(self, v)

    def __contains__(self, v):
        return contains(self, v)

    def coordinates(self, v: Sequence):
        """Coefficients of ``v`` in the stored basis, or ``None`` when ``v`` is outside."""
        if len(v) != self.ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {self.ambient_dim}")
        coeffs = [gr(v[p]) if type(v[p]) is not GaussRational else v[p] for p in self.pivots]
        rest = list(v)
        for c, b in zip(coeffs, self.basis):
            if c:
                rest = [x - c * y if y else x for x, y in zip(rest, b)]
        if any(rest):
            return None
        return tuple(coeffs)

    def is_subspace_of(self, other: Subspace) -> bool:
        return all(contains(other, b) for b in self.basis)

    def matrix(self) -> ExactMatrix:
        return ExactMatrix(self.dim, self.ambient_dim, [e for b in self.basis for e in b])


def span_join(s: Subspace, vectors: Iterable[Sequence]) -> Subspace:
    """Smallest subspace containing ``s`` and ``vectors``."""
    vectors = [list(v) for v in vectors]
    for v in vectors:
        if len(v) != s.ambient_dim:
            raise ValueError(f"vector of length {len(v)} in ambient dimension {s.ambient_dim}")
    return Subspace.span(list(s.basis) + vectors, s.ambient_dim)


def contains(s: Subspace, v: Sequence) -> bool:
    return s.coordinates(v) is not None


def kernel(m: ExactMatrix) -> Subspace:
    """Right null space ``{v : m v = 0}``."""
    red, piv = _rref_rows(m.to_rows())
    free = [c for c in range(m.cols) if c not in set(piv)]
    vecs = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in zip(red, piv):
            if r[f]:
                v[p] = -r[f]
        vecs.append(v)
    return Subspace.span(vecs, m.cols)


def solve(m: ExactMatrix, b: Sequence):
    """One solution of ``m x = b`` or ``None`` when inconsistent."""
    if len(b) != m.rows:
        raise ValueError("right-hand side has the wrong length")
    aug = [list(m.row(i)) + [gr(b[i])] for i in range(m.rows)]
    red, piv = _rref_rows(aug, m.cols + 1)
    if piv and piv[-1] == m.cols:
        return None
    x = [ZERO] * m.cols
    for r, p in zip(red, piv):
        x[p] = r[m.cols]
    return tuple(x)


def char_poly(m: ExactMatrix) -> list[GaussRational]:
    """Characteristic polynomial ``det(t I - m)``, coefficients lowest degree first."""
    if not m.is_square:
        raise ValueError("characteristic polynomial of a non-square matrix")
    n = m.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    eye = ExactMatrix.identity(n)
    mk = ExactMatrix.zeros(n)
    # Faddeev-LeVerrier
    for k in range(1, n + 1):
        mk = m @ mk + eye.scale(coeffs[n - k + 1])
        coeffs[n - k] = -(m @ mk).trace() / k
    return coeffs


def poly_eval(coeffs: Sequence, t) -> GaussRational:
    acc = ZERO
    for c in reversed(coeffs):
        acc = acc * t + c
    return acc


def matrix_poly(coeffs: Sequence, m: ExactMatrix) -> ExactMatrix:
    acc = ExactMatrix.zeros(m.rows)
    eye = ExactMatrix.identity(m.rows)
    for c in reversed(coeffs):
        acc = acc @ m + eye.scale(c)
    return acc
