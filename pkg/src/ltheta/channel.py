"""Kraus channels over Q(i), the Klein dephasing channel and the graph L_theta.

A Kraus operator is stored as a pair ``(M, w)`` standing for ``sqrt(w) * M``.
Every quantity of interest (trace preservation, the channel action, the span
of ``V_j^* V_k``) depends on ``w`` only, so no square roots are ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactlin import ONE, ZERO, ExactMatrix, Subspace, gr, hstack, solve
from .groupalg import check_theta, xyz_matrices

# the standard faithful representation of the Klein group on C^4
KLEIN_X = ExactMatrix.diag([1, -1, 1, -1])
KLEIN_Y = ExactMatrix.diag([1, -1, -1, 1])
KLEIN_Z = ExactMatrix.diag([1, 1, -1, -1])


@dataclass(frozen=True)
class KrausChannel:
    ops: tuple  # of (ExactMatrix, Fraction)

    def __post_init__(self):
        if not self.ops:
            raise ValueError("a channel needs at least one Kraus operator")
        n = self.ops[0][0].rows
        total = ExactMatrix.zeros(n)
        for m, w in self.ops:
            if m.shape != (n, n):
                raise ValueError("Kraus operators must be square and of one size")
            if not isinstance(w, (int, Fraction)) or w < 0:
                raise ValueError("Kraus weights must be nonnegative rationals")
            total = total + (m.adjoint() @ m).scale(gr(Fraction(w)))
        if total != ExactMatrix.identity(n):
            raise ValueError("Kraus operators are not trace preserving")

    @property
    def dim(self) -> int:
        return self.ops[0][0].rows

    def trace_preservation_sum(self) -> ExactMatrix:
        total = ExactMatrix.zeros(self.dim)
        for m, w in self.ops:
            total = total + (m.adjoint() @ m).scale(gr(Fraction(w)))
        return total


def _rational(v, name) -> Fraction:
    if isinstance(v, str):
        v = Fraction(v)
    if isinstance(v, bool) or not isinstance(v, (int, Fraction)):
        raise TypeError(f"{name} must be rational")
    return Fraction(v)


def dephasing_channel(alpha, beta) -> KrausChannel:
    """``rho -> (1 - a - b) rho + a x rho x + b y rho y`` with the Klein sign matrices."""
    a, b = _rational(alpha, "alpha"), _rational(beta, "beta")
    if a < 0 or b < 0 or a + b > 1:
        raise ValueError("need alpha >= 0, beta >= 0 and alpha + beta <= 1")
    return KrausChannel((
        (ExactMatrix.identity(4), 1 - a - b),
        (KLEIN_X, a),
        (KLEIN_Y, b),
    ))


def apply_channel(ch: KrausChannel, rho: ExactMatrix) -> ExactMatrix:
    if rho.shape != (ch.dim, ch.dim):
        raise ValueError(f"state must be {ch.dim}x{ch.dim}, got {rho.rows}x{rho.cols}")
    out = ExactMatrix.zeros(ch.dim)
    for m, w in ch.ops:
        if w:
            out = out + (m @ rho @ m.adjoint()).scale(gr(Fraction(w)))
    return out


def matrix_unit(n: int, i: int, j: int) -> ExactMatrix:
    """``|i><j|`` with 1-based indices."""
    e = [ZERO] * (n * n)
    e[(i - 1) * n + (j - 1)] = ONE
    return ExactMatrix(n, n, e)


def dephasing_coefficient(alpha, beta, i: int, j: int) -> Fraction:
    """Closed form of the factor multiplying ``|i><j|``."""
    a, b = _rational(alpha, "alpha"), _rational(beta, "beta")
    xi, xj = KLEIN_X[i - 1, i - 1].re, KLEIN_X[j - 1, j - 1].re
    yi, yj = KLEIN_Y[i - 1, i - 1].re, KLEIN_Y[j - 1, j - 1].re
    return 1 - a * (1 - xi * xj) - b * (1 - yi * yj)


# factors of |i><j| as stated for the six off-diagonal matrix units
OFF_DIAGONAL_TABLE = {
    (1, 2): lambda a, b: 1 - 2 * a - 2 * b,
    (1, 3): lambda a, b: 1 - 2 * b,
    (1, 4): lambda a, b: 1 - 2 * a,
    (2, 3): lambda a, b: 1 - 2 * a,
    (2, 4): lambda a, b: 1 - 2 * b,
    (3, 4): lambda a, b: 1 - 2 * a - 2 * b,
}


def coefficient_table(alpha, beta) -> dict:
    """Measured factor for every matrix unit, or ``None`` if ``Phi(|i><j|)`` is not a multiple of it."""
    ch = dephasing_channel(alpha, beta)
    out = {}
    for i in range(1, 5):
        for j in range(1, 5):
            e = matrix_unit(4, i, j)
            img = apply_channel(ch, e)
            c = img[i - 1, j - 1]
            out[(i, j)] = c if img == e.scale(c) else None
    return out


def noncommutative_graph(ch: KrausChannel) -> Subspace:
    """Span of ``V_j^* V_k`` over operators with nonzero weight."""
    ms = [m for m, w in ch.ops if w]
    n = ch.dim
    return Subspace.span([(a.adjoint() @ b).vec() for a in ms for b in ms], n * n)


def klein_span() -> Subspace:
    return Subspace.span([m.vec() for m in (ExactMatrix.identity(4), KLEIN_X, KLEIN_Y, KLEIN_X @ KLEIN_Y)], 16)


def graph_matches_klein(alpha, beta) -> bool:
    a, b = _rational(alpha, "alpha"), _rational(beta, "beta")
    if not (a > 0 and b > 0 and a + b < 1):
        raise ValueError("need alpha > 0, beta > 0 and alpha + beta < 1")
    return noncommutative_graph(dephasing_channel(a, b)) == klein_span()


def is_operator_system(s: Subspace, n: int) -> bool:
    """Contains I and is closed under the adjoint."""
    if not s.contains(ExactMatrix.identity(n).vec()):
        return False
    return all(s.contains(ExactMatrix.from_vec(v, n).adjoint().vec()) for v in s.basis)


# L_theta ---------------------------------------------------------------------

@dataclass(frozen=True)
class LThetaSpace:
    theta: object
    basis: tuple  # I, X, Y, Z
    span: Subspace


def l_theta_space(theta) -> LThetaSpace:
    theta = check_theta(theta)
    X, Y, Z = xyz_matrices(theta)
    basis = (ExactMatrix.identity(4), X, Y, Z)
    return LThetaSpace(theta, basis, Subspace.span([m.vec() for m in basis], 16))


def l_theta_matrix(theta, a, b, c, d) -> ExactMatrix:
    """The entry pattern of L_theta with parameters ``a, b, c, d``."""
    t = check_theta(theta)
    a, b, c, d = (gr(v) for v in (a, b, c, d))
    ct, ci = c * t, c / t
    return ExactMatrix.from_rows([
        [a, b, ct, d],
        [b, a, d, ci],
        [ci, d, a, b],
        [d, ct, b, a],
    ])


def l_theta_membership(m: ExactMatrix, theta) -> tuple | None:
    """``(a, b, c, d)`` with ``m = aI + bX + cY + dZ``, or ``None``."""
    if m.shape != (4, 4):
        raise ValueError("L_theta lives in 4x4 matrices")
    sp = l_theta_space(theta)
    cols = [b.vec() for b in sp.basis]
    coeffs = solve(ExactMatrix.from_rows([[col[k] for col in cols] for k in range(16)]), m.vec())
    if coeffs is None:
        return None
    if l_theta_matrix(theta, *coeffs) != m:
        raise RuntimeError("coordinates do not reproduce the L_theta entry pattern")
    return coeffs


def adjoint_closed(theta) -> bool:
    sp = l_theta_space(theta)
    return is_operator_system(sp.span, 4)


def conjugated_span(s: Subspace, t: ExactMatrix) -> Subspace:
    """``t^-1 S t`` for a subspace of vectorised matrices."""
    n = t.rows
    ti = t.inverse()
    return Subspace.span([(ti @ ExactMatrix.from_vec(v, n) @ t).vec() for v in s.basis], n * n)


def klein_basis_change(ts: Sequence) -> bool:
    """Whether ``T^-1 L_1 T`` equals span{I, x, y, xy} for the given joint eigenbasis columns."""
    return conjugated_span(l_theta_space(1).span, hstack(list(ts))) == klein_span()
