"""Characters of CP, induced modules W_chi, generalized eigenspaces and the
decomposition of phi into induced blocks (or Klein characters at theta = +-1)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .exactlin import (
    ONE,
    ZERO,
    ExactMatrix,
    GaussRational,
    Subspace,
    block_diag,
    char_poly,
    format_scalar,
    gr,
    hstack,
    kernel,
    parse_scalar,
    rank,
    vstack,
)
from .groupalg import GroupWord, check_theta, xyz_matrices
from .roots import gaussian_roots


def _sign(z) -> GaussRational:
    z = gr(z)
    if z not in (ONE, -ONE):
        raise ValueError(f"z-value must be +1 or -1, got {format_scalar(z)}")
    return z


def _format_sign(z: GaussRational) -> str:
    return "+1" if z == ONE else "-1"


@dataclass(frozen=True, order=False)
class PCharacter:
    """A character of CP = C[g^+-1, z]: the pair (chi(g), chi(z))."""

    g_val: GaussRational
    z_val: GaussRational

    def __post_init__(self):
        object.__setattr__(self, "g_val", gr(self.g_val))
        object.__setattr__(self, "z_val", _sign(self.z_val))
        if not self.g_val:
            raise ValueError("chi(g) must be nonzero")

    def inverse(self) -> PCharacter:
        """The twisted character c_x(chi): g -> chi(g)^-1."""
        return PCharacter(self.g_val.inverse(), self.z_val)

    def __call__(self, w: GroupWord) -> GaussRational:
        if w.x_bit:
            raise ValueError("characters of CP are only defined on words without x")
        v = self.g_val ** w.g_exp
        return v * self.z_val if w.z_bit else v

    def sort_key(self):
        return (self.z_val.re, self.g_val.sort_key())

    def to_json(self) -> list[str]:
        return [format_scalar(self.g_val), _format_sign(self.z_val)]

    def __str__(self):
        return f"{format_scalar(self.g_val)},{_format_sign(self.z_val)}"

    @classmethod
    def parse(cls, text: str) -> PCharacter:
        """``"2,+1"`` or ``"1+1*i,-1"``."""
        parts = text.rsplit(",", 1)
        if len(parts) != 2:
            raise ValueError(f"character must look like 'g_value,z_sign': {text!r}")
        return cls(parse_scalar(parts[0]), parse_scalar(parts[1]))


@dataclass(frozen=True)
class CCharacter:
    """A point of Spec C: values on u = g + g^-1 and on z."""

    u_val: GaussRational
    z_val: GaussRational

    def __post_init__(self):
        object.__setattr__(self, "u_val", gr(self.u_val))
        object.__setattr__(self, "z_val", _sign(self.z_val))


def restrict_to_center(chi: PCharacter) -> CCharacter:
    return CCharacter(chi.g_val + chi.g_val.inverse(), chi.z_val)


# representations ----------------------------------------------------------

class MatrixRepresentation:
    """Images of ``x``, ``z`` and ``g`` satisfying the relations of G exactly."""

    __slots__ = ("dim", "images", "_ginv")

    def __init__(self, images: Mapping[str, ExactMatrix]):
        try:
            x, z, g = images["x"], images["z"], images["g"]
        except KeyError as exc:
            raise ValueError(f"missing image for generator {exc}") from None
        n = x.rows
        if any(m.shape != (n, n) for m in (x, z, g)):
            raise ValueError("images must be square matrices of equal size")
        eye = ExactMatrix.identity(n)
        if x @ x != eye:
            raise ValueError("x^2 != 1")
        if z @ z != eye:
            raise ValueError("z^2 != 1")
        if not z.commutes_with(x) or not z.commutes_with(g):
            raise ValueError("z is not central")
        if x @ g @ x @ g != eye:
            raise ValueError("x g x != g^-1")
        self.dim = n
        self.images = {"x": x, "z": z, "g": g}
        self._ginv = x @ g @ x

    def word(self, w: GroupWord) -> ExactMatrix:
        g = self.images["g"] if w.g_exp >= 0 else self._ginv
        m = g ** abs(w.g_exp)
        if w.z_bit:
            m = m @ self.images["z"]
        if w.x_bit:
            m = m @ self.images["x"]
        return m

    @property
    def y(self) -> ExactMatrix:
        return self.images["x"] @ self.images["g"]

    def generators(self) -> list[ExactMatrix]:
        return [self.images["x"], self.images["z"], self.images["g"]]

    def conjugate(self, t: ExactMatrix) -> MatrixRepresentation:
        """The representation ``t^-1 rho t``."""
        ti = t.inverse()
        return MatrixRepresentation({k: ti @ m @ t for k, m in self.images.items()})

    def __eq__(self, other):
        return isinstance(other, MatrixRepresentation) and self.images == other.images

    def __hash__(self):
        return hash(tuple(sorted(self.images.items(), key=lambda kv: kv[0])))

    def __repr__(self):
        return f"MatrixRepresentation(dim={self.dim})"


def direct_sum(*reps: MatrixRepresentation) -> MatrixRepresentation:
    return MatrixRepresentation({k: block_diag(*(r.images[k] for r in reps)) for k in ("x", "z", "g")})


def phi_representation(theta) -> MatrixRepresentation:
    X, Y, Z = xyz_matrices(theta)
    return MatrixRepresentation({"x": X, "z": Z, "g": X @ Y})


def one_dim_representation(x_val, y_val, z_val) -> MatrixRepresentation:
    """1-dim representation with x, y, z -> signs (so g -> x_val * y_val)."""
    x_val, y_val, z_val = _sign(x_val), _sign(y_val), _sign(z_val)
    m = lambda v: ExactMatrix.from_rows([[v]])  # noqa: E731
    return MatrixRepresentation({"x": m(x_val), "z": m(z_val), "g": m(x_val * y_val)})


_SWAP = ExactMatrix.from_rows([[0, 1], [1, 0]])


def induced_module(chi: PCharacter) -> MatrixRepresentation:
    """W_chi = CG (x)_CP C^chi in the basis (1 (x) 1, x (x) 1)."""
    t = chi.g_val
    return MatrixRepresentation({
        "x": _SWAP,
        "z": ExactMatrix.diag([chi.z_val, chi.z_val]),
        "g": ExactMatrix.diag([t, t.inverse()]),
    })


def induced_jordan_module(t, z_val) -> MatrixRepresentation:
    """4-dim module induced from the indecomposable 2-dim CP-module with
    g acting as a Jordan block of eigenvalue ``t``; g is not diagonalisable."""
    t, s = gr(t), _sign(z_val)
    j = ExactMatrix.from_rows([[t, 1], [0, t]])
    ji = j.inverse()
    zero = ExactMatrix.zeros(2)
    x = ExactMatrix.from_rows([r0 + r1 for r0, r1 in zip(zero.to_rows(), I2.to_rows())]
                              + [r0 + r1 for r0, r1 in zip(I2.to_rows(), zero.to_rows())])
    return MatrixRepresentation({"x": x, "z": ExactMatrix.identity(4).scale(s), "g": block_diag(j, ji)})


I2 = ExactMatrix.identity(2)


def model_map_f(t) -> dict[str, ExactMatrix]:
    """The 2x2 model of CG over C[u]: x -> swap, g -> diag(t, 1/t)."""
    t = gr(t)
    return {"x": _SWAP, "g": ExactMatrix.diag([t, t.inverse()])}


def v_chi_k(rep: MatrixRepresentation, chi: PCharacter, k: int) -> Subspace:
    """``{v : (g - chi(g))^k v = 0, (z - chi(z)) v = 0}``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    n = rep.dim
    eye = ExactMatrix.identity(n)
    a = (rep.images["g"] - eye.scale(chi.g_val)) ** k
    b = rep.images["z"] - eye.scale(chi.z_val)
    return kernel(vstack(a.to_rows() + b.to_rows()))


def g_eigenvalues(rep: MatrixRepresentation) -> list[GaussRational]:
    roots, left = gaussian_roots(char_poly(rep.images["g"]))
    if left:
        raise ValueError("the spectrum of g is not contained in Q(i); exact eigenvalues unsupported")
    return [r for r, _ in roots]


def char_set(rep: MatrixRepresentation, candidates: Sequence[PCharacter] | None = None) -> list[PCharacter]:
    """Characters chi with V_chi(1) != 0.

    With ``candidates`` the result is the sublist that occurs; an eigenvalue of
    g that no candidate covers is an error.  Without candidates every character
    is discovered from the characteristic polynomial of g.
    """
    eig = g_eigenvalues(rep)
    if candidates is None:
        candidates = [PCharacter(a, s) for a in eig for s in (ONE, -ONE)]
    else:
        covered = {c.g_val for c in candidates}
        missing = [a for a in eig if a not in covered]
        if missing:
            raise ValueError("eigenvalues of g not covered by candidates: "
                             + ", ".join(format_scalar(a) for a in missing))
    found = [c for c in candidates if v_chi_k(rep, c, 1).dim > 0]
    return sorted(set(found), key=PCharacter.sort_key)


def commutant(mats: Iterable[ExactMatrix]) -> Subspace:
    """All ``C`` with ``C A = A C`` for every ``A``, as vectorised matrices."""
    mats = list(mats)
    n = mats[0].rows
    rows = []
    for a in mats:
        # (C A - A C)[i, j] = sum_k C[i,k] A[k,j] - A[i,k] C[k,j]
        for i in range(n):
            for j in range(n):
                row = [ZERO] * (n * n)
                for k in range(n):
                    row[i * n + k] = row[i * n + k] + a[k, j]
                    row[k * n + j] = row[k * n + j] - a[i, k]
                rows.append(row)
    return kernel(ExactMatrix.from_rows(rows))


def commutant_dim(mats: Iterable[ExactMatrix]) -> int:
    return commutant(mats).dim


def is_irreducible(rep: MatrixRepresentation) -> bool:
    """Commutant equals the scalars."""
    return commutant_dim(rep.generators()) == 1


def invariant_lines(rep: MatrixRepresentation) -> list[tuple]:
    """Basis vectors of the joint eigenspaces of g, z and x (every invariant
    line lies in one of them, since x and z are diagonalisable involutions)."""
    out = []
    n = rep.dim
    eye = ExactMatrix.identity(n)
    for a in g_eigenvalues(rep):
        for s in (ONE, -ONE):
            for e in (ONE, -ONE):
                rows = []
                for key, val in (("g", a), ("z", s), ("x", e)):
                    rows.extend((rep.images[key] - eye.scale(val)).to_rows())
                out.extend(kernel(vstack(rows)).basis)
    return out


def _apply(m: ExactMatrix, v) -> tuple:
    return (m @ ExactMatrix.from_vec(v, m.cols, 1)).vec()


def intertwiners(a: MatrixRepresentation, b: MatrixRepresentation) -> list[ExactMatrix]:
    """Basis of ``{T : T rho_a(w) = rho_b(w) T}``."""
    m, n = b.dim, a.dim
    rows = []
    for key in ("x", "z", "g"):
        ra, rb = a.images[key], b.images[key]
        for i in range(m):
            for j in range(n):
                row = [ZERO] * (m * n)
                for k in range(n):
                    row[i * n + k] = row[i * n + k] + ra[k, j]
                for k in range(m):
                    row[k * n + j] = row[k * n + j] - rb[i, k]
                rows.append(row)
    return [ExactMatrix.from_vec(v, m, n) for v in kernel(ExactMatrix.from_rows(rows)).basis]


def equivalence(a: MatrixRepresentation, b: MatrixRepresentation) -> ExactMatrix | None:
    """An invertible intertwiner ``T`` with ``T rho_a = rho_b T``, if one is found."""
    if a.dim != b.dim:
        return None
    basis = intertwiners(a, b)
    trials = list(basis)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            trials.append(basis[i] + basis[j])
            trials.append(basis[i] + basis[j].scale(2))
    for t in trials:
        if rank(t) == a.dim:
            return t
    return None


# phi decomposition -----------------------------------------------------------

@dataclass(frozen=True)
class DecompositionCertificate:
    theta: GaussRational
    T: ExactMatrix
    chis: tuple

    def blocks(self) -> MatrixRepresentation:
        return direct_sum(*(induced_module(c) for c in self.chis))

    def verify(self) -> bool:
        if rank(self.T) != 4:
            return False
        return phi_representation(self.theta).conjugate(self.T) == self.blocks()

    def to_json(self) -> dict:
        return {
            "theta": format_scalar(self.theta),
            "T": self.T.to_rows_json(),
            "blocks": [{"chi": c.to_json()} for c in self.chis],
        }


def _one_vector(space: Subspace, what: str):
    if space.dim != 1:
        raise RuntimeError(f"expected a 1-dimensional {what}, found dimension {space.dim}")
    return space.basis[0]


def decompose_phi(theta) -> DecompositionCertificate:
    """T with T^-1 phi T = W_(theta,+1) + W_(-theta,-1) exactly."""
    theta = check_theta(theta)
    if theta in (ONE, -ONE):
        raise ValueError("theta = +-1: phi is a sum of four characters, use klein_decompose")
    rep = phi_representation(theta)
    X = rep.images["x"]
    chis = (PCharacter(theta, ONE), PCharacter(-theta, -ONE))
    cols = []
    for chi in chis:
        v = _one_vector(v_chi_k(rep, chi, 1), f"eigenspace for chi = ({chi})")
        cols.extend([v, _apply(X, v)])
    cert = DecompositionCertificate(theta, hstack(cols), chis)
    if not cert.verify():
        raise RuntimeError("decomposition certificate failed verification")
    return cert


@dataclass(frozen=True)
class KleinLine:
    vector: tuple
    x_val: GaussRational
    y_val: GaussRational
    z_val: GaussRational


def klein_decompose(theta) -> list[KleinLine]:
    """Simultaneous eigenbasis of X, Y', Z at theta = +-1, where Y' = theta * Y.

    At theta = -1 the sign patterns are read off (X, -Y), which is again a
    representation of the Klein group.
    """
    theta = check_theta(theta)
    if theta not in (ONE, -ONE):
        raise ValueError("klein_decompose needs theta = 1 or theta = -1")
    X, Y, Z = xyz_matrices(theta)
    Yp = Y.scale(theta)
    mats = (X, Yp, Z)
    if not all(a.commutes_with(b) for a in mats for b in mats):
        raise RuntimeError("X, Y, Z fail to commute")
    eye = ExactMatrix.identity(4)
    lines = []
    for sx in (ONE, -ONE):
        for sy in (ONE, -ONE):
            stacked = vstack((X - eye.scale(sx)).to_rows() + (Yp - eye.scale(sy)).to_rows())
            space = kernel(stacked)
            for v in space.basis:
                zv = _apply(Z, v)
                zval = next(a / b for a, b in zip(zv, v) if b)
                if tuple(zval * b for b in v) != zv:
                    raise RuntimeError("joint eigenvector of X, Y is not an eigenvector of Z")
                lines.append(KleinLine(tuple(v), sx, sy, zval))
    if len(lines) != 4 or rank(hstack([l.vector for l in lines])) != 4:
        raise RuntimeError("no simultaneous eigenbasis")
    return lines


KLEIN_PATTERNS = ((1, 1), (-1, 1), (1, -1), (-1, -1))
