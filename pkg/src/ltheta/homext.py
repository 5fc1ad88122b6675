"""Ext^1 between characters of CP and between induced CG-modules.

The character C^chi has the length-two free resolution

    0 -> CP(z + s) --j--> CP(z + s) --p--> C^chi -> 0,   s = chi(z),

with ``j(1) = g - chi(g)`` and ``p`` the evaluation at chi.  Applying
``Hom(-, target)`` leaves a single differential between finite-dimensional
spaces, which is what :func:`ext_cp` and :func:`ext_cg` build.  Inducing up to
CG keeps the resolution free, and by adjunction the Hom spaces become
z-eigenspaces of the restricted target.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactlin import ONE, ZERO, ExactMatrix, Subspace, kernel, rank
from .groupalg import Z as Z_WORD
from .groupalg import GroupAlgElement
from .repthy import PCharacter, induced_module, v_chi_k

WINDOW = 8


@dataclass(frozen=True)
class ExtProblem:
    base: str  # "cp" or "cg"
    source_char: PCharacter
    target: PCharacter

    def __post_init__(self):
        if self.base not in ("cp", "cg"):
            raise ValueError("base must be 'cp' or 'cg'")

    @property
    def resolution_sign(self):
        """The ``s`` of CP(z + s): plus when chi(z) = 1."""
        return self.source_char.z_val

    def solve(self) -> ExtResult:
        fn = ext_cp if self.base == "cp" else ext_cg
        return fn(self.source_char, self.target)


@dataclass(frozen=True)
class ExtResult:
    hom_dim: int
    ext1_dim: int
    boundary_matrix: ExactMatrix

    def to_json(self) -> dict:
        return {"hom": self.hom_dim, "ext1": self.ext1_dim}


def _cohomology(d: ExactMatrix) -> ExtResult:
    r = rank(d) if d.rows and d.cols else 0
    return ExtResult(d.cols - r, d.rows - r, d)


def ext_cp(chi: PCharacter, psi: PCharacter) -> ExtResult:
    """Hom / Ext^1 over CP from C^chi to C^psi."""
    if psi.z_val != chi.z_val:
        # z acts by chi(z) on CP(z + s) and by psi(z) on the target
        return _cohomology(ExactMatrix(0, 0, []))
    return _cohomology(ExactMatrix.from_rows([[psi.g_val - chi.g_val]]))


def ext_cg(chi: PCharacter, psi: PCharacter) -> ExtResult:
    """Hom / Ext^1 over CG from W_chi to W_psi."""
    if psi.z_val != chi.z_val:
        res = _cohomology(ExactMatrix(0, 0, []))
    else:
        # W_psi restricted to CP is C^psi + C^(psi^-1)
        a = psi.g_val
        res = _cohomology(ExactMatrix.diag([a - chi.g_val, a.inverse() - chi.g_val]))
    if res.hom_dim != res.ext1_dim:
        raise RuntimeError("hom and ext1 of the induced complex disagree")
    return res


def adjunction_hom_dim(chi: PCharacter, psi: PCharacter) -> int:
    """dim Hom_CP(C^chi, W_psi restricted to CP), computed inside W_psi."""
    return v_chi_k(induced_module(psi), chi, 1).dim


@dataclass(frozen=True)
class ResolutionCheck:
    j_injective: bool
    p_surjective: bool
    composite_zero: bool
    exact_middle: bool
    z_compatible: bool

    @property
    def ok(self) -> bool:
        return all((self.j_injective, self.p_surjective, self.composite_zero,
                    self.exact_middle, self.z_compatible))


def resolution_window(chi: PCharacter, j_root=None, sign=None, n: int = WINDOW) -> ResolutionCheck:
    """Check the resolution of C^chi on Laurent degrees ``[-n, n]``.

    CP(z + s) is free of rank one over C[g, g^-1], so it is modelled by Laurent
    polynomials.  ``j`` maps degrees ``[-n, n-1]`` into ``[-n, n]``; ``p``
    evaluates at chi(g).  ``j_root`` and ``sign`` override the resolution data
    (used to show that corrupted maps are detected).
    """
    a = chi.g_val
    r = a if j_root is None else j_root
    s = chi.z_val if sign is None else sign
    size = 2 * n + 1
    # column k of j is (g - r) g^(k - n), k = 0 .. 2n-1
    j_cols = []
    for k in range(2 * n):
        col = [ZERO] * size
        col[k] = -r
        col[k + 1] = ONE
        j_cols.append(col)
    j = ExactMatrix.from_rows([[j_cols[c][i] for c in range(2 * n)] for i in range(size)])
    p = ExactMatrix.from_rows([[a ** (k - n) for k in range(size)]])
    image_j = Subspace.span(j_cols, size)
    # z acts on the generator z + s by s, and on C^chi by chi(z)
    gen = GroupAlgElement.word(Z_WORD) + GroupAlgElement.scalar(s)
    z_ok = GroupAlgElement.word(Z_WORD) * gen == gen * s and s == chi.z_val
    return ResolutionCheck(
        j_injective=rank(j) == 2 * n,
        p_surjective=rank(p) == 1,
        composite_zero=(p @ j).is_zero(),
        exact_middle=kernel(p) == image_j,
        z_compatible=z_ok and bool(gen),
    )


def verify_resolution(chi: PCharacter, j_root=None, sign=None) -> bool:
    return resolution_window(chi, j_root, sign).ok
