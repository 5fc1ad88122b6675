"""Finite-dimensional matrix algebras: closure, center, radical, block structure.

A :class:`SpannedAlgebra` is a subspace of ``n x n`` matrices closed under
products.  Internally most computations run on its structure constants in the
canonical (RREF) basis, so they work identically for concrete operator algebras
and for the regular representation of an abstract algebra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from .exactlin import (
    ONE,
    ZERO,
    ExactMatrix,
    Subspace,
    kernel,
    rank,
    solve,
    hstack,
)
from .roots import gaussian_roots

Coords = tuple


@dataclass(frozen=True, eq=False)
class SpannedAlgebra:
    ambient_n: int
    basis: tuple  # of ExactMatrix
    contains_identity: bool
    generators: tuple = field(default=(), repr=False)
    rounds: int = field(default=0, repr=False)

    @classmethod
    def from_subspace(cls, n: int, span: Subspace, generators=(), rounds=0) -> SpannedAlgebra:
        basis = tuple(ExactMatrix.from_vec(b, n) for b in span.basis)
        has_one = span.contains(ExactMatrix.identity(n).vec())
        alg = cls(n, basis, has_one, tuple(generators), rounds)
        alg.__dict__["span"] = span
        return alg

    @classmethod
    def from_matrices(cls, mats: Sequence[ExactMatrix], generators=()) -> SpannedAlgebra:
        """Span of ``mats``; the caller guarantees multiplicative closure."""
        n = mats[0].rows
        return cls.from_subspace(n, Subspace.span([m.vec() for m in mats], n * n), generators)

    @cached_property
    def span(self) -> Subspace:
        return Subspace.span([b.vec() for b in self.basis], self.ambient_n ** 2)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, m: ExactMatrix) -> Coords:
        c = self.span.coordinates(m.vec())
        if c is None:
            raise ValueError("matrix does not lie in the algebra")
        return c

    def element(self, coords: Sequence) -> ExactMatrix:
        n = self.ambient_n
        acc = [ZERO] * (n * n)
        for c, b in zip(coords, self.span.basis):
            if c:
                acc = [x + c * y if y else x for x, y in zip(acc, b)]
        return ExactMatrix(n, n, acc)

    def ambient_vector(self, coords: Sequence) -> tuple:
        return self.element(coords).vec()

    @cached_property
    def structure_constants(self) -> tuple:
        """``const[i][j]`` = coordinates of ``basis[i] @ basis[j]``."""
        return tuple(tuple(self.coords(a @ b) for b in self.basis) for a in self.basis)

    @cached_property
    def unit(self) -> Coords | None:
        if not self.contains_identity:
            return None
        return self.coords(ExactMatrix.identity(self.ambient_n))

    def mul(self, u: Sequence, v: Sequence) -> Coords:
        return _mul(self.structure_constants, u, v)

    def to_ambient(self, coord_space: Subspace) -> Subspace:
        return Subspace.span([self.ambient_vector(c) for c in coord_space.basis], self.ambient_n ** 2)

    def to_coords(self, s: Subspace) -> Subspace:
        if s.ambient_dim != self.ambient_n ** 2:
            raise ValueError("subspace lives in a different ambient space")
        vecs = []
        for b in s.basis:
            c = self.span.coordinates(b)
            if c is None:
                raise ValueError("subspace is not contained in the algebra")
            vecs.append(c)
        return Subspace.span(vecs, self.dim)

    def is_commutative(self) -> bool:
        const = self.structure_constants
        return all(const[i][j] == const[j][i] for i in range(self.dim) for j in range(i))


def _mul(const, u, v) -> Coords:
    d = len(const)
    out = [ZERO] * d
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = const[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            f = ui * vj
            for k, ck in enumerate(row[j]):
                if ck:
                    out[k] = out[k] + f * ck
    return tuple(out)


def _basis_vector(d: int, i: int) -> Coords:
    return tuple(ONE if k == i else ZERO for k in range(d))


# construction --------------------------------------------------------------

def close_algebra(generators: Sequence[ExactMatrix], include_identity: bool = True) -> SpannedAlgebra:
    """Smallest matrix algebra containing ``generators`` (and ``I`` if asked)."""
    gens = list(generators)
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].rows
    if any(g.shape != (n, n) for g in gens):
        raise ValueError("generators must be square matrices of one size")
    seed = [g.vec() for g in gens]
    if include_identity:
        seed.append(ExactMatrix.identity(n).vec())
    span = Subspace.span(seed, n * n)
    rounds = 0
    while True:
        current = [ExactMatrix.from_vec(b, n) for b in span.basis]
        grown = span.join([(b @ g).vec() for b in current for g in gens])
        rounds += 1
        if grown.dim == span.dim:
            break
        span = grown
    return SpannedAlgebra.from_subspace(n, span, gens, rounds)


def regular_algebra(const: Sequence, generator_coords: Sequence = ()) -> SpannedAlgebra:
    """Left regular representation of an abstract algebra given by structure constants."""
    d = len(const)

    def left(u):
        cols = [_mul(const, u, _basis_vector(d, j)) for j in range(d)]
        return hstack(cols)

    mats = [left(_basis_vector(d, i)) for i in range(d)]
    gens = tuple(left(g) for g in generator_coords)
    return SpannedAlgebra.from_matrices(mats, gens)


def algebras_equal(a: SpannedAlgebra, b: SpannedAlgebra) -> bool:
    if a.ambient_n != b.ambient_n:
        raise ValueError("algebras live in different matrix sizes")
    return a.span == b.span


# center / radical ----------------------------------------------------------

def _center_coords(a: SpannedAlgebra) -> Subspace:
    const = a.structure_constants
    d = a.dim
    rows = []
    for j in range(d):
        for k in range(d):
            rows.append([const[i][j][k] - const[j][i][k] for i in range(d)])
    if not rows:
        return Subspace.zero(0)
    return kernel(ExactMatrix.from_rows(rows))


def center(a: SpannedAlgebra) -> Subspace:
    """Center of ``a`` as a subspace of the ambient (vectorised) matrix space."""
    return a.to_ambient(_center_coords(a))


def trace_form(const: Sequence) -> ExactMatrix:
    """Gram matrix ``tr(L_i L_j)`` of the regular representation."""
    d = len(const)
    gram = [[ZERO] * d for _ in range(d)]
    for i in range(d):
        for j in range(i, d):
            s = ZERO
            for k in range(d):
                for l in range(d):
                    x = const[i][l][k]
                    if x:
                        y = const[j][k][l]
                        if y:
                            s = s + x * y
            gram[i][j] = gram[j][i] = s
    return ExactMatrix.from_rows(gram) if d else ExactMatrix.zeros(0)


def _radical_coords(a: SpannedAlgebra) -> Subspace:
    if a.dim == 0:
        return Subspace.zero(0)
    return kernel(trace_form(a.structure_constants))


def dickson_radical(a: SpannedAlgebra) -> Subspace:
    """Jacobson radical via the trace form of the regular representation (char 0)."""
    if not a.contains_identity:
        raise ValueError("radical computation needs a unital algebra")
    return a.to_ambient(_radical_coords(a))


def _power_chain(a: SpannedAlgebra, j: Subspace, limit: int):
    """Successive powers J, J^2, ... in coordinates until zero or stable."""
    powers = [j]
    p = j
    for _ in range(limit):
        if p.dim == 0:
            break
        nxt = Subspace.span([a.mul(u, v) for u in p.basis for v in j.basis], a.dim)
        if nxt == p:
            break
        powers.append(nxt)
        p = nxt
    return powers


def is_two_sided_ideal(a: SpannedAlgebra, j: Subspace) -> bool:
    jc = a.to_coords(j)
    d = a.dim
    for v in jc.basis:
        for i in range(d):
            e = _basis_vector(d, i)
            if not jc.contains(a.mul(e, v)) or not jc.contains(a.mul(v, e)):
                return False
    return True


def nilpotency_index(a: SpannedAlgebra, j: Subspace) -> int | None:
    """Smallest ``k`` with ``J^k = 0`` (``0`` for the zero subspace), ``None`` if never."""
    jc = a.to_coords(j)
    if jc.dim == 0:
        return 0
    powers = _power_chain(a, jc, a.dim + 1)
    # powers[m] is J^(m+1)
    if powers[-1].dim == 0:
        return len(powers)
    return None


def is_nilpotent_ideal(a: SpannedAlgebra, j: Subspace) -> bool:
    if not is_two_sided_ideal(a, j):
        return False
    return nilpotency_index(a, j) is not None


# splitting the semisimple part --------------------------------------------

def minimal_polynomial(a: SpannedAlgebra, u: Sequence, unit: Sequence | None = None) -> list:
    """Monic minimal polynomial of ``u`` (lowest degree first) relative to ``unit``."""
    unit = a.unit if unit is None else unit
    powers = [tuple(unit)]
    while True:
        nxt = tuple(u) if len(powers) == 1 else a.mul(powers[-1], u)
        sol = solve(hstack(powers), nxt)
        if sol is not None:
            return [-c for c in sol] + [ONE]
        powers.append(nxt)
        if len(powers) > a.dim + 1:
            raise RuntimeError("minimal polynomial search did not terminate")


def _lincomb(terms, d):
    out = [ZERO] * d
    for c, v in terms:
        if c:
            out = [x + c * y if y else x for x, y in zip(out, v)]
    return tuple(out)


def central_idempotents(a: SpannedAlgebra) -> list[Coords] | None:
    """Primitive central idempotents of a semisimple unital algebra, or ``None``
    when some central minimal polynomial has no splitting into distinct linear
    factors over Q(i)."""
    d = a.dim
    zc = _center_coords(a)
    idems = [a.unit]
    for c in zc.basis:
        refined = []
        for e in idems:
            ce = a.mul(c, e)
            mp = minimal_polynomial(a, ce, e)
            if len(mp) == 2:
                refined.append(e)
                continue
            roots, left = gaussian_roots(mp)
            if left or any(m > 1 for _, m in roots):
                return None
            rs = [r for r, _ in roots]
            for r in rs:
                f = e
                for s in rs:
                    if s != r:
                        shifted = _lincomb([(ONE, ce), (-s, e)], d)
                        f = a.mul(f, shifted)
                        f = tuple(x / (r - s) for x in f)
                refined.append(f)
        idems = refined
    return idems


@dataclass(frozen=True)
class Mat2Model:
    """Explicit isomorphism of a 4-dimensional block onto 2x2 matrices."""

    block_basis: tuple  # coordinate vectors in the ambient algebra
    images: tuple       # ExactMatrix 2x2 per block basis vector


def _block_space(a: SpannedAlgebra, e: Sequence) -> Subspace:
    d = a.dim
    return Subspace.span([a.mul(e, _basis_vector(d, i)) for i in range(d)], d)


def _mat2_candidates(a: SpannedAlgebra, e: Sequence, block: Subspace):
    d = a.dim
    for g in a.generators:
        yield a.mul(e, a.coords(g))
    yield from block.basis
    bs = block.basis
    for i in range(len(bs)):
        for j in range(len(bs)):
            yield a.mul(bs[i], bs[j])
    for i in range(len(bs)):
        for j in range(i + 1, len(bs)):
            yield _lincomb([(ONE, bs[i]), (ONE, bs[j])], d)
            yield _lincomb([(ONE, bs[i]), (-ONE, bs[j])], d)


def mat2_model(a: SpannedAlgebra, e: Sequence) -> Mat2Model | None:
    """Try to realise the block ``e a`` (``e`` central idempotent) as Mat_2 over Q(i).

    An element with a split quadratic minimal polynomial yields a rank-one
    idempotent or a nonzero nilpotent ``w``; the block then acts faithfully on
    the 2-dimensional left ideal ``block * w``.
    """
    d = a.dim
    e = tuple(e)
    block = _block_space(a, e)
    if block.dim != 4:
        return None
    scalars = Subspace.span([e], d)
    for w0 in _mat2_candidates(a, e, block):
        if scalars.contains(w0):
            continue
        mp = minimal_polynomial(a, w0, e)
        if len(mp) != 3:
            continue
        roots, left = gaussian_roots(mp)
        if left:
            continue
        r = roots[-1][0]
        w = _lincomb([(ONE, w0), (-r, e)], d)
        ideal = Subspace.span([a.mul(b, w) for b in block.basis], d)
        if ideal.dim != 2:
            continue
        images = []
        for b in block.basis:
            cols = [ideal.coordinates(a.mul(b, l)) for l in ideal.basis]
            images.append(hstack(cols))
        model = Mat2Model(block.basis, tuple(images))
        if _check_mat2(a, e, block, model):
            return model
    return None


def _check_mat2(a, e, block, model) -> bool:
    if rank(ExactMatrix.from_rows([m.vec() for m in model.images])) != 4:
        return False

    def image(v):
        c = block.coordinates(v)
        acc = ExactMatrix.zeros(2)
        for ck, m in zip(c, model.images):
            acc = acc + m.scale(ck)
        return acc

    if image(e) != ExactMatrix.identity(2):
        return False
    for i, u in enumerate(block.basis):
        for j, v in enumerate(block.basis):
            if image(a.mul(u, v)) != model.images[i] @ model.images[j]:
                return False
    return True


def quotient_algebra(a: SpannedAlgebra, ideal_coords: Subspace) -> SpannedAlgebra:
    """Regular representation of ``a / J`` for a two-sided ideal ``J`` (in coordinates)."""
    d = a.dim
    piv = set(ideal_coords.pivots)
    keep = [i for i in range(d) if i not in piv]

    def reduce(v):
        v = list(v)
        for row, p in zip(ideal_coords.basis, ideal_coords.pivots):
            c = v[p]
            if c:
                v = [x - c * y if y else x for x, y in zip(v, row)]
        return tuple(v[i] for i in keep)

    const = tuple(
        tuple(reduce(a.mul(_basis_vector(d, i), _basis_vector(d, j))) for j in keep)
        for i in keep
    )
    gens = [reduce(a.coords(g)) for g in a.generators]
    return regular_algebra(const, gens)


# reports -------------------------------------------------------------------

@dataclass
class StructureReport:
    dim: int
    radical_dim: int
    center_dim: int
    semisimple_quotient_dim: int
    block_dims: list
    quotient_commutative: bool
    notes: str
    mat2_models: list = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "radical_dim": self.radical_dim,
            "center_dim": self.center_dim,
            "semisimple_quotient_dim": self.semisimple_quotient_dim,
            "blocks": list(self.block_dims),
            "quotient_commutative": self.quotient_commutative,
            "notes": self.notes,
        }


def structure_report(a: SpannedAlgebra) -> StructureReport:
    if not a.contains_identity:
        raise ValueError("structure report needs a unital algebra")
    rad = _radical_coords(a)
    zdim = _center_coords(a).dim
    semi = a if rad.dim == 0 else quotient_algebra(a, rad)
    notes = []
    if rad.dim:
        idx = nilpotency_index(a, a.to_ambient(rad))
        notes.append(f"radical nilpotency index {idx}")
    gram = trace_form(semi.structure_constants)
    if rank(gram) != semi.dim:
        notes.append("trace form of the semisimple quotient is degenerate")
    idems = central_idempotents(semi)
    blocks: list[int] = []
    models = []
    if idems is None:
        notes.append("center does not split over ground field")
    else:
        described = []
        for e in idems:
            block = _block_space(semi, e)
            desc = f"dim {block.dim}"
            sub = Subspace.span(block.basis, semi.dim)
            bg = ExactMatrix.from_rows([[gram_entry(gram, u, v) for v in sub.basis] for u in sub.basis])
            desc += ", trace form nondegenerate" if rank(bg) == sub.dim else ", trace form degenerate"
            if block.dim == 4:
                model = mat2_model(semi, e)
                if model is not None:
                    desc += ", Mat2 model certified"
                    models.append(model)
                else:
                    desc += ", no Mat2 model found"
            blocks.append(block.dim)
            described.append((block.dim, desc))
        described.sort()
        blocks.sort()
        notes.extend(desc for _, desc in described)
    return StructureReport(
        dim=a.dim,
        radical_dim=rad.dim,
        center_dim=zdim,
        semisimple_quotient_dim=a.dim - rad.dim,
        block_dims=blocks,
        quotient_commutative=semi.is_commutative(),
        notes="; ".join(notes),
        mat2_models=models,
    )


def gram_entry(gram: ExactMatrix, u: Sequence, v: Sequence):
    s = ZERO
    for i, ui in enumerate(u):
        if not ui:
            continue
        for j, vj in enumerate(v):
            if vj:
                s = s + ui * vj * gram[i, j]
    return s
