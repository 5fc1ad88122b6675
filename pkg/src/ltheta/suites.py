"""Deterministic verification suites shared by the CLI and the test-suite.

Each check carries the number of the acceptance criterion it belongs to, a
pass flag and JSON-ready witness data.  Randomised checks draw from
``random.Random`` seeded per suite, so reruns are byte-identical.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import channel as ch
from . import moduli as mo
from .algstruct import (
    algebras_equal,
    close_algebra,
    dickson_radical,
    is_nilpotent_ideal,
    nilpotency_index,
    structure_report,
)
from .exactlin import ONE, ZERO, ExactMatrix, GaussRational, format_scalar, gr
from .groupalg import (
    E,
    X,
    Y,
    Z,
    GroupAlgElement,
    GroupWord,
    atheta,
    atheta_center_basis,
    atheta_regular_representation,
    b_value,
    cx_involution,
    lift,
    negate_g,
    phi,
    phi_rank,
    project_to_atheta,
    xyz_matrices,
)
from .homext import adjunction_hom_dim, ext_cg, ext_cp, verify_resolution
from .repthy import (
    KLEIN_PATTERNS,
    PCharacter,
    char_set,
    commutant_dim,
    decompose_phi,
    direct_sum,
    induced_jordan_module,
    induced_module,
    invariant_lines,
    is_irreducible,
    klein_decompose,
    phi_representation,
    v_chi_k,
)

DEFAULT_THETAS = tuple(gr(t) for t in ("2", "3", "1/2", "5/3", "i", "1+1*i", "1", "-1"))
SYMMETRY_THETAS = tuple(gr(t) for t in ("2", "3", "1+1*i"))
DECOMPOSE_THETAS = tuple(gr(t) for t in ("2", "i", "1+1*i"))
EXT_G_VALUES = tuple(gr(t) for t in ("1", "-1", "2", "1/2", "3", "i"))
CHANNEL_PARAMS = ((Fraction(1, 4), Fraction(1, 4)), (Fraction(1, 8), Fraction(1, 4)), (Fraction(1, 3), Fraction(1, 5)))
SEED = 20240601
SUITE_NAMES = ("relations", "dims", "decompose", "ext", "moduli", "channel")


@dataclass
class Check:
    name: str
    criterion: int
    passed: bool
    witness: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "criterion": self.criterion, "passed": bool(self.passed), "witness": self.witness}


@dataclass
class SuiteResult:
    name: str
    theta_samples: tuple
    checks: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "theta_samples": [format_scalar(t) for t in self.theta_samples],
            "checks": [c.to_json() for c in self.checks],
            "passed": self.passed,
        }


def _t(theta) -> str:
    return format_scalar(theta)


def _is_degenerate(theta) -> bool:
    return theta in (ONE, -ONE)


def m_theta(theta):
    return close_algebra(list(xyz_matrices(theta)))


# randomised inputs --------------------------------------------------------

def random_scalar(rng: random.Random, bound: int = 5) -> GaussRational:
    re_ = Fraction(rng.randint(-bound, bound), rng.randint(1, 3))
    im = Fraction(rng.randint(-bound, bound), rng.randint(1, 3)) if rng.random() < 0.4 else 0
    return GaussRational(re_, im)


def random_word(rng: random.Random, gbound: int = 5, with_x: bool = True) -> GroupWord:
    return GroupWord(rng.randint(-gbound, gbound), rng.randint(0, 1), rng.randint(0, 1) if with_x else 0)


def random_element(rng: random.Random, terms: int = 4, gbound: int = 5, with_x: bool = True) -> GroupAlgElement:
    return GroupAlgElement([(random_word(rng, gbound, with_x), random_scalar(rng)) for _ in range(rng.randint(1, terms))])


def random_character(rng: random.Random) -> PCharacter:
    while True:
        a = random_scalar(rng, 4)
        if a:
            return PCharacter(a, rng.choice((ONE, -ONE)))


# relations -----------------------------------------------------------------

def suite_relations(thetas=DEFAULT_THETAS) -> SuiteResult:
    rng = random.Random(SEED)
    checks = []
    for th in thetas:
        Xm, Ym, Zm = xyz_matrices(th)
        lhs = (Xm @ Ym + Ym @ Xm) @ Zm
        b = b_value(th)
        checks.append(Check(f"(XY+YX)Z = bI [theta={_t(th)}]", 3, lhs == ExactMatrix.identity(4).scale(b),
                            {"b": _t(b)}))
        xyz_ok = all(m @ m == ExactMatrix.identity(4) for m in (Xm, Ym, Zm)) and Zm.commutes_with(Xm) and Zm.commutes_with(Ym)
        checks.append(Check(f"x^2 = y^2 = z^2 = 1, z central [theta={_t(th)}]", 3, xyz_ok))
        proj = project_to_atheta((GroupAlgElement.word(X * Y) + GroupAlgElement.word(Y * X)) * GroupAlgElement.word(Z), th)
        unit = project_to_atheta(GroupAlgElement.scalar(b), th)
        checks.append(Check(f"(xy+yx)z = b in A_theta [theta={_t(th)}]", 3, proj == unit))

    # group words
    ok = True
    for _ in range(200):
        a, b_, c = (random_word(rng, 10) for _ in range(3))
        ok &= a * (b_ * c) == (a * b_) * c
        ok &= a * a.inverse() == E
    checks.append(Check("word multiplication associative with inverses", 11, ok, {"samples": 200}))

    for th in thetas:
        hom_ok = all(phi(e1 * e2, th) == phi(e1, th) @ phi(e2, th)
                     for e1, e2 in ((random_element(rng), random_element(rng)) for _ in range(25)))
        checks.append(Check(f"phi multiplicative [theta={_t(th)}]", 5, hom_ok, {"samples": 25}))
        proj_ok = all(project_to_atheta(e1 * e2, th) == project_to_atheta(e1, th) * project_to_atheta(e2, th)
                      for e1, e2 in ((random_element(rng), random_element(rng)) for _ in range(25)))
        checks.append(Check(f"projection to A_theta multiplicative [theta={_t(th)}]", 4, proj_ok, {"samples": 25}))
        Xm = phi(GroupAlgElement.word(X), th)
        cx_ok = all(phi(cx_involution(e), th) == Xm @ phi(e, th) @ Xm
                    for e in (random_element(rng, with_x=False) for _ in range(20)))
        checks.append(Check(f"c_x realised by conjugation with X [theta={_t(th)}]", 11, cx_ok, {"samples": 20}))

    for th in thetas:
        inv = atheta(th.inverse())
        checks.append(Check(f"A_theta = A_1/theta structure constants [theta={_t(th)}]", 4,
                            atheta(th).const == inv.const))
        checks.append(_negation_check(th, rng))
    return SuiteResult("relations", tuple(thetas), checks)


def _negation_check(th, rng) -> Check:
    """g -> -g (z, x fixed) carries A_theta onto A_-theta."""
    a, na = atheta(th), atheta(-th)
    signs = [(-ONE if w.g_exp % 2 else ONE) for w in a.words]
    # the map is diagonal on the basis: S const_theta(u, v) = const_-theta(S u, S v)
    const_ok = True
    for i in range(8):
        for j in range(8):
            lhs = tuple(signs[k] * c for k, c in enumerate(a.const[i][j]))
            rhs = tuple(signs[i] * signs[j] * c for c in na.const[i][j])
            const_ok &= lhs == rhs
    words_ok = True
    for _ in range(20):
        e = random_element(rng)
        img = project_to_atheta(e, th)
        words_ok &= project_to_atheta(negate_g(e), -th).coords == tuple(s * c for s, c in zip(signs, img.coords))
    return Check(f"A_theta = A_-theta via g -> -g [theta={_t(th)}]", 4, const_ok and words_ok)


# dims ------------------------------------------------------------------------

def suite_dims(thetas=DEFAULT_THETAS) -> SuiteResult:
    rng = random.Random(SEED + 1)
    checks = []
    for th in thetas:
        m = m_theta(th)
        want = 4 if _is_degenerate(th) else 8
        checks.append(Check(f"dim M_theta [theta={_t(th)}]", 1, m.dim == want, {"dim": m.dim, "expected": want}))
        again = close_algebra(list(m.basis))
        checks.append(Check(f"closure idempotent [theta={_t(th)}]", 11, algebras_equal(again, m)))
        mi = close_algebra([ExactMatrix.identity(4)] + list(ch.l_theta_space(th).basis))
        checks.append(Check(f"closure of L_theta basis is M_theta [theta={_t(th)}]", 10, algebras_equal(mi, m)))

    for th in SYMMETRY_THETAS:
        m = m_theta(th)
        checks.append(Check(f"M_theta = M_1/theta [theta={_t(th)}]", 2, algebras_equal(m, m_theta(th.inverse()))))
        checks.append(Check(f"M_theta = M_-theta [theta={_t(th)}]", 2, algebras_equal(m, m_theta(-th))))

    for th in thetas:
        reg = atheta_regular_representation(th)
        rep = structure_report(reg)
        w = rep.to_json()
        if _is_degenerate(th):
            rad = dickson_radical(reg)
            idx = nilpotency_index(reg, rad)
            ok = (rep.dim == 8 and rep.radical_dim == 4 and idx == 2 and rep.semisimple_quotient_dim == 4
                  and rep.quotient_commutative)
            w["nilpotency_index"] = idx
        else:
            ok = (rep.dim == 8 and rep.radical_dim == 0 and rep.block_dims == [4, 4]
                  and len(rep.mat2_models) == 2)
        checks.append(Check(f"A_theta structure [theta={_t(th)}]", 4, ok, w))
        rad = dickson_radical(reg)
        checks.append(Check(f"radical is a nilpotent ideal [theta={_t(th)}]", 11, is_nilpotent_ideal(reg, rad),
                            {"radical_dim": rad.dim}))
        mrad = dickson_radical(m_theta(th))
        checks.append(Check(f"M_theta semisimple [theta={_t(th)}]", 11, mrad.dim == 0))
        center_ok = True
        try:
            basis = atheta_center_basis(th)
            center_ok = len(basis) == 2 and structure_report(reg).center_dim == 2
            if b_value(th):
                u = basis[1]
                center_ok &= u * u == basis[0] * (b_value(th) * b_value(th))
        except RuntimeError:
            center_ok = False
        checks.append(Check(f"center of A_theta [theta={_t(th)}]", 4, center_ok))

    for th in thetas:
        r = phi_rank(th)
        want = 4 if _is_degenerate(th) else 8
        checks.append(Check(f"rank of A_theta -> M_theta [theta={_t(th)}]", 5, r == want, {"rank": r}))
        fact_ok = True
        for _ in range(200):
            e = random_element(rng)
            fact_ok &= phi(e, th) == phi(lift(project_to_atheta(e, th)), th)
        checks.append(Check(f"phi factors through A_theta [theta={_t(th)}]", 5, fact_ok, {"samples": 200}))
    return SuiteResult("dims", tuple(thetas), checks)


# decompose -------------------------------------------------------------------

def suite_decompose(thetas=DEFAULT_THETAS) -> SuiteResult:
    rng = random.Random(SEED + 2)
    checks = []
    for th in DECOMPOSE_THETAS:
        cert = decompose_phi(th)
        want = (PCharacter(th, ONE), PCharacter(-th, -ONE))
        conj = phi_representation(th).conjugate(cert.T)
        g = conj.images["g"]
        diag_ok = all(g[i, j] == ZERO for i in range(4) for j in range(4) if i != j)
        spectrum = sorted((g[i, i] for i in range(4)), key=GaussRational.sort_key)
        expected = sorted((th.inverse(), th, -th.inverse(), -th), key=GaussRational.sort_key)
        ok = cert.verify() and cert.chis == want and diag_ok and spectrum == expected
        checks.append(Check(f"decompose phi [theta={_t(th)}]", 6, ok, cert.to_json()))

    for th in (ONE, -ONE):
        Xm, Ym, Zm = xyz_matrices(th)
        mats = (Xm, Ym, Zm)
        commute = all(a.commutes_with(b) for a in mats for b in mats)
        z_rel = Zm == (Xm @ Ym).scale(th)
        lines = klein_decompose(th)
        patterns = sorted((int(l.x_val.re), int(l.y_val.re)) for l in lines)
        z_prod = all(l.z_val == l.x_val * l.y_val for l in lines)
        ok = commute and z_rel and patterns == sorted(KLEIN_PATTERNS) and z_prod
        checks.append(Check(f"Klein degeneration [theta={_t(th)}]", 7, ok,
                            {"Z_equals": "XY" if th == ONE else "-XY", "patterns": [list(p) for p in patterns]}))
        checks.append(Check(f"L_1 conjugates to span{{I,x,y,xy}} [theta={_t(th)}]", 7,
                            ch.klein_basis_change([l.vector for l in lines])))

    for th in thetas:
        d = commutant_dim(phi_representation(th).generators())
        want = 4 if _is_degenerate(th) else 2
        checks.append(Check(f"commutant dimension [theta={_t(th)}]", 11, d == want, {"dim": d}))

    for th in thetas:
        rep = phi_representation(th)
        got = char_set(rep)
        if _is_degenerate(th):
            want = sorted({PCharacter(th * sx * sy, sx * sy) for sx in (ONE, -ONE) for sy in (ONE, -ONE)},
                          key=PCharacter.sort_key)
        else:
            want = sorted({PCharacter(th, ONE), PCharacter(th.inverse(), ONE),
                           PCharacter(-th, -ONE), PCharacter(-th.inverse(), -ONE)}, key=PCharacter.sort_key)
        checks.append(Check(f"Char(phi) [theta={_t(th)}]", 6, got == want, {"chars": [c.to_json() for c in got]}))

    sym_ok, irr_ok = True, True
    samples = 0
    for _ in range(12):
        chis = [random_character(rng) for _ in range(rng.randint(1, 2))]
        rep = direct_sum(*(induced_module(c) for c in chis))
        if rng.random() < 0.3:
            rep = induced_jordan_module(random_character(rng).g_val, rng.choice((ONE, -ONE)))
        rep = rep.conjugate(mo.random_invertible(rng, rep.dim, 3))
        probes = chis + [random_character(rng)] + char_set(rep)
        for chi in probes:
            for k in (1, 2, 3):
                samples += 1
                lo = v_chi_k(rep, chi, k)
                sym_ok &= lo.dim == v_chi_k(rep, chi.inverse(), k).dim
                sym_ok &= lo.is_subspace_of(v_chi_k(rep, chi, k + 1))
    checks.append(Check("V_chi(k) symmetric under chi -> chi^-1 and monotone in k", 11, sym_ok, {"samples": samples}))

    for _ in range(12):
        chi = random_character(rng)
        w = induced_module(chi)
        generic = chi.g_val not in (ONE, -ONE)
        irr_ok &= is_irreducible(w) == generic
        irr_ok &= (not invariant_lines(w)) == generic
        irr_ok &= char_set(w) == sorted({chi, chi.inverse()}, key=PCharacter.sort_key)
    checks.append(Check("induced modules irreducible iff chi(g) != +-1", 11, irr_ok))
    return SuiteResult("decompose", tuple(thetas), checks)


# ext ---------------------------------------------------------------------------

def ext_grid() -> list[PCharacter]:
    return [PCharacter(a, s) for a in EXT_G_VALUES for s in (ONE, -ONE)]


def expected_ext_cp(chi: PCharacter, psi: PCharacter) -> int:
    return 1 if chi == psi else 0


def expected_ext_cg(chi: PCharacter, psi: PCharacter) -> int:
    if chi.z_val != psi.z_val:
        return 0
    if psi.g_val in (ONE, -ONE):
        return 2 if chi.g_val == psi.g_val else 0
    return 1 if chi.g_val in (psi.g_val, psi.g_val.inverse()) else 0


def suite_ext(thetas=DEFAULT_THETAS) -> SuiteResult:
    rng = random.Random(SEED + 3)
    grid = ext_grid()
    checks = []
    cp_bad, cg_bad, eq_bad, adj_bad = [], [], [], []
    for chi in grid:
        for psi in grid:
            rcp, rcg = ext_cp(chi, psi), ext_cg(chi, psi)
            if rcp.ext1_dim != expected_ext_cp(chi, psi):
                cp_bad.append([str(chi), str(psi)])
            if rcg.ext1_dim != expected_ext_cg(chi, psi):
                cg_bad.append([str(chi), str(psi)])
            if rcg.hom_dim != rcg.ext1_dim:
                eq_bad.append([str(chi), str(psi)])
            if rcg.hom_dim != adjunction_hom_dim(chi, psi):
                adj_bad.append([str(chi), str(psi)])
    n = len(grid) ** 2
    checks.append(Check("Ext^1 over CP table", 8, not cp_bad, {"pairs": n, "mismatches": cp_bad}))
    checks.append(Check("Ext^1 over CG table", 8, not cg_bad, {"pairs": n, "mismatches": cg_bad}))
    checks.append(Check("CG hom = ext1", 8, not eq_bad, {"pairs": n, "mismatches": eq_bad}))
    checks.append(Check("CG hom agrees with adjunction", 8, not adj_bad, {"pairs": n, "mismatches": adj_bad}))

    res_ok = all(verify_resolution(c) for c in grid)
    chars = [random_character(rng) for _ in range(20)]
    res_ok &= all(verify_resolution(c) for c in chars)
    corrupt_caught = all(not verify_resolution(c, j_root=c.g_val + 1) for c in grid + chars)
    checks.append(Check("resolution exact on the Laurent window", 11, res_ok, {"characters": len(grid) + len(chars)}))
    checks.append(Check("corrupted resolution rejected", 11, corrupt_caught))
    return SuiteResult("ext", tuple(thetas), checks)


# moduli ------------------------------------------------------------------------

def suite_moduli(thetas=DEFAULT_THETAS) -> SuiteResult:
    rng = random.Random(SEED + 4)
    checks = []
    reports = mo.bullet_reports()
    pts = mo.enumerate_isolated_points()
    found_counts = [r.found_count for r in reports]
    checks.append(Check("isolated points: exactly 27", 9, len(pts) == mo.STATED_TOTAL,
                        {"found": len(pts), "stated": mo.STATED_TOTAL}))
    checks.append(Check("isolated points per case (3,2,2,4,4,8,4)", 9,
                        tuple(found_counts) == mo.STATED_BULLET_COUNTS,
                        {"found": found_counts, "stated": list(mo.STATED_BULLET_COUNTS)}))
    checks.append(Check("isolated points pairwise distinct", 9, len(set(pts)) == len(pts)))
    oracle = mo.semisimple_oracle()
    checks.append(Check("case analysis agrees with sums of one-dimensional characters", 9, pts == oracle,
                        {"oracle_count": len(oracle)}))
    checks.append(Check("contains (0,0,0,2,-2,-2)", 9, mo.TraceTuple.of(0, 0, 0, 2, -2, -2) in pts))
    scalar = [p for p in pts if all(v in (gr(2), gr(-2)) for v in p[:3])]
    checks.append(Check("eight scalar points", 9, len(scalar) == 8, {"found": len(scalar)}))

    curve_ok = True
    for sign in "+-":
        for k in range(20):
            s = Fraction(k - 9, 1 + k % 3) if k % 4 else GaussRational(k, 1)
            p = mo.family_point(sign, s)
            tg, tg2, tz = mo.restrict_to_p(p)
            curve_ok &= tg * tg - tg2 == gr(2)
            curve_ok &= p.g_img.trace() == gr(s) and trace_ok(p)
            curve_ok &= mo.moduli_component(p).label == ("U+" if sign == "+" else "U-")
    checks.append(Check("family curve Tr^2 g - Tr g^2 = 2", 9, curve_ok, {"samples_per_sign": 20}))

    det_ok = True
    inv_ok = True
    for _ in range(50):
        p = mo.random_point(rng)
        tg, tg2, _ = mo.restrict_to_p(p)
        det_ok &= p.g_img.det() * 2 == tg * tg - tg2
        t = mo.random_invertible(rng)
        inv_ok &= mo.trace_tuple(p.conjugate(t)) == mo.trace_tuple(p)
    checks.append(Check("det g = (Tr^2 g - Tr g^2)/2", 9, det_ok, {"samples": 50}))
    checks.append(Check("trace tuple invariant under conjugation", 11, inv_ok, {"samples": 50}))

    diag = mo.diagonal_sign_points()
    sep_ok = True
    for k1, t1 in diag:
        for k2, t2 in diag:
            swapped = tuple((b, a) for a, b in k2)
            conj = k1 == k2 or k1 == swapped
            sep_ok &= conj == (t1 == t2)
    checks.append(Check("trace tuples separate diagonal sign patterns", 11, sep_ok, {"assignments": len(diag)}))

    lemma_ok = True
    for _ in range(20):
        p = mo.random_point(rng)
        if not p.x_img.commutes_with(p.y_img):
            continue
        t = mo.common_eigenbasis(p.x_img, p.z_img)
        ti = t.inverse()
        for m in (p.x_img, p.z_img):
            d = ti @ m @ t
            lemma_ok &= d[0, 1] == ZERO and d[1, 0] == ZERO
    checks.append(Check("commuting involutions diagonalise simultaneously", 11, lemma_ok))
    return SuiteResult("moduli", tuple(thetas), checks)


def trace_ok(p) -> bool:
    t = mo.trace_tuple(p)
    return t.tr_x == ZERO and t.tr_y == ZERO and t.tr_xz == ZERO and t.tr_yz == ZERO


# channel ---------------------------------------------------------------------

def suite_channel(thetas=DEFAULT_THETAS) -> SuiteResult:
    rng = random.Random(SEED + 5)
    checks = []
    for a, b in CHANNEL_PARAMS:
        tag = f"alpha={a}, beta={b}"
        chan = ch.dephasing_channel(a, b)
        checks.append(Check(f"trace preservation [{tag}]", 10,
                            chan.trace_preservation_sum() == ExactMatrix.identity(4)))
        table = ch.coefficient_table(a, b)
        bad = [list(k) for k, f in ch.OFF_DIAGONAL_TABLE.items() if table[k] != gr(f(a, b))]
        diag_fixed = all(table[(j, j)] == ONE for j in range(1, 5))
        checks.append(Check(f"coefficient table [{tag}]", 10, not bad and diag_fixed,
                            {"mismatches": bad,
                             "coefficients": {f"{i}{j}": format_scalar(table[(i, j)]) for i, j in ch.OFF_DIAGONAL_TABLE}}))
        graph = ch.noncommutative_graph(chan)
        checks.append(Check(f"graph = span{{I,x,y,xy}} [{tag}]", 10,
                            graph.dim == 4 and ch.graph_matches_klein(a, b) and ch.is_operator_system(graph, 4),
                            {"dim": graph.dim}))
        lin_ok = True
        for _ in range(10):
            r1, r2 = (ExactMatrix(4, 4, [random_scalar(rng, 3) for _ in range(16)]) for _ in range(2))
            c = random_scalar(rng)
            lhs = ch.apply_channel(chan, r1 + r2.scale(c))
            lin_ok &= lhs == ch.apply_channel(chan, r1) + ch.apply_channel(chan, r2).scale(c)
            out = ch.apply_channel(chan, r1)
            lin_ok &= out.trace() == r1.trace()
            h = r1 + r1.adjoint()
            lin_ok &= ch.apply_channel(chan, h).adjoint() == ch.apply_channel(chan, h)
        checks.append(Check(f"linear, trace and Hermiticity preserving [{tag}]", 10, lin_ok))

    for th in thetas:
        sp = ch.l_theta_space(th)
        ok = sp.span.dim == 4 and sp.span.contains(ExactMatrix.identity(4).vec())
        coeffs = [random_scalar(rng) for _ in range(4)]
        m = ch.l_theta_matrix(th, *coeffs)
        ok &= ch.l_theta_membership(m, th) == tuple(coeffs)
        checks.append(Check(f"L_theta dimension and membership [theta={_t(th)}]", 10, ok))
        if th.norm() == 1:
            checks.append(Check(f"L_theta is an operator system [theta={_t(th)}]", 10, ch.adjoint_closed(th)))
    return SuiteResult("channel", tuple(thetas), checks)


SUITES: dict[str, Callable[..., SuiteResult]] = {
    "relations": suite_relations,
    "dims": suite_dims,
    "decompose": suite_decompose,
    "ext": suite_ext,
    "moduli": suite_moduli,
    "channel": suite_channel,
}


def run_suite(name: str, thetas=DEFAULT_THETAS) -> SuiteResult:
    if name == "all":
        checks = []
        for n in SUITE_NAMES:
            r = SUITES[n](thetas)
            for c in r.checks:
                checks.append(Check(f"{n}: {c.name}", c.criterion, c.passed, c.witness))
        return SuiteResult("all", tuple(thetas), checks)
    try:
        fn = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}") from None
    return fn(thetas)


def criterion_results(results) -> dict[int, bool]:
    out: dict[int, bool] = {}
    for r in results:
        for c in r.checks:
            out[c.criterion] = out.get(c.criterion, True) and bool(c.passed)
    return dict(sorted(out.items()))
