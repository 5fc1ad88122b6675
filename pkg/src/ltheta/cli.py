"""Command-line front end: every command prints one JSON document.

Exit codes: 0 success, 1 a check or internal invariant failed, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from . import channel as ch
from . import moduli as mo
from .algstruct import close_algebra, structure_report
from .exactlin import ONE, ExactMatrix, format_scalar, parse_scalar
from .groupalg import atheta_regular_representation, b_value, check_theta, phi_rank, xyz_matrices
from .homext import ext_cg, ext_cp
from .repthy import PCharacter, decompose_phi, klein_decompose
from .suites import DEFAULT_THETAS, SUITE_NAMES, run_suite


class UsageError(Exception):
    pass


def _theta(text: str):
    try:
        return check_theta(parse_scalar(text))
    except ValueError as exc:
        raise UsageError(f"bad --theta {text!r}: {exc}") from None


def _need_theta(args):
    if getattr(args, "theta", None) is None:
        raise UsageError("--theta is required for this command")
    return _theta(args.theta)


def _rational(text: str, name: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad --{name} {text!r}: expected a rational number") from None


def _char(text: str, name: str) -> PCharacter:
    try:
        return PCharacter.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad --{name} {text!r}: {exc}") from None


# commands ----------------------------------------------------------------------

def cmd_structure(args):
    theta = _need_theta(args)
    m = structure_report(close_algebra(list(xyz_matrices(theta))))
    a = structure_report(atheta_regular_representation(theta))
    r = phi_rank(theta)
    degenerate = theta in (ONE, -ONE)
    ok = a.dim == 8 and r == (4 if degenerate else 8) and m.dim == r
    if not degenerate:
        ok = ok and a.radical_dim == 0 and len(a.mat2_models) == 2
    out = {
        "theta": format_scalar(theta),
        "b": format_scalar(b_value(theta)),
        "b_sign": "+",
        "M": m.to_json(),
        "A": a.to_json(),
        "phi_rank": r,
    }
    return out, 0 if ok else 1


def cmd_verify(args):
    thetas = (_theta(args.theta),) if getattr(args, "theta", None) is not None else DEFAULT_THETAS
    res = run_suite(args.suite, thetas)
    return res.to_json(), 0 if res.passed else 1


def cmd_ext(args):
    chi, psi = _char(args.chi, "chi"), _char(args.psi, "psi")
    res = ext_cp(chi, psi) if args.base == "cp" else ext_cg(chi, psi)
    out = res.to_json()
    out.update({"base": args.base, "chi": chi.to_json(), "psi": psi.to_json()})
    return out, 0


def cmd_moduli_catalog(args):
    return [t.to_json() for t in mo.enumerate_isolated_points()], 0


def cmd_moduli_bullets(args):
    reps = mo.bullet_reports()
    pts = mo.enumerate_isolated_points()
    out = {
        "cases": [dict(r.to_json(), tuples=[t.to_json() for t in r.tuples]) for r in reps],
        "total": {"found": len(pts), "stated": mo.STATED_TOTAL},
    }
    ok = len(pts) == mo.STATED_TOTAL and all(r.found_count == r.stated_count for r in reps)
    return out, 0 if ok else 1


def cmd_moduli_family(args):
    try:
        s = parse_scalar(args.s)
    except ValueError as exc:
        raise UsageError(f"bad --s {args.s!r}: {exc}") from None
    p = mo.family_point(args.sign, s)
    tg, tg2, tz = mo.restrict_to_p(p)
    comp = mo.moduli_component(p)
    curve = tg * tg - tg2 == 2
    out = {
        "sign": args.sign,
        "s": format_scalar(s),
        "point": {"x": p.x_img.to_rows_json(), "y": p.y_img.to_rows_json(), "z": p.z_img.to_rows_json()},
        "trace_tuple": mo.trace_tuple(p).to_json(),
        "restriction": {"tr_g": format_scalar(tg), "tr_g2": format_scalar(tg2), "tr_z": format_scalar(tz)},
        "component": comp.to_json(),
        "curve_check": curve,
    }
    return out, 0 if curve else 1


def _load_matrix(path: str) -> ExactMatrix:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        return ExactMatrix.from_json(data)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    except (json.JSONDecodeError, ValueError) as exc:
        raise UsageError(f"bad matrix in {path}: {exc}") from None


def _channel(args):
    try:
        return ch.dephasing_channel(_rational(args.alpha, "alpha"), _rational(args.beta, "beta"))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_channel_dephasing(args):
    chan = _channel(args)
    rho = _load_matrix(args.rho)
    try:
        out = ch.apply_channel(chan, rho)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return out.to_json(), 0


def cmd_channel_graph(args):
    chan = _channel(args)
    g = ch.noncommutative_graph(chan)
    basis = [ExactMatrix.from_vec(v, 4).to_rows_json() for v in g.basis]
    a, b = chan.ops[1][1], chan.ops[2][1]
    interior = a > 0 and b > 0 and a + b < 1
    out = {"dim": g.dim, "basis": basis, "operator_system": ch.is_operator_system(g, 4)}
    if interior:
        out["matches_klein"] = ch.graph_matches_klein(a, b)
    return out, 0


def cmd_decompose(args):
    theta = _need_theta(args)
    if theta in (ONE, -ONE):
        lines = klein_decompose(theta)
        out = {
            "theta": format_scalar(theta),
            "klein": [
                {"vector": [format_scalar(c) for c in l.vector],
                 "x": format_scalar(l.x_val), "y": format_scalar(l.y_val), "z": format_scalar(l.z_val)}
                for l in lines
            ],
        }
        return out, 0
    cert = decompose_phi(theta)
    out = cert.to_json()
    out["verified"] = cert.verify()
    return out, 0 if out["verified"] else 1


# parser ------------------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def _globals(p: argparse.ArgumentParser, suppress: bool):
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--theta", default=d, help='theta, e.g. "2", "5/3" or "1+1*i"')
    p.add_argument("--porcelain", action="store_true", default=argparse.SUPPRESS if suppress else False,
                   help="compact JSON, no banner")
    p.add_argument("--output", default=d, metavar="PATH", help="write JSON to PATH instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ltheta", description="Exact computations for the operator graphs L_theta.")
    _globals(parser, suppress=False)
    parser.add_argument("--version", action="store_true", help="print a version banner to stderr")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        _globals(p, suppress=True)
        p.set_defaults(func=fn)
        return p

    add("structure", cmd_structure, "structure reports for M_theta and A_theta")
    p = add("verify", cmd_verify, "run a verification suite")
    p.add_argument("suite", choices=SUITE_NAMES + ("all",))
    p = add("ext", cmd_ext, "Ext^1 between characters or induced modules")
    p.add_argument("--base", choices=("cp", "cg"), required=True)
    p.add_argument("--chi", required=True, help='e.g. "2,+1"')
    p.add_argument("--psi", required=True)

    pm = sub.add_parser("moduli", help="moduli of 2-dimensional representations")
    msub = pm.add_subparsers(dest="moduli_command", parser_class=_Parser)
    q = msub.add_parser("catalog", help="sorted isolated trace tuples")
    _globals(q, suppress=True)
    q.set_defaults(func=cmd_moduli_catalog)
    q = msub.add_parser("cases", help="isolated points per case with stated counts")
    _globals(q, suppress=True)
    q.set_defaults(func=cmd_moduli_bullets)
    q = msub.add_parser("family", help="a point of a one-parameter family")
    _globals(q, suppress=True)
    q.add_argument("--sign", choices=("+", "-"), required=True)
    q.add_argument("--s", required=True, help="the value of Tr(xy)")
    q.set_defaults(func=cmd_moduli_family)

    pc = sub.add_parser("channel", help="the Klein dephasing channel")
    csub = pc.add_subparsers(dest="channel_command", parser_class=_Parser)
    for name, fn in (("dephasing", cmd_channel_dephasing), ("graph", cmd_channel_graph)):
        q = csub.add_parser(name)
        _globals(q, suppress=True)
        q.add_argument("--alpha", required=True)
        q.add_argument("--beta", required=True)
        if name == "dephasing":
            q.add_argument("--rho", required=True, metavar="MATRIX_JSON")
        q.set_defaults(func=fn)

    add("decompose", cmd_decompose, "decompose phi into induced modules or Klein characters")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    porcelain = getattr(args, "porcelain", False)
    if args.version and not porcelain:
        print(f"ltheta {__version__}", file=sys.stderr)
    if not hasattr(args, "func"):
        if args.version:
            return 0
        parser.print_usage(sys.stderr)
        print("ltheta: error: a command is required", file=sys.stderr)
        return 2
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"ltheta: error: {exc}", file=sys.stderr)
        return 2
    text = json.dumps(out, sort_keys=True, separators=(",", ":") if porcelain else None,
                      indent=None if porcelain else 2)
    path = getattr(args, "output", None)
    if path:
        try:
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(text + "\n")
        except OSError as exc:
            print(f"ltheta: error: cannot write {path}: {exc}", file=sys.stderr)
            return 2
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
