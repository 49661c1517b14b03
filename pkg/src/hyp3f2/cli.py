"""Command-line front end.

Exit codes:
    0  success
    1  a residual reached the tolerance
    2  the two shift vectors coincide
    3  the parameter point is not generic or violates the convergence margin
    4  the series did not converge within the iteration cap
    5  a group structure check failed
    6  malformed command line or input value
    7  a relation coefficient has a pole at the parameter point
"""
from __future__ import annotations

import argparse
import json
import os
import re
import sys
from typing import Sequence

from .connection import ShiftVector, connection_det_formula, connection_matrix, three_term_coefficients
from .errors import (
    CoefficientPole,
    ConvergenceMargin,
    DegenerateShifts,
    GenericnessViolation,
    SlowConvergence,
)
from .numeric import DEFAULT_ITER_CAP, GENERIC_TOL, SIGMA_MIN, ParameterPoint, verify_three_term
from .symmetry import group_report, orbit_relations

EXIT_OK = 0
EXIT_RESIDUAL = 1
EXIT_DEGENERATE = 2
EXIT_PRECONDITION = 3
EXIT_SLOW = 4
EXIT_GROUP = 5
EXIT_USAGE = 6
EXIT_POLE = 7

_VALUE_FLAGS = ("--p", "--q", "--a")
_NEGATIVE_START = re.compile(r"^-[\d.]")


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _join_negative_values(argv: Sequence[str]) -> list[str]:
    # "--q -1,-1,-1,-2,-1" would otherwise be read as an unknown option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is not None and _NEGATIVE_START.match(nxt):
                out.append(f"{tok}={nxt}")
                continue
            out.append(tok)
            if nxt is not None:
                out.append(nxt)
            continue
        out.append(tok)
    return out


def _shift(text: str) -> ShiftVector:
    try:
        return ShiftVector.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive_int(text: str) -> int:
    try:
        val = int(float(text))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if val <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return val


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hyp3f2", description="Three-term relations of the unit-argument 3F2 series.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_format(sp, choices=("text", "json", "latex")):
        sp.add_argument("--format", choices=choices, default="text")

    rel = sub.add_parser("relation", help="coefficients u, v of h(a) = u h(a+p) + v h(a+q)")
    rel.add_argument("--p", type=_shift, required=True, help="shift vector, e.g. 1,1,1,1,1")
    rel.add_argument("--q", type=_shift, required=True)
    with_format(rel)

    ver = sub.add_parser("verify", help="numeric residuals of a relation on all six companions")
    ver.add_argument("--p", type=_shift, required=True)
    ver.add_argument("--q", type=_shift, required=True)
    ver.add_argument("--a", required=True, help="complex point, e.g. 0.3,0.4+0.1j,0.5,2.35,2.7")
    ver.add_argument("--tol", type=float, default=1e-8)
    ver.add_argument("--sigma-min", type=float, default=SIGMA_MIN)
    ver.add_argument("--iter-cap", type=_positive_int, default=None)
    with_format(ver, ("text", "json"))

    mat = sub.add_parser("matrix", help="connection matrix A(a;p) and its determinant")
    mat.add_argument("--p", type=_shift, required=True)
    with_format(mat)

    orb = sub.add_parser("orbit", help="images of a relation under the symmetry group")
    orb.add_argument("--p", type=_shift, required=True)
    orb.add_argument("--q", type=_shift, required=True)
    with_format(orb)

    grp = sub.add_parser("group", help="structure of the symmetry group")
    grp.add_argument("--check", action="store_true", help="run all structural checks")
    with_format(grp, ("text", "json"))
    return parser


def _resolve_cap(flag: int | None) -> int:
    if flag is not None:
        return flag
    raw = os.environ.get("HYP3F2_ITER_CAP")
    if raw is None:
        return DEFAULT_ITER_CAP
    return _positive_int(raw)


def cmd_relation(args, out) -> int:
    rel = three_term_coefficients(args.p, args.q)
    if args.format == "json":
        print(_dump(rel.to_json()), file=out)
    elif args.format == "latex":
        print(rel.to_latex(), file=out)
    else:
        print(f"h(a) = u(a) h(a + {rel.p}) + v(a) h(a + {rel.q})", file=out)
        print(f"u(a) = {rel.u}", file=out)
        print(f"v(a) = {rel.v}", file=out)
    return EXIT_OK


def cmd_verify(args, out) -> int:
    cap = _resolve_cap(args.iter_cap)
    point = ParameterPoint.parse(args.a, sigma_min=args.sigma_min, tol=GENERIC_TOL)
    rel = three_term_coefficients(args.p, args.q)
    residuals = verify_three_term(rel, point.a, sigma_min=args.sigma_min, cap=cap)
    ok = all(r.residual < args.tol for r in residuals)
    if args.format == "json":
        print(_dump([{"companion": r.companion, "residual": r.residual} for r in residuals]), file=out)
    else:
        for r in residuals:
            flag = "ok" if r.residual < args.tol else "FAIL"
            print(f"{r.companion:<12} {r.residual:.3e}  {flag}", file=out)
        print(f"max residual {max(r.residual for r in residuals):.3e} (tol {args.tol:g})", file=out)
    return EXIT_OK if ok else EXIT_RESIDUAL


def cmd_matrix(args, out) -> int:
    m = connection_matrix(args.p)
    det = connection_det_formula(args.p)
    if args.format == "json":
        print(_dump({"p": list(args.p), "matrix": m.to_json(), "det": det.to_json()}), file=out)
    elif args.format == "latex":
        print(f"A(a;{args.p}) = {m.to_latex()}", file=out)
        print(rf"\det A(a;{args.p}) = {det.to_latex()}", file=out)
    else:
        for i in range(2):
            for j in range(2):
                print(f"A[{i}][{j}] = {m[i, j]}", file=out)
        print(f"det = {det}", file=out)
    return EXIT_OK


def cmd_orbit(args, out) -> int:
    if args.p == args.q:
        raise DegenerateShifts(f"shift vectors coincide: {args.p}")
    orbit = orbit_relations(args.p, args.q)
    if args.format == "json":
        print(_dump([dict(rel.to_json(), element=e.name) for e, rel in orbit]), file=out)
    elif args.format == "latex":
        for e, rel in orbit:
            print(f"% {e.name}", file=out)
            print(rel.to_latex(), file=out)
    else:
        print(f"{len(orbit)} distinct relations", file=out)
        for e, rel in orbit:
            print(f"[{e.name}] p={rel.p} q={rel.q}", file=out)
            print(f"  u(a) = {rel.u}", file=out)
            print(f"  v(a) = {rel.v}", file=out)
    return EXIT_OK


def cmd_group(args, out) -> int:
    report = group_report()
    checks = {k: v for k, v in report.items() if k != "order"}
    ok = all(checks.values())
    if args.format == "json":
        print(_dump(report), file=out)
    else:
        print(f"order={report['order']} {'PASS' if report['order_is_72'] else 'FAIL'}", file=out)
        if args.check:
            for name, passed in checks.items():
                print(f"{name} {'PASS' if passed else 'FAIL'}", file=out)
    return EXIT_OK if ok else EXIT_GROUP


COMMANDS = {
    "relation": cmd_relation,
    "verify": cmd_verify,
    "matrix": cmd_matrix,
    "orbit": cmd_orbit,
    "group": cmd_group,
}


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except DegenerateShifts as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DEGENERATE
    except (GenericnessViolation, ConvergenceMargin) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except SlowConvergence as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SLOW
    except CoefficientPole as exc:
        print(f"error: coefficient pole: {exc}", file=sys.stderr)
        return EXIT_POLE
    except (ValueError, argparse.ArgumentTypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main_entry() -> None:
    sys.exit(main())
