"""Command-line front end: verify suites, build eigenmode solutions,
apply operators, project and residual-check serialized forms.

All commands are deterministic given their flags, the seed, and their
input files.  Exit codes: 0 success, 1 verification failure, 2 usage or
input error, 3 empty solve result.
"""

from __future__ import annotations

import argparse
import sys

from . import calculus, equations, formfile, solver, verify
from .forms import clifford_mul, sup_norm
from .formfile import FormFileError
from .lattice import LatticeShape

EQUATION_ALIASES = {
    "dk": "dirac_kahler",
    "hestenes": "hestenes",
    "joyce": "joyce",
    "volume": "volume",
}

OPERATORS = {
    "dc": calculus.d_c,
    "deltac": calculus.delta_c,
    "dirac": calculus.dirac,
}


def _parse_shape(text: str) -> LatticeShape:
    try:
        extents = tuple(int(v) for v in text.split("x"))
        return LatticeShape(extents)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad shape {text!r}: {exc}")


def _parse_momentum(text: str) -> tuple[int, int, int, int]:
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"momentum needs 4 components, got {text!r}")
    return tuple(int(v) for v in parts)


def _parse_mass(text: str) -> complex:
    parts = text.split(",")
    if len(parts) == 1:
        return complex(float(parts[0]), 0.0)
    if len(parts) == 2:
        return complex(float(parts[0]), float(parts[1]))
    raise argparse.ArgumentTypeError(f"mass must be RE or RE,IM, got {text!r}")


def _read_form_or_exit(path):
    try:
        return formfile.read_form(path)
    except (FormFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        sys.exit(2)


def cmd_verify(args) -> int:
    names = list(verify.SUITES) if args.suite == "all" else [args.suite]
    rows = verify.run_suites(names, args.shape, args.seed, count=args.count)
    ok = True
    for prop_id, max_residual, _ in rows:
        passed = max_residual <= args.tol
        ok = ok and passed
        print(f"PROP {prop_id} {max_residual:.6e} {'PASS' if passed else 'FAIL'}")
    return 0 if ok else 1


def cmd_solve(args) -> int:
    kind = EQUATION_ALIASES[args.equation]
    try:
        modes = solver.eigenmodes(kind, args.shape, args.momentum)
    except (ValueError, solver.EigenSolveError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.mass_filter == "real":
        modes = [md for md in modes if abs(md.mass.imag) <= args.tol]
    if not modes:
        print("error: no eigenmodes pass the mass filter", file=sys.stderr)
        return 3
    for k, mode in enumerate(modes):
        print(f"mode {k} mass {mode.mass.real:+.12e}{mode.mass.imag:+.12e}j")
        formfile.write_form(f"{args.out}.mode{k}.json",
                            solver.plane_wave(mode, args.shape))
    return 0


def cmd_apply(args) -> int:
    field = _read_form_or_exit(args.infile)
    formfile.write_form(args.out, OPERATORS[args.op](field))
    return 0


def cmd_decompose(args) -> int:
    field = _read_form_or_exit(args.infile)
    part = clifford_mul(field, equations.projector(args.projector, field.shape))
    formfile.write_form(args.out, part)
    return 0


def cmd_residual(args) -> int:
    field = _read_form_or_exit(args.infile)
    kind = EQUATION_ALIASES[args.equation]
    value = sup_norm(equations.residual(kind, field, args.mass))
    print(f"residual {value:.6e}")
    return 0 if value <= args.tol else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dklattice",
        description="Discrete-form Clifford calculus on a periodic 4-D lattice")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run proposition verification suites")
    p.add_argument("--shape", type=_parse_shape, default=LatticeShape((2, 2, 2, 2)))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--count", type=int, default=100,
                   help="random forms per property check")
    p.add_argument("--suite", default="all",
                   choices=["all"] + list(verify.SUITES))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("solve", help="write plane-wave eigenmode solutions")
    p.add_argument("--equation", required=True, choices=sorted(EQUATION_ALIASES))
    p.add_argument("--shape", type=_parse_shape, required=True)
    p.add_argument("--momentum", type=_parse_momentum, required=True)
    p.add_argument("--mass-filter", default="all", choices=["all", "real"])
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("apply", help="apply a difference operator to a form file")
    p.add_argument("--op", required=True, choices=sorted(OPERATORS))
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_apply)

    p = sub.add_parser("decompose", help="right-multiply a form file by a projector")
    p.add_argument("--projector", required=True, choices=equations.PROJECTOR_KINDS)
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("residual", help="sup-norm equation residual of a form file")
    p.add_argument("--equation", required=True, choices=sorted(EQUATION_ALIASES))
    p.add_argument("--mass", type=_parse_mass, required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--in", dest="infile", required=True)
    p.set_defaults(func=cmd_residual)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
