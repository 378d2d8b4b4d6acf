"""Command-line entry point: ``fls solve|check|alpha-cut|classify|plot``."""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

import numpy as np

from . import io
from .fuzzy_core import TOL, DomainError
from .linalg import SingularMatrixError, dp_decompose
from .plot import UnsupportedDimensionError, render_svg
from .solver import (
    ResourceLimitError,
    alpha_cut,
    extract_fuzzy_vector,
    solve,
    system_cut,
    system_membership,
)


def tolerance() -> float:
    raw = os.environ.get("FLS_TOLERANCE")
    if not raw:
        return TOL
    try:
        tol = float(raw)
    except ValueError:
        raise DomainError(f"FLS_TOLERANCE must be a number, got {raw!r}") from None
    if not tol >= 0:
        raise DomainError(f"FLS_TOLERANCE must be non-negative, got {raw!r}")
    return tol


def parse_csv(text: str, what: str) -> list[float]:
    try:
        return [float(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise DomainError(f"{what}: expected comma-separated numbers, got {text!r}") from None


def _write(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text)


def _fmt(v: float) -> str:
    return f"{v:.12g}"


def cmd_solve(input: str, output: str | None, alpha_levels: list[float] = ()) -> None:
    problem = io.load_problem(input)
    sol = solve(problem)
    cuts = [alpha_cut(sol, a) for a in alpha_levels]
    _write(io.dumps(io.solution_to_doc(sol, cuts)), output)


def cmd_check(input: str, point: str, verbose: bool = False) -> str:
    problem = io.load_problem(input)
    x = parse_csv(point, "--point")
    result = system_membership(problem, np.array(x), tol=tolerance())
    lines = [str(result)]
    if verbose:
        label = "levels" if problem.is_parametric else "coefficients"
        lines.append(f"{label}=" + ",".join(_fmt(c) for c in result.coefficients))
    return "\n".join(lines)


def cmd_alpha_cut(input: str, alpha: float, output: str | None) -> None:
    problem = io.load_problem(input)
    _write(io.dumps(io.cut_file_doc(system_cut(problem, alpha))), output)


def cmd_classify(input: str) -> str:
    problem = io.load_problem(input)
    dp = dp_decompose(problem.matrix)
    if dp is None:
        return "not-DP"
    lines = [
        "D = diag(" + ", ".join(_fmt(d) for d in dp.diag) + ")",
        "P = [" + "; ".join(" ".join(str(int(v)) for v in row) for row in dp.permutation_matrix()) + "]",
    ]
    if not problem.is_parametric:
        for i, u in enumerate(extract_fuzzy_vector(problem)):
            lines.append(f"x{i + 1} = ({_fmt(u.a)}, {_fmt(u.c)}, {_fmt(u.b)})")
    return "\n".join(lines)


def cmd_plot(input: str, alpha_levels: list[float], output: str | None) -> None:
    problem = io.load_problem(input)
    _write(render_svg(problem, alpha_levels), output)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fls", description="Solve fuzzy linear systems A x = B.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="write the parallelepiped solution")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--alpha-levels", default="", help="also store vertices of these cuts")

    p = sub.add_parser("check", help="possibility that a point solves the system")
    p.add_argument("--input", required=True)
    p.add_argument("--point", required=True)
    p.add_argument("--verbose", "-v", action="store_true")

    p = sub.add_parser("alpha-cut", help="vertices of one alpha-cut")
    p.add_argument("--input", required=True)
    p.add_argument("--alpha", required=True, type=float)
    p.add_argument("--output")

    p = sub.add_parser("classify", help="test for a fuzzy-number-vector solution")
    p.add_argument("--input", required=True)

    p = sub.add_parser("plot", help="SVG of a 2x2 system")
    p.add_argument("--input", required=True)
    p.add_argument("--alpha-levels", default="")
    p.add_argument("--output")
    return parser


_VALUE_FLAGS = ("--point", "--alpha-levels", "--alpha")


def _attach_values(argv: list[str]) -> list[str]:
    # "--point -3.4,5" would otherwise parse "-3.4,5" as an option
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            value = next(it, None)
            out.append(tok if value is None else f"{tok}={value}")
        else:
            out.append(tok)
    return out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_attach_values(argv))
    try:
        if args.command == "solve":
            cmd_solve(args.input, args.output, parse_csv(args.alpha_levels, "--alpha-levels"))
        elif args.command == "check":
            print(cmd_check(args.input, args.point, args.verbose))
        elif args.command == "alpha-cut":
            cmd_alpha_cut(args.input, args.alpha, args.output)
        elif args.command == "classify":
            print(cmd_classify(args.input))
        elif args.command == "plot":
            cmd_plot(args.input, parse_csv(args.alpha_levels, "--alpha-levels"), args.output)
    except SingularMatrixError as exc:
        print(f"fls: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ResourceLimitError, UnsupportedDimensionError) as exc:
        print(f"fls: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
