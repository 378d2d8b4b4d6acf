"""Solve the two worked examples and write the Example 2 figure.

    python scripts/reproduce_examples.py [--out figure1.svg]
"""

import argparse
from pathlib import Path

import numpy as np

from fls import io
from fls.plot import render_svg
from fls.solver import alpha_cut, canonical_order, membership, solve, vertices

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def example1():
    sys = io.load_problem(PROBLEMS / "example1.json")
    sol = solve(sys)
    print("Example 1")
    print("  A^-1 * 6 =", np.round(6 * sol.inverse, 12).tolist())
    print("  x_cr     =", sol.x_cr.round(12).tolist())
    print("  lower    =", sol.lower.tolist(), " upper =", sol.upper.tolist())
    for x in ([0.5, 4.5, 0.9], [-3.4, 5.2, 3.5]):
        r = membership(sol, x)
        print(f"  {x}: {r}  coefficients={[round(c, 12) for c in r.coefficients]}")


def example2(out: Path | None):
    sys = io.load_problem(PROBLEMS / "example2.json")
    sol = solve(sys)
    print("Example 2")
    print("  x_cr =", sol.x_cr.round(12).tolist())
    for alpha in (0.0, 0.4, 0.7):
        V = canonical_order(vertices(alpha_cut(sol, alpha)))
        print(f"  alpha={alpha}: " + "  ".join(f"({v[0]:.5f}, {v[1]:.5f})" for v in V))
    if out is not None:
        out.write_text(render_svg(sys, [0.4, 0.7]))
        print(f"  wrote {out}")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--out", type=Path, default=None, help="SVG path for the Example 2 figure")
    args = parser.parse_args()
    example1()
    example2(args.out)
