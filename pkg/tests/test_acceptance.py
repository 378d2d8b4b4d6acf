"""Exit criteria. ``pytest tests/test_acceptance.py`` ends with one
PASS/FAIL line per criterion (see conftest)."""

import json
import subprocess
import sys
import re

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from conftest import PROBLEMS
from fls import FuzzyLinearSystem, io
from fls.cli import main
from fls.fuzzy_core import scale
from fls.linalg import dp_decompose, invert
from fls.oracle import (
    direct_possibility,
    hausdorff_sampled,
    random_gp_matrix,
    random_matrix,
    random_rhs,
    random_system,
    sample_prism,
)
from fls.solver import (
    alpha_cut,
    canonical_order,
    extract_fuzzy_vector,
    fuzzy_mat_vec,
    membership,
    membership_parametric,
    solve,
    solve_parametric,
    vertices,
)

criterion = pytest.mark.criterion

EX1_INVERSE = np.array([[-11, 9, -2], [-1, -3, 2], [8, -6, 2]]) / 6
EX2_FULL = np.array([[36, -26], [27, -14], [42, -23], [21, -17]]) / 11
# five-decimal vertices of the 0.4- and 0.7-cuts as printed with the example
EX2_PRINTED = {
    0.4: [(3.16364, -2.21818), (2.67273, -1.56364), (3.49091, -2.05455), (2.34546, -1.72727)],
    0.7: [(3.08182, -2.10909), (2.83636, -1.78181), (3.24545, -2.02727), (2.67273, -1.86363)],
}
N_SYSTEMS = 200
N_PROPERTY = 120


def _cli(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def _match_printed(computed, printed):
    """Largest coordinate error from each printed vertex to its nearest computed one."""
    worst = 0.0
    for p in np.asarray(printed):
        worst = max(worst, np.abs(computed - p).max(axis=1).min())
    return worst


# 1 ---------------------------------------------------------------------------


@criterion(1, "Example 1 golden solve (1e-12)")
def test_c1_example1_golden(example1):
    sol = solve(example1)
    np.testing.assert_allclose(sol.inverse, EX1_INVERSE, rtol=0, atol=1e-12)
    np.testing.assert_allclose(sol.x_cr, [-1, 5, 2], rtol=0, atol=1e-12)
    np.testing.assert_allclose(sol.lower, [-2, -1, -2], rtol=0, atol=1e-12)
    np.testing.assert_allclose(sol.upper, [1, 1, 3], rtol=0, atol=1e-12)


# 2 ---------------------------------------------------------------------------


@criterion(2, "Example 1 possibility checks and verbose coefficients (1e-9)")
def test_c2_possibilities(example1):
    sol = solve(example1)
    assert membership(sol, [0.5, 4.5, 0.9]).possibility == pytest.approx(0.4, abs=1e-9)
    assert not membership(sol, [-3.4, 5.2, 3.5]).is_solution


def _verbose_coefficients(capsys, point):
    code, out = _cli(capsys, "check", "--input", PROBLEMS / "example1.json", "--point", point, "--verbose")
    assert code == 0
    line = out.splitlines()[1]
    assert line.startswith("coefficients=")
    return [float(v) for v in line.split("=", 1)[1].split(",")]


@criterion(2, "Example 1 possibility checks and verbose coefficients (1e-9)")
def test_c2_verbose_coefficients_x1(capsys):
    assert _verbose_coefficients(capsys, "0.5,4.5,0.9") == pytest.approx([0.1, 0.6, 0.35], abs=1e-9)


@criterion(2, "Example 1 possibility checks and verbose coefficients (1e-9)")
def test_c2_verbose_coefficients_x2(capsys):
    # Expected values are the printed decomposition (0.2, 1.4, 0.65). Row 1 of
    # A X2 - b_cr is -3.4 - 5.2 + 7 + 2 = 0.4, so the first coefficient is 0.4
    # and this check cannot pass as stated.
    assert _verbose_coefficients(capsys, "-3.4,5.2,3.5") == pytest.approx([0.2, 1.4, 0.65], abs=1e-9)


# 3 ---------------------------------------------------------------------------


@criterion(3, "Example 2 golden vertices (1e-12 exact, 5e-6 printed)")
def test_c3_crisp_and_full_cut(example2):
    sol = solve(example2)
    np.testing.assert_allclose(sol.x_cr, [3, -2], rtol=0, atol=1e-12)
    got = canonical_order(vertices(alpha_cut(sol, 0)))
    np.testing.assert_allclose(got, canonical_order(EX2_FULL), rtol=0, atol=1e-12)


@criterion(3, "Example 2 golden vertices (1e-12 exact, 5e-6 printed)")
@pytest.mark.parametrize("alpha", [0.4, 0.7])
def test_c3_printed_level_vertices(example2, alpha):
    # Exact corners are 3 + (1 - alpha) * (P' - M'); several printed values
    # are truncated rather than rounded, e.g. 2.3454545... printed 2.34546.
    computed = vertices(alpha_cut(solve(example2), alpha))
    worst = _match_printed(computed, EX2_PRINTED[alpha])
    hd = hausdorff_sampled(computed, np.array(EX2_PRINTED[alpha]))
    print(f"alpha={alpha}: max coordinate error {worst:.3g}, Hausdorff {hd:.3g}")
    assert worst <= 5e-6
    assert hd <= 5e-6


# 4 ---------------------------------------------------------------------------


def _points_for(sys, sol, rng, count=50):
    inside = []
    for alpha in rng.uniform(0, 1, size=6):
        inside.extend(sample_prism(sys, alpha, grid=5).points)
    inside = np.array(inside)[rng.choice(len(inside), size=count // 2, replace=False)]

    widths = sol.upper - sol.lower
    outside = []
    for x in inside:
        w = sys.matrix @ x
        i = rng.integers(sys.n)
        push = rng.uniform(0.05, 2.0) * widths[i]
        w[i] = (sol.b_cr[i] + sol.upper[i] + push) if rng.random() < 0.5 else (sol.b_cr[i] + sol.lower[i] - push)
        outside.append(np.linalg.solve(sys.matrix, w))
    # plain jitter too, which lands on both sides of the boundary
    jitter = inside + rng.normal(scale=0.5, size=inside.shape) * widths.max()
    return np.vstack([inside, outside[: count // 4], jitter[: count - count // 2 - count // 4]])


@criterion(4, "Solver membership == direct possibility oracle (1e-9)")
def test_c4_oracle_equivalence(rng):
    checked = rejected = 0
    for k in range(N_SYSTEMS):
        n = 1 + k % 4
        sys = random_system(rng, n)
        sol = solve(sys)
        for x in _points_for(sys, sol, rng):
            got = membership(sol, x).possibility
            want = direct_possibility(sys, x)
            assert (got is None) == (want is None), (k, x, got, want)
            if got is not None:
                assert abs(got - want) <= 1e-9
            else:
                rejected += 1
            checked += 1
    print(f"{checked} points, {rejected} not-a-solution")
    assert checked >= N_SYSTEMS * 50
    assert rejected >= checked // 5


# 5 ---------------------------------------------------------------------------


@criterion(5, "Generalized-permutation classification")
def test_c5a_gp_matrices_extract(rng):
    for k in range(N_PROPERTY):
        n = 1 + k % 5
        sys = FuzzyLinearSystem(random_gp_matrix(rng, n), random_rhs(rng, n))
        x = extract_fuzzy_vector(sys)
        assert x is not None
        for got, want in zip(fuzzy_mat_vec(sys.matrix, x), sys.rhs):
            assert np.abs(np.subtract(got.astuple(), want.astuple())).max() <= 1e-9
        assert alpha_cut(solve(sys), 0).is_axis_aligned()


@criterion(5, "Generalized-permutation classification")
def test_c5b_dense_matrices_rejected(rng):
    for k in range(N_PROPERTY):
        n = 2 + k % 4
        A = random_matrix(rng, n)
        assert (np.count_nonzero(A, axis=1) >= 2).any()
        sys = FuzzyLinearSystem(A, random_rhs(rng, n))
        assert dp_decompose(A) is None
        assert extract_fuzzy_vector(sys) is None
        assert not alpha_cut(solve(sys), 0).is_axis_aligned()


# 6 ---------------------------------------------------------------------------


@criterion(6, "Geometry invariants (1e-9; volume relative)")
def test_c6_nesting_and_vertex_membership(rng):
    for k in range(N_PROPERTY):
        sys = random_system(rng, 1 + k % 4)
        sol = solve(sys)
        lo, hi = np.sort(rng.uniform(0, 1, size=2))
        for V in vertices(alpha_cut(sol, hi)):
            p = membership(sol, V).possibility
            assert abs(p - hi) <= 1e-9
            assert p >= lo - 1e-9
        for V in vertices(alpha_cut(sol, lo)):
            assert abs(membership(sol, V).possibility - lo) <= 1e-9


@criterion(6, "Geometry invariants (1e-9; volume relative)")
def test_c6_row_scaling(rng):
    for k in range(N_PROPERTY):
        n = 1 + k % 4
        sys = random_system(rng, n)
        i = rng.integers(n)
        factor = rng.uniform(0.2, 5) * rng.choice([-1, 1])
        A = np.array(sys.matrix)
        A[i] *= factor
        rhs = list(sys.rhs)
        rhs[i] = scale(factor, rhs[i])
        a, b = solve(sys), solve(FuzzyLinearSystem(A, rhs))
        assert np.abs(a.x_cr - b.x_cr).max() <= 1e-9
        for alpha in (0.0, rng.uniform()):
            va = canonical_order(vertices(alpha_cut(a, alpha)))
            vb = canonical_order(vertices(alpha_cut(b, alpha)))
            assert hausdorff_sampled(va, vb) <= 1e-9
        for x in sample_prism(sys, 0.0, grid=3).points + rng.normal(scale=0.3, size=(3**n, n)):
            pa, pb = membership(a, x).possibility, membership(b, x).possibility
            assert (pa is None) == (pb is None)
            if pa is not None:
                assert abs(pa - pb) <= 1e-9


@criterion(6, "Geometry invariants (1e-9; volume relative)")
def test_c6_volume_identity(rng):
    for k in range(N_PROPERTY):
        n = 2 + k % 2
        sys = random_system(rng, n)
        sol = solve(sys)
        hull = ConvexHull(vertices(alpha_cut(sol, 0)))
        formula = abs(np.linalg.det(invert(sys.matrix))) * np.prod(sol.upper - sol.lower)
        assert abs(hull.volume - formula) <= 1e-9 * formula


# 7 ---------------------------------------------------------------------------


@criterion(7, "Parametric re-encoding agrees with triangular path")
def test_c7_parametric_consistency(rng, example1, example2):
    systems = [example1, example2] + [random_system(rng, 1 + k % 4) for k in range(N_PROPERTY)]
    for sys in systems:
        sol = solve(sys)
        par = sys.to_parametric()
        for alpha in (0.0, 0.4, 0.7, 1.0, rng.uniform()):
            tri = vertices(alpha_cut(sol, alpha))
            para = vertices(solve_parametric(par, alpha))
            assert hausdorff_sampled(tri, para) <= 1e-9
        pts = sol.x_cr + rng.normal(size=(20, sys.n)) * np.abs(sol.inverse).sum(axis=1) * 2
        for x in pts:
            pt, pp = membership(sol, x).possibility, membership_parametric(par, x).possibility
            assert (pt is None) == (pp is None)
            if pt is not None:
                assert abs(pt - pp) <= 1e-9


# 8 ---------------------------------------------------------------------------


@criterion(8, "CLI end-to-end on shipped problem files")
def test_c8_cli_solve(tmp_path, capsys):
    out = tmp_path / "sol1.json"
    assert _cli(capsys, "solve", "--input", PROBLEMS / "example1.json", "--output", out)[0] == 0
    doc = json.loads(out.read_text())
    np.testing.assert_allclose(np.array(doc["columns"]).T, EX1_INVERSE, atol=1e-12)
    np.testing.assert_allclose(doc["x_cr"], [-1, 5, 2], atol=1e-12)
    assert doc["lower"] == [-2, -1, -2] and doc["upper"] == [1, 1, 3]

    again = tmp_path / "again.json"
    io.resave_solution(out, again)
    assert again.read_bytes() == out.read_bytes()

    prob = tmp_path / "p.json"
    io.save_problem(io.load_problem(PROBLEMS / "example1.json"), prob)
    prob2 = tmp_path / "p2.json"
    io.save_problem(io.load_problem(prob), prob2)
    assert prob.read_bytes() == prob2.read_bytes()


@criterion(8, "CLI end-to-end on shipped problem files")
def test_c8_cli_check_and_classify(capsys):
    ex1 = PROBLEMS / "example1.json"
    assert _cli(capsys, "check", "--input", ex1, "--point", "0.5,4.5,0.9") == (0, "solution possibility=0.4\n")
    assert _cli(capsys, "check", "--input", ex1, "--point", "-3.4,5.2,3.5") == (0, "not-a-solution\n")
    assert _cli(capsys, "classify", "--input", PROBLEMS / "example2.json") == (0, "not-DP\n")


@criterion(8, "CLI end-to-end on shipped problem files")
def test_c8_cli_alpha_cut(tmp_path, capsys):
    m = np.array([3.0, -2.0])
    for alpha in (0.0, 0.4, 0.7):
        out = tmp_path / f"cut{alpha}.json"
        assert _cli(capsys, "alpha-cut", "--input", PROBLEMS / "example2.json", "--alpha", alpha, "--output", out)[0] == 0
        doc = json.loads(out.read_text())
        expected = canonical_order(m + (1 - alpha) * (EX2_FULL - m))
        np.testing.assert_allclose(canonical_order(doc["vertices"]), expected, atol=1e-12)


def _svg_polygons(text, cls):
    found = {}
    for m in re.finditer(rf'<polygon class="{cls}" data-alpha="([^"]+)" data-vertices="([^"]+)"', text):
        found[float(m.group(1))] = np.array([[float(v) for v in p.split(",")] for p in m.group(2).split()])
    return found


@criterion(8, "CLI end-to-end on shipped problem files")
def test_c8_cli_plot(tmp_path, capsys):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    for out in (a, b):
        assert _cli(capsys, "plot", "--input", PROBLEMS / "example2.json", "--alpha-levels", "0.4,0.7", "--output", out)[0] == 0
    assert a.read_bytes() == b.read_bytes()
    text = a.read_text()
    assert text.count('stroke-dasharray="2,4"') == 2 and text.count('stroke-dasharray="8,4"') == 2
    polys = _svg_polygons(text, "solution")
    assert sorted(polys) == [0.0, 0.4, 0.7]
    # plotting precision: 1e-4 model units, well under a pixel at this scale
    assert _match_printed(polys[0.0], EX2_FULL) <= 1e-4
    for alpha, printed in EX2_PRINTED.items():
        assert _match_printed(polys[alpha], printed) <= 1e-4
    rhs = _svg_polygons(text, "rhs")
    np.testing.assert_allclose(canonical_order(rhs[0.4]), canonical_order([[-1.6, 5.8], [0.2, 5.8], [0.2, 7.6], [-1.6, 7.6]]))


@criterion(8, "CLI end-to-end on shipped problem files")
def test_c8_console_exit_codes(tmp_path):
    cmd = [sys.executable, "-m", "fls.cli"]
    ok = subprocess.run(cmd + ["check", "--input", str(PROBLEMS / "example1.json"), "--point", "-3.4,5.2,3.5"], capture_output=True, text=True)
    assert ok.returncode == 0 and ok.stdout == "not-a-solution\n"
    bad = tmp_path / "bad.json"
    bad.write_text("{ not json")
    err = subprocess.run(cmd + ["solve", "--input", str(bad)], capture_output=True, text=True)
    assert err.returncode != 0 and "bad.json:1:" in err.stderr
