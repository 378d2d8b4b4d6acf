"""Problem and solution files.

Both are JSON documents carrying ``"format_version": 1``. Writers emit a
canonical layout (fixed key order, reals at 17 significant digits) so that
load/save round trips are byte-identical. See ``docs/file_format.md``.
"""

from __future__ import annotations

import json
import math
from pathlib import Path
from typing import Any

import numpy as np

from .fuzzy_core import DomainError, ParametricFuzzyNumber, TriangularFuzzyNumber
from .solver import CutParallelepiped, FuzzyLinearSystem, ParallelepipedSolution, vertices

FORMAT_VERSION = 1


class ProblemFileError(ValueError):
    pass


# -- canonical writer ------------------------------------------------------


def format_real(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    if x == 0.0:
        return "0"  # folds -0.0
    return format(x, ".17g")


def _scalar(v) -> str:
    if isinstance(v, bool) or v is None:
        return json.dumps(v)
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return format_real(v)
    if isinstance(v, str):
        return json.dumps(v)
    raise TypeError(f"cannot serialize {type(v).__name__}")


def _emit(v, indent: int) -> str:
    pad = "  " * (indent + 1)
    end = "  " * indent
    if isinstance(v, np.ndarray):
        v = v.tolist()
    if isinstance(v, dict):
        if not v:
            return "{}"
        items = [f"{pad}{json.dumps(k)}: {_emit(val, indent + 1)}" for k, val in v.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(v, (list, tuple)):
        if all(not isinstance(e, (list, tuple, dict, np.ndarray)) for e in v):
            return "[" + ", ".join(_scalar(e) for e in v) + "]"
        return "[\n" + ",\n".join(pad + _emit(e, indent + 1) for e in v) + "\n" + end + "]"
    return _scalar(v)


def dumps(doc: dict) -> str:
    return _emit(doc, 0) + "\n"


# -- reading helpers -------------------------------------------------------


def _parse(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProblemFileError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def _read(path) -> tuple[Any, str]:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ProblemFileError(f"{path}: {exc.strerror}") from None
    return _parse(text, str(path)), str(path)


class _Fields:
    def __init__(self, source: str):
        self.source = source

    def fail(self, where: str, msg: str):
        raise ProblemFileError(f"{self.source}: {where}: {msg}")

    def obj(self, v, where):
        if not isinstance(v, dict):
            self.fail(where, "expected an object")
        return v

    def get(self, d, key, where, optional=False):
        if key not in d:
            if optional:
                return None
            self.fail(where, f"missing field '{key}'")
        return d[key]

    def real(self, v, where) -> float:
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            self.fail(where, f"expected a number, got {json.dumps(v)}")
        if not math.isfinite(v):
            self.fail(where, "expected a finite number")
        return float(v)

    def reals(self, v, where) -> list[float]:
        if not isinstance(v, list):
            self.fail(where, "expected a list of numbers")
        return [self.real(e, f"{where}[{i}]") for i, e in enumerate(v)]

    def matrix(self, v, where) -> np.ndarray:
        if not isinstance(v, list) or not v:
            self.fail(where, "expected a non-empty list of rows")
        rows = [self.reals(r, f"{where}[{i}]") for i, r in enumerate(v)]
        n = len(rows)
        for i, r in enumerate(rows):
            if len(r) != n:
                self.fail(f"{where}[{i}]", f"dimension mismatch: matrix must be {n}x{n}, row has {len(r)} entries")
        return np.array(rows)

    def version(self, doc):
        v = self.get(doc, "format_version", "format_version")
        if v != FORMAT_VERSION:
            self.fail("format_version", f"unsupported version {json.dumps(v)} (expected {FORMAT_VERSION})")


# -- problems --------------------------------------------------------------


def _fuzzy_record(f: _Fields, rec, where):
    rec = f.obj(rec, where)
    kind = f.get(rec, "kind", where)
    if kind == "triangular":
        l, m, r = (f.real(f.get(rec, k, where), f"{where}.{k}") for k in ("l", "m", "r"))
        if l > m:
            f.fail(f"{where}.l", f"l={l} exceeds m={m}")
        if m > r:
            f.fail(f"{where}.r", f"r={r} is below m={m}")
        return TriangularFuzzyNumber(l, m, r)
    if kind == "parametric":
        alphas = f.reals(f.get(rec, "alphas", where), f"{where}.alphas")
        left = f.reals(f.get(rec, "left", where), f"{where}.left")
        right = f.reals(f.get(rec, "right", where), f"{where}.right")
        try:
            return ParametricFuzzyNumber(tuple(alphas), tuple(left), tuple(right))
        except DomainError as exc:
            f.fail(where, str(exc))
    f.fail(f"{where}.kind", f"unknown kind {json.dumps(kind)} (expected 'triangular' or 'parametric')")


def problem_from_doc(doc, source: str = "<problem>") -> FuzzyLinearSystem:
    f = _Fields(source)
    doc = f.obj(doc, "document")
    f.version(doc)
    A = f.matrix(f.get(doc, "matrix", "document"), "matrix")
    raw_rhs = f.get(doc, "rhs", "document")
    if not isinstance(raw_rhs, list):
        f.fail("rhs", "expected a list of fuzzy-number records")
    if len(raw_rhs) != A.shape[0]:
        f.fail("rhs", f"dimension mismatch: {A.shape[0]}x{A.shape[0]} matrix with {len(raw_rhs)} rhs entries")
    rhs = [_fuzzy_record(f, rec, f"rhs[{i}]") for i, rec in enumerate(raw_rhs)]
    if len({type(r) for r in rhs}) > 1:
        f.fail("rhs", "mixes triangular and parametric records")
    override = f.get(doc, "b_cr_override", "document", optional=True)
    if override is not None:
        override = f.reals(override, "b_cr_override")
    try:
        return FuzzyLinearSystem(A, rhs, override)
    except ValueError as exc:
        f.fail("document", str(exc))


def problem_to_doc(sys: FuzzyLinearSystem) -> dict:
    rhs = []
    for u in sys.rhs:
        if isinstance(u, TriangularFuzzyNumber):
            rhs.append({"kind": "triangular", "l": u.a, "m": u.c, "r": u.b})
        else:
            rhs.append({"kind": "parametric", "alphas": list(u.alphas), "left": list(u.left), "right": list(u.right)})
    doc = {"format_version": FORMAT_VERSION, "matrix": sys.matrix, "rhs": rhs}
    if sys.b_cr_override is not None:
        doc["b_cr_override"] = list(sys.b_cr_override)
    return doc


def load_problem(path) -> FuzzyLinearSystem:
    doc, source = _read(path)
    return problem_from_doc(doc, source)


def loads_problem(text: str, source: str = "<string>") -> FuzzyLinearSystem:
    return problem_from_doc(_parse(text, source), source)


def save_problem(sys: FuzzyLinearSystem, path) -> None:
    Path(path).write_text(dumps(problem_to_doc(sys)))


# -- solutions -------------------------------------------------------------


def cut_to_doc(cut: CutParallelepiped) -> dict:
    return {"alpha": cut.alpha, "vertices": vertices(cut)}


def solution_to_doc(sol: ParallelepipedSolution, cuts=()) -> dict:
    doc = {
        "format_version": FORMAT_VERSION,
        "kind": "solution",
        "matrix": sol.matrix,
        "b_cr": sol.b_cr,
        "x_cr": sol.x_cr,
        "columns": sol.inverse.T,
        "lower": sol.lower,
        "upper": sol.upper,
    }
    if cuts:
        doc["alpha_cuts"] = [cut_to_doc(c) for c in cuts]
    return doc


def solution_from_doc(doc, source: str = "<solution>") -> tuple[ParallelepipedSolution, list[dict]]:
    """Rebuild a solution and its stored cuts (as ``{"alpha", "vertices"}`` dicts)."""
    f = _Fields(source)
    doc = f.obj(doc, "document")
    f.version(doc)
    if f.get(doc, "kind", "document") != "solution":
        f.fail("kind", "expected 'solution'")
    A = f.matrix(f.get(doc, "matrix", "document"), "matrix")
    n = A.shape[0]
    vecs = {}
    for key in ("b_cr", "x_cr", "lower", "upper"):
        vecs[key] = f.reals(f.get(doc, key, "document"), key)
        if len(vecs[key]) != n:
            f.fail(key, f"dimension mismatch: expected {n} entries")
    columns = f.matrix(f.get(doc, "columns", "document"), "columns")
    if columns.shape[0] != n:
        f.fail("columns", f"dimension mismatch: expected {n} columns")
    cuts = []
    for i, c in enumerate(f.get(doc, "alpha_cuts", "document", optional=True) or []):
        c = f.obj(c, f"alpha_cuts[{i}]")
        alpha = f.real(f.get(c, "alpha", f"alpha_cuts[{i}]"), f"alpha_cuts[{i}].alpha")
        verts = [f.reals(v, f"alpha_cuts[{i}].vertices[{j}]") for j, v in enumerate(f.get(c, "vertices", f"alpha_cuts[{i}]"))]
        cuts.append({"alpha": alpha, "vertices": np.array(verts)})
    sol = ParallelepipedSolution(
        matrix=A,
        inverse=columns.T.copy(),
        b_cr=np.array(vecs["b_cr"]),
        x_cr=np.array(vecs["x_cr"]),
        lower=np.array(vecs["lower"]),
        upper=np.array(vecs["upper"]),
    )
    return sol, cuts


def _solution_doc_from_parts(sol, cuts) -> dict:
    doc = solution_to_doc(sol)
    if cuts:
        doc["alpha_cuts"] = [{"alpha": c["alpha"], "vertices": c["vertices"]} for c in cuts]
    return doc


def save_solution(sol: ParallelepipedSolution, path, cuts=()) -> None:
    Path(path).write_text(dumps(solution_to_doc(sol, cuts)))


def load_solution(path) -> tuple[ParallelepipedSolution, list[dict]]:
    doc, source = _read(path)
    return solution_from_doc(doc, source)


def resave_solution(src, dst) -> None:
    """Load a solution file and write it back canonically."""
    sol, cuts = load_solution(src)
    Path(dst).write_text(dumps(_solution_doc_from_parts(sol, cuts)))


def cut_file_doc(cut: CutParallelepiped) -> dict:
    return {
        "format_version": FORMAT_VERSION,
        "kind": "alpha_cut",
        "alpha": cut.alpha,
        "x_cr": cut.x_cr,
        "columns": cut.frame.T,
        "lower": cut.lower,
        "upper": cut.upper,
        "vertices": vertices(cut),
    }
