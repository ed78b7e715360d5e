"""``staticdisp`` command line: catalog, sheets, invariants, fixed-points, verify, plot-data.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from datetime import datetime, timezone
from fractions import Fraction
from typing import Callable

from . import __version__
from .analytic import (BlaschkeSpec, GridSpec, OddRationalFn, SpecError, boundary_value,
                       broken_evaluator, condition_residuals, sample_points,
                       shift_identity_residual, sheet_argument, trivial_evaluator,
                       two_row_evaluator, zeta_of_z)
from .crossing import CatalogError, eigen, from_label, validate
from .dynamics import check_printed_rest_points, rest_points
from .functional import (BRANCH_X0, COSH, SINH, HyperbolicSeriesSpec, PoleError,
                         SingularTermError, assemble_sheet_values, phi_hyperbolic,
                         solve_parabolic_family)
from .invariants import (CONIC_TWO_ROW, act_inversion, act_linear, coords, curve_certificate,
                         invariant_planes, is_invariant_hypersurface, solve_invariance_params,
                         two_row_invariant)
from .mobius import ProjPoint, induced_mobius, mobius_classify, sheet_coordinate, x0_candidates
from .polynomials import PolynomialError, parse_poly
from .scalars import as_exact, format_decimal, format_exact, set_tolerance

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# value parsers

_RANGE = re.compile(r"^\s*([^.:]+|-?\d*\.\d+)\s*\.\.\s*([^:]+?)\s*(?::\s*(.+))?$")


def parse_range(text: str, kind: Callable = int) -> list:
    """``a..b[:step]`` inclusive, or a single value; comma lists are concatenated."""
    out = []
    for part in str(text).split(","):
        part = part.strip()
        if ".." not in part:
            out.append(kind(part))
            continue
        a, rest = part.split("..", 1)
        b, _, step = rest.partition(":")
        a, b = kind(a), kind(b)
        step = kind(step) if step else kind(1)
        if step <= 0:
            raise ValueError("range step must be positive")
        if kind is int:
            out.extend(range(a, b + 1, step))
        else:
            k = 0
            while a + k * step <= b + 1e-12 * max(1.0, abs(b)):
                out.append(a + k * step)
                k += 1
    return out


def parse_branch(text: str) -> str:
    t = text.strip().lower().replace(" ", "")
    if t in (COSH, "x0=2", "2"):
        return COSH
    if t in (SINH, "x0=-4", "-4"):
        return SINH
    raise ValueError(f"branch must be cosh (x0=2) or sinh (x0=-4), got {text!r}")


def parse_beta(text: str) -> OddRationalFn:
    """``0`` or ``num=c0,c1,...;den=d0,d1,...`` (coefficients low to high)."""
    t = text.strip()
    if t in ("0", "none", ""):
        return OddRationalFn()
    fields = dict(_kv(t))
    unknown = set(fields) - {"num", "den"}
    if unknown:
        raise ValueError(f"unknown beta fields {sorted(unknown)}")
    num = [float(Fraction(c)) for c in fields.get("num", "0").split(",")]
    den = [float(Fraction(c)) for c in fields.get("den", "1").split(",")]
    return OddRationalFn(tuple(num), tuple(den))


def parse_blaschke(text: str) -> BlaschkeSpec:
    """``none`` or ``order=<k>;zeros=z1,z2,...`` (complex literals like 0.3+0.2j)."""
    t = text.strip()
    if t in ("none", "1", ""):
        return BlaschkeSpec()
    fields = dict(_kv(t))
    unknown = set(fields) - {"order", "zeros"}
    if unknown:
        raise ValueError(f"unknown blaschke fields {sorted(unknown)}")
    zeros = tuple(complex(z.replace(" ", "")) for z in fields.get("zeros", "").split(",") if z.strip())
    return BlaschkeSpec(int(fields.get("order", 0)), zeros)


def _kv(text: str):
    for item in text.split(";"):
        if not item.strip():
            continue
        if "=" not in item:
            raise ValueError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        yield k.strip().lower(), v.strip()


def _fraction(text: str) -> Fraction:
    return Fraction(str(text).strip())


def _bool(text) -> bool:
    if isinstance(text, bool):
        return text
    t = str(text).strip().lower()
    if t in ("1", "true", "yes", "on"):
        return True
    if t in ("0", "false", "no", "off"):
        return False
    raise ValueError(f"not a boolean: {text!r}")


# dest -> (converter, default)
OPTIONS: dict[str, tuple[Callable, object]] = {
    "tolerance": (float, 1e-10),
    "output": (str, None),
    "format": (str, None),
    "no_header": (_bool, False),
    "matrix": (str, None),
    "l": (int, None),
    "n": (str, None),
    "branch": (parse_branch, None),
    "x0": (str, None),
    "z": (complex, 0.3),
    "solution": (str, "two-row"),
    "beta": (parse_beta, "0"),
    "blaschke": (parse_blaschke, "none"),
    "grid_n": (int, 200),
    "grid_delta": (float, 1e-3),
    "grid_box": (str, "-3..3,-3..3"),
    "what": (str, None),
    "omega": (str, "1.01..3"),
    "step": (float, 0.01),
    "poly": (str, None),
    "seed": (int, 0),
}


def read_config(path: str) -> dict[str, str]:
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise OSError(f"cannot read config {path}: {exc}") from exc
    out = {}
    for num, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{num}: expected key=value")
        k, v = line.split("=", 1)
        key = k.strip().replace("-", "_")
        if key not in OPTIONS:
            raise UsageError(f"{path}:{num}: unknown config key {k.strip()!r}")
        out[key] = v.strip()
    return out


# ---------------------------------------------------------------------------
# argument parsing

def _global_options(p: argparse.ArgumentParser, suppress: bool) -> None:
    d = argparse.SUPPRESS if suppress else None
    p.add_argument("--tolerance", default=d, help="comparison tolerance (default 1e-10)")
    p.add_argument("--output", "-o", default=d, help="write to this file instead of stdout")
    p.add_argument("--format", choices=("json", "csv"), default=d)
    p.add_argument("--config", default=d, help="key=value config file")
    p.add_argument("--no-header", dest="no_header", action="store_const", const="true", default=d,
                   help="omit the timestamp header")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="staticdisp", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"staticdisp {__version__}")
    _global_options(p, suppress=False)
    sub = p.add_subparsers(dest="command", metavar="command")

    def cmd(name, help_):
        s = sub.add_parser(name, help=help_)
        _global_options(s, suppress=True)
        return s

    s = cmd("catalog", "matrix, validation and eigen data for a catalog label")
    s.add_argument("label", nargs="?")
    s.add_argument("--matrix")

    s = cmd("sheets", "sheet coordinates X(n) and sheet values")
    s.add_argument("--matrix")
    s.add_argument("--n", help="sheet range a..b[:step]")
    s.add_argument("--branch", help="cosh|sinh or x0=2|x0=-4 (hyperbolic matrices)")
    s.add_argument("--x0", help="starting coordinate (default: the nontrivial eigendirection)")
    s.add_argument("--z", help="point of the physical sheet for hyperbolic sheet values")

    s = cmd("invariants", "invariant varieties and their certificates")
    s.add_argument("--matrix")
    s.add_argument("--poly", help="test this polynomial for invariance")

    s = cmd("fixed-points", "exact rest points")
    s.add_argument("--matrix")

    s = cmd("verify", "residual scans of reflection, unitarity and crossing")
    s.add_argument("--solution", help="two-row | trivial | broken-demo")
    s.add_argument("--l")
    s.add_argument("--beta")
    s.add_argument("--blaschke")
    s.add_argument("--grid-n", dest="grid_n")
    s.add_argument("--grid-delta", dest="grid_delta")
    s.add_argument("--grid-box", dest="grid_box", help="re_min..re_max,im_min..im_max")
    s.add_argument("--seed")

    s = cmd("plot-data", "CSV series for plotting")
    s.add_argument("--what", help="xn | unitarity | zeta | phi")
    s.add_argument("--matrix")
    s.add_argument("--n")
    s.add_argument("--branch")
    s.add_argument("--x0")
    s.add_argument("--omega")
    s.add_argument("--step")
    s.add_argument("--grid-n", dest="grid_n")
    s.add_argument("--grid-delta", dest="grid_delta")
    s.add_argument("--grid-box", dest="grid_box")
    return p


_NEG_VALUE = re.compile(r"^-[\d.]")


def preprocess_argv(argv: list[str]) -> list[str]:
    """Join ``--opt -3..5`` into ``--opt=-3..5`` so negative values are not read as flags."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEG_VALUE.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def resolve(ns: argparse.Namespace) -> dict:
    """CLI flags over config-file keys over defaults, all converted and validated."""
    raw = {k: v for k, v in vars(ns).items() if v is not None}
    cfg = read_config(raw["config"]) if raw.get("config") else {}
    out = {"command": raw.get("command")}
    for key, (conv, default) in OPTIONS.items():
        if key in raw:
            val = raw[key]
        elif key in cfg:
            val = cfg[key]
        else:
            val = default
        if val is None:
            out[key] = None
            continue
        try:
            out[key] = conv(val) if isinstance(val, str) or conv is _bool else val
        except (ValueError, SpecError, ZeroDivisionError, TypeError) as exc:
            raise UsageError(f"bad value for {key.replace('_', '-')}: {exc}") from exc
    if "label" in raw and raw["label"]:
        out["matrix"] = raw["label"]
    if out["format"] is None:
        out["format"] = "csv" if out["command"] == "plot-data" else "json"
    if out["format"] not in ("json", "csv"):
        raise UsageError("format must be json or csv")
    return out


# ---------------------------------------------------------------------------
# output

class Result:
    def __init__(self, report: dict, table: tuple[list, list] | None = None, code: int = EXIT_OK,
                 message: str = ""):
        self.report, self.table, self.code, self.message = report, table, code, message


def _render(res: Result, fmt: str, header: bool) -> str:
    stamp = datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")
    if fmt == "json":
        doc = dict(res.report)
        if header:
            doc = {"generated": f"staticdisp {__version__} {stamp}", **doc}
        return json.dumps(doc, indent=2, default=_jsonable) + "\n"
    buf = io.StringIO()
    if header:
        buf.write(f"# generated by staticdisp {__version__} {stamp}\n")
    w = csv.writer(buf, lineterminator="\n")
    if res.table is None:
        w.writerow(["key", "value"])
        for k, v in _flatten(res.report):
            w.writerow([k, v])
    else:
        cols, rows = res.table
        w.writerow(cols)
        w.writerows(rows)
    return buf.getvalue()


def _jsonable(obj):
    if hasattr(obj, "format"):
        return obj.format()
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return str(obj)


def _flatten(d, prefix=""):
    if isinstance(d, dict):
        for k, v in d.items():
            yield from _flatten(v, f"{prefix}{k}.")
    elif isinstance(d, list):
        for i, v in enumerate(d):
            yield from _flatten(v, f"{prefix}{i}.")
    else:
        yield prefix.rstrip("."), d


def _matrix(cfg, default: str | None = None):
    label = cfg.get("matrix") or default
    if not label:
        raise UsageError("a matrix label is required (--matrix)")
    try:
        return from_label(label)
    except CatalogError as exc:
        raise UsageError(str(exc)) from exc


def _exact(x) -> str:
    return "inf" if x is None else format_exact(x)


# ---------------------------------------------------------------------------
# commands

def cmd_catalog(cfg) -> Result:
    A = _matrix(cfg)
    rep = validate(A)
    report = {"label": A.label, "n": A.n, "matrix": A.format_rows(),
              "row_sums": [format_exact(s) for s in A.row_sums()],
              "validation": rep.to_dict()}
    try:
        report["eigen"] = eigen(A).to_dict()
    except ValueError as exc:
        report["eigen"] = {"error": str(exc)}
    rows = [[i + 1, j + 1, format_exact(x), format_decimal(x)]
            for i, r in enumerate(A.entries) for j, x in enumerate(r)]
    return Result(report, (["row", "col", "exact", "decimal"], rows))


def _default_x0(A):
    cands = x0_candidates(A)
    nontrivial = [c for c in cands if not c.tag.startswith("trivial")]
    return (nontrivial or cands)[-1].x


def _sheet_range(cfg, default: str) -> list[int]:
    try:
        return parse_range(cfg.get("n") or default, int)
    except ValueError as exc:
        raise UsageError(f"bad --n: {exc}") from exc


def cmd_sheets(cfg) -> Result:
    A = _matrix(cfg)
    if A.n != 2:
        raise UsageError("sheets needs a 2x2 matrix")
    ns = _sheet_range(cfg, "-3..5")
    M = induced_mobius(A)
    kind = mobius_classify(M)
    if cfg.get("branch") and cfg.get("x0"):
        raise UsageError("give either --branch or --x0")
    x0 = ProjPoint.of(cfg["x0"]) if cfg.get("x0") else (
        ProjPoint(BRANCH_X0[cfg["branch"]]) if cfg.get("branch") else _default_x0(A))
    report = {"matrix": A.label, "map": M.format(), "class": kind, "x0": str(x0)}
    xs = [sheet_coordinate(A, x0, n) for n in ns]
    if kind == "parabolic" and A.l is not None:
        phi = solve_parabolic_family(A.l)
        ratios = []
        for n in ns:
            try:
                ratios.append(phi(Fraction(n)))
            except ZeroDivisionError:
                ratios.append(None)
        report["rows"] = [{"n": n, "X": str(x), "x1_over_x2": _exact(r)}
                          for n, x, r in zip(ns, xs, ratios)]
        report["phi"] = phi.format()
        rows = [[n, str(x), format_decimal(x.value) if not x.is_infinite else "inf",
                 _exact(r), format_decimal(r)] for n, x, r in zip(ns, xs, ratios)]
        return Result(report, (["n", "X", "X_decimal", "x1_over_x2", "x1_over_x2_decimal"], rows))
    if kind == "hyperbolic":
        branch = cfg.get("branch")
        if branch is None:
            try:
                branch = next(b for b, v in BRANCH_X0.items() if ProjPoint(v) == x0)
            except StopIteration:
                raise UsageError("hyperbolic sheet values need x0 = 2 (cosh) or x0 = -4 (sinh)")
        z = complex(cfg["z"])
        nus = [sheet_argument(k, z) for k in ns]
        spec = HyperbolicSeriesSpec(branch)
        table = assemble_sheet_values(nus, branch, spec, A)
        report.update({"branch": branch, "z": [z.real, z.imag]})
        report["rows"] = [{"n": k, "nu": [r.nu.real, r.nu.imag], "X_z0": str(x),
                           **{key: v for key, v in r.to_dict().items() if key != "n"}}
                          for k, x, r in zip(ns, xs, table)]
        rows = []
        for k, x, r in zip(ns, xs, table):
            def num(v):
                return "nan" if v is None else f"{v:.17g}"
            rows.append([k, branch, num(r.S1 and r.S1.real), num(r.S1 and r.S1.imag),
                         num(r.S2 and r.S2.real), num(r.S2 and r.S2.imag),
                         num(r.unitarity_residual), num(r.crossing_residual),
                         f"{r.nu.real:.17g}", str(x)])
        for row, r in zip(rows, table):
            if r.S1 is not None:
                row[2:6] = [f"{r.S1.real:.17g}", f"{r.S1.imag:.17g}",
                            f"{r.S2.real:.17g}", f"{r.S2.imag:.17g}"]
        cols = ["n", "branch", "S1_re", "S1_im", "S2_re", "S2_im",
                "unitarity_residual", "crossing_residual", "nu", "X_z0"]
        return Result(report, (cols, rows))
    report["rows"] = [{"n": n, "X": str(x)} for n, x in zip(ns, xs)]
    return Result(report, (["n", "X", "X_decimal"],
                           [[n, str(x), "inf" if x.is_infinite else format_decimal(x.value)]
                            for n, x in zip(ns, xs)]))


def _cert(res) -> dict:
    return {"invariant": res.invariant,
            "cofactor": res.cofactor.format() if res.cofactor is not None else None}


def cmd_invariants(cfg) -> Result:
    A = _matrix(cfg)
    if cfg.get("poly"):
        try:
            F = parse_poly(cfg["poly"])
        except PolynomialError as exc:
            raise UsageError(str(exc)) from exc
        xs = tuple(v for v in F.vars)
        report = {"matrix": A.label, "poly": F.format()}
        if len(xs) == A.n + 1:
            from .crossing import extend_block
            L = extend_block(A)
        elif len(xs) == A.n:
            L = A
        else:
            raise UsageError(f"polynomial has {len(xs)} variables; matrix needs {A.n} or {A.n + 1}")
        xs = coords(len(xs)) if all(v.startswith("x") for v in xs) else xs
        F = F.with_vars(xs)
        report["under_inversion"] = _cert(is_invariant_hypersurface(F, lambda P: act_inversion(P, xs)))
        report["under_crossing"] = _cert(is_invariant_hypersurface(F, lambda P: act_linear(P, L, xs)))
        return Result(report)
    if A.label == "p33":
        sol = solve_invariance_params(A)
        from .crossing import extend_block
        B = extend_block(A)
        X4 = coords(4)
        fam = invariant_planes(B, X4)
        report = {"matrix": "p33", "plane_families": [
            {"mu": format_exact(f.mu), "plane": f.plane.format(), "params": list(f.params)}
            for f in fam]}
        report.update(sol.to_dict())
        if sol.solutions:
            c0, c1 = sol.solutions[0]
            plane = sol.plane.subs({"c0": c0, "c1": c1}).with_vars(X4)
            cand = next(c for c in sol.candidates if c.params == (c0, c1))
            conic = cand.factorization.irreducible.with_vars(X4)
            report["solved_plane"] = plane.format()
            report["factors"] = [f.format() for f in cand.factorization.factors]
            report["certificates"] = {
                "curve_under_inversion": curve_certificate(
                    plane, conic, lambda P: act_inversion(P, X4), "I_p").__dict__,
                "curve_under_crossing": curve_certificate(
                    plane, conic, lambda P: act_linear(P, B, X4), "A3").__dict__,
            }
            X3 = coords(3)
            lines = [parse_poly("-x0 + x2", X3), parse_poly("-x1 + x2", X3)]
            quad = lines[0] * lines[1]
            report["degenerate_quadric"] = {
                "poly": quad.format(),
                "under_inversion": _cert(is_invariant_hypersurface(quad, lambda P: act_inversion(P, X3))),
                "crossing_images": [act_linear(g, A, X3).format() for g in lines],
            }
        return Result(report)
    if A.l is not None and A.n == 2:
        F = two_row_invariant(A.l)
        X3 = coords(3)
        from .crossing import extend_block
        B = extend_block(A)
        report = {"matrix": A.label, "invariant": F.format(), "degree": A.l + 1,
                  "under_inversion": _cert(is_invariant_hypersurface(F, lambda P: act_inversion(P, X3))),
                  "under_crossing": _cert(is_invariant_hypersurface(F, lambda P: act_linear(P, B, X3)))}
        if A.l == 1:
            report["equals_two_row_conic"] = F == CONIC_TWO_ROW
        return Result(report)
    raise UsageError(f"invariants are implemented for p33 and su2:l=<k>, not {A.label!r}")


def cmd_fixed_points(cfg) -> Result:
    A = _matrix(cfg)
    try:
        pts = rest_points(A)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    report = {"matrix": A.label, "points": []}
    for p in pts:
        d = p.to_dict()
        d["residuals"] = [format_exact(r) for r in p.residuals(A)]
        if A.n == 3:
            d["in_plane_S2_plus_S3"] = as_exact(p.components[1] + p.components[2]) == 0
        if A.n >= 2 and p.components[1] != 0:
            X = as_exact(p.components[0] / p.components[1])
            d["X"] = format_exact(X)
            if A.n == 3 and d["in_plane_S2_plus_S3"]:
                d["X2_minus_7X_plus_1"] = format_exact(as_exact(X * X - 7 * X + 1))
        report["points"].append(d)
    if A.label == "p33":
        report["printed_pairing"] = [
            {"column": [format_exact(c) for c in chk.components],
             "residuals": [format_exact(r) for r in chk.residuals], "satisfies": chk.ok}
            for chk in check_printed_rest_points(A)]
    rows = [[p.label, "i" if p.imaginary else "1", *[format_exact(c) for c in p.components],
             str(p.verified)] for p in pts]
    cols = ["source", "factor", *[f"S{i + 1}" for i in range(A.n)], "verified"]
    return Result(report, (cols, rows))


def _grid(cfg) -> GridSpec:
    box = cfg.get("grid_box") or "-3..3,-3..3"
    try:
        re_part, im_part = box.split(",")
        r0, r1 = (float(x) for x in re_part.split(".." if ".." in re_part else ":"))
        i0, i1 = (float(x) for x in im_part.split(".." if ".." in im_part else ":"))
        return GridSpec(r0, r1, i0, i1, cfg["grid_n"], cfg["grid_n"], cfg["grid_delta"])
    except (ValueError, SpecError) as exc:
        raise UsageError(f"bad grid: {exc}") from exc


def cmd_verify(cfg) -> Result:
    sol = (cfg.get("solution") or "two-row").lower()
    tol = cfg["tolerance"]
    grid = _grid(cfg)
    checks = []
    if sol == "two-row":
        l = cfg.get("l") or 1
        if l != 1:
            raise UsageError("the closed-form two-row column is available for l = 1 only")
        A = from_label("su2:l=1")
        ev = two_row_evaluator(cfg["beta"], cfg["blaschke"])
    elif sol == "trivial":
        A = from_label("su2:l=1") if not cfg.get("l") else from_label(f"su2:l={cfg['l']}")
        ev = trivial_evaluator(cfg["blaschke"])
    elif sol in ("broken-demo", "broken"):
        A = from_label("su2:l=1")
        ev = broken_evaluator
    else:
        raise UsageError(f"unknown solution {sol!r}; use two-row, trivial or broken-demo")
    reports = condition_residuals(ev, A, grid)
    for r in reports:
        checks.append({**r.to_dict(), "pass": r.passes(tol)})
    if sol == "two-row" and cfg["blaschke"].order == 0 and not cfg["blaschke"].zeros:
        pts = sample_points(20, cfg["seed"], grid=grid)
        worst, at = 0.0, None
        for z in pts:
            r = shift_identity_residual(z, A, cfg["beta"])
            if r > worst:
                worst, at = r, z
        checks.append({"condition": "shift", "max_residual": worst,
                       "at_z": None if at is None else [at.real, at.imag],
                       "samples": len(pts), "skipped_near_poles": 0, "pass": worst < tol})
    ok = all(c["pass"] for c in checks)
    report = {"solution": sol, "matrix": A.label, "tolerance": tol, "ok": ok, "checks": checks}
    msg = ""
    if not ok:
        bad = max((c for c in checks if not c["pass"]), key=lambda c: c["max_residual"])
        msg = (f"verification failed: condition {bad['condition']} residual "
               f"{bad['max_residual']:.3g} at z = {bad['at_z']}")
    rows = [[c["condition"], f"{c['max_residual']:.17g}",
             "" if c["at_z"] is None else f"{c['at_z'][0]:.17g}",
             "" if c["at_z"] is None else f"{c['at_z'][1]:.17g}",
             c["samples"], c["skipped_near_poles"], c["pass"]] for c in checks]
    cols = ["condition", "max_residual", "at_re", "at_im", "samples", "skipped_near_poles", "pass"]
    return Result(report, (cols, rows), EXIT_OK if ok else EXIT_FAIL, msg)


def cmd_plot_data(cfg) -> Result:
    what = cfg.get("what")
    if what == "xn":
        A = _matrix(cfg, "su2:l=1")
        x0 = ProjPoint.of(cfg["x0"]) if cfg.get("x0") else _default_x0(A)
        ns = _sheet_range(cfg, "0..20")
        rows = []
        for n in ns:
            x = sheet_coordinate(A, x0, n)
            rows.append([n, "inf" if x.is_infinite else format_decimal(x.value)])
        return Result({"what": what, "rows": len(rows)}, (["n", "X"], rows))
    if what == "unitarity":
        try:
            omegas = parse_range(cfg["omega"] if ".." not in cfg["omega"] or ":" in cfg["omega"]
                                 else f"{cfg['omega']}:{cfg['step']}", float)
        except ValueError as exc:
            raise UsageError(f"bad --omega: {exc}") from exc
        ev = two_row_evaluator()
        rows = []
        for w in omegas:
            if w <= 1:
                raise UsageError("omega samples must lie on the right cut (omega > 1)")
            s = boundary_value(ev, w)
            rows.append([f"{w:.17g}", f"{max(abs(abs(x) - 1) for x in s):.17g}"])
        return Result({"what": what, "rows": len(rows)}, (["omega", "unitarity_residual"], rows))
    if what == "zeta":
        g = _grid(cfg)
        rows = [[f"{z.real:.17g}", f"{z.imag:.17g}", f"{abs(zeta_of_z(z)):.17g}"] for z in g.points()]
        return Result({"what": what, "rows": len(rows)}, (["re", "im", "abs_zeta"], rows))
    if what == "phi":
        branch = cfg.get("branch") or COSH
        text = cfg.get("n") or "0..6"
        try:
            ns = parse_range(text, float)
        except ValueError as exc:
            raise UsageError(f"bad --n: {exc}") from exc
        spec = HyperbolicSeriesSpec(branch)
        rows = []
        for n in ns:
            try:
                v = f"{phi_hyperbolic(n, spec):.17g}"
            except (PoleError, SingularTermError, ZeroDivisionError):
                v = "nan"
            rows.append([f"{n:.17g}", branch, v])
        return Result({"what": what, "rows": len(rows)}, (["n", "branch", "phi"], rows))
    raise UsageError("--what must be one of xn, unitarity, zeta, phi")


COMMANDS = {"catalog": cmd_catalog, "sheets": cmd_sheets, "invariants": cmd_invariants,
            "fixed-points": cmd_fixed_points, "verify": cmd_verify, "plot-data": cmd_plot_data}


def main(argv: list[str] | None = None) -> int:
    argv = preprocess_argv(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:  # argparse exits 2 on usage errors, 0 on --help
        return int(exc.code or 0)
    if not ns.command:
        parser.print_usage(sys.stderr)
        return EXIT_USAGE
    try:
        cfg = resolve(ns)
        set_tolerance(cfg["tolerance"])
        res = COMMANDS[ns.command](cfg)
    except UsageError as exc:
        print(f"staticdisp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"staticdisp: error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"staticdisp: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = _render(res, cfg["format"], not cfg["no_header"])
    if cfg.get("output"):
        try:
            with open(cfg["output"], "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"staticdisp: error: cannot write {cfg['output']}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.write(text)
    if res.message:
        print(res.message, file=sys.stderr)
    return res.code


if __name__ == "__main__":
    sys.exit(main())
