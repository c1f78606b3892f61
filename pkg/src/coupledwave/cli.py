"""Command-line front end.

    coupledwave reduce  --config job.json [--out report.json]
    coupledwave solve   --config job.json [--out params.json]
    coupledwave verify  --config job.json [--out report.json] [--tolerance 1e-6]
    coupledwave figures [--out DIR]

Exit codes: 0 success, 1 bad input or I/O, 2 inadmissible coefficients,
3 verification failure.
"""

import argparse
import csv
import json
import math
import sys
import warnings
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import CoupledWaveError, Inadmissible, InadmissibleError
from .gg_method import Case, ConstraintWarning, gg_profile, solve_ansatz
from .reduction import PhysicalSystem, cubic_from_coefficients, reduce, v_from_u
from .verify import (
    DEFAULT_TOLERANCE,
    GridSpec,
    asymptotic_check,
    ode_residual,
    pde_residual,
    translation_check,
)
from .wef_method import (
    DISCRIMINANT_RATIO,
    WEFForm,
    restriction_satisfied,
    solve_wef,
    wef_profile,
)

EXIT_OK, EXIT_INPUT, EXIT_INADMISSIBLE, EXIT_VERIFY = 0, 1, 2, 3

PHYSICAL_KEYS = ("alpha", "beta", "eta", "gamma", "sigma", "epsilon", "c")
REDUCED_KEYS = ("A", "B", "C", "gamma")
GG_KEYS = ("case", "branch", "C1", "C2")
WEF_KEYS = ("zeta_branch", "form")
GRID_KEYS = ("xmin", "xmax", "nx", "tmin", "tmax", "nt", "pole_exclusion_radius")
TOP_KEYS = {"mode", "method", "grid", "csv", "A", "B", "C", *PHYSICAL_KEYS, *GG_KEYS, *WEF_KEYS}

DEFAULT_GRID = dict(xmin=-10.0, xmax=10.0, nx=2001, tmin=0.0, tmax=5.0, nt=51,
                    pole_exclusion_radius=0.5)

# Coefficients for the two figure datasets; no reference values exist, so
# these are this tool's defaults and are echoed in the provenance block.
FIGURE_PHYSICS = dict(alpha=0.0, beta=-3.0, eta=0.0, gamma=1.0, sigma=1.0, epsilon=2.0, c=-1.0)
FIGURE_GRID = dict(xmin=-10.0, xmax=10.0, nx=401, tmin=0.0, tmax=5.0, nt=51,
                   pole_exclusion_radius=0.5)


class InputError(Exception):
    pass


@dataclass
class JobConfig:
    mode: str
    coefficients: dict
    method: str = None
    gg: dict = field(default_factory=dict)
    wef: dict = field(default_factory=dict)
    grid: GridSpec = None
    csv: str = None

    @property
    def physical(self):
        if self.mode != "physical":
            return None
        return PhysicalSystem(**{k: self.coefficients[k] for k in PHYSICAL_KEYS})

    @property
    def speed(self):
        return self.coefficients.get("c", 0.0)

    @property
    def gamma(self):
        return self.coefficients["gamma"]

    def cubic(self):
        if self.mode == "physical":
            return reduce(self.physical)
        k = self.coefficients
        return cubic_from_coefficients(k["A"], k["B"], k["C"])


def _number(d, key, where="config"):
    if key not in d:
        raise InputError(f"missing required key '{key}' in {where}")
    val = d[key]
    if isinstance(val, bool) or not isinstance(val, (int, float)) or not math.isfinite(val):
        raise InputError(f"key '{key}' in {where} must be a finite number, got {val!r}")
    return float(val)


def parse_config(doc) -> JobConfig:
    if not isinstance(doc, dict):
        raise InputError("config must be a JSON object")
    unknown = sorted(set(doc) - TOP_KEYS)
    if unknown:
        raise InputError(f"unknown config key(s): {', '.join(unknown)}")
    mode = doc.get("mode")
    if mode not in ("physical", "reduced"):
        raise InputError("key 'mode' must be 'physical' or 'reduced'")

    if mode == "physical":
        stray = [k for k in ("A", "B", "C") if k in doc]
        if stray:
            raise InputError(f"reduced-mode key(s) {stray} not allowed with mode 'physical'")
        coeffs = {k: _number(doc, k) for k in PHYSICAL_KEYS}
    else:
        stray = [k for k in PHYSICAL_KEYS if k not in ("gamma", "c") and k in doc]
        if stray:
            raise InputError(f"physical-mode key(s) {stray} not allowed with mode 'reduced'")
        coeffs = {k: _number(doc, k) for k in REDUCED_KEYS}
        coeffs["c"] = _number(doc, "c") if "c" in doc else 0.0

    method = doc.get("method")
    if method not in (None, "gg", "wef"):
        raise InputError("key 'method' must be 'gg' or 'wef'")
    gg, wef = {}, {}
    if method == "gg":
        bad = [k for k in WEF_KEYS if k in doc]
        if bad:
            raise InputError(f"key(s) {bad} belong to method 'wef'")
        try:
            gg["case"] = Case.parse(doc.get("case", "Case1"))
        except ValueError as exc:
            raise InputError(str(exc)) from None
        gg["branch"] = _branch(doc.get("branch", 1), "branch")
        gg["C1"] = _number(doc, "C1") if "C1" in doc else 0.0
        gg["C2"] = _number(doc, "C2") if "C2" in doc else 1.0
    elif method == "wef":
        bad = [k for k in GG_KEYS if k in doc]
        if bad:
            raise InputError(f"key(s) {bad} belong to method 'gg'")
        wef["zeta_branch"] = _branch(doc.get("zeta_branch", 1), "zeta_branch")
        try:
            wef["form"] = WEFForm.parse(doc.get("form", "PForm"))
        except ValueError as exc:
            raise InputError(str(exc)) from None
    else:
        bad = [k for k in (*GG_KEYS, *WEF_KEYS) if k in doc]
        if bad:
            raise InputError(f"key(s) {bad} require 'method'")

    grid_doc = doc.get("grid", {})
    if not isinstance(grid_doc, dict):
        raise InputError("key 'grid' must be an object")
    unknown = sorted(set(grid_doc) - set(GRID_KEYS))
    if unknown:
        raise InputError(f"unknown grid key(s): {', '.join(unknown)}")
    g = dict(DEFAULT_GRID)
    for k in grid_doc:
        g[k] = _number(grid_doc, k, "grid")
    for k in ("nx", "nt"):
        if g[k] != int(g[k]):
            raise InputError(f"grid key '{k}' must be an integer")
        g[k] = int(g[k])
    try:
        grid = GridSpec(**g)
    except ValueError as exc:
        raise InputError(f"invalid grid: {exc}") from None

    csv_path = doc.get("csv")
    if csv_path is not None and not isinstance(csv_path, str):
        raise InputError("key 'csv' must be a path string")
    return JobConfig(mode, coeffs, method, gg, wef, grid, csv_path)


def _branch(value, key):
    if value in (1, "+", "+1"):
        return 1
    if value in (-1, "-", "-1"):
        return -1
    raise InputError(f"key '{key}' must be +1 or -1, got {value!r}")


# --- JSON / CSV helpers ----------------------------------------------------------


def _clean(obj):
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        f = float(obj)
        return f if math.isfinite(f) else str(f)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    return obj


def _emit(doc, out):
    text = json.dumps(_clean(doc), indent=2, allow_nan=False) + "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        try:
            Path(out).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise InputError(f"cannot write {out}: {exc}") from None


def _fmt(value):
    return "" if value is None else format(float(value), ".17g")


def write_profile_csv(path, grid: GridSpec, u_fn, v_fn, c, poles):
    """t-major ``x,t,u,v`` rows; u and v are blank inside pole exclusion zones."""
    x, t = grid.x, grid.t
    rows = []
    for tk in t:
        xi = x - c * tk
        keep = np.ones_like(x, dtype=bool)
        for p in poles:
            keep &= np.abs(xi - p) > grid.pole_exclusion_radius
        u = np.full_like(x, np.nan)
        u[keep] = u_fn(x[keep], np.full(keep.sum(), tk))
        v = v_fn(u) if v_fn is not None else None
        for i in range(x.size):
            ok = keep[i]
            rows.append((
                _fmt(x[i]), _fmt(tk),
                _fmt(u[i]) if ok else "",
                _fmt(v[i]) if ok and v is not None else "",
            ))
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(("x", "t", "u", "v"))
            w.writerows(rows)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from None


# --- diagnostics -------------------------------------------------------------------


def _gg_violations(cubic, gamma):
    out = []
    if not -2 * gamma / cubic.c2 > 0:
        out.append("-2*gamma/c2 > 0 (gamma and c2 of opposite sign)")
    if not 2 * cubic.c1 / gamma > 0:
        out.append("2*c1/gamma > 0 (gamma and c1 of the same sign)")
    return out


def _wef_violations(cubic):
    out = []
    if cubic.A == 0:
        out.append("A != 0")
    elif not cubic.A / cubic.C > 0:
        out.append("A/C > 0 (zeta real)")
    if not restriction_satisfied(cubic.A, cubic.B, cubic.C):
        out.append("2B^2 = 9AC")
    return out


def _reduction_doc(cfg: JobConfig):
    cubic = cfg.cubic()
    gg_bad, wef_bad = _gg_violations(cubic, cfg.gamma), _wef_violations(cubic)
    return cubic, {
        "mode": cfg.mode,
        "A": cubic.A, "B": cubic.B, "C": cubic.C,
        "delta": cubic.delta, "c1": cubic.c1, "c2": cubic.c2, "c3": cubic.c3,
        "constraint_c3": cubic.c3,
        "restriction_2B2_minus_9AC": 2 * cubic.B**2 - 9 * cubic.A * cubic.C,
        "admissibility": {
            "gg": {"admissible": not gg_bad, "violated": gg_bad},
            "wef": {"admissible": not wef_bad, "violated": wef_bad},
        },
    }


def _construct(cfg: JobConfig):
    """Solve for the configured method; returns (doc, u-profile, w-profile, ode id)."""
    if cfg.method is None:
        raise InputError("key 'method' is required for this command")
    cubic, doc = _reduction_doc(cfg)
    c = cfg.speed
    if cfg.method == "gg":
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", ConstraintWarning)
            sol = solve_ansatz(cubic, cfg.gamma, **cfg.gg)
        u_prof = gg_profile(sol, cubic, c=c)
        w_prof = gg_profile(sol, cubic, c=c, shifted=True)
        doc["solution"] = {
            "method": "gg", "case": sol.case.value, "branch": sol.branch,
            "a0": sol.a0, "a1": sol.a1, "lambda": sol.lam, "mu": sol.mu,
            "Delta": sol.Delta, "C1": sol.C1, "C2": sol.C2,
            "amplitude": sol.amplitude, "constraint_residual": sol.constraint_residual,
            "poles_xi": list(u_prof.poles),
        }
        doc["warnings"] = [str(w.message) for w in caught]
        return doc, u_prof, w_prof, "ODE17"

    bad = _wef_violations(cubic)
    if bad:
        raise Inadmissible("WEF construction needs " + " and ".join(bad))
    form = cfg.wef["form"]
    sol = solve_wef(cubic.A, cubic.C, cfg.gamma, cfg.wef["zeta_branch"], B=cubic.B)
    inv = sol.inv
    doc["solution"] = {
        "method": "wef", "form": form.value, "zeta_branch": cfg.wef["zeta_branch"],
        "tau": sol.tau, "zeta": sol.zeta, "g2": inv.g2, "g3": inv.g3,
        "e1": inv.e1, "e2": inv.e2, "e3": inv.e3, "m2": sol.m2,
        "discriminant": inv.discriminant,
        "discriminant_ratio": inv.g2**3 / (27 * inv.g3**2),
        "discriminant_ratio_expected": DISCRIMINANT_RATIO,
        "restriction_residual": sol.restriction_residual, "shift": sol.shift,
    }
    doc["warnings"] = []
    return doc, wef_profile(sol, form, c=c), wef_profile(sol, form, c=c, shifted=True), "ODE43"


def _v_mapper(cfg):
    phys = cfg.physical
    return None if phys is None else (lambda u: v_from_u(phys, u))


# --- commands ------------------------------------------------------------------------


def cmd_reduce(cfg: JobConfig, args):
    _, doc = _reduction_doc(cfg)
    _emit(doc, args.out)
    return EXIT_OK


def cmd_solve(cfg: JobConfig, args):
    doc, u_prof, _, _ = _construct(cfg)
    csv_path = cfg.csv or (str(Path(args.out).with_suffix(".csv")) if args.out else None)
    if csv_path:
        write_profile_csv(csv_path, cfg.grid, u_prof.at, _v_mapper(cfg), cfg.speed, u_prof.poles)
        doc["csv"] = csv_path
    else:
        print("no CSV written: give 'csv' in the config or --out", file=sys.stderr)
    _emit(doc, args.out)
    return EXIT_OK


def cmd_verify(cfg: JobConfig, args):
    doc, u_prof, w_prof, ode_id = _construct(cfg)
    tol = DEFAULT_TOLERANCE if args.tolerance is None else args.tolerance
    cubic = cfg.cubic()
    grid = cfg.grid
    checks = {}
    checks["ODE15"] = ode_residual(u_prof, cubic, cfg.gamma, "ODE15", grid, tolerance=tol).to_dict()
    checks[ode_id] = ode_residual(w_prof, cubic, cfg.gamma, ode_id, grid, tolerance=tol).to_dict()
    phys = cfg.physical
    if phys is not None:
        r6, r7 = pde_residual(
            u_prof.at, lambda x, t: v_from_u(phys, u_prof.at(x, t)), phys, grid,
            poles=u_prof.poles, tolerance=tol,
        )
        checks["PDE6"], checks["PDE7"] = r6.to_dict(), r7.to_dict()
    else:
        checks["PDE"] = {"skipped": "reduced mode has no PDE coefficients", "pass": True}
    if u_prof.periodic:
        checks["asymptotic"] = {"skipped": "periodic profile has no far-field limit", "pass": True}
    else:
        checks["asymptotic"] = asymptotic_check(u_prof, cubic, 20.0, tolerance=tol).to_dict()
    checks["translation"] = translation_check(u_prof.at, cfg.speed, 200, poles=u_prof.poles,
                                              exclusion=grid.pole_exclusion_radius).to_dict()
    ok = all(v["pass"] for v in checks.values())
    doc["checks"] = checks
    doc["tolerance"] = tol
    doc["verified"] = ok
    _emit(doc, args.out)
    if not ok:
        failed = [k for k, v in checks.items() if not v["pass"]]
        print("verification failed: " + ", ".join(failed), file=sys.stderr)
    return EXIT_OK if ok else EXIT_VERIFY


def cmd_figures(args):
    outdir = Path(args.out or ".")
    try:
        outdir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise InputError(f"cannot create {outdir}: {exc}") from None
    phys = PhysicalSystem(**FIGURE_PHYSICS)
    cubic = reduce(phys)
    grid = GridSpec(**FIGURE_GRID)
    files = {}
    for name, (C1, C2) in (("fig1.csv", (0.0, 1.0)), ("fig2.csv", (1.0, 0.0))):
        sol = solve_ansatz(cubic, phys.gamma, Case.CASE1, 1, C1, C2)
        prof = gg_profile(sol, cubic, c=phys.c)
        path = outdir / name
        write_profile_csv(path, grid, prof.at, lambda u: v_from_u(phys, u), phys.c, prof.poles)
        files[name] = {"C1": C1, "C2": C2, "case": "Case1", "poles_xi": list(prof.poles)}
    doc = {
        "files": {str(outdir / k): v for k, v in files.items()},
        "provenance": {
            "coefficients": FIGURE_PHYSICS,
            "grid": FIGURE_GRID,
            "note": "coefficients and axis ranges are defaults of this tool; "
                    "no reference figure parameters exist",
        },
    }
    json.dump(_clean(doc), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return EXIT_OK


# --- entry point -------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="coupledwave", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in ("reduce", "solve", "verify"):
        sp = sub.add_parser(name)
        sp.add_argument("--config", required=True, help="JSON job file")
        sp.add_argument("--out", help="write the JSON document here instead of stdout")
        sp.add_argument("--tolerance", type=float, default=None,
                        help=f"residual pass/fail tolerance (default {DEFAULT_TOLERANCE:g})")
    sp = sub.add_parser("figures")
    sp.add_argument("--out", help="output directory (default: current directory)")
    sp.add_argument("--config", help="ignored; figure parameters are fixed")
    sp.add_argument("--tolerance", type=float, default=None, help="ignored")
    return p


def _load(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from None


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "figures":
            return cmd_figures(args)
        cfg = parse_config(_load(args.config))
        handler = {"reduce": cmd_reduce, "solve": cmd_solve, "verify": cmd_verify}[args.command]
        return handler(cfg, args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InadmissibleError as exc:
        print(f"inadmissible: {exc}", file=sys.stderr)
        return EXIT_INADMISSIBLE
    except CoupledWaveError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
