"""Command-line interface: point evaluation, coupling sweeps, profile dumps,
and verification runs.

Subcommands
-----------
point    one coupling: roots, energies, polarizability breakdown
sweep    CSV (and optional SVG) of the polarizability curve over |gamma|
profile  CSV of Q0, Q1 or S along rho, optionally for several couplings
verify   run the cross-validation suite, exit 1 on any failure

Exit codes: 0 ok, 1 verification failure, 2 no bound state for the requested
coupling, 64 usage error.  CSV uses 17 significant digits (round-trip exact
for doubles) and lowercase ``nan`` for absent values, and is byte-identical
across runs for a fixed invocation.  SHELLPOL_THREADS caps sweep parallelism.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from typing import List, Optional, Sequence

from . import checks
from .backend import backend_name
from .model import (ANGSTROM_M, Coupling, PhysicalParams, build_report)
from .polarizability import compute_breakdown
from .spectrum import NoBoundState, NoPState, ground_state, p_state, state_pair
from .wavefunctions import matching_coefficients, sample_q0, sample_q1, sample_s

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_NO_BOUND_STATE = 2
EXIT_USAGE = 64

SWEEP_HEADER = "gamma_abs,x0,x1,alpha,alpha1,alpha2,alpha_b"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _fmt(v: Optional[float]) -> str:
    if v is None or (isinstance(v, float) and math.isnan(v)):
        return "nan"
    return f"{v:.17g}"


def _thread_count() -> int:
    env = os.environ.get("SHELLPOL_THREADS", "")
    if env.strip():
        return max(1, int(env))
    return min(8, os.cpu_count() or 1)


def _params(args) -> PhysicalParams:
    return PhysicalParams(r0=args.r0 * ANGSTROM_M)


def _row_values(gamma_abs: float, args):
    """One sweep/point row in the requested units."""
    coupling = Coupling(-gamma_abs)
    state0, state1 = state_pair(coupling)
    bd = compute_breakdown(coupling)
    if args.units == "m3":
        report = build_report(bd.alpha_closed, bd.alpha1, bd.alpha2, bd.alpha_b,
                              _params(args), args.paper_rounding)
        alpha, a1, a2 = report.alpha_m3, report.alpha1_m3, report.alpha2_m3
        ab = report.alpha_b_m3
    else:
        alpha, a1, a2, ab = bd.alpha_closed, bd.alpha1, bd.alpha2, bd.alpha_b
    return {
        "gamma_abs": gamma_abs,
        "x0": state0.x,
        "x1": None if state1 is None else state1.x,
        "alpha": alpha,
        "alpha1": a1,
        "alpha2": a2,
        "alpha_b": ab,
    }


def _csv_line(row) -> str:
    return ",".join(_fmt(row[k]) for k in
                    ("gamma_abs", "x0", "x1", "alpha", "alpha1", "alpha2",
                     "alpha_b"))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_point(args) -> int:
    if args.gamma <= 0.0:
        print("point: --gamma must be positive (the coupling magnitude)",
              file=sys.stderr)
        return EXIT_USAGE
    try:
        row = _row_values(args.gamma, args)
    except NoBoundState:
        print("no bound state", file=sys.stderr)
        return EXIT_NO_BOUND_STATE
    params = _params(args)
    coupling = Coupling(-args.gamma)
    s0, s1 = state_pair(coupling)
    unit = "m^3" if args.units == "m3" else "dimensionless"
    if args.json:
        payload = dict(row)
        payload.update({
            "units": unit,
            "r0_angstrom": args.r0,
            "E0_joules": s0.energy_joules(params),
            "E1_joules": None if s1 is None else s1.energy_joules(params),
            "backend": backend_name(),
        })
        print(json.dumps(payload, indent=2))
    else:
        absent = "absent"
        print(f"gamma_abs    {_fmt(args.gamma)}")
        print(f"r0           {args.r0:g} Angstrom")
        print(f"x0           {_fmt(row['x0'])}")
        print(f"x1           {absent if row['x1'] is None else _fmt(row['x1'])}")
        print(f"E0           {_fmt(s0.energy_joules(params))} J")
        print(f"E1           "
              f"{absent if s1 is None else _fmt(s1.energy_joules(params)) + ' J'}")
        print(f"alpha        {_fmt(row['alpha'])} {unit}")
        print(f"alpha1       {_fmt(row['alpha1'])} {unit}")
        print(f"alpha2       {_fmt(row['alpha2'])} {unit}")
        ab = row["alpha_b"]
        print(f"alpha_b      {absent if ab is None else _fmt(ab) + ' ' + unit}")
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(SWEEP_HEADER + "\n" + _csv_line(row) + "\n")
    return EXIT_OK


def cmd_sweep(args) -> int:
    if not (args.gamma_start > 1.0 and args.gamma_end > args.gamma_start):
        print("sweep: require 1 < --gamma-start < --gamma-end", file=sys.stderr)
        return EXIT_USAGE
    if args.steps < 2:
        print("sweep: --steps must be >= 2", file=sys.stderr)
        return EXIT_USAGE
    n = args.steps
    grid = [args.gamma_start + (args.gamma_end - args.gamma_start) * i / (n - 1)
            for i in range(n)]
    try:
        with ThreadPoolExecutor(max_workers=_thread_count()) as pool:
            rows = list(pool.map(lambda g: _row_values(g, args), grid))
        lines = [SWEEP_HEADER] + [_csv_line(r) for r in rows]
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
        if args.svg:
            from .svg import polyline_plot
            gx = [r["gamma_abs"] for r in rows]
            unit = "m^3" if args.units == "m3" else "dimensionless"
            series = [
                ("alpha", gx, [r["alpha"] for r in rows]),
                ("alpha1", gx, [r["alpha1"] for r in rows]),
                ("alpha2", gx, [r["alpha2"] for r in rows]),
                ("alpha_b", gx,
                 [math.nan if r["alpha_b"] is None else r["alpha_b"]
                  for r in rows]),
            ]
            polyline_plot(args.svg, series, "|gamma|", f"polarizability ({unit})",
                          title="delta-shell polarizability", logy=args.svg_logy)
    except Exception as exc:
        # abort leaves no partial output behind
        for path in (args.out, args.svg):
            if path and os.path.exists(path):
                os.remove(path)
        print(f"sweep: failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def cmd_profile(args) -> int:
    gammas = args.gamma
    try:
        lines = []
        multi = len(gammas) > 1
        lines.append(("gamma_abs,rho,value" if multi else "rho,value"))
        for ga in gammas:
            coupling = Coupling(-ga)
            s0 = ground_state(coupling)
            rho = [args.rho_max * i / (args.n_points - 1)
                   for i in range(args.n_points)]
            if args.which == "q0":
                prof = sample_q0(s0, rho)
            elif args.which == "q1":
                prof = sample_q1(p_state(coupling), rho)
            else:
                coeffs = matching_coefficients(coupling, s0)
                prof = sample_s(coupling, s0, coeffs, rho)
            for r, v in zip(prof.rho, prof.values):
                prefix = f"{_fmt(ga)}," if multi else ""
                lines.append(f"{prefix}{_fmt(float(r))},{_fmt(float(v))}")
        text = "\n".join(lines) + "\n"
        if args.out:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)
    except (NoBoundState, NoPState) as exc:
        print(f"profile: {exc}", file=sys.stderr)
        return EXIT_NO_BOUND_STATE
    return EXIT_OK


def cmd_verify(args) -> int:
    grid = tuple(float(g) for g in args.gamma_grid.split(","))
    results = checks.run_all(grid=grid, tol_root=args.tol_root,
                             tol_quad=args.tol_quad,
                             perturb_coeff=args.perturb_coeff)
    ok = all(r.passed for r in results)
    if args.json:
        print(json.dumps({
            "passed": bool(ok),
            "backend": backend_name(),
            "gamma_grid": list(grid),
            "checks": [{"name": r.name, "passed": bool(r.passed),
                        "worst": float(r.worst),
                        "tolerance": float(r.tolerance), "detail": r.detail}
                       for r in results],
        }, indent=2))
    else:
        print(f"verification on |gamma| grid {list(grid)} "
              f"(backend: {backend_name()})")
        for r in results:
            print(r.row())
        print("result:", "PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="shellpol",
        description="Static polarizability of a particle bound by an "
                    "attractive spherical delta-shell potential.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--r0", type=float, default=3.0, metavar="ANGSTROM",
                       help="shell radius in Angstrom (default 3)")
        p.add_argument("--units", choices=("dimensionless", "m3"),
                       default="m3", help="output units for polarizabilities")
        p.add_argument("--paper-rounding", action="store_true",
                       help="use the rounded Coulomb constant 9e9 instead of "
                            "the exact 8.9875517873681764e9 when converting "
                            "to m^3")
        p.add_argument("--out", metavar="PATH", help="write CSV here")

    p = sub.add_parser("point", help="evaluate one coupling")
    common(p)
    p.add_argument("--gamma", type=float, required=True,
                   help="coupling magnitude |gamma| (> 1 for a bound state)")
    p.add_argument("--json", action="store_true", help="JSON output")
    p.set_defaults(func=cmd_point)

    p = sub.add_parser("sweep", help="polarizability curve over |gamma|")
    common(p)
    p.add_argument("--gamma-start", type=float, required=True)
    p.add_argument("--gamma-end", type=float, required=True)
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--svg", metavar="PATH", help="also write an SVG plot")
    p.add_argument("--svg-logy", action="store_true",
                   help="logarithmic polarizability axis in the SVG")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("profile", help="dump Q0, Q1 or S along rho")
    p.add_argument("--gamma", type=float, action="append", required=True,
                   help="coupling magnitude; repeat for overlaid curves")
    p.add_argument("--which", choices=("q0", "q1", "S"), required=True)
    p.add_argument("--n-points", type=int, default=800)
    p.add_argument("--rho-max", type=float, default=4.0,
                   help="grid end in units of the shell radius (default 4)")
    p.add_argument("--out", metavar="PATH", help="write CSV here")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", help="run the cross-validation suite")
    p.add_argument("--gamma-grid", default=",".join(str(g) for g in checks.DEFAULT_GRID),
                   help="comma-separated |gamma| values")
    p.add_argument("--tol-root", type=float, default=1e-12,
                   help="root-residual gate for the spectrum solves")
    p.add_argument("--tol-quad", type=float, default=1e-12,
                   help="relative target for adaptive quadrature")
    p.add_argument("--perturb-coeff", type=float, default=0.0,
                   help="fault injection: scale the closed-form C and alpha "
                        "by (1 + value); the cross-checks must then fail")
    p.add_argument("--json", action="store_true", help="JSON report")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"shellpol: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
