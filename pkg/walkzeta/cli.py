#!/usr/bin/env python3
"""Command-line interface for walk-zeta.

walk-zeta evaluates walk-type zeta functions of quantum walks, correlated
random walks and random walks on tori, their series coefficients, and runs
the numerical verification suites.

Usage:
    walk-zeta zeta --config run.json --u 0.3 --N 4
    walk-zeta coeffs --model '{"family": "multistate_rw", "weights": {"-1": 0.5, "1": 0.5}}'
    walk-zeta verify --suite all
    walk-zeta simulate --config run.json --steps 20 --out mu.csv
"""

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional

import networkx
import numpy
import scipy

from . import __version__
from .coin_models import classify, model_from_config
from .config import (
    ENV_DENSE_CAP,
    ENV_LOG_LEVEL,
    ENV_N_QUAD,
    ENV_SERIAL,
    build_run_config,
    configure_logging,
    get_settings,
    load_environment,
    load_json,
)
from .exceptions import ConfigError, WalkZetaError
from .graph_zeta import graph_from_config
from .reporting import coefficient_rows, verification_rows, write_rows, zeta_rows
from .schemas import FORMATS, SUITES, RunConfig, TorusSpec
from .verification import SuiteOptions, run_suites
from .walk_operator import delta_state, measure, trajectory
from .zeta_engine import coefficient_table, zeta_report

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

ZETA_RESIDUAL_TOL = 1e-8
COEFF_DIFF_TOL = 1e-8
CONSERVATION_TOL = 1e-10
DEFAULT_SIM_N = 32


def print_banner():
    """Print the walk-zeta banner."""
    banner = f"""
╔═══════════════════════════════════════════════════════════════╗
║                        WALK-ZETA v{__version__:<28}║
║        Walk-type zeta functions on tori and graphs            ║
╚═══════════════════════════════════════════════════════════════╝
"""
    print(banner)


def _json_arg(value: Optional[str]) -> Optional[Dict[str, Any]]:
    """Inline JSON object or path to a JSON file."""
    if value is None:
        return None
    if value.lstrip().startswith("{"):
        try:
            data = json.loads(value)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"invalid inline JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise ConfigError("inline JSON must be an object")
        return data
    return load_json(Path(value))


def resolve_config(args: argparse.Namespace, command: str) -> RunConfig:
    """Merge ``--config`` with the flags given on the command line."""
    file_cfg = load_json(Path(args.config)) if getattr(args, "config", None) else {}
    overrides = {
        "model": _json_arg(getattr(args, "model", None)),
        "graph": _json_arg(getattr(args, "graph", None)),
        "u": getattr(args, "u", None),
        "N": getattr(args, "N", None),
        "n_quad": getattr(args, "n_quad", None),
        "r_max": getattr(args, "r_max", None),
        "a": getattr(args, "a", None),
        "steps": getattr(args, "steps", None),
        "p": getattr(args, "p", None),
        "suite": getattr(args, "suite", None),
        "out": getattr(args, "out", None),
        "format": getattr(args, "format", None),
        "serial": True if getattr(args, "serial", False) else None,
    }
    return build_run_config(command, file_cfg, overrides, get_settings())


def _fmt(z: complex) -> str:
    if abs(z.imag) < 1e-300:
        return f"{z.real:.12g}"
    return f"{z.real:.12g}{z.imag:+.12g}j"


def _emit(cfg: RunConfig, rows: List[Dict[str, Any]], meta: Dict[str, Any]) -> None:
    if cfg.out is not None:
        path = write_rows(cfg.out, rows, cfg.format, meta)
        print(f"\nReport written: {path}")


def cmd_zeta(args):
    """Evaluate the reciprocal zeta function at each u."""
    print_banner()
    cfg = resolve_config(args, "zeta")
    assert cfg.model is not None
    model = model_from_config(cfg.model)
    route = f"torus N={cfg.N}" if cfg.N is not None else f"quadrature n={cfg.n_quad}"
    print(f"Model: {model.model_id}")
    print(f"Route: {route}")
    print("-" * 60)

    reports = [
        zeta_report(model, u, N=cfg.N, n_quad=cfg.n_quad, serial=cfg.serial) for u in cfg.u
    ]
    failed = False
    for rep in reports:
        line = f"u={_fmt(rep.u):<16} zeta_inv={_fmt(rep.zeta_inv)}"
        for name, value in sorted(rep.residuals.items()):
            flag = "PASS" if value < ZETA_RESIDUAL_TOL else "FAIL"
            failed |= flag == "FAIL"
            line += f"  {name}={value:.2e} [{flag}]"
        print(line)

    _emit(cfg, zeta_rows(reports), {"model": model.to_dict(), "config": cfg.to_dict()})
    return EXIT_FAILED if failed else EXIT_OK


def cmd_coeffs(args):
    """Tabulate C_r by quadrature and by return matrix weights."""
    print_banner()
    cfg = resolve_config(args, "coeffs")
    assert cfg.model is not None
    model = model_from_config(cfg.model)
    print(f"Model: {model.model_id}")
    print(f"Quadrature points per axis: {cfg.n_quad}")
    print("-" * 60)
    print(f"{'r':>3}  {'quadrature':>24}  {'weight':>24}  {'|diff|':>10}")

    table = coefficient_table(model, cfg.r_max, cfg.n_quad, serial=cfg.serial)
    worst = 0.0
    for row in table:
        worst = max(worst, float(row["diff"]))  # type: ignore[arg-type]
        quad, weight = _fmt(row["quadrature"]), _fmt(row["weight"])  # type: ignore[arg-type]
        print(f"{row['r']:>3}  {quad:>24}  {weight:>24}  {row['diff']:>10.2e}")

    passed = worst < COEFF_DIFF_TOL
    print(f"\nRoute agreement: {'PASS' if passed else 'FAIL'} (max |diff| {worst:.2e})")
    _emit(cfg, coefficient_rows(table), {"model": model.to_dict(), "config": cfg.to_dict()})
    return EXIT_OK if passed else EXIT_FAILED


def cmd_verify(args):
    """Run verification suites."""
    print_banner()
    cfg = resolve_config(args, "verify")
    graphs = [graph_from_config(cfg.graph)] if cfg.graph else None
    print(f"Suite: {cfg.suite}")
    if graphs:
        print(f"Graph: {graphs[0].name} (n={graphs[0].n}, degree={graphs[0].degree})")
    options = SuiteOptions(serial=cfg.serial, a_grid=tuple(cfg.a), graphs=graphs)
    result = run_suites([cfg.suite], options=options)

    for suite in result.suites:
        status = "PASS" if suite.passed else "FAIL"
        print(f"\n{suite.suite}: {status} ({len(suite.checks)} checks)")
        for check in suite.checks:
            if args.verbose or not check.passed:
                status = "PASS" if check.passed else "FAIL"
                residual = f"{check.max_residual:.2e} (tol {check.tolerance:.0e})"
                print(f"  [{status}] {check.name}: {residual}")
                for detail in check.details:
                    print(f"      {detail}")

    print()
    print("=" * 40)
    print(f"OVERALL: {'PASS' if result.overall_passed else 'FAIL'}")
    print("=" * 40)
    if result.issues:
        print("\nIssues found:")
        for issue in result.issues:
            print(f"  - {issue}")

    _emit(cfg, verification_rows(result), {"config": cfg.to_dict()})
    return EXIT_OK if result.overall_passed else EXIT_FAILED


def cmd_simulate(args):
    """Evolve a localized start state and emit mu_n(x) rows."""
    print_banner()
    cfg = resolve_config(args, "simulate")
    assert cfg.model is not None
    model = model_from_config(cfg.model)
    torus = TorusSpec(d=model.lattice_dim, N=cfg.N or DEFAULT_SIM_N)
    conserved = classify(model).conserved_norm
    p = cfg.p or conserved or 2
    weight = 1.0 / numpy.sqrt(model.d_c) if p == 2 else 1.0 / model.d_c
    start = delta_state(torus, model.d_c, amplitudes=[weight] * model.d_c)

    print(f"Model: {model.model_id}")
    print(f"Torus: d={torus.d}, N={torus.N}, steps={cfg.steps}, p={p}")
    print("-" * 60)

    rows: List[Dict[str, Any]] = []
    totals: List[float] = []
    sites = numpy.indices(torus.shape).reshape(torus.d, -1).T
    for n, state in enumerate(trajectory(model, start, cfg.steps)):
        mu = measure(state, p).ravel()
        totals.append(float(mu.sum()))
        for site, value in zip(sites, mu):
            row: Dict[str, Any] = {"n": n}
            if torus.d == 1:
                row["x"] = int(site[0])
            else:
                row.update({f"x{j + 1}": int(c) for j, c in enumerate(site)})
            row["mu"] = float(value)
            rows.append(row)

    drift = max(abs(t - totals[0]) for t in totals)
    print(f"Total measure: start {totals[0]:.12g}, end {totals[-1]:.12g}")
    print(f"Max drift: {drift:.2e}")
    failed = False
    if conserved == p:
        failed = drift >= CONSERVATION_TOL
        print(f"Conservation (p={p}): {'FAIL' if failed else 'PASS'}")
    else:
        print("Conservation: not asserted for this model and p")

    _emit(cfg, rows, {"model": model.to_dict(), "config": cfg.to_dict()})
    return EXIT_FAILED if failed else EXIT_OK


def cmd_info(args):
    """Show information about walk-zeta and environment."""
    print_banner()
    settings = get_settings()

    print("Environment:")
    print(f"  Python: {sys.version.split()[0]}")
    print(f"  numpy: {numpy.__version__}")
    print(f"  scipy: {scipy.__version__}")
    print(f"  networkx: {networkx.__version__}")
    print(f"  Package location: {Path(__file__).parent}")

    print("\nSettings:")
    print(f"  {ENV_DENSE_CAP}: {settings.dense_cap}")
    print(f"  {ENV_N_QUAD}: {settings.n_quad}")
    print(f"  {ENV_SERIAL}: {'on' if settings.serial else 'off'}")
    print(f"  {ENV_LOG_LEVEL}: {settings.log_level}")

    print("\nVerification suites:")
    for suite in SUITES:
        print(f"  - {suite}")

    print("\nUsage:")
    print("  walk-zeta zeta --config run.json --u 0.3")
    print("  walk-zeta coeffs --config run.json --r-max 12")
    print("  walk-zeta verify --suite all")
    print("  walk-zeta simulate --config run.json --steps 50")
    return EXIT_OK


def _add_common(p: argparse.ArgumentParser, model: bool = True) -> None:
    p.add_argument("-c", "--config", help="Run config JSON file")
    if model:
        p.add_argument("-m", "--model", help="Model config: inline JSON object or path")
    p.add_argument("-o", "--out", help="Report file (default: print only)")
    p.add_argument("-f", "--format", choices=FORMATS, help="Report format (default: csv)")
    p.add_argument("--serial", action="store_true", help="Evaluate grids in one thread")
    p.add_argument("-v", "--verbose", action="store_true", help="Verbose output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="walk-zeta",
        description="walk-zeta - walk-type zeta functions and Konno-Sato checks",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Inverse zeta of the simple random walk in the N -> infinity limit
  walk-zeta zeta -m '{"family": "multistate_rw", "weights": {"-1": 0.5, "1": 0.5}}' --u 0.6 --n-quad 4096

  # Series coefficients by two routes
  walk-zeta coeffs -m '{"family": "three_state_qw", "eta": "grover", "shift": "f"}' --r-max 12

  # All verification suites, CSV report
  walk-zeta verify --suite all -o verify.csv

  # Show environment info
  walk-zeta info
        """,
    )
    parser.add_argument(
        "-V", "--version",
        action="version",
        version=f"walk-zeta {__version__}",
    )

    subparsers = parser.add_subparsers(dest="command", help="Available commands")

    zeta_parser = subparsers.add_parser(
        "zeta", help="Evaluate the inverse zeta function", aliases=["z"]
    )
    _add_common(zeta_parser)
    zeta_parser.add_argument("--u", nargs="+", help="Spectral parameters (e.g. 0.3 0.1+0.2j)")
    zeta_parser.add_argument("--N", type=int, help="Torus size; omit for the N -> infinity limit")
    zeta_parser.add_argument("--n-quad", type=int, help="Quadrature points per axis")
    zeta_parser.set_defaults(func=cmd_zeta)

    coeffs_parser = subparsers.add_parser("coeffs", help="Series coefficients C_r", aliases=["c"])
    _add_common(coeffs_parser)
    coeffs_parser.add_argument("--r-max", type=int, help="Largest r (default: 12)")
    coeffs_parser.add_argument("--n-quad", type=int, help="Quadrature points per axis")
    coeffs_parser.set_defaults(func=cmd_coeffs)

    verify_parser = subparsers.add_parser(
        "verify", help="Run verification suites", aliases=["ver"]
    )
    _add_common(verify_parser, model=False)
    verify_parser.add_argument("--suite", choices=SUITES, help="Suite to run (default: all)")
    verify_parser.add_argument("--a", nargs="+", type=float, help="Interpolation parameters a")
    verify_parser.add_argument("-g", "--graph", help="Graph config: inline JSON object or path")
    verify_parser.set_defaults(func=cmd_verify)

    sim_parser = subparsers.add_parser(
        "simulate", help="Evolve a localized state", aliases=["sim"]
    )
    _add_common(sim_parser)
    sim_parser.add_argument("--N", type=int, help=f"Torus size (default: {DEFAULT_SIM_N})")
    sim_parser.add_argument("--steps", type=int, help="Number of steps (default: 20)")
    sim_parser.add_argument("--p", type=int, choices=[1, 2], help="Measure exponent override")
    sim_parser.set_defaults(func=cmd_simulate)

    info_parser = subparsers.add_parser("info", help="Show environment and configuration info")
    info_parser.set_defaults(func=cmd_info, verbose=False)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point for the CLI."""
    parser = build_parser()
    args = parser.parse_args(argv)

    if not args.command:
        parser.print_help()
        return EXIT_OK

    try:
        settings = load_environment()
        configure_logging("DEBUG" if args.verbose else settings.log_level)
        return args.func(args)
    except WalkZetaError as exc:
        print(f"Error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except KeyboardInterrupt:
        print("\nCancelled.", file=sys.stderr)
        return EXIT_FAILED


def main_sync():
    """Synchronous entry point."""
    sys.exit(main())


if __name__ == "__main__":
    main_sync()
