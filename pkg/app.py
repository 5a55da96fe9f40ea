"""
Command-line entry point for verifying the starlike class S*_tau,
tau(z) = 1 + arctan z.

Subcommands:
    verify        run every verifier, write report.json and report.md
    radius-table  the ten sharp radii
    coeff-bounds  coefficient and Hankel bounds against search-attained values
    hankel-max    one sharpness search as JSON
    plot          boundary curves as CSV polylines and SVG
    growth-table  growth, covering and rotation bounds per radius

Exit codes: 0 all checks pass, 1 a check failed, 2 usage or configuration error.
"""
import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Dict, List, Optional

from core.extremal import covering_radius, growth_table
from core.hankel import BOUNDS, PRINTED_BOUNDS, a5_witness, maximize_functional
from core.radius import radius_catalog
from utils.plotting import export_plot, plot_targets
from utils.reporting import (
    ReportMeta,
    VerificationReport,
    coeff_bounds_table,
    growth_frame,
    items_frame,
    radius_table,
    render_table,
    to_json,
    to_markdown,
    write_report,
)
from verifiers import REGISTRY

logger = logging.getLogger("stau")

COEFF_TARGETS = ("a2", "a3", "a4", "a5", "FS", "H2", "H3")
DEFAULT_RADII = "0.1,0.25,0.5,0.75,0.9,0.95,0.99"


def _load_config():
    # Config validates the environment at import time
    from config import Config

    return Config


def _parse_overrides(raw: Optional[str]) -> Dict[str, float]:
    if not raw:
        return {}
    try:
        overrides = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ValueError(f"--tol-overrides is not valid JSON: {e}") from None
    if not isinstance(overrides, dict):
        raise ValueError("--tol-overrides must be a JSON object of item name -> tolerance")
    return {str(name): float(tol) for name, tol in overrides.items()}


# Same minimums as the STAU_* settings in config.py
FLAG_MINIMUMS = {"order": 1, "grid": 41, "seed": 0, "starts": 1, "samples": 1}


def _check_flags(args: argparse.Namespace) -> None:
    for flag, minimum in FLAG_MINIMUMS.items():
        value = getattr(args, flag, None)
        if value is not None and value < minimum:
            raise ValueError(f"--{flag} must be >= {minimum}, got {value}")


def verifier_settings(config, args: argparse.Namespace) -> Dict[str, Dict[str, Any]]:
    """Per-verifier configuration from Config.VERIFIERS with the CLI flags applied."""
    tolerances = _parse_overrides(getattr(args, "tol_overrides", None))
    settings = {}
    for name, defaults in config.VERIFIERS.items():
        merged = dict(defaults)
        merged["seed"] = args.seed
        if name == "extremal":
            merged["order"] = args.order
        if name == "hankel":
            merged["grid_n"] = args.grid
            if args.starts is not None:
                merged["starts"] = args.starts
            if args.samples is not None:
                merged["samples"] = args.samples
        merged["tolerances"] = tolerances
        settings[name] = merged
    return settings


def run_verifiers(names: List[str], settings: Dict[str, Dict[str, Any]], max_workers: int) -> List[Dict[str, Any]]:
    """
    Run verifiers concurrently; one that raises is recorded as aborted.

    Returns:
        Verifier results in completion order (the report sorts items later)
    """
    results = []
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_name = {executor.submit(REGISTRY[name](settings.get(name)).process): name for name in names}
        for future in as_completed(future_to_name):
            name = future_to_name[future]
            try:
                result = future.result()
            except Exception as e:
                logger.warning("verifier %s failed: %s", name, e)
                result = {"ok": False, "items": [], "error": str(e)}
            result["verifier"] = name
            logger.info("verifier %s: %s (%d items)", name, "ok" if result["ok"] else "FAILED", len(result["items"]))
            results.append(result)
    return results


def cmd_verify(args: argparse.Namespace, config) -> int:
    names = args.only or list(REGISTRY)
    unknown = [name for name in names if name not in REGISTRY]
    if unknown:
        raise ValueError(f"unknown verifier(s) {unknown}; known: {sorted(REGISTRY)}")
    results = run_verifiers(names, verifier_settings(config, args), config.MAX_WORKERS)
    meta = ReportMeta(series_order=args.order, grid_n=args.grid, seed=args.seed, version=config.VERSION)
    report = VerificationReport.from_results(meta, results)
    write_report(report, args.out)

    if args.format == "json":
        sys.stdout.write(to_json(report))
    elif args.format == "md":
        sys.stdout.write(to_markdown(report))
    else:
        sys.stdout.write(render_table(items_frame(report), "csv"))

    counts = report.counts()
    logger.info("%d passed, %d failed, %d skipped", counts["pass"], counts["fail"], counts["skip"])
    logger.info("item runtime %.0f ms in total", sum(item.runtime_ms for item in report.items))
    for item in report.items:
        logger.debug("%s: %.1f ms", item.name, item.runtime_ms)
    for item in report.discrepancies():
        logger.warning("printed value of %s does not reproduce: %s vs %s", item.name, item.printed_value, item.computed_value)
    return 0 if report.ok else 1


def cmd_radius_table(args: argparse.Namespace, config) -> int:
    sys.stdout.write(render_table(radius_table(radius_catalog()), args.format))
    return 0


def _search_all(targets, starts: int, seed: int, max_workers: int) -> List[Any]:
    found = {}
    with ThreadPoolExecutor(max_workers=max_workers) as executor:
        future_to_target = {executor.submit(maximize_functional, target, starts, seed): target for target in targets}
        for future in as_completed(future_to_target):
            found[future_to_target[future]] = future.result()
    return [found[target] for target in targets]


def cmd_coeff_bounds(args: argparse.Namespace, config) -> int:
    starts = args.starts if args.starts is not None else config.STARTS
    searches = _search_all(COEFF_TARGETS, starts, args.seed, config.MAX_WORKERS)
    frame = coeff_bounds_table(searches, PRINTED_BOUNDS, a5_witness())
    sys.stdout.write(render_table(frame, args.format))
    return 0 if bool(frame["within_bound"].all()) else 1


def cmd_hankel_max(args: argparse.Namespace, config) -> int:
    starts = args.starts if args.starts is not None else config.STARTS
    result = maximize_functional(args.target, starts, args.seed)
    point = result.argmax
    payload = {
        "target": result.target,
        "bound": result.bound,
        "attained": result.attained,
        "argmax": {
            "p1": point.p1,
            "gamma": [point.gamma.real, point.gamma.imag],
            "eta": [point.eta.real, point.eta.imag],
            "rho": [point.rho.real, point.rho.imag],
        },
        "seed": result.seed,
        "evaluations": result.evaluations,
    }
    sys.stdout.write(json.dumps(payload, indent=2) + "\n")
    return 0 if result.attained <= result.bound + 1e-9 else 1


def cmd_plot(args: argparse.Namespace, config) -> int:
    exported = export_plot(args.which, args.out, args.r, svg=not args.no_svg)
    for path in exported["paths"]:
        print(path)
    return 0


def cmd_growth_table(args: argparse.Namespace, config) -> int:
    try:
        radii = [float(value) for value in args.radii.split(",") if value.strip()]
    except ValueError:
        raise ValueError(f"--radii must be a comma-separated list of numbers, got {args.radii!r}") from None
    frame = growth_frame(growth_table(radii, args.order))
    sys.stdout.write(render_table(frame, args.format))
    logger.info("covering radius exp(-G) = %.17g", covering_radius())
    return 0


COMMANDS = {
    "verify": cmd_verify,
    "radius-table": cmd_radius_table,
    "coeff-bounds": cmd_coeff_bounds,
    "hankel-max": cmd_hankel_max,
    "plot": cmd_plot,
    "growth-table": cmd_growth_table,
}


def build_parser(config) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stau", description="Numerical verification of the starlike class S*_tau")
    parser.add_argument("--log-level", default=config.LOG_LEVEL, choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=("json", "md", "csv"), default_format="md"):
        p.add_argument("--order", type=int, default=config.SERIES_ORDER, help="series truncation order")
        p.add_argument("--grid", type=int, default=config.GRID_N, help="surrogate grid points per axis")
        p.add_argument("--seed", type=int, default=config.SEED)
        p.add_argument("--starts", type=int, default=None, help="multistart count for the sharpness searches")
        p.add_argument("--samples", type=int, default=None, help="random samples for the property checks")
        p.add_argument("--tol-overrides", default=None, help='JSON object, e.g. {"radius.convexity_radius.gamma_0": 1e-4}')
        p.add_argument("--format", choices=formats, default=default_format)
        p.add_argument("--out", default=config.OUT_DIR, help="output directory")

    verify = sub.add_parser("verify", help="run the full verification suite")
    common(verify)
    verify.add_argument("--only", nargs="+", metavar="VERIFIER", help=f"subset of {sorted(REGISTRY)}")

    common(sub.add_parser("radius-table", help="print the ten sharp radii"), default_format="csv")
    common(sub.add_parser("coeff-bounds", help="print bounds against search-attained values"), default_format="csv")

    hankel = sub.add_parser("hankel-max", help="maximize one functional over Caratheodory points")
    common(hankel, formats=("json",), default_format="json")
    hankel.add_argument("--target", choices=sorted(BOUNDS), required=True)

    plot = sub.add_parser("plot", help="write boundary curves for a target")
    common(plot)
    plot.add_argument("--which", choices=plot_targets(), default="strip")
    plot.add_argument("--r", type=float, default=None, help="radius; defaults to the sharp radius of the target")
    plot.add_argument("--no-svg", action="store_true")

    growth = sub.add_parser("growth-table", help="print growth and rotation bounds")
    common(growth, default_format="csv")
    growth.add_argument("--radii", default=DEFAULT_RADII)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    try:
        config = _load_config()
    except ValueError as e:
        print(f"configuration error: {e}", file=sys.stderr)
        return 2

    parser = build_parser(config)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        _check_flags(args)
        return COMMANDS[args.command](args, config)
    except (ValueError, KeyError) as e:
        logger.error("%s: %s", type(e).__name__, e)
        return 2
    except OSError as e:
        logger.error("I/O error: %s", e)
        return 2


if __name__ == "__main__":
    sys.exit(main())
