"""Command-line driver: run suites from a TOML config, list registered
checks, or inspect a model's warping data on a grid.

Exit codes: 0 all checks pass, 1 at least one check failed, 2 config or
usage error.
"""

import argparse
import csv
import json
import os
import sys
import time
try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timezone
from importlib import resources
from importlib.metadata import version as pkg_version

import numpy as np

from . import models, registry

__all__ = ["main", "run_config", "default_config_path"]

EXIT_PASS, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2
OVERRIDE_KEYS = ("seed", "count", "nodes", "tolerance", "eps")


class ConfigError(Exception):
    pass


def default_config_path():
    """Path of the bundled default configuration."""
    return resources.files("warpcurv").joinpath("data/default.toml")


def _load_config(path):
    try:
        with open(path, "rb") as fh:
            return tomllib.load(fh)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}")
    except tomllib.TOMLDecodeError as exc:
        raise ConfigError(f"config parse error in {path}: {exc}")


def _validate(config):
    run = config.get("run", {})
    if not isinstance(run, dict):
        raise ConfigError("key 'run' must be a table")
    for key in run:
        if key not in ("output_dir", "seed"):
            raise ConfigError(f"unknown key 'run.{key}'")
    suites_cfg = config.get("suite", [])
    if not suites_cfg:
        raise ConfigError("config declares no [[suite]] tables")
    known = registry.suites()
    for i, entry in enumerate(suites_cfg):
        where = f"suite[{i}]"
        name = entry.get("name")
        if name is None:
            raise ConfigError(f"missing key '{where}.name'")
        if name not in known:
            raise ConfigError(
                f"unknown suite {name!r} at '{where}.name'; available: {known}")
        for key, value in entry.items():
            if key == "name":
                continue
            if key == "checks":
                valid = [c.name for c in registry.get_suite(name)]
                for check in value:
                    if check not in valid:
                        raise ConfigError(
                            f"unknown check {check!r} at '{where}.checks'; "
                            f"suite {name!r} provides: {valid}")
                continue
            if key not in OVERRIDE_KEYS:
                raise ConfigError(f"unknown key '{where}.{key}'")
            if key == "tolerance" and not value > 0:
                raise ConfigError(f"'{where}.tolerance' must be positive")
            if key == "count" and value < 1:
                raise ConfigError(f"'{where}.count' must be >= 1")
            if key == "nodes" and value < 16:
                raise ConfigError(f"'{where}.nodes' must be >= 16")
    return run, suites_cfg


def _run_one_suite(entry, global_seed):
    overrides = {k: entry[k] for k in OVERRIDE_KEYS if k in entry}
    if global_seed is not None and "seed" not in overrides:
        overrides["seed"] = global_seed
    wanted = entry.get("checks")
    records = []
    for check in registry.get_suite(entry["name"]):
        if wanted is not None and check.name not in wanted:
            continue
        for report in check.runner(overrides):
            rec = report.to_dict()
            rec["check"] = check.name
            rec["anchor"] = check.anchor
            records.append(rec)
    return {"name": entry["name"], "overrides": overrides, "checks": records}


def _write_csv(path, records):
    fields = ("name", "check", "anchor", "kind", "lhs", "rhs", "residual",
              "tolerance", "pass")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(fields)
        for rec in records:
            writer.writerow([
                "%.17e" % rec[f] if isinstance(rec[f], float) else rec[f]
                for f in fields])


def run_config(path, workers=None):
    """Execute all suites of a config; returns the process exit code."""
    config = _load_config(path)
    run_cfg, suites_cfg = _validate(config)
    out_dir = run_cfg.get("output_dir", "warpcurv-out")
    os.makedirs(out_dir, exist_ok=True)
    if workers is None:
        workers = int(os.environ.get("WARPCURV_WORKERS", "1"))
    started = time.monotonic()
    seed = run_cfg.get("seed")
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(
                lambda e: _run_one_suite(e, seed), suites_cfg))
    else:
        results = [_run_one_suite(e, seed) for e in suites_cfg]

    all_pass = all(rec["pass"] for suite in results for rec in suite["checks"])
    report = {
        "config": config,
        "versions": {
            "warpcurv": pkg_version("warpcurv"),
            "numpy": np.__version__,
            "python": sys.version.split()[0],
        },
        "pass": all_pass,
        "suites": results,
        "timestamp": {
            "started_utc": datetime.now(timezone.utc).isoformat(),
            "wall_seconds": time.monotonic() - started,
        },
    }
    with open(os.path.join(out_dir, "report.json"), "w") as fh:
        json.dump(report, fh, indent=2, sort_keys=True)
        fh.write("\n")
    for suite in results:
        _write_csv(os.path.join(out_dir, f"{suite['name']}.csv"),
                   suite["checks"])

    failed = [rec for suite in results for rec in suite["checks"]
              if not rec["pass"]]
    total = sum(len(suite["checks"]) for suite in results)
    print(f"{total - len(failed)}/{total} checks passed; report in {out_dir}/")
    if failed:
        print("failed checks (name, residual, tolerance):")
        for rec in failed:
            print(f"  {rec['name']}  {rec['residual']:.3e}  {rec['tolerance']:.1e}")
    return EXIT_PASS if all_pass else EXIT_FAIL


def list_checks():
    rows = [(c.name, c.suite, c.anchor) for c in registry.REGISTRY]
    widths = [max(len(r[i]) for r in rows) for i in range(3)]
    header = ("check", "suite", "anchor")
    print("  ".join(h.ljust(w) for h, w in zip(header, widths)))
    for row in rows:
        print("  ".join(v.ljust(w) for v, w in zip(row, widths)))
    return EXIT_PASS


def model_inspect(name, n, r_lo, r_hi, grid, params):
    try:
        model = models.get_model(name, n, **params)
    except (KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    span = model.r_max - model.r_min if np.isfinite(model.r_max) else 3.0
    lo = r_lo if r_lo is not None else model.r_min + 0.05 * span
    hi = r_hi if r_hi is not None else model.r_min + 0.95 * span
    rs = np.linspace(lo, hi, grid)
    writer = csv.writer(sys.stdout)
    writer.writerow(("r", "lambda", "V", "lambda2", "c2_quantity"))
    for r in rs:
        lam, dl, d2l = model.lam(r), model.dlam(r), model.d2lam(r)
        c2 = d2l / lam + (model.K - dl ** 2) / lam ** 2
        writer.writerow(["%.17e" % v for v in (r, lam, dl, d2l, c2)])
    return EXIT_PASS


def _parse_params(pairs):
    out = {}
    for pair in pairs or ():
        if "=" not in pair:
            raise ConfigError(f"--param expects key=value, got {pair!r}")
        key, value = pair.split("=", 1)
        out[key] = float(value)
    return out


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="warpcurv",
        description="numerical verification of curvature identities and "
                    "inequalities for hypersurfaces in warped products")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute the suites of a TOML config")
    p_run.add_argument("config", nargs="?", default=None,
                       help="config path (default: bundled configuration)")
    p_run.add_argument("--workers", type=int, default=None,
                       help="worker threads (default: WARPCURV_WORKERS or 1)")

    sub.add_parser("list-checks", help="print the check registry")

    p_mi = sub.add_parser("model-inspect", help="print model data as CSV")
    p_mi.add_argument("name")
    p_mi.add_argument("--n", type=int, default=4)
    p_mi.add_argument("--r-lo", type=float, default=None)
    p_mi.add_argument("--r-hi", type=float, default=None)
    p_mi.add_argument("--grid", type=int, default=101)
    p_mi.add_argument("--param", action="append", default=None,
                      help="model parameter as key=value (repeatable)")

    args = parser.parse_args(argv)
    try:
        if args.command == "run":
            path = args.config if args.config is not None else default_config_path()
            return run_config(path, args.workers)
        if args.command == "list-checks":
            return list_checks()
        return model_inspect(args.name, args.n, args.r_lo, args.r_hi,
                             args.grid, _parse_params(args.param))
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
