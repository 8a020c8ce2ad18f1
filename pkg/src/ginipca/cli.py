"""Command-line interface.

Subcommands: pca, significance, simulate, cars, version. Exit codes: 0 on
success, 1 for usage or parameter problems, 2 for data problems, 3 for
numeric failures. GINI_PCA_LOG (error, info, debug) controls verbosity.
"""

import argparse
import json
import logging
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .data import cars_dataset, load_csv
from .diagnostics import act, significance_table
from .errors import (
    ContractError,
    CsvParseError,
    DegenerateColumnError,
    DimensionError,
    GiniPcaError,
    NumericError,
    ParameterError,
)
from .pipeline import fit_classic_pca, fit_gini_pca, method_label
from .report import (
    write_act_csv,
    write_eigen_csv,
    write_eigen_json,
    write_projection_csv,
    write_rct_csv,
    write_significance_csv,
    write_sim_csv,
    write_sim_report,
)
from .simharness import DEFAULT_SEED, SimConfig, run_algorithm1
from .svg import contribution_bars, projection_scatter

log = logging.getLogger(__name__)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that exits 1 on usage errors instead of 2."""

    def exit(self, status=0, message=None):
        if message:
            self._print_message(message, sys.stderr)
        raise SystemExit(1 if status else 0)


def build_parser():
    parser = _Parser(
        prog="gini-pca",
        description="Rank-based principal component analysis with a "
        "variance baseline, significance diagnostics and a contamination "
        "benchmark.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command", required=True)

    def add_fit_flags(p, default_nu, default_method):
        p.add_argument("--nu", default=default_nu,
                       help=f"comma-separated Gini orders (default {default_nu})")
        p.add_argument("--method", default=default_method,
                       help=f"comma-separated subset of gini,variance "
                            f"(default {default_method})")
        p.add_argument("--output-dir", default=".", help="where to write results")
        p.add_argument("--axes", type=int, default=2,
                       help="leading axes in projections and plots (default 2)")

    pca = sub.add_parser("pca", help="fit axes and write eigen/contribution tables")
    pca.add_argument("--input", required=True, help="CSV file to analyze")
    pca.add_argument("--no-row-labels", action="store_true",
                     help="treat the first CSV column as data, not labels")
    add_fit_flags(pca, "2", "gini")
    pca.add_argument("--format", default="csv",
                     help="comma-separated subset of csv,json (default csv)")
    pca.add_argument("--svg", action="store_true", help="also render SVG plots")
    pca.set_defaults(func=_cmd_pca)

    sig = sub.add_parser("significance",
                         help="jackknife significance tests of axis-variable "
                              "correlations")
    sig.add_argument("--input", required=True, help="CSV file to analyze")
    sig.add_argument("--no-row-labels", action="store_true",
                     help="treat the first CSV column as data, not labels")
    add_fit_flags(sig, "2", "gini")
    sig.set_defaults(func=_cmd_significance)

    sim = sub.add_parser("simulate", help="run the contamination benchmark")
    sim.add_argument("--config", required=True, help="JSON benchmark settings")
    sim.add_argument("--seed", type=int, default=None,
                     help="override the config seed")
    sim.add_argument("--jobs", type=int, default=1,
                     help="worker processes (default 1; results are "
                          "identical for any value)")
    sim.add_argument("--output", default="sim_report.json",
                     help="report path (default sim_report.json)")
    sim.add_argument("--csv", default=None,
                     help="also write a per-axis CSV table here")
    sim.set_defaults(func=_cmd_simulate)

    cars = sub.add_parser("cars", help="full analysis of the bundled cars table")
    add_fit_flags(cars, "2,4,6", "gini,variance")
    cars.add_argument("--format", default="csv",
                      help="comma-separated subset of csv,json (default csv)")
    cars.add_argument("--svg", action="store_true", help="also render SVG plots")
    cars.set_defaults(func=_cmd_cars)

    ver = sub.add_parser("version", help="print the package version")
    ver.set_defaults(func=lambda args: print(__version__) or 0)

    return parser


def run_cli(argv=None):
    """Parse argv and execute one subcommand; returns the exit code."""
    _configure_logging()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.func(args) or 0
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (CsvParseError, DegenerateColumnError, DimensionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ContractError, NumericError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GiniPcaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run_cli())


def _configure_logging():
    level = os.environ.get("GINI_PCA_LOG", "").strip().lower()
    chosen = {"error": logging.ERROR, "info": logging.INFO,
              "debug": logging.DEBUG}.get(level, logging.WARNING)
    logging.basicConfig(level=chosen, format="%(levelname)s %(name)s: %(message)s")


def _parse_list(text, what):
    items = [part.strip() for part in text.split(",") if part.strip()]
    if not items:
        raise ParameterError(f"no {what} given")
    return items


def _fit_models(dm, method_arg, nu_arg):
    methods = _parse_list(method_arg, "methods")
    try:
        nus = [float(s) for s in _parse_list(nu_arg, "nu values")]
    except ValueError as exc:
        raise ParameterError(f"bad --nu value: {exc}") from None
    models = []
    for m in methods:
        if m == "gini":
            models.extend(fit_gini_pca(dm, nu) for nu in nus)
        elif m == "variance":
            models.append(fit_classic_pca(dm))
        else:
            raise ParameterError(f"unknown method {m!r} (expected gini or variance)")
    return models


def _outdir(args):
    path = Path(args.output_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_fit_outputs(models, args, outdir):
    formats = set(_parse_list(args.format, "formats"))
    unknown = formats - {"csv", "json"}
    if unknown:
        raise ParameterError(f"unknown format {sorted(unknown)[0]!r}")
    written = []
    if "csv" in formats:
        path = outdir / "eigen.csv"
        write_eigen_csv(models, path)
        written.append(path)
    if "json" in formats:
        path = outdir / "eigen.json"
        write_eigen_json(models, path)
        written.append(path)
    axes = list(range(min(args.axes, models[0].n_axes)))
    for model in models:
        label = method_label(model)
        for name, writer in (
            (f"act_{label}.csv", write_act_csv),
            (f"rct_{label}.csv", write_rct_csv),
        ):
            path = outdir / name
            writer(model, path, axes=axes)
            written.append(path)
        path = outdir / f"projection_{label}.csv"
        write_projection_csv(model, path, axes=axes[:2])
        written.append(path)
        if args.svg:
            written.extend(_write_svgs(model, label, axes, outdir))
    for path in written:
        print(f"wrote {path}")
    return 0


def _write_svgs(model, label, axes, outdir):
    written = []
    shares = model.eigen.shares
    if len(axes) >= 2:
        a, b = axes[0], axes[1]
        svg_text = projection_scatter(
            model.scores[:, a].tolist(),
            model.scores[:, b].tolist(),
            model.data.row_labels,
            f"axis {a + 1} ({shares[a]:.1f}%)",
            f"axis {b + 1} ({shares[b]:.1f}%)",
            f"{label}: projection on axes {a + 1} and {b + 1}",
        )
        path = outdir / f"projection_{label}.svg"
        path.write_text(svg_text, encoding="utf-8")
        written.append(path)
    contributions = act(model)
    uniform = 100.0 / model.n_obs
    for a in axes:
        column = contributions[:, a]
        if not np.all(np.isfinite(column)):
            log.info("axis %d of %s is degenerate; skipping its plot", a + 1, label)
            continue
        svg_text = contribution_bars(
            (100.0 * column).tolist(),
            model.data.row_labels,
            uniform,
            f"{label}: absolute contributions to axis {a + 1}",
        )
        path = outdir / f"act_{label}_axis{a + 1}.svg"
        path.write_text(svg_text, encoding="utf-8")
        written.append(path)
    return written


def _cmd_pca(args):
    dm = load_csv(args.input, has_row_labels=not args.no_row_labels)
    models = _fit_models(dm, args.method, args.nu)
    return _write_fit_outputs(models, args, _outdir(args))


def _cmd_significance(args):
    dm = load_csv(args.input, has_row_labels=not args.no_row_labels)
    models = _fit_models(dm, args.method, args.nu)
    outdir = _outdir(args)
    axes = list(range(min(args.axes, models[0].n_axes)))
    for model in models:
        table = significance_table(model, axes=axes)
        path = outdir / f"significance_{method_label(model)}.csv"
        write_significance_csv(model, table, path)
        print(f"wrote {path}")
    return 0


def _cmd_cars(args):
    dm = cars_dataset()
    models = _fit_models(dm, args.method, args.nu)
    outdir = _outdir(args)
    _write_fit_outputs(models, args, outdir)
    axes = list(range(min(args.axes, models[0].n_axes)))
    for model in models:
        table = significance_table(model, axes=axes)
        path = outdir / f"significance_{method_label(model)}.csv"
        write_significance_csv(model, table, path)
        print(f"wrote {path}")
    return 0


def _theta_values(raw):
    if isinstance(raw, dict):
        extra = set(raw) - {"start", "stop", "step"}
        if extra:
            raise ParameterError(f"unknown theta_grid key {sorted(extra)[0]!r}")
        try:
            start = float(raw["start"])
            stop = float(raw["stop"])
        except KeyError as exc:
            raise ParameterError(f"theta_grid needs {exc.args[0]!r}") from None
        step = float(raw.get("step", 1.0))
        if step <= 0.0:
            raise ParameterError(f"theta_grid step must be positive, got {step:g}")
        values = []
        v = start
        while v <= stop + 1e-9:
            values.append(v)
            v += step
        return values
    if isinstance(raw, (list, tuple)):
        return [float(v) for v in raw]
    raise ParameterError("theta_grid must be a list or a start/stop/step object")


def _load_sim_config(path, seed_override):
    try:
        with open(path, encoding="utf-8") as fh:
            raw = json.load(fh)
    except OSError as exc:
        raise CsvParseError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CsvParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise CsvParseError(f"{path}: expected a JSON object")
    known = {
        "rho", "theta_grid", "n_obs", "nus", "include_variance",
        "seed", "axes_tracked", "asymmetry_rule",
    }
    unknown = set(raw) - known
    if unknown:
        raise ParameterError(f"unknown config key {sorted(unknown)[0]!r}")
    if "rho" not in raw:
        raise ParameterError("config needs 'rho'")
    if "theta_grid" not in raw:
        raise ParameterError("config needs 'theta_grid'")
    seed = seed_override if seed_override is not None else raw.get("seed", DEFAULT_SEED)
    return SimConfig(
        rho=raw["rho"],
        theta_grid=_theta_values(raw["theta_grid"]),
        n_obs=int(raw.get("n_obs", 500)),
        nus=tuple(float(v) for v in raw.get("nus", (2.0, 4.0, 6.0))),
        include_variance=bool(raw.get("include_variance", True)),
        seed=int(seed),
        axes_tracked=int(raw.get("axes_tracked", 2)),
        asymmetry_rule=raw.get("asymmetry_rule", "lower"),
    )


def _cmd_simulate(args):
    config = _load_sim_config(args.config, args.seed)
    if args.jobs < 1:
        raise ParameterError(f"--jobs must be at least 1, got {args.jobs}")
    print(f"seed: {config.seed}")
    report = run_algorithm1(config, jobs=args.jobs)
    write_sim_report(report, args.output)
    print(f"wrote {args.output}")
    if args.csv:
        write_sim_csv(report, args.csv)
        print(f"wrote {args.csv}")
    return 0
