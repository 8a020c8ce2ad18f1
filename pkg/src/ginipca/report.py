"""Serialization of fitted models and benchmark reports.

All writers are deterministic: no timestamps, keys sorted in JSON, floats
written with repr so every digit survives a round trip.
"""

import csv
import json
import math

from .diagnostics import act, act_tilde, rct
from .pipeline import method_label


def _fmt(value):
    """Full-precision text for one numeric cell."""
    return repr(float(value))


def eigen_rows(models):
    """One dict per (method, axis) with eigenvalue, mu and share."""
    rows = []
    for model in models:
        label = method_label(model)
        nu = model.params.nu if model.params is not None else None
        for k in range(model.n_axes):
            rows.append(
                {
                    "method": label,
                    "nu": nu,
                    "axis": k + 1,
                    "eigenvalue": float(model.eigen.lambdas[k]),
                    "mu": float(model.eigen.mus[k]),
                    "share_pct": float(model.eigen.shares[k]),
                }
            )
    return rows


def write_eigen_csv(models, path):
    rows = eigen_rows(models)
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["method", "nu", "axis", "eigenvalue", "mu", "share_pct"])
        for r in rows:
            writer.writerow(
                [
                    r["method"],
                    "" if r["nu"] is None else f"{r['nu']:g}",
                    r["axis"],
                    _fmt(r["eigenvalue"]),
                    _fmt(r["mu"]),
                    _fmt(r["share_pct"]),
                ]
            )


def write_eigen_json(models, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump({"axes": eigen_rows(models)}, fh, indent=2, sort_keys=True)
        fh.write("\n")


def _write_observation_table(path, row_labels, matrix, axis_header):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["observation", *axis_header])
        for label, row in zip(row_labels, matrix):
            writer.writerow([label, *(_fmt(v) for v in row)])


def write_act_csv(model, path, axes=None):
    """Absolute contributions, one observation per row, axes in columns."""
    table = act(model)
    axes = range(model.n_axes) if axes is None else list(axes)
    header = [f"axis{a + 1}" for a in axes]
    _write_observation_table(path, model.data.row_labels, table[:, axes], header)


def write_rct_csv(model, path, axes=None):
    """Relative contributions, same layout as write_act_csv."""
    table = rct(model)
    axes = range(model.n_axes) if axes is None else list(axes)
    header = [f"axis{a + 1}" for a in axes]
    _write_observation_table(path, model.data.row_labels, table[:, axes], header)


def write_projection_csv(model, path, axes=(0, 1)):
    """Observation scores on the requested axes."""
    axes = list(axes)
    header = [f"axis{a + 1}" for a in axes]
    _write_observation_table(
        path, model.data.row_labels, model.scores[:, axes], header
    )


def write_significance_csv(model, table, path):
    """Significance grid with 5% and 10% classification columns.

    One row per (axis, variable): correlation u, jackknife se, z, two-sided
    p, the classification flags, and the unit-scaled correlation act_tilde.
    """
    scaled = act_tilde(table)
    names = model.data.column_names
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "axis",
                "variable",
                "u",
                "se",
                "z",
                "p_value",
                "significant_5pct",
                "significant_10pct",
                "act_tilde",
            ]
        )
        for row, axis in enumerate(table.axes):
            for j, name in enumerate(names):
                p = float(table.p_value[row, j])
                writer.writerow(
                    [
                        axis + 1,
                        name,
                        _fmt(table.u[row, j]),
                        _fmt(table.se[row, j]),
                        _fmt(table.z[row, j]),
                        _fmt(p),
                        int(p < 0.05),
                        int(p < 0.10),
                        _fmt(scaled[row, j]),
                    ]
                )


def write_sim_report(report, path):
    """Benchmark report as deterministic JSON."""
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(report.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")


def write_sim_csv(report, path):
    """Per-axis benchmark table; contribution columns stay empty beyond
    the tracked axes."""
    with open(path, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(
            [
                "method",
                "axis",
                "mse_share",
                "rmse_share",
                "mse_act",
                "mse_act_std",
                "mse_rct",
                "mse_rct_std",
            ]
        )
        for method in sorted(report.mse_eigen):
            tracked = len(report.mse_act[method])
            for k, value in enumerate(report.mse_eigen[method]):
                row = [method, k + 1, _fmt(value), _fmt(math.sqrt(float(value)))]
                if k < tracked:
                    row += [
                        _fmt(report.mse_act[method][k]),
                        _fmt(report.mse_act_std[method][k]),
                        _fmt(report.mse_rct[method][k]),
                        _fmt(report.mse_rct_std[method][k]),
                    ]
                else:
                    row += ["", "", "", ""]
                writer.writerow(row)
