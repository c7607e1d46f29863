"""Figure rendering for the four sweep kinds.

Read-only consumer of the CSV artifacts: nothing is recomputed, rescaled or
reordered; rows are drawn in file order.  Display-level choices (log axes,
skipping nan/inf markers that have no position on the canvas) do not touch
the underlying arrays, which --dump re-emits verbatim.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from .csvdata import DataTable, SchemaError, load_table

__all__ = ["FigureSpec", "render"]


@dataclass(frozen=True)
class FigureSpec:
    kind: str                      # ratio | bath | freespace | oracle
    input_path: str
    output_path: str
    input2_path: str | None = None   # second freespace file (other tau)
    xlabel: str | None = None
    ylabel: str | None = None
    title: str | None = None


def _finite_pairs(xs, ys):
    return zip(*[(x, y) for x, y in zip(xs, ys)
                 if math.isfinite(x) and math.isfinite(y)]) if xs else ([], [])


def _render_ratio(ax, table: DataTable) -> None:
    dtau = table.column("delta_tau")
    ax.semilogy(dtau, table.column("ratio"), "o", ms=4, label="measured ratio")
    xs, ys = _finite_pairs(dtau, table.column("tan2_prediction"))
    ax.semilogy(xs, ys, "-", lw=1.2, label="tan^2(delta tau / 2)")
    ax.set_xlabel("delta tau")
    ax.set_ylabel("pulsed / bare probability")


def _render_bath(ax, table: DataTable) -> None:
    n = table.column("N")
    ax.semilogy(n, table.column("p_pulsed_over_A_per_Gamma"), "-o", ms=3,
                label="pulsed")
    ax.semilogy(n, table.column("p_bare_over_A_per_Gamma"), "-s", ms=3,
                label="bare")
    ax.set_xlabel("N")
    ax.set_ylabel("emission probability  [A / Gamma]")


def _render_freespace(ax, table: DataTable, second: DataTable | None) -> None:
    def one(tbl: DataTable, color: str) -> None:
        tag = tbl.metadata.get("tau_label") or tbl.metadata.get("tau_resolved", "")
        suffix = f" (tau={tag})" if tag else ""
        n = tbl.column("N")
        # solid for the kicked integral, dashed for the free one
        ax.plot(n, tbl.column("I"), "-", color=color, label=f"I{suffix}")
        ax.plot(n, tbl.column("I0"), "--", color=color, label=f"I0{suffix}")

    one(table, "C0")
    if second is not None:
        one(second, "C1")
    ax.set_xlabel("N")
    ax.set_ylabel("I, I0  [arb. units]")


def _render_oracle(ax, table: DataTable) -> None:
    checks = table.column("check")
    observed = table.column("observed")
    tolerance = table.column("tolerance")
    status = table.column("status")
    colors = {"pass": "tab:green", "fail": "tab:red", "error": "tab:gray"}
    ypos = range(len(checks))
    margins = []
    for obs, tol in zip(observed, tolerance):
        margins.append(obs / tol if (math.isfinite(obs) and tol > 0) else 1.0)
    ax.barh(list(ypos), margins, color=[colors.get(s, "tab:gray") for s in status])
    ax.axvline(1.0, color="k", lw=1, ls=":")
    ax.set_yticks(list(ypos), checks, fontsize=8)
    ax.set_xscale("log")
    ax.set_xlabel("observed / tolerance  (pass left of 1)")
    ax.invert_yaxis()


def render(spec: FigureSpec) -> DataTable:
    """Render one figure; returns the (primary) parsed table for --dump."""
    table = load_table(spec.input_path, spec.kind)
    second = None
    if spec.input2_path is not None:
        if spec.kind != "freespace":
            raise SchemaError("--in2 is only meaningful for the freespace kind")
        second = load_table(spec.input2_path, spec.kind)

    fig, ax = plt.subplots(figsize=(6.4, 4.2), layout="constrained")
    if spec.kind == "ratio":
        _render_ratio(ax, table)
    elif spec.kind == "bath":
        _render_bath(ax, table)
    elif spec.kind == "freespace":
        _render_freespace(ax, table, second)
    else:
        _render_oracle(ax, table)

    if spec.kind != "oracle":
        ax.legend(frameon=False)
    if spec.xlabel:
        ax.set_xlabel(spec.xlabel)
    if spec.ylabel:
        ax.set_ylabel(spec.ylabel)
    if spec.title:
        ax.set_title(spec.title)
    out = Path(spec.output_path)
    out.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(out, dpi=150)
    plt.close(fig)
    return table
