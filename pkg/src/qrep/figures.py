"""Figure rendering for analysis reports and suite results.

Uses the Agg backend so rendering works headless; every function writes PNG
files into a target directory and returns the paths it created.
"""

from __future__ import annotations

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .report import GroupReport, SuiteReport

__all__ = ["render_report_figures", "render_suite_figure"]

_DPI = 120


def _save(fig, path: Path) -> Path:
    fig.savefig(path, dpi=_DPI)
    plt.close(fig)
    return path


def render_report_figures(report: GroupReport, outdir) -> list[Path]:
    """Write the per-group figures (cohomology sizes, irrep dimensions)."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    paths: list[Path] = []

    coh = report.cohomology
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    if coh.get("status") == "ok":
        labels = ["H2(Z/n)", "QZ-trivial", "H2(Cx)", "H2 sym", "Bogomolov"]
        sizes = [
            math.prod(coh["ambient_invariants"]) if coh["ambient_invariants"] else 1,
            coh["qz_trivial_order"],
            math.prod(coh["schur_invariants"]) if coh["schur_invariants"] else 1,
            math.prod(coh["hs2_invariants"]) if coh["hs2_invariants"] else 1,
            math.prod(coh["bc_invariants"]) if coh["bc_invariants"] else 1,
        ]
        bars = ax.bar(labels, sizes, color="#4878b0")
        ax.bar_label(bars, labels=[str(s) for s in sizes])
        ax.set_yscale("log")
        ax.set_ylim(bottom=0.5)
        ax.set_ylabel("subgroup order (log scale)")
    else:
        ax.text(0.5, 0.5, coh.get("status", "unavailable"),
                ha="center", va="center", wrap=True)
        ax.set_axis_off()
    ax.set_title(f"{report.name}: 2-cocycle class groups")
    fig.tight_layout()
    paths.append(_save(fig, outdir / "cohomology_sizes.png"))

    reps = report.reps
    fig, ax = plt.subplots(figsize=(6.4, 4.0))
    if reps.get("status") == "ok":
        dims = reps["irrep_dims"]
        top = max(dims) if dims else 1
        counts = [dims.count(d) for d in range(1, top + 1)]
        bars = ax.bar(range(1, top + 1), counts, color="#b04878")
        ax.bar_label(bars)
        ax.set_xticks(range(1, top + 1))
        ax.set_xlabel("irreducible dimension")
        ax.set_ylabel("count")
    else:
        ax.text(0.5, 0.5, reps.get("status", "unavailable"),
                ha="center", va="center", wrap=True)
        ax.set_axis_off()
    ax.set_title(f"{report.name}: irreducible representation dimensions")
    fig.tight_layout()
    paths.append(_save(fig, outdir / "irrep_dims.png"))
    return paths


def render_suite_figure(suite: SuiteReport, outdir) -> list[Path]:
    """Write a pass/fail overview for the verification suite."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    names = [item.name for item in suite.items]
    checked = [max(len(item.groups), 1) for item in suite.items]
    colors = ["#3d8c40" if item.passed else "#b03030" for item in suite.items]
    fig, ax = plt.subplots(figsize=(7.2, 0.55 * len(names) + 1.2))
    bars = ax.barh(range(len(names)), checked, color=colors)
    ax.bar_label(bars, labels=["pass" if item.passed else "FAIL"
                               for item in suite.items])
    ax.set_yticks(range(len(names)), names)
    ax.invert_yaxis()
    ax.set_xlabel("groups checked")
    ax.set_title(f"verification suite (max order {suite.max_order}, "
                 f"seed {suite.seed}): "
                 f"{'all items passed' if suite.passed else 'FAILURES'}")
    fig.tight_layout()
    return [_save(fig, outdir / "suite_items.png")]
