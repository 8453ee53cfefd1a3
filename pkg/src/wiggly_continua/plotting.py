"""
SVG plots of analysis reports.

Plots are drawn with the Agg backend and saved without a timestamp and with
a fixed hash salt, so the same report always gives the same file.
"""

import logging
import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402
from matplotlib.axes import Axes  # noqa: E402
from matplotlib.figure import Figure  # noqa: E402
from matplotlib.patches import Circle  # noqa: E402

from .exceptions import MissingReportSectionError  # noqa: E402
from .models.corona import CoronaBallModel  # noqa: E402
from .models.report import Report  # noqa: E402

logger = logging.getLogger("wiggly-continua.formats")

PLOT_KINDS = ("loglog", "profile", "tree")
DEFAULT_TREE_DEPTH = 3
LEVEL_COLOURS = ("#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd")


def _figure(width: float = 6.0) -> tuple[Figure, Axes]:
    golden_ratio = (math.sqrt(5) - 1.0) / 2.0
    fig, ax = plt.subplots(figsize=(width, width * golden_ratio), facecolor="w")
    return fig, ax


def _save(fig: Figure, path: str | Path) -> Path:
    path = Path(path)
    with plt.rc_context({"svg.hashsalt": "wiggly-continua"}):
        fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
    logger.info(f"Wrote {path}")
    return path


def plot_loglog(report: Report, path: str | Path) -> Path:
    """
    Box counts against log(1/scale) with the fitted line.

    Raises:
        MissingReportSectionError: If the report has no box-count fit
    """
    if report.dimension is None or report.dimension.box is None:
        error_msg = "report has no box-count fit; run analyze with --dimension"
        raise MissingReportSectionError(error_msg)
    fit = report.dimension.box
    x = np.array(fit.log_inv_scale)
    fig, ax = _figure()
    ax.plot(x, fit.log_count, "o", color=LEVEL_COLOURS[0], label="log N")
    ax.plot(x, fit.intercept + fit.dim * x, "-", color=LEVEL_COLOURS[1], label="fit")
    ax.annotate(
        f"slope {fit.dim:.4f} ± {fit.stderr:.2g}",
        xy=(0.05, 0.9),
        xycoords="axes fraction",
    )
    ax.set_xlabel("log(1/scale)")
    ax.set_ylabel("log(occupied boxes)")
    ax.legend(loc="lower right")
    return _save(fig, path)


def plot_profile(report: Report, path: str | Path, index: int = 0) -> Path:
    """
    β against scale at one probe point.

    Raises:
        MissingReportSectionError: If the report has no β profiles
        ValueError: If ``index`` is not a probe index
    """
    if report.betas is None or not report.betas.profiles:
        error_msg = "report has no beta profiles; run analyze with --beta"
        raise MissingReportSectionError(error_msg)
    profiles = report.betas.profiles
    if not 0 <= index < len(profiles):
        error_msg = f"profile index {index} out of range 0..{len(profiles) - 1}"
        raise ValueError(error_msg)
    profile = profiles[index]
    scales = profile.window.lam ** np.array(profile.exponents, dtype=float)
    fig, ax = _figure()
    ax.plot(scales, profile.beta, "-o", color=LEVEL_COLOURS[0], markersize=3)
    if report.densities is not None:
        beta0 = report.densities.beta0
        ax.axhline(beta0, color=LEVEL_COLOURS[3], linestyle="--", label="β₀")
        ax.legend(loc="upper left")
    ax.set_xscale("log")
    ax.set_xlabel("scale r")
    ax.set_ylabel("β(x, r)")
    ax.set_title(f"x = ({', '.join(f'{c:.4g}' for c in profile.x)})")
    return _save(fig, path)


def _balls(node: CoronaBallModel, max_depth: int) -> list[CoronaBallModel]:
    found = [node]
    if node.level < max_depth:
        for child in node.children:
            found.extend(_balls(child, max_depth))
    return found


def plot_tree(
    report: Report, path: str | Path, max_depth: int = DEFAULT_TREE_DEPTH
) -> Path:
    """
    Nested circles of the corona balls down to ``max_depth``.

    Raises:
        MissingReportSectionError: If the report has no corona tree
    """
    if report.corona is None:
        error_msg = "report has no corona tree; run analyze with --corona"
        raise MissingReportSectionError(error_msg)
    root = report.corona.tree.root
    fig, ax = _figure()
    for ball in _balls(root, max_depth):
        colour = LEVEL_COLOURS[ball.level % len(LEVEL_COLOURS)]
        ax.add_patch(
            Circle(
                (ball.center[0], ball.center[1]),
                ball.radius,
                facecolor="none",
                edgecolor=colour,
                linewidth=0.8,
            )
        )
    cx, cy = root.center[0], root.center[1]
    ax.set_xlim(cx - root.radius, cx + root.radius)
    ax.set_ylim(cy - root.radius, cy + root.radius)
    ax.set_aspect("equal")
    ax.set_title(
        f"{report.corona.tree.variant.value} corona, depth {report.corona.tree.depth}"
    )
    return _save(fig, path)


def plot_report(report: Report, kind: str, path: str | Path, **options: int) -> Path:
    """
    Draw one plot of a report.

    Args:
        report: The report
        kind: One of ``PLOT_KINDS``
        path: Output SVG path
        options: ``index`` for profiles, ``max_depth`` for trees

    Raises:
        MissingReportSectionError: If the report lacks the plotted section
        ValueError: For an unknown kind
    """
    if kind == "loglog":
        return plot_loglog(report, path)
    if kind == "profile":
        return plot_profile(report, path, options.get("index", 0))
    if kind == "tree":
        return plot_tree(report, path, options.get("max_depth", DEFAULT_TREE_DEPTH))
    error_msg = f"unknown plot kind {kind!r}; choose from {', '.join(PLOT_KINDS)}"
    raise ValueError(error_msg)
