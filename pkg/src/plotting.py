"""
Static plots for berkram.

Renders a serialized profile (and optionally the ramified cells found along
the same segment) as an SVG. Exact rationals are converted to floats only
here, at render time.

Author: Tom Pravetz
License: MIT
"""

import logging
from fractions import Fraction
from typing import Any, Dict, Optional, Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .job_spec import profile_rows  # noqa: E402

logger = logging.getLogger(__name__)


def plot_profile(
    pieces: Sequence[Dict[str, str]],
    path: str,
    which: str = "tfrak",
    title: Optional[str] = None,
    cells: Optional[Sequence[Dict[str, Any]]] = None,
) -> None:
    """
    Write the profile to path as an SVG.

    Args:
        pieces: Profile pieces as produced by Profile.to_json
        path: Output file
        which: Label of the plotted quantity
        title: Plot title
        cells: Locus cells as produced by LocusCell.to_json; ramified runs are shaded

    Raises:
        ValueError: If there are no pieces
    """
    rows = profile_rows(pieces)
    if not rows:
        raise ValueError("nothing to plot: the profile is empty")
    xs = [float(s) for s, _ in rows]
    ys = [float(v) for _, v in rows]

    fig, ax = plt.subplots(figsize=(6, 4))
    try:
        if cells:
            for cell in cells:
                if cell.get("ramified"):
                    lo, hi = float(Fraction(cell["s0"])), float(Fraction(cell["s1"]))
                    if hi > lo:
                        ax.axvspan(lo, hi, facecolor="silver", alpha=0.5, label="ramified")
                    else:
                        ax.axvline(lo, color="dimgrey", linestyle=":", label="ramified")
        ax.plot(xs, ys, "k", marker="o", markersize=3, label=which)
        ax.axhline(0, color="grey", linewidth=0.8)
        ax.set_xlabel("s")
        ax.set_ylabel(which)
        if title:
            ax.set_title(title)
        handles, labels = ax.get_legend_handles_labels()
        unique = dict(zip(labels, handles))
        ax.legend(unique.values(), unique.keys())
        fig.savefig(path, format="svg", bbox_inches="tight", facecolor="white", metadata={"Date": None})
    finally:
        plt.close(fig)
    logger.info(f"Wrote plot {path}")
