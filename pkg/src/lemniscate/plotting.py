"""Static matplotlib figures written next to the CSV output."""
from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .tracer import PolarCurve  # noqa: E402

# fixed ids and no timestamp so repeated runs write identical SVG
matplotlib.rcParams["svg.hashsalt"] = "lemniscate"
_SVG_METADATA = {"Date": None}


def _save(fig, path):
    path = Path(path)
    kwargs = {"metadata": _SVG_METADATA} if path.suffix.lower() == ".svg" else {}
    fig.savefig(path, bbox_inches="tight", **kwargs)
    plt.close(fig)


def plot_curves(curves: Sequence[PolarCurve], labels: Sequence[str], path, title: str | None = None):
    """Overlay traced boundaries in the plane."""
    fig, ax = plt.subplots(figsize=(5, 5))
    for curve, label in zip(curves, labels):
        z = curve.points()
        z = np.append(z, z[:1])
        ax.plot(z.real, z.imag, lw=1.2, label=label)
    ax.set_aspect("equal")
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    ax.grid(True, lw=0.3, alpha=0.5)
    ax.legend(fontsize=8, loc="upper right")
    if title:
        ax.set_title(title)
    _save(fig, path)


def plot_rigidity_surface(cells, path, shape: tuple[int, int] | None = None, title: str | None = None):
    """3-D surface of rigidity over a sweep.

    ``shape`` is (number of C values, number of k values) for a row-major
    sweep; with it the cells are drawn as a structured surface, otherwise the
    successful cells are triangulated.
    """
    fig = plt.figure(figsize=(6, 5))
    ax = fig.add_subplot(projection="3d")
    if shape is not None and len(cells) == shape[0] * shape[1]:
        C = np.array([c.C for c in cells]).reshape(shape)
        k = np.array([c.k for c in cells]).reshape(shape)
        value = np.array([np.nan if c.result is None else c.result.value for c in cells]).reshape(shape)
        ax.plot_surface(C, k, np.ma.masked_invalid(value), cmap="viridis", linewidth=0.2, edgecolor="k")
    else:
        good = [c for c in cells if c.result is not None]
        C = np.array([c.C for c in good])
        k = np.array([c.k for c in good])
        value = np.array([c.result.value for c in good])
        if len(good) >= 3 and len(np.unique(C)) > 1 and len(np.unique(k)) > 1:
            ax.plot_trisurf(C, k, value, cmap="viridis", linewidth=0.2)
        else:
            ax.scatter(C, k, value)
    ax.set_xlabel("C")
    ax.set_ylabel("k")
    ax.set_zlabel("rigidity")
    if title:
        ax.set_title(title)
    _save(fig, path)
