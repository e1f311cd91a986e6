"""Brute-force topology checks on a sampled sign grid.

f is evaluated here straight from complex arithmetic, Re[P(z)] - |z|^2 + k,
not through the polar/radial path the rest of the package uses, so the
grid counts are an independent check on the classifier and the tracer.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np
from scipy import ndimage

from .core import LemniscateFamily, Variant, cauchy_bound, positive_roots, radial_poly
from .errors import DomainError

# 4-connectivity in 2-D
_CROSS = ndimage.generate_binary_structure(2, 1)
_BOX_PROBE_ANGLES = 64


def f_cartesian(family: LemniscateFamily, z):
    z = np.asarray(z, dtype=complex)
    C, k = family.C, family.k
    if family.variant is Variant.SCALED_PAIR:
        p = C * (z * z + z)
    else:
        p = C * z**family.n
        if family.variant is Variant.TWO_TERM:
            p = p + z**family.j
    return p.real - (z.real**2 + z.imag**2) + k


@dataclass(frozen=True)
class GridOracleReport:
    resolution: int
    box_radius: float
    positive_components: int
    negative_components: int
    origin_component_bounded: bool
    bounded_loop_count: int
    bounded_negative_components: int

    @property
    def has_bounded_component(self) -> bool:
        return self.bounded_loop_count > 0 or self.bounded_negative_components > 0


def auto_box_radius(family: LemniscateFamily) -> float:
    """Half-width of a square that holds every bounded component.

    1.1 times the largest first root over a ring of probe angles; this is the
    theta = 0 root whenever f(r, theta) <= f(r, 0), and stays valid for
    negative coefficients where the widest ray is elsewhere. If some ray has
    no root the origin region is unbounded and 1.1 times that ray's Cauchy
    bound is used instead.
    """
    widest = 0.0
    for theta in 2 * np.pi * np.arange(_BOX_PROBE_ANGLES) / _BOX_PROBE_ANGLES:
        poly = radial_poly(family, theta)
        roots = positive_roots(poly)
        if not roots:
            bound = cauchy_bound(poly)
            if not bound > 0:
                raise DomainError(f"cannot size a box for {family.label}")
            return 1.1 * bound
        widest = max(widest, roots[0].value)
    return 1.1 * widest


def sign_grid(family: LemniscateFamily, resolution: int, box_radius: float) -> np.ndarray:
    """Boolean grid of f >= 0 on (resolution + 1)^2 nodes spanning the box.

    An even resolution puts a node on the origin and on both axes.
    """
    axis = np.linspace(-box_radius, box_radius, resolution + 1)
    z = axis[None, :] + 1j * axis[:, None]
    return f_cartesian(family, z) >= 0


def _bounded_labels(labels: np.ndarray, count: int) -> set[int]:
    edge = np.concatenate([labels[0], labels[-1], labels[:, 0], labels[:, -1]])
    return set(range(1, count + 1)) - set(np.unique(edge).tolist())


def grid_report(
    family: LemniscateFamily,
    resolution: int = 512,
    box_radius: float | None = None,
    pgm_path: str | Path | None = None,
) -> GridOracleReport:
    """Label same-sign regions of f on a grid and count the bounded ones.

    A component is bounded when it touches no edge of the box. Nodes where f
    is exactly zero count as positive.
    """
    if not isinstance(resolution, int) or resolution < 64:
        raise DomainError(f"resolution must be an integer >= 64, got {resolution!r}")
    if box_radius is None:
        box_radius = auto_box_radius(family)
    elif not box_radius > 0:
        raise DomainError(f"box_radius must be positive, got {box_radius!r}")

    positive = sign_grid(family, resolution, box_radius)
    pos_labels, n_pos = ndimage.label(positive, structure=_CROSS)
    neg_labels, n_neg = ndimage.label(~positive, structure=_CROSS)
    bounded_pos = _bounded_labels(pos_labels, n_pos)
    bounded_neg = _bounded_labels(neg_labels, n_neg)
    centre = resolution // 2
    origin_label = int(pos_labels[centre, centre])

    if pgm_path is not None:
        write_pgm(pgm_path, positive, pos_labels, bounded_pos)

    return GridOracleReport(
        resolution=resolution,
        box_radius=float(box_radius),
        positive_components=int(n_pos),
        negative_components=int(n_neg),
        origin_component_bounded=origin_label in bounded_pos,
        bounded_loop_count=len(bounded_pos),
        bounded_negative_components=len(bounded_neg),
    )


def write_pgm(path, positive, pos_labels=None, bounded=()):
    """Plain (P2) graymap: 0 negative, 128 unbounded positive, 255 bounded positive."""
    img = np.where(positive, 128, 0)
    if pos_labels is not None and bounded:
        img[np.isin(pos_labels, list(bounded))] = 255
    # row 0 of the grid is y = -R; images run top-down
    img = img[::-1]
    rows = [" ".join(map(str, row)) for row in img.tolist()]
    text = f"P2\n{img.shape[1]} {img.shape[0]}\n255\n" + "\n".join(rows) + "\n"
    Path(path).write_text(text, encoding="ascii")


def check_laplacian(
    family: LemniscateFamily,
    sample_count: int = 10_000,
    h: float = 1e-3,
    box_radius: float = 2.0,
    seed: int = 0,
) -> float:
    """Max |five-point Laplacian of f + 4| over random points in the box."""
    if not h > 0:
        raise DomainError(f"h must be positive, got {h!r}")
    rng = np.random.default_rng(seed)
    pts = rng.uniform(-box_radius, box_radius, size=(sample_count, 2))
    z = pts[:, 0] + 1j * pts[:, 1]
    f = lambda w: f_cartesian(family, w)  # noqa: E731
    lap = (f(z + h) + f(z - h) + f(z + 1j * h) + f(z - 1j * h) - 4 * f(z)) / (h * h)
    return float(np.max(np.abs(lap + 4)))
