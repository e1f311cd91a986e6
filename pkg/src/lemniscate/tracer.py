"""Tracing the bounded component around the origin as r = alpha(theta)."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .classify import Verdict, classify
from .core import LemniscateFamily, eval_f, positive_roots, radial_poly
from .errors import DomainError, NonConvergence, NotBounded

DEFAULT_SAMPLES = 1024
DEFAULT_TRACE_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class PolarCurve:
    """Closed curve sampled at uniformly spaced angles theta_i = 2 pi i / m."""

    thetas: np.ndarray
    alphas: np.ndarray
    closed: bool = True

    @property
    def samples(self) -> list[tuple[float, float]]:
        return list(zip(self.thetas.tolist(), self.alphas.tolist()))

    def __len__(self) -> int:
        return len(self.thetas)

    def points(self) -> np.ndarray:
        """Boundary points as complex numbers."""
        return self.alphas * np.exp(1j * self.thetas)


def uniform_angles(m: int) -> np.ndarray:
    return 2 * np.pi * np.arange(m) / m


def first_positive_root(family: LemniscateFamily, theta: float, tol: float = 1e-12) -> float | None:
    roots = positive_roots(radial_poly(family, theta), tol=tol)
    return roots[0].value if roots else None


def trace_component(
    family: LemniscateFamily,
    m: int = DEFAULT_SAMPLES,
    trace_tol: float = DEFAULT_TRACE_TOL,
) -> PolarCurve:
    """Sample the boundary of the bounded component around the origin.

    Each sample is the smallest positive root of f(., theta_i): f(0, theta)
    = k > 0 and the component surrounds the origin, so the first sign change
    along every ray lies on its boundary. Critical families are traced too;
    there the theta = 0 sample is the tangency double root.
    """
    if not isinstance(m, int) or m < 8:
        raise DomainError(f"m must be an integer >= 8, got {m!r}")
    verdict = classify(family)
    if verdict.has_bounded_component is False:
        raise NotBounded(f"{family.label} has no bounded component ({verdict})")

    thetas = uniform_angles(m)
    alphas = np.empty(m)
    for i, theta in enumerate(thetas):
        alpha = first_positive_root(family, theta)
        if alpha is None:
            raise NotBounded(f"ray theta={theta!r} never leaves the region f > 0 for {family.label}")
        alphas[i] = alpha

    residual = np.abs(eval_f(family, alphas, thetas))
    if residual.max() >= trace_tol:
        worst = int(residual.argmax())
        raise NonConvergence(
            f"trace residual {residual[worst]:.3g} at theta={thetas[worst]!r} exceeds {trace_tol:g}"
        )
    return PolarCurve(thetas, alphas, closed=True)


def alpha_closed_form(C_hat: float, k: float, theta):
    """Boundary radius of Lambda_4(C_hat, k) in closed form.

    Uses alpha^2 = 2k / (1 + sqrt(1 - 4 C_hat k cos 4theta)), the
    rationalised form of (1 - sqrt(1 - x)) / (2 C_hat cos 4theta), which has
    no removable singularity at cos 4theta = 0 and no cancellation near it.
    """
    if not (k > 0 and math.isfinite(k)):
        raise DomainError(f"k must be a finite positive real, got {k!r}")
    if C_hat < 0:
        raise DomainError(f"C_hat must be nonnegative, got {C_hat!r}")
    if C_hat * 4 * k > 1 + 1e-12:
        raise DomainError(f"C_hat={C_hat!r} exceeds the existence bound 1/(4k)={1 / (4 * k)!r}")
    x = 4 * C_hat * k * np.cos(4 * np.asarray(theta, dtype=float))
    alpha = np.sqrt(2 * k / (1 + np.sqrt(np.maximum(1 - x, 0.0))))
    return float(alpha) if alpha.ndim == 0 else alpha
