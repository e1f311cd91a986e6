"""Bergman projection of z-bar and the torsional rigidity integral.

For a bounded component of Re[P(z)] - |z|^2 + k = 0, the polynomial
F = (P + k)/2 satisfies Re[F] = |z|^2/2 on the boundary, so F' is the
projection of z-bar and the rigidity is the integral of |z-bar - F'|^2 over
the enclosed region. The region is star-shaped about the origin; the
integral is taken in polar form with Gauss-Legendre nodes along each ray
and the periodic trapezoid rule across the uniform angle samples.
"""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Sequence

import numpy as np

from .core import LemniscateFamily, Variant
from .errors import DomainError, NonConvergence, NotBounded
from .tracer import DEFAULT_SAMPLES, PolarCurve, trace_component

DEFAULT_RADIAL_ORDER = 16


@dataclass(frozen=True)
class ProjectionPolynomial:
    """F'(z) as sparse (degree, complex coefficient) terms.

    ``constant`` is the value of F at 0 (i.e. k/2); it only enters F, not
    F', and is kept so the boundary identity Re[F] = |z|^2/2 can be checked.
    """

    coefficients: tuple[tuple[int, complex], ...]
    constant: float = 0.0

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.zeros_like(z)
        for degree, coef in self.coefficients:
            out = out + coef * z**degree
        return out

    def antiderivative(self, z):
        """F(z), including the constant term."""
        z = np.asarray(z, dtype=complex)
        out = np.full_like(z, self.constant)
        for degree, coef in self.coefficients:
            out = out + coef / (degree + 1) * z ** (degree + 1)
        return out

    @property
    def degree(self) -> int:
        return max((d for d, _ in self.coefficients), default=0)


def projection_polynomial(family: LemniscateFamily) -> ProjectionPolynomial:
    C, k = family.C, family.k
    if family.variant is Variant.SCALED_PAIR:
        terms = {1: C, 0: C / 2}
    else:
        terms = {family.n - 1: family.n * C / 2}
        if family.variant is Variant.TWO_TERM:
            terms[family.j - 1] = terms.get(family.j - 1, 0.0) + family.j / 2
    coefficients = tuple(
        (d, complex(c)) for d, c in sorted(terms.items(), reverse=True) if c != 0
    )
    return ProjectionPolynomial(coefficients, k / 2)


@dataclass(frozen=True)
class RigidityResult:
    value: float
    abs_error_estimate: float
    radial_order: int
    angular_samples: int


def _polar_integral(thetas, alphas, integrand, radial_order):
    nodes, weights = np.polynomial.legendre.leggauss(radial_order)
    # r on [0, alpha]: r = alpha (x + 1)/2, dr = alpha/2 dx
    r = 0.5 * (nodes[None, :] + 1.0) * alphas[:, None]
    z = r * np.exp(1j * thetas)[:, None]
    inner = (integrand(z) * r) @ weights * (0.5 * alphas)
    return inner.sum() * (2 * np.pi / len(thetas))


def _check_curve(curve: PolarCurve):
    if not curve.closed:
        raise DomainError("curve must be closed")
    m = len(curve)
    if m < 2 or not np.allclose(curve.thetas, 2 * np.pi * np.arange(m) / m, rtol=0, atol=1e-12):
        raise DomainError("curve samples must be uniformly spaced over [0, 2 pi)")


def torsional_rigidity(
    curve: PolarCurve, proj: ProjectionPolynomial, radial_order: int = DEFAULT_RADIAL_ORDER
) -> RigidityResult:
    """Integral of |z-bar - F'(z)|^2 dA over the region inside ``curve``.

    The error estimate compares against half the radial order on every other
    angle sample.
    """
    _check_curve(curve)
    if not isinstance(radial_order, int) or radial_order < 4:
        raise DomainError(f"radial_order must be an integer >= 4, got {radial_order!r}")

    def integrand(z):
        return np.abs(np.conj(z) - proj(z)) ** 2

    value = _polar_integral(curve.thetas, curve.alphas, integrand, radial_order)
    if len(curve) % 2 == 0:
        coarse = _polar_integral(curve.thetas[::2], curve.alphas[::2], integrand, radial_order // 2)
    else:
        coarse = _polar_integral(curve.thetas, curve.alphas, integrand, radial_order // 2)
    return RigidityResult(float(value), float(abs(value - coarse)), radial_order, len(curve))


def region_area(curve: PolarCurve, radial_order: int = DEFAULT_RADIAL_ORDER) -> float:
    _check_curve(curve)
    return float(_polar_integral(curve.thetas, curve.alphas, lambda z: np.ones(z.shape), radial_order))


def rigidity_of(
    family: LemniscateFamily, m: int = DEFAULT_SAMPLES, radial_order: int = DEFAULT_RADIAL_ORDER
) -> RigidityResult:
    """Trace the family's bounded component and integrate over it."""
    return torsional_rigidity(trace_component(family, m), projection_polynomial(family), radial_order)


@dataclass(frozen=True)
class SweepCell:
    C: float
    k: float
    result: RigidityResult | None
    error: str | None = None


def worker_count() -> int:
    """Thread cap from LEMNISCATE_THREADS, defaulting to the CPU count."""
    raw = os.environ.get("LEMNISCATE_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise DomainError(f"LEMNISCATE_THREADS must be an integer, got {raw!r}") from None
    return os.cpu_count() or 1


def rigidity_sweep(
    family_template: LemniscateFamily,
    C_values: Sequence[float],
    k_values: Sequence[float],
    m: int = DEFAULT_SAMPLES,
    radial_order: int = DEFAULT_RADIAL_ORDER,
    relative: bool = False,
) -> list[SweepCell]:
    """Rigidity over the grid C_values x k_values, in row-major input order.

    With ``relative=True`` each C value is a fraction of the threshold at
    that k (for Lambda_n this is 1/(4k) when n = 4), which is how a surface
    over the admissible region is sampled. Cells that cannot be traced carry
    an error message instead of aborting the sweep.
    """
    from .classify import threshold_for

    pairs = [(C, k) for C in C_values for k in k_values]

    def cell(pair):
        C, k = pair
        try:
            if relative:
                base = threshold_for(replace(family_template, k=k))
                if base is None or base.c_star is None:
                    raise NotBounded(f"no threshold at k={k!r}")
                C = C * base.c_star
            family = replace(family_template, C=C, k=k)
            return SweepCell(C, k, rigidity_of(family, m, radial_order))
        except (DomainError, NotBounded, NonConvergence) as exc:
            return SweepCell(C, k, None, f"{type(exc).__name__}: {exc}")

    if not pairs:
        return []
    with ThreadPoolExecutor(max_workers=min(worker_count(), len(pairs))) as pool:
        return list(pool.map(cell, pairs))
