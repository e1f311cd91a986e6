"""Verdicts on whether a family has a bounded component.

Quadratic families are conics and are classified by discriminant. For the
higher degree families the coefficient is compared against the matching
threshold from :mod:`lemniscate.thresholds`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

from .core import LemniscateFamily, Variant
from .errors import DomainError
from .thresholds import c_star_general, c_star_j1, c_star_scaled

CRITICAL_BAND = 1e-12


class Verdict(str, enum.Enum):
    BOUNDED_UNIQUE = "BoundedUnique"
    NO_BOUNDED_COMPONENT = "NoBoundedComponent"
    CRITICAL = "Critical"
    CONIC = "Conic"


class ConicType(str, enum.Enum):
    CIRCLE = "Circle"
    ELLIPSE = "Ellipse"
    PARABOLA = "Parabola"
    HYPERBOLA = "Hyperbola"
    DEGENERATE = "Degenerate"


class Convention(str, enum.Enum):
    DEFINITIONAL = "definitional"
    PAPER = "paper"


@dataclass(frozen=True)
class ConicCoefficients:
    """A x^2 + B xy + C y^2 + D x + E y + F = 0."""

    A: float
    B: float
    C: float
    D: float
    E: float
    F: float

    def __post_init__(self):
        if self.A == 0 and self.B == 0 and self.C == 0:
            raise DomainError("conic needs a nonzero quadratic part")

    def as_tuple(self):
        return (self.A, self.B, self.C, self.D, self.E, self.F)


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    conic_type: ConicType | None = None
    c_star_used: float | None = None
    margin: float | None = None

    @property
    def has_bounded_component(self) -> bool | None:
        """Existence as a yes/no; None for the Critical boundary case."""
        if self.verdict is Verdict.CRITICAL:
            return None
        if self.verdict is Verdict.CONIC:
            return self.conic_type in (ConicType.CIRCLE, ConicType.ELLIPSE)
        return self.verdict is Verdict.BOUNDED_UNIQUE

    def __str__(self) -> str:
        if self.verdict is Verdict.CONIC:
            return f"Conic({self.conic_type.value})"
        if self.c_star_used is None:
            return self.verdict.value
        return f"{self.verdict.value} (C*={self.c_star_used:.12g}, margin={self.margin:.12g})"


def conic_coefficients(
    family: LemniscateFamily, convention: Convention | str = Convention.DEFINITIONAL
) -> ConicCoefficients:
    """Cartesian conic equivalent to a quadratic family.

    The definitional convention expands |z|^2 - Re[P(z)] - k = 0 directly.
    ``Convention.PAPER`` follows the published normalisation, which carries a
    factor 2 on P (equivalently Re[F] = |z|^2/2 normalisation); under it the
    ellipse range for Gamma_{2,1} is |C| < 1/2 instead of |C| < 1.
    """
    convention = Convention(convention)
    if not family.is_quadratic:
        raise DomainError(f"{family.label} is not a conic (n >= 3)")
    C = family.C
    # P(z) = q z^2 + l z with Re[z^2] = x^2 - y^2 and Re[z] = x
    if family.variant is Variant.SCALED_PAIR:
        q, lin = C, C
    elif family.variant is Variant.TWO_TERM:
        q, lin = C, 1.0
    elif family.n == 2:
        q, lin = C, 0.0
    else:
        q, lin = 0.0, C
    if convention is Convention.PAPER:
        q, lin = 2 * q, 2 * lin
    return ConicCoefficients(1.0 - q, 0.0, 1.0 + q, -lin, 0.0, -family.k)


def classify_conic(c: ConicCoefficients, rtol: float = 1e-12) -> Classification:
    A, B, Cc, D, E, F = c.as_tuple()
    quad_scale = max(abs(A), abs(B), abs(Cc))
    disc = B * B - 4 * A * Cc
    full_scale = max(abs(v) for v in c.as_tuple())
    # cofactor expansion of [[A, B/2, D/2], [B/2, C, E/2], [D/2, E/2, F]]
    b, d, e = B / 2, D / 2, E / 2
    det = A * (Cc * F - e * e) - b * (b * F - e * d) + d * (b * e - Cc * d)

    def kind(t):
        return Classification(Verdict.CONIC, conic_type=t)

    if abs(det) <= rtol * full_scale**3:
        return kind(ConicType.DEGENERATE)
    if abs(disc) <= rtol * quad_scale**2:
        return kind(ConicType.PARABOLA)
    if disc > 0:
        return kind(ConicType.HYPERBOLA)
    # ellipse-type: real only if the constant part opposes the quadratic form
    if (A + Cc) * det >= 0:
        return kind(ConicType.DEGENERATE)
    if abs(A - Cc) <= rtol * quad_scale and abs(B) <= rtol * quad_scale:
        return kind(ConicType.CIRCLE)
    return kind(ConicType.ELLIPSE)


def threshold_for(family: LemniscateFamily):
    """The ThresholdResult governing a non-quadratic family, or None (j = 2)."""
    if family.variant is Variant.SCALED:
        return c_star_scaled(family.n, family.k)
    if family.j == 1:
        return c_star_j1(family.n, family.k)
    if family.j == 2:
        return None
    return c_star_general(family.n, family.j, family.k)


def classify(
    family: LemniscateFamily, convention: Convention | str = Convention.DEFINITIONAL
) -> Classification:
    if family.is_quadratic:
        return classify_conic(conic_coefficients(family, convention))
    if family.variant is Variant.TWO_TERM and family.C <= 0:
        raise DomainError(f"two-term family needs C > 0, got C={family.C!r}")

    result = threshold_for(family)
    if result is None or result.c_star is None:
        return Classification(Verdict.NO_BOUNDED_COMPONENT)

    c_star = result.c_star
    coef = abs(family.C) if family.variant is Variant.SCALED else family.C
    margin = coef - c_star
    if abs(margin) <= CRITICAL_BAND * max(1.0, c_star):
        verdict = Verdict.CRITICAL
    elif margin < 0:
        verdict = Verdict.BOUNDED_UNIQUE
    else:
        verdict = Verdict.NO_BOUNDED_COMPONENT
    return Classification(verdict, c_star_used=c_star, margin=margin)
