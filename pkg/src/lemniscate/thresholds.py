"""Critical coefficients C*, k* and the radius r* where they are attained.

A bounded component exists when f(r, 0) dips below zero for some r > 0,
i.e. when C lies under the maximum over r > 0 of the ratio

    R(r) = (r^2 - r^j - k) / r^n        (the r^j term absent for Lambda_n).

For j = 1 and for Lambda_n the maximum has a closed form; otherwise it is
found from the positive roots of the numerator of R'(r),

    (2 - n) r^2 + (n - j) r^j + n k,

which is a sparse polynomial handled by the core root isolator.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .core import positive_roots
from .errors import DomainError


class ThresholdMethod(str, enum.Enum):
    CLOSED_FORM_J1 = "closed-form-j1"
    CLOSED_FORM_SCALED = "closed-form-scaled"
    NUMERIC_GENERAL = "numeric-general"


@dataclass(frozen=True)
class ThresholdResult:
    c_star: float | None
    k_star: float | None
    r_star: float | None
    method: ThresholdMethod


def _check_n(n, minimum=3):
    if not isinstance(n, int) or n < minimum:
        raise DomainError(f"n must be an integer >= {minimum}, got {n!r}")


def _check_k(k):
    if not (math.isfinite(k) and k > 0):
        raise DomainError(f"k must be a finite positive real, got {k!r}")


def c_star_j1(n: int, k: float) -> ThresholdResult:
    """Closed-form threshold for Re[C z^n + z] - |z|^2 + k = 0, n >= 3."""
    _check_n(n)
    _check_k(k)
    s = (n - 1) + math.sqrt((n - 1) ** 2 + 4 * n * k * (n - 2))
    # (2n-4)^n / s^n grouped as one power to stay finite for large n
    c_star = ((2 * n - 4) / s) ** n * (4 * k * (n - 2) + s) / (2 * (n - 2) ** 2)
    return ThresholdResult(c_star, None, s / (2 * (n - 2)), ThresholdMethod.CLOSED_FORM_J1)


def c_star_scaled(n: int, k: float) -> ThresholdResult:
    """Closed-form threshold on |C| for C Re[z^n] - |z|^2 + k = 0, n >= 3."""
    _check_n(n)
    _check_k(k)
    c_star = 2 * k / (n - 2) * ((n - 2) / (n * k)) ** (n / 2)
    r_star = math.sqrt(n * k / (n - 2))
    return ThresholdResult(c_star, None, r_star, ThresholdMethod.CLOSED_FORM_SCALED)


def k_star(j: int) -> float:
    """Largest k for which r^2 - r^j - k is positive somewhere on r > 0."""
    if not isinstance(j, int) or j <= 2:
        raise DomainError(f"j must be an integer > 2, got {j!r}")
    return (1 - 2 / j) * (2 / j) ** (2 / (j - 2))


def k_star_maximizer(j: int) -> float:
    """Where r^2 - r^j peaks: the positive solution of 2r = j r^(j-1)."""
    if not isinstance(j, int) or j <= 2:
        raise DomainError(f"j must be an integer > 2, got {j!r}")
    return (2 / j) ** (1 / (j - 2))


def ratio(n: int, k: float, r, j: int | None = None):
    """R(r) = (r^2 - r^j - k) / r^n; pass ``j=None`` for the scaled family."""
    numerator = r**2 - k if j is None else r**2 - r**j - k
    return numerator / r**n


def stationarity_terms(n: int, k: float, j: int | None = None):
    """Sparse terms of r^(n+1) R'(r)."""
    terms = [(0, n * k), (2, 2.0 - n)]
    if j is not None:
        terms.append((j, float(n - j)))
    return terms


def max_ratio(n: int, k: float, j: int | None = None, tol: float = 1e-13):
    """Largest value of R at a stationary point, as ``(value, r)``.

    Returns None when R has no stationary point on r > 0.
    """
    candidates = positive_roots(stationarity_terms(n, k, j), tol=tol)
    if not candidates:
        return None
    best = max(candidates, key=lambda rt: ratio(n, k, rt.value, j))
    return ratio(n, k, best.value, j), best.value


def c_star_general(n: int, j: int, k: float) -> ThresholdResult:
    """Numeric threshold for Gamma_{n,j}(C, k) with n > j > 2.

    ``c_star`` is None when k >= k*(j): R is then nonpositive everywhere
    and no C > 0 admits a bounded component.
    """
    if not (isinstance(n, int) and isinstance(j, int) and n > j > 2):
        raise DomainError(f"need integers n > j > 2, got n={n!r}, j={j!r}")
    _check_k(k)
    gate = k_star(j)
    absent = ThresholdResult(None, gate, None, ThresholdMethod.NUMERIC_GENERAL)
    if k >= gate:
        return absent
    found = max_ratio(n, k, j)
    if found is None or found[0] <= 0:
        return absent
    return ThresholdResult(found[0], gate, found[1], ThresholdMethod.NUMERIC_GENERAL)
