"""Lemniscate families, the radial function f(r, theta) and its positive roots.

Three families are supported, all of the form Re[P(z)] - |z|^2 + k = 0:

* ``TWO_TERM``    P(z) = C z^n + z^j     (the sets Gamma_{n,j}(C, k))
* ``SCALED``      P(z) = C z^n           (the sets Lambda_n(C, k))
* ``SCALED_PAIR`` P(z) = C (z^2 + z)

Along a ray of fixed angle theta the defining function is a sparse real
polynomial in r, which is what most of the analysis works with.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from .errors import DomainError, NonConvergence

_EPS = np.finfo(float).eps
_TINY = np.finfo(float).tiny
_HUGE = float(np.finfo(float).max)


class Variant(str, enum.Enum):
    TWO_TERM = "two-term"
    SCALED = "scaled"
    SCALED_PAIR = "scaled-pair"


@dataclass(frozen=True)
class LemniscateFamily:
    """Parameters of one lemniscate family.

    A two-term family with ``j == n`` collapses to a scaled family with
    coefficient ``C + 1`` at construction, so downstream code only ever sees
    the canonical form. ``n`` and ``j`` are ``None`` where the variant has
    no such parameter.
    """

    variant: Variant
    n: int | None
    j: int | None
    C: float
    k: float

    def __post_init__(self):
        variant = Variant(self.variant)
        object.__setattr__(self, "variant", variant)
        k, C = float(self.k), float(self.C)
        if not (math.isfinite(k) and k > 0):
            raise DomainError(f"k must be a finite positive real, got {self.k!r}")
        if not math.isfinite(C):
            raise DomainError(f"C must be finite, got {self.C!r}")
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "k", k)

        if variant is Variant.SCALED_PAIR:
            if self.n is not None or self.j is not None:
                raise DomainError("scaled-pair family takes no n or j")
            return

        if not _is_positive_int(self.n):
            raise DomainError(f"n must be a positive integer, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))

        if variant is Variant.SCALED:
            if self.j is not None:
                raise DomainError("scaled family takes no j")
            return

        if not _is_positive_int(self.j) or self.j > self.n:
            raise DomainError(f"j must be an integer with 1 <= j <= n={self.n}, got {self.j!r}")
        object.__setattr__(self, "j", int(self.j))
        if self.j == self.n:
            object.__setattr__(self, "variant", Variant.SCALED)
            object.__setattr__(self, "j", None)
            object.__setattr__(self, "C", self.C + 1.0)

    @classmethod
    def two_term(cls, n: int, j: int, C: float, k: float) -> "LemniscateFamily":
        return cls(Variant.TWO_TERM, n, j, C, k)

    @classmethod
    def scaled(cls, n: int, C: float, k: float) -> "LemniscateFamily":
        return cls(Variant.SCALED, n, None, C, k)

    @classmethod
    def scaled_pair(cls, C: float, k: float) -> "LemniscateFamily":
        return cls(Variant.SCALED_PAIR, None, None, C, k)

    @property
    def label(self) -> str:
        if self.variant is Variant.TWO_TERM:
            return f"Gamma_{{{self.n},{self.j}}}(C={self.C:g}, k={self.k:g})"
        if self.variant is Variant.SCALED:
            return f"Lambda_{self.n}(C={self.C:g}, k={self.k:g})"
        return f"C*Re[z^2+z](C={self.C:g}, k={self.k:g})"

    @property
    def is_quadratic(self) -> bool:
        """True for the families whose zero set is a conic."""
        return self.variant is Variant.SCALED_PAIR or self.n <= 2


def _is_positive_int(value) -> bool:
    return isinstance(value, (int, np.integer)) and not isinstance(value, bool) and value >= 1


def cos_multiple(m: int, theta):
    """cos(m*theta) with values at rounding level snapped to exactly zero.

    Without the snap, cos(pi/2) ~ 6e-17 would leave a phantom leading term
    in the radial polynomial and a spurious root near r ~ 1e8.
    """
    arg = m * np.asarray(theta, dtype=float)
    c = np.cos(arg)
    tiny = 4.0 * _EPS * np.maximum(1.0, np.abs(arg))
    c = np.where(np.abs(c) < tiny, 0.0, c)
    return float(c) if c.ndim == 0 else c


def _raw_terms(family: LemniscateFamily, theta):
    """Unmerged (degree, coefficient) pairs of f(., theta)."""
    C, k = family.C, family.k
    if family.variant is Variant.SCALED_PAIR:
        return [(2, C * cos_multiple(2, theta)), (1, C * cos_multiple(1, theta)), (2, -1.0), (0, k)]
    terms = [(family.n, C * cos_multiple(family.n, theta))]
    if family.variant is Variant.TWO_TERM:
        terms.append((family.j, cos_multiple(family.j, theta)))
    terms += [(2, -1.0), (0, k)]
    return terms


def eval_f(family: LemniscateFamily, r, theta):
    """Evaluate f(r, theta) for the family; broadcasts over numpy arrays."""
    r = np.asarray(r, dtype=float)
    if np.any(r < 0):
        raise DomainError("r must be nonnegative")
    theta = np.asarray(theta, dtype=float)
    total = np.zeros(np.broadcast(r, theta).shape)
    # lowest degree first, matching RadialPolynomial.__call__ summation order
    for degree, coef in sorted(_raw_terms(family, theta), key=lambda t: t[0]):
        total = total + coef * r**degree
    return float(total) if total.ndim == 0 else total


Terms = tuple[tuple[int, float], ...]


@dataclass(frozen=True)
class RadialPolynomial:
    """f(., theta) as a sparse polynomial in r.

    ``terms`` holds (degree, coefficient) pairs sorted by degree, with
    like powers merged and zero coefficients dropped.
    """

    terms: Terms
    theta: float = 0.0

    def __call__(self, r):
        return _evaluate(self.terms, r)

    @property
    def degree(self) -> int:
        return self.terms[-1][0] if self.terms else 0

    def coefficient(self, degree: int) -> float:
        return dict(self.terms).get(degree, 0.0)

    def derivative(self) -> "RadialPolynomial":
        return RadialPolynomial(_derivative(self.terms), self.theta)


PolyLike = Union[RadialPolynomial, Sequence[tuple[int, float]]]


def radial_poly(family: LemniscateFamily, theta: float) -> RadialPolynomial:
    merged: dict[int, float] = {}
    for degree, coef in _raw_terms(family, float(theta)):
        merged[degree] = merged.get(degree, 0.0) + coef
    terms = tuple((d, float(c)) for d, c in sorted(merged.items()) if c != 0.0)
    return RadialPolynomial(terms, float(theta))


def _as_terms(poly: PolyLike) -> Terms:
    raw = poly.terms if isinstance(poly, RadialPolynomial) else poly
    merged: dict[int, float] = {}
    for degree, coef in raw:
        if degree < 0 or int(degree) != degree:
            raise DomainError(f"degrees must be nonnegative integers, got {degree!r}")
        merged[int(degree)] = merged.get(int(degree), 0.0) + float(coef)
    return tuple((d, c) for d, c in sorted(merged.items()) if c != 0.0)


def _evaluate(terms: Terms, r):
    total = 0.0
    for degree, coef in terms:
        total = total + coef * r**degree
    return total


def _scaled(terms: Terms, r: float, shift: int) -> tuple[float, float]:
    """p(r) / r^shift and the matching magnitude, safe for huge r."""
    # r = m 2^e: c m^p stays normal and ldexp applies 2^(e p) exactly, so no
    # intermediate power underflows when the product itself is representable
    m, e = math.frexp(r)
    value = mag = 0.0
    for d, c in terms:
        p = d - shift
        t = math.ldexp(c * m**p, e * p)
        value += t
        mag += abs(t)
    return value, mag


def _shift(terms: Terms, r: float) -> int:
    # dividing by r^top keeps every term <= |c| once r > 1; signs and the
    # ratios |p|/sum|c_i r^i| and p/p' are unchanged
    return terms[-1][0] if r > 1 else 0


def _derivative(terms: Terms) -> Terms:
    return tuple((d - 1, d * c) for d, c in terms if d > 0)


def descartes_bound(poly: PolyLike) -> int:
    """Number of sign changes in the coefficients, by increasing degree."""
    coefs = [c for _, c in _as_terms(poly)]
    if not coefs:
        raise DomainError("polynomial has no nonzero terms")
    return sum(1 for a, b in zip(coefs, coefs[1:]) if (a > 0) != (b > 0))


def cauchy_bound(poly: PolyLike) -> float:
    """Upper bound 1 + max|c_i|/|c_lead| on the modulus of every root."""
    terms = _as_terms(poly)
    if len(terms) < 2:
        return 0.0
    lead = abs(terms[-1][1])
    return 1.0 + max(abs(c) for _, c in terms[:-1]) / lead


def _root_bound(terms: Terms) -> float:
    """min(Cauchy, Fujiwara, largest double); Fujiwara in logs for tiny leads."""
    top, lead = terms[-1]
    logs = [(math.log(abs(c)) - math.log(abs(lead))) / (top - d) for d, c in terms[:-1]]
    exponent = max(logs) + math.log(2.0)
    fujiwara = math.exp(exponent) if exponent < 709.0 else math.inf
    # padded: the tightest root can sit within an ulp of either bound
    return min(min(cauchy_bound(terms), fujiwara) * (1 + 16 * _EPS), _HUGE)


class Root(NamedTuple):
    value: float
    multiplicity: int = 1


def positive_roots(poly: PolyLike, tol: float = 1e-12, max_iter: int = 200) -> list[Root]:
    """All roots r > 0 of a sparse real polynomial, in increasing order.

    The positive axis is cut at the critical points of the polynomial
    (found recursively from its derivative) into monotone pieces, each of
    which holds at most one root; bracketed roots are refined with a
    bisection-safeguarded Newton iteration. A critical point where
    |p| <= tol * sum|c_i| r^i is reported once as a double root.

    A root is accepted once |p(r)| <= tol * sum|c_i| r^i or its bracket is a
    few ulp wide. Raises NonConvergence when neither happens within
    ``max_iter`` iterations, and DomainError for non-finite coefficients or
    magnitudes too far apart to rescale. Roots outside the positive double
    range (below the smallest subnormal or above the largest finite value)
    are not reported.
    """
    if not tol > 0:
        raise DomainError(f"tol must be positive, got {tol!r}")
    terms = _as_terms(poly)
    if not terms:
        raise DomainError("polynomial has no nonzero terms")
    for d, c in terms:
        if not math.isfinite(c):
            raise DomainError(f"coefficient of r^{d} must be finite, got {c!r}")
    return _positive_roots(_normalise(terms), tol, max_iter)


def _normalise(terms: Terms) -> Terms:
    """Exact power-of-two rescaling that centres extreme coefficients on 1.

    Near a root the dominant terms balance at roughly the size of the
    coefficients, so keeping every coefficient within 2^+-950 keeps those
    terms normal with all 53 bits. Scaling by 2^e changes no root.
    """
    lo = math.frexp(min(abs(c) for _, c in terms))[1]
    hi = math.frexp(max(abs(c) for _, c in terms))[1]
    if lo >= -500 and hi <= 500:
        return terms
    if hi - lo > 1900:
        raise DomainError("coefficient magnitudes span more than the double range")
    shift = -((lo + hi) // 2)
    return tuple((d, math.ldexp(c, shift)) for d, c in terms)


def _positive_roots(terms: Terms, tol: float, max_iter: int) -> list[Root]:
    low = terms[0][0]
    if low:
        # r^low factor carries no positive roots
        terms = tuple((d - low, c) for d, c in terms)
    if len(terms) == 1:
        return []
    if len(terms) == 2 and terms[1][0] == 1:
        root = -terms[0][1] / terms[1][1]
        return [Root(root)] if 0 < root < math.inf else []

    bound = _root_bound(terms)
    crit = [
        rt.value
        for rt in _positive_roots(_derivative(terms), tol, max_iter)
        if rt.value < bound
    ]

    roots: list[Root] = []
    tangent = set()
    crit_values = []
    for c in crit:
        value, mag = _scaled(terms, c, _shift(terms, c))
        crit_values.append(value)
        if abs(value) <= tol * mag:
            tangent.add(c)
            roots.append(Root(c, 2))

    # no root lies below 1 / (root bound of the reversed polynomial)
    top = terms[-1][0]
    reversed_bound = _root_bound(tuple(sorted((top - d, c) for d, c in terms)))
    floor = 0.0 if reversed_bound == _HUGE else 1.0 / reversed_bound
    edges = [min(floor, crit[0]) if crit else floor, *crit, bound]
    signs = [math.copysign(1.0, terms[0][1])]
    signs += [math.copysign(1.0, v) for v in crit_values]
    # past every root the leading sign holds; a bound capped at the largest
    # double may sit below an unrepresentable root, so evaluate there instead
    end = terms[-1][1] if bound < _HUGE else _scaled(terms, bound, _shift(terms, bound))[0]
    signs.append(math.copysign(1.0, end))
    dterms = _derivative(terms)
    for idx in range(len(edges) - 1):
        a, b = edges[idx], edges[idx + 1]
        if a in tangent or b in tangent or signs[idx] == signs[idx + 1]:
            continue
        root = _refine(terms, dterms, a, b, signs[idx], tol, max_iter)
        if root > 0:
            roots.append(Root(root))

    roots.sort(key=lambda rt: rt.value)
    return roots


def _midpoint(lo, hi):
    # geometric when the bracket spans decades, so far-apart bounds cost
    # log(log(hi/lo)) steps instead of log(hi/lo); a zero end is treated as
    # the smallest normal double
    base = max(lo, _TINY)
    return math.sqrt(base) * math.sqrt(hi) if hi > 4 * base else lo + 0.5 * (hi - lo)


def _refine(terms, dterms, lo, hi, sign_lo, tol, max_iter) -> float:
    x = _midpoint(lo, hi)
    last_step = math.inf
    for _ in range(max_iter):
        shift = _shift(terms, x)
        fx, mag = _scaled(terms, x, shift)
        if fx == 0.0:
            return x
        if math.copysign(1.0, fx) == sign_lo:
            lo = x
        else:
            hi = x
        if hi - lo <= 4.0 * math.ulp(hi):
            # a few ulp across a sign change: nothing left to refine
            return x
        dfx, _ = _scaled(dterms, x, shift)
        nxt = x - fx / dfx if dfx != 0.0 else math.nan
        step = abs(nxt - x)
        if step <= 2.0 * math.ulp(x) and abs(fx) <= tol * mag:
            return nxt if lo <= nxt <= hi else x
        # bisect when Newton leaves the bracket, stalls on rounding noise, or
        # converges no better than linearly
        if not (lo < nxt < hi) or step <= 2.0 * math.ulp(x) or step > 0.25 * last_step:
            nxt = _midpoint(lo, hi)
            step = abs(nxt - x)
        last_step = step
        x = nxt
    raise NonConvergence(
        f"root in [{lo!r}, {hi!r}] not refined to tolerance {tol:g} "
        f"after {max_iter} iterations"
    )
