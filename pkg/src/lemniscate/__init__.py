"""Bounded components of polynomial lemniscates and their torsional rigidity."""

__version__ = "0.1.0"

from .classify import Classification, ConicType, Verdict, classify, classify_conic, conic_coefficients
from .core import (
    LemniscateFamily,
    RadialPolynomial,
    Root,
    Variant,
    descartes_bound,
    eval_f,
    positive_roots,
    radial_poly,
)
from .errors import DomainError, NonConvergence, NotBounded
from .oracle import GridOracleReport, check_laplacian, grid_report
from .rigidity import (
    ProjectionPolynomial,
    RigidityResult,
    projection_polynomial,
    rigidity_of,
    rigidity_sweep,
    torsional_rigidity,
)
from .thresholds import ThresholdResult, c_star_general, c_star_j1, c_star_scaled, k_star
from .tracer import PolarCurve, alpha_closed_form, trace_component
