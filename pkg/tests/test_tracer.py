import math

import numpy as np
import pytest

from lemniscate.core import LemniscateFamily as L
from lemniscate.core import eval_f, positive_roots, radial_poly
from lemniscate.errors import DomainError, NotBounded
from lemniscate.tracer import alpha_closed_form, first_positive_root, trace_component


class TestTrace:
    def test_critical_axis_sample(self):
        curve = trace_component(L.scaled(4, 0.25, 1.0), m=64)
        assert curve.alphas[0] == pytest.approx(math.sqrt(2), abs=1e-12)
        assert curve.closed

    def test_fourfold_extremes(self):
        curve = trace_component(L.scaled(4, 0.1, 1.0), m=64)
        quarter = [0, 16, 32, 48]
        assert np.allclose(curve.alphas[quarter], curve.alphas.max(), rtol=1e-14)
        assert np.allclose(curve.alphas[[8, 24, 40, 56]], curve.alphas.min(), rtol=1e-14)

    def test_disk(self):
        curve = trace_component(L.scaled(1, 0.0, 1.0), m=32)
        assert np.allclose(curve.alphas, 1.0, rtol=1e-15)

    def test_default_sample_count(self):
        curve = trace_component(L.scaled(4, 0.01, 1.0))
        assert len(curve) == 1024
        assert np.all(np.diff(curve.thetas) > 0) and curve.thetas[-1] < 2 * math.pi

    def test_residuals_and_enclosure(self):
        fam = L.two_term(5, 1, 0.02, 1.0)
        curve = trace_component(fam, m=128, trace_tol=1e-10)
        assert np.abs(eval_f(fam, curve.alphas, curve.thetas)).max() < 1e-10
        r0 = positive_roots(radial_poly(fam, 0.0))[0].value
        assert curve.alphas.max() <= r0 + 1e-10

    def test_two_term_reflection(self):
        curve = trace_component(L.two_term(6, 3, 0.01, 0.05), m=128)
        mirrored = np.roll(curve.alphas[::-1], 1)
        assert np.allclose(curve.alphas, mirrored, atol=1e-10, rtol=0)

    @pytest.mark.parametrize("n", [3, 4, 6])
    def test_scaled_rotation(self, n):
        curve = trace_component(L.scaled(n, 0.5 * 2 / (n - 2) * ((n - 2) / n) ** (n / 2), 1.0), m=12 * 16)
        shift = len(curve) // n
        assert np.allclose(curve.alphas, np.roll(curve.alphas, shift), atol=1e-10, rtol=0)

    def test_refinement_keeps_samples(self):
        fam = L.two_term(4, 1, 0.03, 0.8)
        coarse = trace_component(fam, m=64)
        fine = trace_component(fam, m=128)
        assert np.allclose(fine.alphas[::2], coarse.alphas, atol=1e-10, rtol=0)

    def test_negative_coefficient_scaled(self):
        pos = trace_component(L.scaled(4, 0.2, 1.0), m=64)
        neg = trace_component(L.scaled(4, -0.2, 1.0), m=64)
        # C -> -C rotates by pi/4 = 8 samples
        assert np.allclose(neg.alphas, np.roll(pos.alphas, 8), atol=1e-12)

    def test_ellipse_is_traced(self):
        fam = L.two_term(2, 1, 0.5, 1.0)
        curve = trace_component(fam, m=64)
        assert np.abs(eval_f(fam, curve.alphas, curve.thetas)).max() < 1e-10

    @pytest.mark.parametrize(
        "fam",
        [L.scaled(4, 0.3, 1.0), L.two_term(5, 2, 0.3, 1.0), L.two_term(3, 1, 0.3, 1.0), L.two_term(2, 1, 2.0, 1.0)],
        ids=lambda f: f.label,
    )
    def test_not_bounded(self, fam):
        with pytest.raises(NotBounded):
            trace_component(fam, m=64)

    def test_too_few_samples(self):
        with pytest.raises(DomainError):
            trace_component(L.scaled(4, 0.1, 1.0), m=4)

    def test_first_root_none(self):
        assert first_positive_root(L.two_term(5, 2, 0.3, 1.0), 0.0) is None


class TestClosedForm:
    def test_critical_axis(self):
        assert alpha_closed_form(0.25, 1.0, 0.0) == pytest.approx(math.sqrt(2), rel=1e-15)

    def test_vanishing_cosine(self):
        assert alpha_closed_form(0.25, 1.0, math.pi / 8) == pytest.approx(1.0, rel=1e-15)
        assert alpha_closed_form(0.1, 9.0 / 4 * 0.1, math.pi / 8) == pytest.approx(math.sqrt(0.225), rel=1e-15)

    def test_negative_cosine_branch(self):
        # alpha^2 = (sqrt(1.4) - 1)/0.2, checked by mpmath and by substitution
        alpha = alpha_closed_form(0.1, 1.0, math.pi / 4)
        assert alpha == pytest.approx(0.957120568737092706333647958126, rel=1e-14)
        assert eval_f(L.scaled(4, 0.1, 1.0), alpha, math.pi / 4) == pytest.approx(0.0, abs=1e-15)

    def test_near_singular_angles_continuous(self):
        t0 = math.pi / 8
        vals = [alpha_closed_form(0.2, 1.0, t0 + d) for d in (-1e-9, -1e-7, 0.0, 1e-7, 1e-9)]
        assert np.ptp(vals) < 1e-7

    def test_domain(self):
        with pytest.raises(DomainError):
            alpha_closed_form(0.3, 1.0, 0.0)
        with pytest.raises(DomainError):
            alpha_closed_form(-0.1, 1.0, 0.0)

    def test_zero_coefficient_is_disk(self):
        assert alpha_closed_form(0.0, 4.0, 0.3) == pytest.approx(2.0, rel=1e-15)

    def test_vectorised(self):
        t = np.linspace(0, 2 * math.pi, 9)
        assert alpha_closed_form(0.1, 1.0, t).shape == (9,)
