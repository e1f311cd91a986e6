import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import minimize_scalar

from lemniscate.errors import DomainError
from lemniscate.thresholds import (
    ThresholdMethod,
    c_star_general,
    c_star_j1,
    c_star_scaled,
    k_star,
    k_star_maximizer,
    max_ratio,
    ratio,
    stationarity_terms,
)


def scan_max(n, k, j=None, lo=1e-3, hi=20.0, points=10**6):
    """Dense scan, then bounded polish; independent of the root isolator."""
    r = np.geomspace(lo, hi, points)
    v = ratio(n, k, r, j)
    i = int(np.argmax(v))
    res = minimize_scalar(
        lambda x: -ratio(n, k, x, j), bounds=(r[max(i - 1, 0)], r[min(i + 1, points - 1)]),
        method="bounded", options={"xatol": 1e-14},
    )
    return -res.fun, res.x


class TestJ1:
    def test_cubic_value(self):
        res = c_star_j1(3, 1.0)
        assert res.c_star == pytest.approx(5 / 27, rel=1e-14)
        assert res.r_star == pytest.approx(3.0, rel=1e-14)
        assert res.method is ThresholdMethod.CLOSED_FORM_J1

    def test_small_k_radius_limit(self):
        assert c_star_j1(3, 1e-12).r_star == pytest.approx(2.0, rel=1e-9)

    def test_quartic_matches_high_precision(self):
        # mpmath: stationary point of (r^2 - r - 1)/r^4
        assert c_star_j1(4, 1.0).c_star == pytest.approx(0.0712341919243226637773106940244, rel=1e-13)

    def test_quartic_matches_scan(self):
        value, _ = scan_max(4, 1.0, j=1)
        assert c_star_j1(4, 1.0).c_star == pytest.approx(value, rel=1e-10)

    @pytest.mark.parametrize("n", [1, 2])
    def test_low_degree_rejected(self, n):
        with pytest.raises(DomainError):
            c_star_j1(n, 1.0)


class TestScaled:
    def test_quartic(self):
        res = c_star_scaled(4, 1.0)
        assert res.c_star == pytest.approx(0.25, abs=1e-15)
        assert res.r_star == pytest.approx(math.sqrt(2), rel=1e-15)

    def test_quartic_k2(self):
        assert c_star_scaled(4, 2.0).c_star == pytest.approx(1 / 8, rel=1e-14)

    def test_cubic(self):
        assert c_star_scaled(3, 1.0).c_star == pytest.approx(0.384900179459750509672765853668, rel=1e-14)

    def test_low_degree_rejected(self):
        with pytest.raises(DomainError):
            c_star_scaled(2, 1.0)

    @given(st.integers(3, 12), st.floats(0.01, 100.0))
    def test_scaling_law(self, n, k):
        assert c_star_scaled(n, k).c_star == pytest.approx(c_star_scaled(n, 1.0).c_star * k ** (1 - n / 2), rel=1e-12)


class TestKStar:
    def test_values(self):
        assert k_star(3) == pytest.approx(4 / 27, rel=1e-15)
        assert k_star(4) == pytest.approx(0.25, rel=1e-15)

    def test_large_j_approaches_one(self):
        # (31/32) * (1/32)^(1/31)
        assert k_star(64) == pytest.approx(0.96875 * 32 ** (-1 / 31), rel=1e-14)
        assert 0.99 < k_star(10**4) < 1.0
        assert all(k_star(j) < k_star(j + 1) for j in range(3, 40))

    @pytest.mark.parametrize("j", [3, 4, 5, 8])
    def test_maximizer_is_where_r2_minus_rj_peaks(self, j):
        r = k_star_maximizer(j)
        assert r**2 - r**j == pytest.approx(k_star(j), rel=1e-13)
        assert 2 * r - j * r ** (j - 1) == pytest.approx(0.0, abs=1e-14)
        scan = np.linspace(0, 1, 10**6 + 1)
        assert (scan**2 - scan**j).max() == pytest.approx(k_star(j), rel=1e-10)

    def test_printed_radius_exponent_does_not_match(self):
        # (2/j)^(j-2) differs from the true maximiser once j > 3
        r_printed = (2 / 4) ** (4 - 2)
        assert r_printed**2 - r_printed**4 != pytest.approx(k_star(4), rel=1e-3)

    @pytest.mark.parametrize("j", [2, 1])
    def test_rejects_small_j(self, j):
        with pytest.raises(DomainError):
            k_star(j)


class TestGeneral:
    def test_absent_above_gate(self):
        for k in (4 / 27, 0.2, 1.0):
            res = c_star_general(5, 3, k)
            assert res.c_star is None and res.r_star is None
            assert res.k_star == pytest.approx(4 / 27)

    def test_value_below_gate(self):
        res = c_star_general(5, 3, 0.05)
        # mpmath reference for max of (r^2 - r^3 - 0.05)/r^5
        assert res.c_star == pytest.approx(5.87454205508311260139769908217, rel=1e-10)
        assert res.r_star == pytest.approx(0.326351822333069651148283373231, rel=1e-9)
        assert ratio(5, 0.05, res.r_star, 3) == res.c_star
        value, _ = scan_max(5, 0.05, j=3, lo=0.05, hi=2.0)
        assert res.c_star == pytest.approx(value, rel=1e-10)

    def test_numeric_path_matches_j1_closed_form(self):
        value, r = max_ratio(4, 1.0, j=1)
        closed = c_star_j1(4, 1.0)
        assert value == pytest.approx(closed.c_star, rel=1e-9)
        assert r == pytest.approx(closed.r_star, rel=1e-9)

    def test_continuity_at_gate(self):
        gate = k_star(3)
        values = [c_star_general(6, 3, gate * (1 - eps)).c_star for eps in (1e-1, 1e-2, 1e-3, 1e-4)]
        assert all(a > b > 0 for a, b in zip(values, values[1:]))
        assert values[-1] < 1e-3

    @pytest.mark.parametrize("n,j", [(3, 3), (4, 2), (4, 5), (3, 1)])
    def test_domain(self, n, j):
        with pytest.raises(DomainError):
            c_star_general(n, j, 0.1)


@pytest.mark.parametrize("n", range(3, 9))
@pytest.mark.parametrize("k", [0.1, 1.0, 10.0])
def test_stationarity_polynomial_at_r_star(n, k):
    for res, j in ((c_star_j1(n, k), 1), (c_star_scaled(n, k), None)):
        terms = stationarity_terms(n, k, j)
        value = sum(c * res.r_star**d for d, c in terms)
        scale = max(abs(c) for _, c in terms) * max(1.0, res.r_star) ** max(d for d, _ in terms)
        assert abs(value) <= 1e-8 * scale
