import numpy as np
import pytest

from lemniscate.core import LemniscateFamily as L
from lemniscate.errors import DomainError
from lemniscate.oracle import auto_box_radius, check_laplacian, f_cartesian, grid_report
from lemniscate.core import eval_f


def test_cartesian_matches_polar():
    fam = L.two_term(6, 3, 0.01, 0.05)
    rng = np.random.default_rng(1)
    r, t = rng.uniform(0, 2, 500), rng.uniform(0, 2 * np.pi, 500)
    assert np.allclose(f_cartesian(fam, r * np.exp(1j * t)), eval_f(fam, r, t), atol=1e-11)


def test_bounded_single_loop():
    rep = grid_report(L.scaled(4, 0.2, 1.0), resolution=512)
    assert rep.bounded_loop_count == 1 and rep.origin_component_bounded
    assert rep.bounded_negative_components == 0 and rep.has_bounded_component


def test_above_threshold_unbounded():
    rep = grid_report(L.scaled(4, 0.3, 1.0), resolution=512)
    assert rep.bounded_loop_count == 0 and not rep.origin_component_bounded


def test_j2_never_bounded():
    rep = grid_report(L.two_term(5, 2, 0.5, 1.0), resolution=512)
    assert rep.bounded_loop_count == 0


def test_resolution_stable():
    fam = L.two_term(4, 1, 0.05, 1.0)
    a, b = grid_report(fam, 512), grid_report(fam, 1024)
    assert (a.bounded_loop_count, a.origin_component_bounded) == (b.bounded_loop_count, b.origin_component_bounded)


def test_box_encloses_component():
    fam = L.scaled(4, -0.2, 1.0)
    assert auto_box_radius(fam) > 1.0
    assert grid_report(fam, 256).bounded_loop_count == 1


def test_pgm_dump(tmp_path):
    path = tmp_path / "g.pgm"
    grid_report(L.scaled(4, 0.2, 1.0), resolution=64, pgm_path=path)
    tokens = path.read_text().split()
    assert tokens[:4] == ["P2", "65", "65", "255"]
    pixels = np.array(tokens[4:], dtype=int)
    assert pixels.size == 65 * 65 and set(pixels.tolist()) <= {0, 128, 255}
    assert pixels.reshape(65, 65)[32, 32] == 255


def test_bad_arguments():
    with pytest.raises(DomainError):
        grid_report(L.scaled(4, 0.2, 1.0), resolution=10)
    with pytest.raises(DomainError):
        grid_report(L.scaled(4, 0.2, 1.0), box_radius=-1.0)
    with pytest.raises(DomainError):
        check_laplacian(L.scaled(4, 0.2, 1.0), h=0.0)


class TestLaplacian:
    def test_lambda4(self):
        assert check_laplacian(L.scaled(4, 0.2, 1.0)) < 1e-4

    def test_quadratic_exact(self):
        # stencil is exact on quadratics; h = 1e-2 keeps rounding below 1e-9
        assert check_laplacian(L.scaled(1, 0.5, 1.0), h=1e-2) < 1e-9

    def test_two_term(self):
        assert check_laplacian(L.two_term(6, 3, 0.05, 0.1)) < 1e-3

    def test_deterministic(self):
        fam = L.two_term(5, 2, 0.3, 1.0)
        assert check_laplacian(fam, seed=3) == check_laplacian(fam, seed=3)
