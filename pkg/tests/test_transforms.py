from fractions import Fraction as F
import math

import numpy as np
import pytest

from qjacobi.moments import quadrature
from qjacobi.transforms import (
    DensitySpec,
    density_eval_1d,
    density_eval_2d,
    hyperbolic_table_form,
    jacobian_2d,
    ks_distance,
    map_2d,
    map_2d_inverse,
    nagel_map,
    pushforward_check_1d,
    pushforward_grid,
    sample_1d,
    thm5_grid,
    verify_thm5,
)


def test_1d_density_values():
    assert density_eval_1d(DensitySpec("relativistic1d", 0, 1), 0.0) == pytest.approx(2 / math.pi, rel=1e-14)
    assert density_eval_1d(DensitySpec("sphere1d", 0, 1), 0.0) == pytest.approx(2 / math.pi, rel=1e-14)
    with pytest.raises(ValueError):
        density_eval_1d(DensitySpec("sphere1d", 0, 1), 1.5)


@pytest.mark.parametrize("kind,n,p", [("relativistic1d", 0, 3), ("relativistic1d", 3, F(7, 2)),
                                      ("sphere1d", 2, 2), ("sphere1d", 5, F(5, 2))])
def test_1d_densities_integrate_to_one(kind, n, p):
    spec = DensitySpec(kind, n, p)
    assert quadrature(lambda x: density_eval_1d(spec, x), spec.domain) == pytest.approx(1, abs=1e-10)


@pytest.mark.parametrize("n,N,points", [(0, 2, 101), (2, F(7, 2), 1001), (5, 3, 1001)])
def test_pushforward(n, N, points):
    assert pushforward_check_1d(n, N, pushforward_grid(points)) < 1e-10


def test_pushforward_at_origin():
    for n in range(4):
        a = density_eval_1d(DensitySpec("relativistic1d", n, 3), 0.0) * math.sqrt(3)
        b = density_eval_1d(DensitySpec("sphere1d", n, 3), 0.0)
        assert a == pytest.approx(b, rel=1e-13, abs=1e-300)
        assert (b > 0) == (n % 2 == 0)


def test_sampler_reproducible_and_symmetric():
    spec = DensitySpec("relativistic1d", 0, 3)
    a = sample_1d(spec, 100_000, 42)
    b = sample_1d(spec, 100_000, 42)
    np.testing.assert_array_equal(a.values, b.values)
    assert 0 < a.proposal_acceptance_rate <= 1
    assert abs(a.values.mean()) < 5 / math.sqrt(len(a.values))
    assert ks_distance(a.values, lambda x: density_eval_1d(spec, x)) < 0.02
    assert not np.array_equal(sample_1d(spec, 1000, 43).values, a.values[:1000])


@pytest.mark.parametrize("n,N", [(0, 3), (3, F(7, 2))])
def test_transformed_samples_follow_sphere_density(n, N):
    batch = sample_1d(DensitySpec("relativistic1d", n, N), 100_000, 42)
    target = DensitySpec("sphere1d", n, N)
    Y = nagel_map(batch.values, N)
    assert ks_distance(Y, lambda y: density_eval_1d(target, y), lower=-1.0) < 0.02


def test_ks_detects_wrong_target():
    batch = sample_1d(DensitySpec("relativistic1d", 0, 3), 20_000, 1)
    wrong = DensitySpec("relativistic1d", 2, 3)
    assert ks_distance(batch.values, lambda x: density_eval_1d(wrong, x)) > 0.05


def test_2d_density_values():
    assert density_eval_2d(DensitySpec("sphere2d", 0, 2, 0), (0.0, 0.0)) == 1.0
    assert density_eval_2d(DensitySpec("hyperbolic2d", 0, 5, 0), (0.0, 0.0)) == 1.0
    val = density_eval_2d(DensitySpec("hyperbolic2d", 1, 5, 1), (0.3, 0.4))
    assert val == pytest.approx(12.306794257109102, rel=1e-13)
    with pytest.raises(ValueError):
        density_eval_2d(DensitySpec("sphere2d", 0, 2, 0), (0.8, 0.8))


def test_map_and_jacobian():
    assert map_2d(0.0, 0.0) == (0.0, 0.0)
    X, Y = map_2d(1.0, 0.0)
    assert (X, Y) == (pytest.approx(1 / math.sqrt(2)), 0.0)
    for x, y in ((0.0, 0.0), (1.0, 0.0), (0.3, -1.7), (-2.0, 5.0)):
        j = jacobian_2d(x, y)
        assert j["matrix"] == pytest.approx(j["from_xy"], rel=1e-12)
        assert j["matrix"] == pytest.approx(j["from_XY"], rel=1e-12)
    assert jacobian_2d(1.0, 0.0)["from_xy"] == pytest.approx(0.25)
    xr, yr = map_2d_inverse(*map_2d(0.3, -1.7))
    assert abs(xr - 0.3) < 1e-12 and abs(yr + 1.7) < 1e-12


def test_thm5_ratio_is_an_exact_non_constant_factor():
    # transported density / g(Y, X) = sqrt((1 - X^2)/(1 - X^2 - Y^2)) at every point
    for m, n, N in ((0, 0, 3), (1, 1, 5), (2, 1, 6)):
        res = verify_thm5(m, n, N)
        assert res.residual_spread < 1e-10
        assert res.ratio_spread > 1


def test_thm5_domain():
    with pytest.raises(ValueError):
        verify_thm5(0, 0, 3, (np.array([0.9]), np.array([0.9])))
    X, Y = thm5_grid(21)
    assert np.all(X**2 + Y**2 < 1)


def test_table_form_matches_up_to_sqrt_factor():
    y, x = np.meshgrid(np.linspace(-2, 2, 9), np.linspace(-2, 2, 9))
    y, x = y.ravel(), x.ravel()
    for m, n, N in ((0, 0, 3), (1, 1, 5), (2, 1, 6)):
        direct = density_eval_2d(DensitySpec("hyperbolic2d", n, N, m), (x, y))
        table = hyperbolic_table_form(m, n, N, y, x / np.sqrt(1 + y**2))
        ok = direct > 1e-8 * direct.max()
        r = table[ok] / direct[ok] / np.sqrt(1 + y[ok] ** 2)
        assert np.ptp(r) < 1e-9 * r.mean()
