from fractions import Fraction as F
import math

import numpy as np
import pytest

from qjacobi.moments import family_weight, quadrature
from qjacobi.nonextensive import (
    PhysicalOscillator,
    QGaussianSpec,
    physical_to_param,
    q_from_family,
    q_gaussian_pdf,
    q_gaussian_support,
    q_pair_table3,
    shannon_entropy,
    tsallis_entropy,
    weight_as_q_gaussian,
)


def test_gaussian_limit_value():
    assert q_gaussian_pdf(QGaussianSpec(1.0), 0.0) == pytest.approx(1 / math.sqrt(2 * math.pi), rel=1e-14)


def test_compact_branch_is_clamped():
    spec = QGaussianSpec(0.5, 1.0)
    lo, hi = q_gaussian_support(spec)
    assert hi == pytest.approx(math.sqrt(7))
    assert q_gaussian_pdf(spec, hi + 0.1) == 0.0
    assert q_gaussian_support(QGaussianSpec(1.2)) == "real"


@pytest.mark.parametrize("q", [0.5, 1.2, 1.5, 0.1, 1.6])
def test_normalized(q):
    spec = QGaussianSpec(q, 1.0)
    total = quadrature(lambda x: q_gaussian_pdf(spec, x), q_gaussian_support(spec), 1e-13, 1e-13)
    assert total == pytest.approx(1, abs=1e-10)


def test_continuous_in_q():
    X = np.linspace(-4, 4, 401)
    g = q_gaussian_pdf(QGaussianSpec(1.0), X)
    for q in (1 - 1e-5, 1 + 1e-5):
        assert np.max(np.abs(q_gaussian_pdf(QGaussianSpec(q), X) - g)) < 1e-4


def test_q_range():
    with pytest.raises(ValueError):
        QGaussianSpec(5 / 3)
    with pytest.raises(ValueError):
        QGaussianSpec(0.0)


def test_entropies():
    gauss = lambda x: q_gaussian_pdf(QGaussianSpec(1.0), x)
    h = shannon_entropy(gauss)
    assert h == pytest.approx(0.5 * math.log(2 * math.pi * math.e), rel=1e-10)
    assert tsallis_entropy(gauss, 1.0) == h
    assert abs(tsallis_entropy(gauss, 1.001) - h) < 1e-2
    assert abs(tsallis_entropy(gauss, 0.999) - h) < 1e-2
    assert tsallis_entropy(lambda x: 0.5, 2.0, (-1, 1)) == pytest.approx(0.5, abs=1e-12)


def test_family_q_maps():
    assert q_from_family("gegenbauer", 2) == (F(1, 3), "q<1")
    assert q_from_family("carinena", 2) == (F(7, 5), "q>1")
    assert q_from_family("rhp", (3, 0, 0)) == (F(5, 4), "q>1")
    with pytest.raises(ValueError):
        q_from_family("gegenbauer", F(1, 2))


def test_geometry_q_pairs():
    assert q_pair_table3("sphere", 2, 1) == (F(1, 3), F(2, 3))
    assert q_pair_table3("hyperbolic", 3, 1) == (F(9, 7), F(3, 2))
    with pytest.raises(ValueError):
        q_pair_table3("sphere", F(1, 2), 0)


def test_physical_maps():
    assert physical_to_param(PhysicalOscillator(mass=3, kappa=-1), "hyperbolic") == 3
    assert physical_to_param(PhysicalOscillator(mass=1, c=2, omega=2), "relativistic") == 2
    with pytest.raises(ValueError):
        physical_to_param(PhysicalOscillator(mass=1, kappa=-1), "sphere")


@pytest.mark.parametrize("family,param", [("gegenbauer", F(3)), ("carinena", F(5, 2))])
def test_weights_are_q_gaussians(family, param):
    spec = weight_as_q_gaussian(family, param)
    fam = "gegenbauer" if family == "gegenbauer" else "carinena-pos"
    w = family_weight(fam, param)
    X = np.linspace(-0.9, 0.9, 19)
    ratio = q_gaussian_pdf(spec, X) / w(X)
    assert np.ptp(ratio) < 1e-12 * ratio.mean()
