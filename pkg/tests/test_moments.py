from fractions import Fraction as F
import math

import pytest

from qjacobi.exact import const_eq, const_to_float, gamma_reduce
from qjacobi.moments import (
    IntegrabilityError,
    QuadratureError,
    WeightSpec,
    family_weight,
    gegenbauer_norm_constant,
    inner_product,
    moment_ratio,
    mu0_closed_form,
    norm_constant_check,
    quadrature,
    verify_orthogonality,
)
from qjacobi.polys import Family, FamilyParam, ParityPoly, family_poly

HALF = F(1, 2)


def test_moment_ratio_examples():
    assert moment_ratio(WeightSpec.rational_decay(1, 3), 1) == F(1, 3)
    assert moment_ratio(WeightSpec.compact_beta(1, 1), 1) == F(1, 4)
    with pytest.raises(IntegrabilityError):
        moment_ratio(WeightSpec.rational_decay(1, 2), 2)


def test_mu0():
    assert const_to_float(mu0_closed_form(WeightSpec.compact_beta(1, 1))) == pytest.approx(math.pi / 2)
    assert const_to_float(mu0_closed_form(WeightSpec.rational_decay(1, 1))) == pytest.approx(math.pi)
    assert const_to_float(mu0_closed_form(WeightSpec.rational_decay(1, 3))) == pytest.approx(3 * math.pi / 8)
    N = F(2)
    ref = gamma_reduce([(N + HALF, 1), (N + 1, -1)], 1, 1, [N])
    assert const_eq(mu0_closed_form(WeightSpec.rational_decay(1 / N, N + 1)), ref)
    w = WeightSpec.rational_decay(1 / N, N + 1)
    assert quadrature(w, "real") == pytest.approx(float(ref), rel=1e-12)


def test_inner_product_examples():
    one = ParityPoly([1])
    w = WeightSpec.compact_beta(1, 1)
    assert inner_product(one, one, w).ratio_to_mu0 == 1
    c1 = family_poly(FamilyParam(Family.GEGENBAUER, 1, 1))
    c2 = family_poly(FamilyParam(Family.GEGENBAUER, 2, 1))
    assert inner_product(c1, c2, w).ratio_to_mu0 == 0
    d = inner_product(c1, c1, w)
    assert d.ratio_to_mu0 == 1
    assert const_eq(d.value, gegenbauer_norm_constant(1, 1))


def test_divergent_inner_product_raises():
    p = ParityPoly([0, 0, 0, 1])
    with pytest.raises(IntegrabilityError):
        inner_product(p, p, WeightSpec.rational_decay(1, 3))


def test_orthogonality_reports():
    rep = verify_orthogonality(Family.GEGENBAUER, 1, 4)
    off = [(m, n) for (m, n) in rep.entries if m < n]
    assert len(off) == 10 and rep.off_diagonal_zero
    rep = verify_orthogonality(Family.CARINENA_POS, 5, 3)
    assert rep.entries[(0, 1)].ratio_to_mu0 == 0
    rep = verify_orthogonality(Family.RHP, 3, 2)
    assert rep.entries[(0, 2)].ratio_to_mu0 == 0
    assert family_weight(Family.RHP, 3, 0, 2).exponent == 5


def test_rhp_pair_by_quadrature():
    N = 3
    h0 = family_poly(FamilyParam(Family.RHP, 0, N))
    h2 = family_poly(FamilyParam(Family.RHP, 2, N))
    w = family_weight(Family.RHP, N, 0, 2)
    val = quadrature(lambda x: float(h0.evalf(x) * h2.evalf(x)) * float(w(x)), "real")
    assert abs(val) < 1e-10


def test_degree_dropped_pair_is_not_orthogonal():
    # H_6 at parameter 3 is the constant 25/3; quadrature agrees with the engine
    rep = verify_orthogonality(Family.CARINENA_POS, 3, 6)
    e = rep.entries[(0, 6)]
    assert e.ratio_to_mu0 == F(25, 3)
    w = family_weight(Family.CARINENA_POS, 3)
    assert quadrature(lambda x: 25 / 3 * float(w(x)), "real") == pytest.approx(float(e), rel=1e-10)


@pytest.mark.parametrize("N", [2, 3, F(7, 2), 5])
def test_rhp_norm_constant(N):
    for n in range(9):
        assert norm_constant_check(Family.RHP, n, N)


def test_gegenbauer_norm_constant_needs_gamma_squared():
    assert norm_constant_check(Family.GEGENBAUER, 0, 1)
    assert norm_constant_check(Family.GEGENBAUER, 4, 2)  # Gamma(2) = 1
    assert not norm_constant_check(Family.GEGENBAUER, 2, F(5, 2))
    for nu in (1, 2, F(5, 2), F(7, 2), 3):
        for n in range(9):
            assert norm_constant_check(Family.GEGENBAUER, n, nu, squared_gamma=True)


def test_quadrature_oracle():
    assert quadrature(lambda x: math.sqrt(max(1 - x * x, 0)), (-1, 1)) == pytest.approx(math.pi / 2, abs=1e-10)
    assert quadrature(lambda x: 1 / (1 + x * x), "real") == pytest.approx(math.pi, abs=1e-10)
    assert abs(quadrature(lambda x: x * math.sqrt(max(1 - x * x, 0)), (-1, 1))) < 1e-12


def test_quadrature_reports_divergence():
    with pytest.raises(QuadratureError) as exc:
        quadrature(lambda x: 1 / (1 + abs(x)), "real")
    assert exc.value.estimate is not None
