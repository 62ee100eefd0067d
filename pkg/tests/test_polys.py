from fractions import Fraction as F

import numpy as np
import pytest

from qjacobi.polys import (
    Family,
    FamilyParam,
    OrthoFunctionSpec,
    ParityPoly,
    coeffs_to_csv,
    family_poly,
    gegenbauer_recurrence,
    ortho_function_eval,
    rodrigues_poly,
)


def P(*c):
    return ParityPoly([F(x) for x in c])


def fam(f, n, p=None):
    return family_poly(FamilyParam(f, n, p))


def test_rodrigues_basics():
    assert rodrigues_poly(F(-3), F(1, 3), 0) == P(1)
    assert rodrigues_poly(F(-3), F(1, 3), 1) == P(0, -2)


@pytest.mark.parametrize("N", [F(1, 3), 2, F(7, 2), 100])
def test_rhp_low_degrees(N):
    N = F(N)
    assert fam(Family.RHP, 1, N) == P(0, 2)
    assert fam(Family.RHP, 2, N) == P(-2, 0, 2 * (2 + 1 / N))


def test_rhp_n2_at_3():
    assert fam(Family.RHP, 2, 3) == P(-2, 0, F(14, 3))


def test_gegenbauer_examples():
    assert fam(Family.GEGENBAUER, 3, 1) == P(0, -4, 0, 8)
    assert fam(Family.GEGENBAUER, 1, 2) == P(0, 4)
    assert fam(Family.GEGENBAUER, 2, 1) == P(-1, 0, 4)
    for nu in (F(1, 3), 1, F(7, 2)):
        nu = F(nu)
        assert fam(Family.GEGENBAUER, 0, nu) == P(1)
        c3 = 2 * nu * (nu + 1)
        assert fam(Family.GEGENBAUER, 3, nu) == P(0, -c3, 0, c3 * 2 * (nu + 2) / 3)


def test_hermite():
    expect = [P(1), P(0, 2), P(-2, 0, 4), P(0, -12, 0, 8)]
    for n, e in enumerate(expect):
        assert fam(Family.HERMITE, n) == e


def test_carinena():
    assert fam(Family.CARINENA_POS, 1, 2) == P(0, F(3, 2))
    assert fam(Family.CARINENA_NEG, 1, 1) == P(0, 3)
    assert fam(Family.CARINENA_POS, 0, 5) == P(1)


def test_degree_drop_for_carinena_pos():
    # 2N integer and N + 1/2 <= n <= 2N: the leading Rodrigues coefficient vanishes
    p = fam(Family.CARINENA_POS, 6, 3)
    assert p.degree == 0 and p == P(F(25, 3))
    assert fam(Family.CARINENA_POS, 4, F(21, 2)).degree == 4


@pytest.mark.parametrize("nu", [F(1, 2), 1, F(3, 2), 2, F(7, 2), 5])
def test_rodrigues_matches_recurrence(nu):
    for n in range(16):
        assert fam(Family.GEGENBAUER, n, nu) == gegenbauer_recurrence(n, nu)


@pytest.mark.parametrize("f", [Family.RHP, Family.GEGENBAUER, Family.CARINENA_NEG])
def test_parity_and_degree(f):
    for n in range(9):
        p = fam(f, n, F(7, 3))
        assert p.degree == n
        assert p.parity == ("even" if n % 2 == 0 else "odd")


def test_invalid_params():
    with pytest.raises(ValueError):
        FamilyParam(Family.RHP, 2, 0)
    with pytest.raises(ValueError):
        FamilyParam(Family.CARINENA_POS, 2, -1)
    with pytest.raises(ValueError):
        FamilyParam(Family.GEGENBAUER, -1, 1)


def test_parity_poly_arithmetic():
    a, b = P(1, 2), P(0, 0, 3)
    assert a * b == P(0, 0, 3, 6)
    assert (a - a).degree == -1 and (a - a).parity == "zero"
    assert a.parity == "mixed"
    assert (a ** 2).derivative() == P(4, 8)
    assert a(F(1, 2)) == 2
    np.testing.assert_allclose(b.evalf(np.array([1.0, 2.0])), [3.0, 12.0])


def test_ortho_function_values():
    assert ortho_function_eval(OrthoFunctionSpec("gegenbauer", 0, F(1)), 0.0) == 1.0
    assert ortho_function_eval(OrthoFunctionSpec("rhp", 0, F(1)), 1.0) == pytest.approx(0.5)
    assert ortho_function_eval(OrthoFunctionSpec("carinena-pos", 1, F(2)), 0.0) == 0.0
    with pytest.raises(ValueError):
        ortho_function_eval(OrthoFunctionSpec("gegenbauer", 1, F(1)), 1.5)


def test_csv_export():
    assert coeffs_to_csv(fam(Family.GEGENBAUER, 3, 1)) == "power,coeff\n0,0\n1,-4\n2,0\n3,8\n"
