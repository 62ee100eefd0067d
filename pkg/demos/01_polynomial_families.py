"""
Building the polynomial families
================================

Every family comes out of one Rodrigues engine: repeated derivatives of
``(1 + c X^2)^a`` with rational ``a`` and ``c``. Coefficients are exact
fractions, so nothing here is rounded.
"""

from fractions import Fraction as F

from qjacobi import Family, FamilyParam, family_poly
from qjacobi.exact import format_rational
from qjacobi.polys import coeffs_to_csv, gegenbauer_recurrence


def show(poly):
    terms = [f"{format_rational(c)} X^{j}" for j, c in enumerate(poly.coeffs) if c]
    return " + ".join(terms) or "0"


# relativistic Hermite polynomials at N = 3; H_1 = 2X for every N
for n in range(4):
    print(f"H_{n}^3 =", show(family_poly(FamilyParam(Family.RHP, n, 3))))

# Gegenbauer, two ways: Rodrigues engine vs three-term recurrence
nu = F(7, 2)
for n in range(6):
    a = family_poly(FamilyParam(Family.GEGENBAUER, n, nu))
    assert a == gegenbauer_recurrence(n, nu)
print("Rodrigues and recurrence agree for nu = 7/2, n <= 5")

# the two Cariñena families
print("positive, n=1, param=2 :", show(family_poly(FamilyParam(Family.CARINENA_POS, 1, 2))))
print("negative, n=1, nu=1    :", show(family_poly(FamilyParam(Family.CARINENA_NEG, 1, 1))))

# a degree drop: when 2*param is an integer, high-degree members can collapse
p = family_poly(FamilyParam(Family.CARINENA_POS, 6, 3))
print("positive Cariñena n=6, param=3 has degree", p.degree, "->", show(p))

# tables export as CSV (power, exact coefficient)
print(coeffs_to_csv(family_poly(FamilyParam(Family.GEGENBAUER, 3, 1))), end="")
