"""
Exact orthogonality and normalization
=====================================

Inner products reduce to even moments whose consecutive ratios are
rational. Each Gram entry is ``ratio * mu0`` with ``mu0`` a gamma product,
so "orthogonal" means the rational ratio is exactly 0.
"""

from fractions import Fraction as F

from qjacobi import Family, verify_orthogonality
from qjacobi.exact import const_to_float, format_rational
from qjacobi.moments import gegenbauer_norm_constant, norm_constant_check

rep = verify_orthogonality(Family.GEGENBAUER, 2, 5)
print("Gegenbauer nu=2 off-diagonal all zero:", rep.off_diagonal_zero)
for n, e in rep.diagonal.items():
    print(f"  ||C_{n}||^2 = {format_rational(e.ratio_to_mu0)} * ({e.mu0}) = {float(e):.12g}")

# RHP uses a pair-dependent weight; every pair is orthogonal
rep = verify_orthogonality(Family.RHP, 3, 8)
print("RHP N=3:", rep.off_diagonal_zero)

# the positive Cariñena family with a fixed weight: pairs with high total
# degree diverge (skipped), and degree-dropped members are not orthogonal
rep = verify_orthogonality(Family.CARINENA_POS, 3, 6)
print("Cariñena param=3: skipped", sorted(rep.skips), "nonzero:",
      [(k, format_rational(e.ratio_to_mu0)) for k, e in rep.entries.items()
       if k[0] < k[1] and e.ratio_to_mu0])

# closed-form Gegenbauer constant: the engine needs Gamma(nu)^2
for nu in (1, 2, F(5, 2)):
    print(f"nu={format_rational(F(nu))}: Gamma(nu) ->", norm_constant_check(Family.GEGENBAUER, 2, nu),
          " Gamma(nu)^2 ->", norm_constant_check(Family.GEGENBAUER, 2, nu, squared_gamma=True))
print(const_to_float(gegenbauer_norm_constant(2, F(5, 2), squared_gamma=True)))
