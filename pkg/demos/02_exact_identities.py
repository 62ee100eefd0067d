"""
Exact identities between the families
=====================================

Square roots of the parameters appear in the identities, but after parity
bookkeeping both sides are rational polynomials and the checks reduce to
comparing coefficient lists.
"""

from fractions import Fraction as F

from qjacobi import hermite_limit_gap, verify_grid, verify_nagel

# RHP through Gegenbauer of the same parameter
for n in range(5):
    rep = verify_nagel(n, F(7, 2))
    print(rep.to_json())

# all four family links on a small grid; degenerate points become skips
for name, params in [("thm1", [F(3, 2), 5]), ("thm2", [F(1, 2), 2]),
                     ("thm3", [F(21, 2)]), ("square", [F(7, 2)])]:
    reps = verify_grid(name, 8, params)
    ok = sum(r.exact_equal is True for r in reps)
    skip = [r.n for r in reps if r.skipped]
    print(f"{name:7s} equal={ok:3d} failed={sum(r.exact_equal is False for r in reps)} skipped n={skip}")

# large N: RHP approaches the classical Hermite polynomial, gap ~ const/N
for n in (2, 4, 6):
    print(n, [float(N * hermite_limit_gap(n, N)) for N in (10**2, 10**4, 10**6)])
