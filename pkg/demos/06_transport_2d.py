"""
Hyperbolic plane onto the disk
==============================

``(x, y) -> (x, y)/sqrt(1 + x^2 + y^2)`` maps the hyperbolic chart onto the
unit disk. Transporting the hyperbolic oscillator density with the
invariant measures and comparing with the sphere density (indices and
arguments swapped) leaves a residual factor.
"""

from qjacobi import verify_thm5
from qjacobi.transforms import jacobian_2d, map_2d, map_2d_inverse

x, y = 1.0, 0.0
X, Y = map_2d(x, y)
print("map (1, 0) ->", (float(X), float(Y)))
print("jacobian:", {k: float(v) for k, v in jacobian_2d(x, y).items()})
print("round trip:", [float(t) for t in map_2d_inverse(*map_2d(0.3, -1.7))])

# max_error and ratio_spread are large; residual_spread is ~1e-14, i.e. the
# ratio is exactly sqrt((1 - X^2)/(1 - X^2 - Y^2)) at every grid point
for m, n, N in ((0, 0, 3), (1, 1, 5), (2, 1, 6), (0, 3, 7)):
    res = verify_thm5(m, n, N)
    print((m, n, N), f"max_error={res.max_rel_error:.3f}",
          f"ratio_spread={res.ratio_spread:.3f}", f"residual_spread={res.residual_spread:.1e}")
