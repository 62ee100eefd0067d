"""
Relativistic density onto the interval
======================================

``Y = X / sqrt(N + X^2)`` carries the relativistic density ``|h_n^N|^2``
onto the Gegenbauer density with ``nu = N``. Checked pointwise on a grid,
then witnessed by sampling.
"""

from fractions import Fraction as F

import numpy as np

from qjacobi import DensitySpec, pushforward_check_1d, sample_1d
from qjacobi.moments import quadrature
from qjacobi.transforms import density_eval_1d, ks_distance, nagel_map, pushforward_grid

grid = pushforward_grid(1001)
for N in (2, 3, F(7, 2), 5):
    print(f"N={N}:", ["%.1e" % pushforward_check_1d(n, N, grid) for n in range(6)])

N, n = 3, 2
batch = sample_1d(DensitySpec("relativistic1d", n, N), 100_000, seed=42)
print("acceptance rate", batch.proposal_acceptance_rate, "mean", batch.values.mean())
src = DensitySpec("relativistic1d", n, N)
print("KS vs relativistic density:", ks_distance(batch.values, lambda x: density_eval_1d(src, x)))
Y = nagel_map(batch.values, N)
dst = DensitySpec("sphere1d", n, N)
print("KS of mapped samples vs Gegenbauer density:",
      ks_distance(Y, lambda y: density_eval_1d(dst, y), lower=-1.0))

# observed vs expected mass per bin
counts, edges = np.histogram(Y, bins=10, range=(-1, 1))
for lo, hi, c in zip(edges[:-1], edges[1:], counts):
    mass = quadrature(lambda y: density_eval_1d(dst, y), (lo, hi))
    print(f"[{lo:+.1f}, {hi:+.1f}) observed {c / len(Y):.4f} expected {mass:.4f}")
