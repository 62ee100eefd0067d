"""
q-Gaussian weights
==================

The orthogonality weights are q-Gaussians: compactly supported for q < 1
(Gegenbauer), heavy tailed for q > 1 (Cariñena, RHP).
"""

import numpy as np

from qjacobi import QGaussianSpec, q_from_family, q_gaussian_pdf, tsallis_entropy
from qjacobi.exact import format_rational
from qjacobi.moments import quadrature
from qjacobi.nonextensive import q_gaussian_support, q_pair_table3, weight_as_q_gaussian

for q in (0.3, 0.7, 1.0, 1.2, 1.5):
    spec = QGaussianSpec(q)
    total = quadrature(lambda x: q_gaussian_pdf(spec, x), q_gaussian_support(spec), 1e-13, 1e-13)
    print(f"q={q}: branch={spec.branch:8s} integral-1 = {total - 1:+.1e}")

for family, params in [("gegenbauer", 2), ("carinena", 2), ("rhp", (3, 0, 0))]:
    q, tag = q_from_family(family, params)
    print(family, format_rational(q), tag)
print("sphere (nu=2, m=1):", [format_rational(q) for q in q_pair_table3("sphere", 2, 1)])
print("hyperbolic (3, m=1):", [format_rational(q) for q in q_pair_table3("hyperbolic", 3, 1)])

# the Gegenbauer weight at nu=3 is a q-Gaussian up to a constant
spec = weight_as_q_gaussian("gegenbauer", 3)
X = np.linspace(-0.9, 0.9, 5)
print("pdf / weight:", q_gaussian_pdf(spec, X) / (1 - X**2) ** 2.5)

# Tsallis entropy tends to the Shannon entropy as q -> 1
gauss = lambda x: q_gaussian_pdf(QGaussianSpec(1.0), x)
for q in (0.9, 0.99, 1.0, 1.01, 1.1):
    print(q, tsallis_entropy(gauss, q))
