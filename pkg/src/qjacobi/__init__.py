"""
Exact Rodrigues-formula polynomial families (relativistic Hermite,
Gegenbauer, Cariñena), their connecting identities, orthogonality, and the
q-Gaussian density layer built on their weights.
"""

from .exact import ClosedFormConstant, format_rational, gamma_reduce, parse_rational
from .identities import (
    DegenerateParameterError,
    IdentityReport,
    hermite_limit_gap,
    verify_grid,
    verify_nagel,
    verify_square,
    verify_thm1,
    verify_thm2,
    verify_thm3,
)
from .moments import (
    IntegrabilityError,
    WeightSpec,
    family_weight,
    inner_product,
    moment_ratio,
    verify_orthogonality,
)
from .nonextensive import QGaussianSpec, q_from_family, q_gaussian_pdf, tsallis_entropy
from .polys import Family, FamilyParam, ParityPoly, family_poly, rodrigues_poly
from .transforms import DensitySpec, pushforward_check_1d, sample_1d, verify_thm5

__version__ = "0.1.0"

__all__ = [
    "ClosedFormConstant", "format_rational", "gamma_reduce", "parse_rational",
    "DegenerateParameterError", "IdentityReport", "hermite_limit_gap", "verify_grid",
    "verify_nagel", "verify_square", "verify_thm1", "verify_thm2", "verify_thm3",
    "IntegrabilityError", "WeightSpec", "family_weight", "inner_product", "moment_ratio",
    "verify_orthogonality",
    "QGaussianSpec", "q_from_family", "q_gaussian_pdf", "tsallis_entropy",
    "Family", "FamilyParam", "ParityPoly", "family_poly", "rodrigues_poly",
    "DensitySpec", "pushforward_check_1d", "sample_1d", "verify_thm5",
]
