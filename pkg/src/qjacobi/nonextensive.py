"""
q-Gaussian densities, Tsallis entropy and the maps between family
parameters, q and the physical constants of the oscillators.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np
from scipy.special import gammaln

from .exact import as_rational, format_rational
from .moments import quadrature

__all__ = [
    "QGaussianSpec",
    "PhysicalOscillator",
    "q_gaussian_pdf",
    "q_gaussian_support",
    "tsallis_entropy",
    "shannon_entropy",
    "q_from_family",
    "q_pair_table3",
    "q_rhp_physical_literal",
    "physical_to_param",
    "weight_as_q_gaussian",
]

Q_MAX = 5.0 / 3.0


@dataclass(frozen=True)
class QGaussianSpec:
    q: float
    sigma: float = 1.0

    def __post_init__(self):
        if not 0 < self.q < Q_MAX:
            raise ValueError(f"q must lie in (0, 5/3), got {self.q}")
        if self.sigma <= 0:
            raise ValueError("sigma must be positive")

    @property
    def branch(self) -> str:
        if self.q < 1:
            return "compact"
        return "gaussian" if self.q == 1 else "heavy"

    @property
    def d(self) -> float:
        """Support parameter for q < 1."""
        q = self.q
        return 2 * (2 - q) / (1 - q) + 1

    @property
    def m(self) -> float:
        """Tail parameter for q > 1."""
        return 2 / (self.q - 1) - 1


def q_gaussian_support(spec: QGaussianSpec):
    if spec.branch == "compact":
        h = spec.sigma * math.sqrt(spec.d)
        return (-h, h)
    return "real"


def q_gaussian_pdf(spec: QGaussianSpec, X):
    """
    Normalized q-Gaussian density.

    q < 1 is compactly supported on ``[-sigma sqrt(d), sigma sqrt(d)]``,
    1 < q < 5/3 is a power law on the whole line and q = 1 is the Gaussian.
    """
    X = np.asarray(X, dtype=float)
    q, s = spec.q, spec.sigma
    if q == 1:
        out = np.exp(-X**2 / (2 * s * s)) / (s * math.sqrt(2 * math.pi))
    elif q < 1:
        b = (2 - q) / (1 - q)
        d = spec.d
        pref = math.exp(gammaln(b + 0.5) - gammaln(b)) / (s * math.sqrt(math.pi * d))
        base = np.maximum(1 - X**2 / (d * s * s), 0.0)
        out = pref * base ** (1 / (1 - q))
    else:
        m2 = spec.m - 2
        if m2 <= 0:
            raise ValueError("m - 2 must be positive (q < 5/3)")
        b = 1 / (q - 1)
        pref = math.exp(gammaln(b) - gammaln(b - 0.5)) / (s * math.sqrt(math.pi * m2))
        out = pref * (1 + X**2 / (m2 * s * s)) ** (1 / (1 - q))
    return float(out) if out.ndim == 0 else out


def shannon_entropy(density, domain="real", tol: float = 1e-11) -> float:
    def integrand(x):
        f = float(density(x))
        return -f * math.log(f) if f > 0 else 0.0
    return quadrature(integrand, domain, tol=tol, rel_tol=tol)


def tsallis_entropy(density, q: float, domain="real", tol: float = 1e-11) -> float:
    """
    ``(1/(q-1)) int (f - f^q)``; q = 1 gives the Shannon entropy.

    With this sign the entropy tends to ``-int f log f`` as q -> 1.
    """
    if q <= 0:
        raise ValueError("q must be positive")
    if q == 1:
        return shannon_entropy(density, domain, tol)

    def integrand(x):
        f = float(density(x))
        return f - f**q if f > 0 else 0.0
    return quadrature(integrand, domain, tol=tol, rel_tol=tol) / (q - 1)


def weight_as_q_gaussian(family: str, param) -> QGaussianSpec:
    """
    The q-Gaussian proportional to a family's orthogonality weight.

    gegenbauer: ``(1 - X^2)^(nu - 1/2)`` needs nu > 1/2;
    carinena: ``(1 + X^2/p)^(-p - 1/2)`` needs p > 1 so that q < 5/3.
    """
    q, _ = q_from_family(family, param)
    p = as_rational(param)
    if family == "gegenbauer":
        if not p > Fraction(1, 2):
            raise ValueError("nu must exceed 1/2")
        # d sigma^2 = 1 with d = 2nu + 2
        return QGaussianSpec(float(q), math.sqrt(1 / float(2 * p + 2)))
    if family in ("carinena", "carinena-pos"):
        if not p > 1:
            raise ValueError("parameter must exceed 1")
        # (m - 2) sigma^2 = p with m = 2p
        return QGaussianSpec(float(q), math.sqrt(float(p) / float(2 * p - 2)))
    raise ValueError(f"no q-Gaussian weight for {family!r}")


def _nonzero(den, what):
    if den == 0:
        raise ValueError(f"q map has a pole: {what} = 0")


def q_from_family(family: str, params) -> tuple[Fraction, str]:
    """
    Exact nonextensivity parameter of the weight and its branch tag.

    ``family`` is ``"gegenbauer"`` (params: nu), ``"carinena"`` (params: the
    positive Cariñena parameter) or ``"rhp"`` (params: ``(N, m, n)``).
    Returns ``(q, "q<1" | "q>1" | "q=1")``.
    """
    if family == "gegenbauer":
        nu = as_rational(params)
        _nonzero(2 * nu - 1, "2nu - 1")
        q = (2 * nu - 3) / (2 * nu - 1)
    elif family in ("carinena", "carinena-pos"):
        cn = as_rational(params)
        _nonzero(2 * cn + 1, "2N + 1")
        q = (2 * cn + 3) / (2 * cn + 1)
    elif family == "rhp":
        big_n, m, n = params
        s = as_rational(big_n) + Fraction(m + n, 2)
        _nonzero(1 + s, "1 + N + (m+n)/2")
        q = (2 + s) / (1 + s)
    else:
        raise ValueError(f"unknown family {family!r}")
    tag = "q<1" if q < 1 else ("q>1" if q > 1 else "q=1")
    return q, tag


def q_pair_table3(geometry: str, param, m: int) -> tuple[Fraction, Fraction]:
    """The two q values carried by the separable factors of the 2D densities."""
    p = as_rational(param)
    if geometry == "sphere":
        _nonzero(2 * p - 1, "2nu - 1")
        _nonzero(p + m, "nu + m")
        return (2 * p - 3) / (2 * p - 1), (p + m - 1) / (p + m)
    if geometry == "hyperbolic":
        _nonzero(2 * p + 1, "2N + 1")
        _nonzero(p - m, "N - m")
        return (2 * p + 3) / (2 * p + 1), (p - m + 1) / (p - m)
    raise ValueError(f"unknown geometry {geometry!r}")


def q_rhp_physical_literal(mass, c, hbar, big_n, m: int, n: int):
    """
    ``1 + 1/(1 + mass c^2/(hbar N) + (m+n)/2)``, a literal physical-constant
    form of the relativistic q.

    This does not agree with :func:`q_from_family` for ``"rhp"`` under
    ``N = mass c^2/(hbar omega)``; it is kept for reference and is not used
    by any check.
    """
    return 1 + 1 / (1 + mass * c**2 / (hbar * big_n) + Fraction(m + n, 2))


@dataclass(frozen=True)
class PhysicalOscillator:
    """
    Physical constants of the oscillator. ``kappa`` is the signed curvature:
    negative for the hyperbolic plane, positive for the sphere.
    """

    mass: object
    alpha: object = 1
    kappa: object = 1
    hbar: object = 1
    omega: object = 1
    c: object = 1

    def __post_init__(self):
        for name in ("mass", "alpha", "hbar", "omega", "c"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.kappa == 0:
            raise ValueError("kappa must be nonzero")


def physical_to_param(osc: PhysicalOscillator, regime: str):
    """
    Family parameter from physical constants.

    hyperbolic: ``-mass alpha/(hbar kappa)`` (needs kappa < 0);
    sphere: ``mass alpha/(hbar kappa)`` (needs kappa > 0);
    relativistic: ``mass c^2/(hbar omega)``.
    Exact inputs (int/Fraction) give exact outputs.
    """
    if regime == "hyperbolic":
        if not osc.kappa < 0:
            raise ValueError("hyperbolic regime needs kappa < 0")
        return -osc.mass * osc.alpha / (_q(osc.hbar) * osc.kappa)
    if regime == "sphere":
        if not osc.kappa > 0:
            raise ValueError("sphere regime needs kappa > 0")
        return osc.mass * osc.alpha / (_q(osc.hbar) * osc.kappa)
    if regime == "relativistic":
        return osc.mass * osc.c**2 / (_q(osc.hbar) * osc.omega)
    raise ValueError(f"unknown regime {regime!r}")


def _q(x):
    # keep int arithmetic exact
    return Fraction(x) if isinstance(x, int) else x


def describe_q(q: Fraction) -> dict:
    return {"q": format_rational(q), "q_float": float(q)}
