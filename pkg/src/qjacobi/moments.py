"""
Exact inner products against symmetric Beta-type weights.

All inner products are reduced to even moments ``mu_k = int X^(2k) dw``.
Consecutive moments have rational ratios, so every integral is an exact
rational multiple of ``mu_0``, and ``mu_0`` itself is a closed-form gamma
product. Orthogonality is therefore a decidable statement (ratio == 0).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np
from scipy import integrate

from .exact import (
    ClosedFormConstant,
    as_rational,
    const_eq,
    const_to_float,
    format_rational,
    gamma_reduce,
)
from .polys import Family, FamilyParam, ParityPoly, family_poly

__all__ = [
    "IntegrabilityError",
    "QuadratureError",
    "WeightSpec",
    "ExactIntegral",
    "OrthogonalityReport",
    "moment_ratio",
    "mu0_closed_form",
    "inner_product",
    "family_weight",
    "verify_orthogonality",
    "rhp_norm_constant",
    "gegenbauer_norm_constant",
    "norm_constant_check",
    "quadrature",
]

HALF = Fraction(1, 2)


class IntegrabilityError(ValueError):
    """The requested moment or inner product diverges."""


class QuadratureError(RuntimeError):
    def __init__(self, message, estimate, error):
        super().__init__(f"{message} (estimate={estimate!r}, error={error!r})")
        self.estimate = estimate
        self.error = error


@dataclass(frozen=True)
class WeightSpec:
    """
    Either ``(1 + c X^2)^(-a)`` on the real line (``kind="rational_decay"``)
    or ``(1 - X^2/v)^(nu - 1/2)`` on ``[-sqrt(v), sqrt(v)]``
    (``kind="compact_beta"``).
    """

    kind: str
    scale: Fraction
    exponent: Fraction

    def __post_init__(self):
        object.__setattr__(self, "scale", as_rational(self.scale))
        object.__setattr__(self, "exponent", as_rational(self.exponent))
        if self.kind not in ("rational_decay", "compact_beta"):
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if self.scale <= 0:
            raise ValueError("weight scale must be positive")

    @classmethod
    def rational_decay(cls, c, a) -> "WeightSpec":
        return cls("rational_decay", c, a)

    @classmethod
    def compact_beta(cls, v, nu) -> "WeightSpec":
        return cls("compact_beta", v, nu)

    def check_moment(self, k):
        """``k`` may be a half-integer: it then checks ``int |X|^(2k) dw``."""
        k = as_rational(k)
        if self.kind == "rational_decay":
            if not self.exponent - k - HALF > 0:
                raise IntegrabilityError(
                    f"moment {format_rational(k)} diverges: a - k - 1/2 = {format_rational(self.exponent - k - HALF)} <= 0")
        elif not self.exponent > -HALF:
            raise IntegrabilityError(f"nu = {format_rational(self.exponent)} <= -1/2")

    def integrable(self, k: int) -> bool:
        try:
            self.check_moment(k)
        except IntegrabilityError:
            return False
        return True

    @property
    def domain(self):
        if self.kind == "rational_decay":
            return "real"
        h = math.sqrt(self.scale)
        return (-h, h)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        if self.kind == "rational_decay":
            return (1 + float(self.scale) * x**2) ** (-float(self.exponent))
        base = np.maximum(1 - x**2 / float(self.scale), 0.0)
        return base ** (float(self.exponent) - 0.5)


@dataclass(frozen=True)
class ExactIntegral:
    """``ratio_to_mu0 * mu0``."""

    ratio_to_mu0: Fraction
    mu0: ClosedFormConstant

    @property
    def value(self) -> ClosedFormConstant:
        return self.mu0 * self.ratio_to_mu0

    def __float__(self) -> float:
        return const_to_float(self.value)

    def to_json(self) -> dict:
        return {"ratio_to_mu0": format_rational(self.ratio_to_mu0), "mu0": self.mu0.to_json()}


def moment_ratio(w: WeightSpec, k: int) -> Fraction:
    """``mu_k / mu_(k-1)`` for ``k >= 1``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    w.check_moment(k)
    kh = k - HALF
    if w.kind == "rational_decay":
        return kh / (w.scale * (w.exponent - kh - 1))
    return w.scale * kh / (w.exponent + k)


def mu0_closed_form(w: WeightSpec) -> ClosedFormConstant:
    w.check_moment(0)
    a = w.exponent
    if w.kind == "rational_decay":
        # c^(-1/2) Gamma(1/2) Gamma(a - 1/2) / Gamma(a)
        return gamma_reduce([(HALF, 1), (a - HALF, 1), (a, -1)], 1, 0, [1 / w.scale])
    return gamma_reduce([(HALF, 1), (a + HALF, 1), (a + 1, -1)], 1, 0, [w.scale])


def inner_product(p: ParityPoly, q: ParityPoly, w: WeightSpec) -> ExactIntegral:
    """
    Exact ``int p q dw``.

    Odd powers integrate to zero. Raises :class:`IntegrabilityError` if the
    highest even moment needed diverges; an odd product whose absolute value
    is not integrable also raises.
    """
    prod = p * q
    top = prod.degree
    if top >= 0:
        w.check_moment(Fraction(top, 2))
    ratio = Fraction(0)
    cum = Fraction(1)
    for k in range(0, top // 2 + 1):
        if k:
            cum *= moment_ratio(w, k)
        ratio += prod.coeff(2 * k) * cum
    return ExactIntegral(ratio, mu0_closed_form(w))


def family_weight(family, param, m: int = 0, n: int = 0) -> WeightSpec:
    """Orthogonality weight for the family; RHP depends on the pair (m, n)."""
    family = Family(family)
    p = as_rational(param)
    if family is Family.GEGENBAUER:
        return WeightSpec.compact_beta(1, p)
    if family is Family.CARINENA_NEG:
        return WeightSpec.compact_beta(p, p)
    if family is Family.CARINENA_POS:
        return WeightSpec.rational_decay(1 / p, p + HALF)
    if family is Family.RHP:
        return WeightSpec.rational_decay(1 / p, p + 1 + Fraction(m + n, 2))
    raise ValueError(f"no orthogonality weight for {family.value}")


@dataclass
class OrthogonalityReport:
    family: str
    param: Fraction
    n_max: int
    entries: dict = field(default_factory=dict)
    skips: dict = field(default_factory=dict)

    @property
    def off_diagonal_zero(self) -> bool:
        return all(e.ratio_to_mu0 == 0 for (m, n), e in self.entries.items() if m != n)

    @property
    def diagonal(self) -> dict:
        return {m: e for (m, n), e in self.entries.items() if m == n}

    def to_json(self) -> dict:
        size = self.n_max + 1
        matrix = [[None] * size for _ in range(size)]
        for (m, n), e in self.entries.items():
            matrix[m][n] = e.to_json()
        return {
            "family": self.family,
            "param": format_rational(self.param),
            "n_max": self.n_max,
            "off_diagonal_zero": self.off_diagonal_zero,
            "matrix": matrix,
            "skips": [{"m": m, "n": n, "reason": r} for (m, n), r in sorted(self.skips.items())],
        }


def verify_orthogonality(family, param, n_max: int) -> OrthogonalityReport:
    family = Family(family)
    param = as_rational(param)
    polys = [family_poly(FamilyParam(family, k, param)) for k in range(n_max + 1)]
    rep = OrthogonalityReport(family.value, param, n_max)
    for m in range(n_max + 1):
        for n in range(n_max + 1):
            w = family_weight(family, param, m, n)
            try:
                rep.entries[(m, n)] = inner_product(polys[m], polys[n], w)
            except IntegrabilityError as exc:
                rep.skips[(m, n)] = str(exc)
    return rep


def rhp_norm_constant(n: int, big_n) -> ClosedFormConstant:
    """``sqrt(N pi) n! Gamma(2N+n) Gamma(N+1/2) / ((n+N) N^n Gamma(2N) Gamma(N))``."""
    big_n = as_rational(big_n)
    coeff = Fraction(math.factorial(n)) / ((n + big_n) * big_n**n)
    raw = [(2 * big_n + n, 1), (big_n + HALF, 1), (2 * big_n, -1), (big_n, -1)]
    return gamma_reduce(raw, coeff, 1, [big_n])


def _pow2(e: Fraction) -> tuple[Fraction, list]:
    if e.denominator == 1:
        return Fraction(2) ** e.numerator, []
    if e.denominator == 2:
        return Fraction(2) ** ((e.numerator - 1) // 2), [2]
    raise ValueError("2^e with e outside (1/2)Z is not representable")


def gegenbauer_norm_constant(n: int, nu, squared_gamma: bool = False) -> ClosedFormConstant:
    """
    ``pi 2^(1-2nu) Gamma(n+2nu) / (n! (n+nu) Gamma(nu))``.

    The textbook normalization has ``Gamma(nu)^2`` in the denominator; pass
    ``squared_gamma=True`` for that form. The two agree only when
    ``Gamma(nu) = 1``.
    """
    nu = as_rational(nu)
    c2, surd = _pow2(1 - 2 * nu)
    coeff = c2 / (math.factorial(n) * (n + nu))
    raw = [(n + 2 * nu, 1), (nu, -2 if squared_gamma else -1)]
    return gamma_reduce(raw, coeff, 2, surd)


def norm_constant_check(family, n: int, param, squared_gamma: bool = False) -> bool:
    """Compare the engine's diagonal entry with the closed-form constant."""
    family = Family(family)
    param = as_rational(param)
    p = family_poly(FamilyParam(family, n, param))
    diag = inner_product(p, p, family_weight(family, param, n, n)).value
    if family is Family.RHP:
        ref = rhp_norm_constant(n, param)
    elif family is Family.GEGENBAUER:
        ref = gegenbauer_norm_constant(n, param, squared_gamma)
    else:
        raise ValueError("closed-form constants exist only for rhp and gegenbauer")
    return const_eq(diag, ref)


def quadrature(f: Callable, domain="real", tol: float = 1e-12, rel_tol: float = 1e-12,
               limit: int = 500) -> float:
    """
    Adaptive Gauss-Kronrod integration.

    ``domain`` is ``"real"`` or a finite ``(lo, hi)``. The real line is mapped
    onto (-1, 1) with ``X = t / (1 - t^2)`` instead of being truncated.

    Raises
    ------
    QuadratureError
        When the error estimate exceeds ``max(tol, rel_tol*|estimate|)``.
    """
    if domain == "real":
        def g(t):
            s = 1 - t * t
            if s <= 0:
                return 0.0
            return f(t / s) * (1 + t * t) / (s * s)
        lo, hi, points = -1.0, 1.0, [0.0]
    else:
        g = f
        lo, hi = map(float, domain)
        points = [0.0] if lo < 0 < hi else None
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", integrate.IntegrationWarning)
        est, err = integrate.quad(g, lo, hi, epsabs=tol, epsrel=rel_tol, limit=limit, points=points)
    if not np.isfinite(est) or err > max(tol, rel_tol * abs(est)) * 10:
        raise QuadratureError("quadrature did not converge", est, err)
    return est
