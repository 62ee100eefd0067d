"""
Polynomial families built from Rodrigues formulas.

Every family here is an instance of one identity: for rational ``a`` and ``c``,

    d^n/dX^n (1 + c X^2)^a = (1 + c X^2)^(a - n) P_n(X)

with ``P_0 = 1`` and ``P_{k+1} = (1 + c X^2) P_k' + 2 c (a - k) X P_k``.
:func:`rodrigues_poly` computes ``P_n`` exactly and :func:`family_poly` maps
each named family onto it.
"""

from __future__ import annotations

import csv
import enum
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .exact import as_rational, format_rational, pochhammer

__all__ = [
    "ParityPoly",
    "Family",
    "FamilyParam",
    "OrthoFunctionSpec",
    "rodrigues_poly",
    "family_poly",
    "gegenbauer_alpha",
    "gegenbauer_recurrence",
    "ortho_function_eval",
    "coeffs_to_csv",
    "coeffs_to_json",
]


@dataclass(frozen=True)
class ParityPoly:
    """Dense polynomial over the rationals; ``coeffs[j]`` multiplies ``X**j``."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs: Sequence = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "ParityPoly":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def parity(self) -> str:
        if not self.coeffs:
            return "zero"
        has_even = any(c for c in self.coeffs[0::2])
        has_odd = any(c for c in self.coeffs[1::2])
        if has_even and has_odd:
            return "mixed"
        return "even" if has_even else "odd"

    def coeff(self, j: int) -> Fraction:
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else Fraction(0)

    def __add__(self, other: "ParityPoly") -> "ParityPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return ParityPoly([self.coeff(j) + other.coeff(j) for j in range(n)])

    def __neg__(self) -> "ParityPoly":
        return ParityPoly([-c for c in self.coeffs])

    def __sub__(self, other: "ParityPoly") -> "ParityPoly":
        return self + (-other)

    def __mul__(self, other) -> "ParityPoly":
        if isinstance(other, ParityPoly):
            if not self.coeffs or not other.coeffs:
                return ParityPoly()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        out[i + j] += a * b
            return ParityPoly(out)
        s = as_rational(other)
        return ParityPoly([c * s for c in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "ParityPoly":
        out = ParityPoly([1])
        for _ in range(k):
            out = out * self
        return out

    def derivative(self) -> "ParityPoly":
        return ParityPoly([j * c for j, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        """Exact evaluation at a rational point."""
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evalf(self, x):
        """Float evaluation (Horner); accepts scalars or numpy arrays."""
        return np.polynomial.polynomial.polyval(x, [float(c) for c in self.coeffs] or [0.0])

    def __repr__(self) -> str:
        terms = [f"{format_rational(c)}*X^{j}" for j, c in enumerate(self.coeffs) if c]
        return "ParityPoly(" + (" + ".join(terms) or "0") + ")"


def one_plus_cx2(c) -> ParityPoly:
    return ParityPoly([1, 0, as_rational(c)])


def rodrigues_poly(a, c, n: int) -> ParityPoly:
    """
    ``P_n`` with ``d^n/dX^n (1 + cX^2)^a = (1 + cX^2)^(a-n) P_n(X)``.

    Holds formally for any rational ``a`` and ``c``; no integrability is
    assumed.
    """
    a = as_rational(a)
    c = as_rational(c)
    w = one_plus_cx2(c)
    x = ParityPoly([0, 1])
    p = ParityPoly([1])
    for k in range(n):
        p = w * p.derivative() + (2 * c * (a - k)) * (x * p)
    return p


class Family(str, enum.Enum):
    RHP = "rhp"
    HERMITE = "hermite"
    GEGENBAUER = "gegenbauer"
    CARINENA_POS = "carinena-pos"
    CARINENA_NEG = "carinena-neg"


@dataclass(frozen=True)
class FamilyParam:
    """
    Family selector.

    ``param`` is N for RHP, nu for Gegenbauer, the positive Cariñena
    parameter for CARINENA_POS and nu = -(Cariñena parameter) > 0 for
    CARINENA_NEG. It is ignored for HERMITE.
    """

    family: Family
    n: int
    param: Fraction | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if self.n < 0:
            raise ValueError("degree must be nonnegative")
        if self.family is Family.HERMITE:
            object.__setattr__(self, "param", None)
            return
        if self.param is None:
            raise ValueError(f"{self.family.value} needs a parameter")
        p = as_rational(self.param)
        object.__setattr__(self, "param", p)
        if self.family in (Family.GEGENBAUER, Family.RHP) and p == 0:
            raise ValueError(f"{self.family.value} parameter must be nonzero")
        if self.family in (Family.CARINENA_POS, Family.CARINENA_NEG) and p <= 0:
            raise ValueError(f"{self.family.value} parameter must be positive")


def gegenbauer_alpha(n: int, nu) -> Fraction:
    """Normalizing factor ``(2nu)_n / (2^n n! (nu+1/2)_n)`` of the Gegenbauer Rodrigues formula."""
    nu = as_rational(nu)
    den = 2**n * math.factorial(n) * pochhammer(nu + Fraction(1, 2), n)
    if den == 0:
        raise ValueError(f"alpha undefined for n={n}, nu={format_rational(nu)}")
    return pochhammer(2 * nu, n) / den


def _hermite(n: int) -> ParityPoly:
    x2 = ParityPoly([0, 2])
    h = ParityPoly([1])
    for _ in range(n):
        h = x2 * h - h.derivative()
    return h


def family_poly(spec: FamilyParam) -> ParityPoly:
    """Exact coefficients of the selected polynomial."""
    n = spec.n
    sign = -1 if n % 2 else 1
    half = Fraction(1, 2)
    p = spec.param
    if spec.family is Family.HERMITE:
        return _hermite(n)
    if spec.family is Family.RHP:
        return sign * rodrigues_poly(-p, 1 / p, n)
    if spec.family is Family.CARINENA_POS:
        return sign * rodrigues_poly(n - p - half, 1 / p, n)
    if spec.family is Family.GEGENBAUER:
        return (gegenbauer_alpha(n, p) * sign) * rodrigues_poly(n + p - half, -1, n)
    if spec.family is Family.CARINENA_NEG:
        return sign * rodrigues_poly(n + p - half, -1 / p, n)
    raise ValueError(spec.family)


def gegenbauer_recurrence(n: int, nu) -> ParityPoly:
    """Gegenbauer polynomial from ``k C_k = 2X(k+nu-1) C_{k-1} - (k+2nu-2) C_{k-2}``."""
    nu = as_rational(nu)
    if nu == 0:
        raise ValueError("Gegenbauer parameter must be nonzero")
    x = ParityPoly([0, 1])
    prev, cur = ParityPoly([1]), ParityPoly([0, 2 * nu])
    if n == 0:
        return prev
    for k in range(2, n + 1):
        prev, cur = cur, Fraction(1, k) * ((2 * (k + nu - 1)) * (x * cur) - (k + 2 * nu - 2) * prev)
    return cur


@dataclass(frozen=True)
class OrthoFunctionSpec:
    """
    Orthogonal function attached to a q-Gaussian weight.

    family: ``"gegenbauer"``, ``"carinena-pos"``, ``"rhp"`` or ``"hermite"``.
    """

    family: str
    n: int
    param: Fraction | None = None

    def weight_exponent(self) -> tuple[Fraction, Fraction] | None:
        """``(c, e)`` such that the function is ``(1 + cX^2)^e * polynomial``; None for hermite."""
        p = None if self.param is None else as_rational(self.param)
        if self.family == "gegenbauer":
            return Fraction(-1), p / 2 - Fraction(1, 4)
        if self.family == "carinena-pos":
            return 1 / p, -p / 2 - Fraction(1, 4)
        if self.family == "rhp":
            return 1 / p, -(p + 1 + self.n) / 2
        if self.family == "hermite":
            return None
        raise ValueError(f"unknown family {self.family!r}")

    def polynomial(self) -> ParityPoly:
        fam = {"gegenbauer": Family.GEGENBAUER, "carinena-pos": Family.CARINENA_POS,
               "rhp": Family.RHP, "hermite": Family.HERMITE}[self.family]
        return family_poly(FamilyParam(fam, self.n, self.param))


def ortho_function_eval(spec: OrthoFunctionSpec, X):
    """
    Evaluate the orthogonal function (weight factor times polynomial).

    The polynomial is built exactly and converted at the end; the weight
    factor is a real power.

    Raises
    ------
    ValueError
        If ``X`` lies outside [-1, 1] for the Gegenbauer row.
    """
    X = np.asarray(X, dtype=float)
    poly = spec.polynomial().evalf(X)
    ce = spec.weight_exponent()
    if ce is None:
        w = np.exp(-X**2 / 2)
    else:
        c, e = ce
        base = 1 + float(c) * X**2
        if spec.family == "gegenbauer" and np.any(np.abs(X) > 1):
            raise ValueError("X outside [-1, 1]")
        w = np.power(np.maximum(base, 0.0), float(e))
    out = w * poly
    return float(out) if out.ndim == 0 else out


def coeffs_to_csv(p: ParityPoly, degree: int | None = None) -> str:
    """One row per power: ``power,p/q``."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["power", "coeff"])
    top = p.degree if degree is None else degree
    for j in range(top + 1):
        writer.writerow([j, format_rational(p.coeff(j))])
    return buf.getvalue()


def coeffs_to_json(spec: FamilyParam, p: ParityPoly) -> str:
    return json.dumps({
        "family": spec.family.value,
        "n": spec.n,
        "param": None if spec.param is None else format_rational(spec.param),
        "coeffs": [format_rational(p.coeff(j)) for j in range(p.degree + 1)],
    })
