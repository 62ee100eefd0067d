"""
Exact verification of the links between the RHP, Gegenbauer and Cariñena families.

Each identity involves square roots of parameters, but with parity
bookkeeping both sides become polynomials with rational coefficients, so
checks are plain coefficient comparisons.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exact import as_rational, format_rational
from .polys import Family, FamilyParam, ParityPoly, family_poly, gegenbauer_alpha, one_plus_cx2

__all__ = [
    "DegenerateParameterError",
    "IdentityReport",
    "scale_arg_sqrt",
    "compose_algebraic",
    "compose_gegenbauer_algebraic",
    "verify_thm1",
    "verify_thm2",
    "verify_thm3",
    "verify_nagel",
    "verify_square",
    "verify_grid",
    "hermite_limit_gap",
]

HALF = Fraction(1, 2)


class DegenerateParameterError(ValueError):
    """A parameter value for which the identity is undefined."""


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    n: int
    params: tuple[Fraction, ...]
    exact_equal: bool | None
    first_mismatch: tuple[int, Fraction, Fraction] | None = None
    skip_reason: str | None = None

    @property
    def skipped(self) -> bool:
        return self.skip_reason is not None

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "n": self.n,
            "params": [format_rational(p) for p in self.params],
            "exact_equal": self.exact_equal,
        }
        if self.first_mismatch is not None:
            power, lhs, rhs = self.first_mismatch
            out["first_mismatch"] = {"power": power, "lhs": format_rational(lhs),
                                     "rhs": format_rational(rhs)}
        if self.skip_reason is not None:
            out["skip_reason"] = self.skip_reason
        return out


def _compare(identity, n, params, lhs: ParityPoly, rhs: ParityPoly) -> IdentityReport:
    for j in range(max(lhs.degree, rhs.degree) + 1):
        if lhs.coeff(j) != rhs.coeff(j):
            return IdentityReport(identity, n, params, False, (j, lhs.coeff(j), rhs.coeff(j)))
    return IdentityReport(identity, n, params, True)


def _check_parity(p: ParityPoly, m: int):
    bad = [j for j, c in enumerate(p.coeffs) if c and (j + m) % 2]
    if bad:
        raise ValueError(f"parity mismatch: X^{bad[0]} term with exponent offset {m}")


def scale_arg_sqrt(p: ParityPoly, r, m: int) -> ParityPoly:
    """
    ``r^(m/2) p(X sqrt(r))`` as a rational polynomial.

    Every nonzero term of ``p`` must satisfy ``j = m (mod 2)``; negative ``r``
    is then harmless since all powers of ``r`` are integral.
    """
    r = as_rational(r)
    if r == 0:
        raise ValueError("r must be nonzero")
    _check_parity(p, m)
    return ParityPoly([c * r ** ((j + m) // 2) if c else 0 for j, c in enumerate(p.coeffs)])


def compose_algebraic(p: ParityPoly, r, c, m: int) -> ParityPoly:
    """
    ``r^(m/2) (1 + cX^2)^(d/2) p(X sqrt(r) / sqrt(1 + cX^2))`` where ``d = deg p``.

    Term ``c_j z^j`` contributes ``c_j r^((m+j)/2) X^j (1 + cX^2)^((d-j)/2)``,
    a polynomial when ``j = d = m (mod 2)``.
    """
    r = as_rational(r)
    d = p.degree
    if d < 0:
        return ParityPoly()
    _check_parity(p, d)
    _check_parity(p, m)
    w = one_plus_cx2(c)
    out = ParityPoly()
    for j, cj in enumerate(p.coeffs):
        if cj:
            out = out + (cj * r ** ((m + j) // 2)) * (ParityPoly.monomial(j) * w ** ((d - j) // 2))
    return out


def compose_gegenbauer_algebraic(n: int, nu, c) -> ParityPoly:
    """``c^(n/2) (1 + cX^2)^(n/2) C_n^nu(X sqrt(c) / sqrt(1 + cX^2))``."""
    nu = as_rational(nu)
    c = as_rational(c)
    if nu == 0:
        raise ValueError("Gegenbauer parameter must be nonzero")
    if c == 0:
        raise ValueError("c must be nonzero")
    return compose_algebraic(family_poly(FamilyParam(Family.GEGENBAUER, n, nu)), c, c, n)


def verify_thm1(n: int, cal_n) -> IdentityReport:
    """Positive-parameter Cariñena polynomial as a rescaled RHP with N = param + 1/2 - n."""
    cal_n = as_rational(cal_n)
    if cal_n <= 0:
        raise ValueError("Cariñena parameter must be positive")
    big_n = cal_n + HALF - n
    if big_n == 0:
        raise DegenerateParameterError(f"N = {format_rational(cal_n)} + 1/2 - {n} = 0")
    lhs = family_poly(FamilyParam(Family.CARINENA_POS, n, cal_n))
    rhs = scale_arg_sqrt(family_poly(FamilyParam(Family.RHP, n, big_n)), big_n / cal_n, n)
    return _compare("Thm1", n, (cal_n,), lhs, rhs)


def verify_thm2(n: int, nu) -> IdentityReport:
    """Negative-parameter Cariñena polynomial as a rescaled Gegenbauer polynomial."""
    nu = as_rational(nu)
    if nu <= 0:
        raise ValueError("nu must be positive")
    alpha = gegenbauer_alpha(n, nu)
    if alpha == 0:
        raise DegenerateParameterError("alpha_{n,nu} = 0")
    lhs = family_poly(FamilyParam(Family.CARINENA_NEG, n, nu))
    # nu^(-n/2) C(X/sqrt(nu)) = (1/nu)^(n/2) C(X sqrt(1/nu))
    rhs = (1 / alpha) * scale_arg_sqrt(family_poly(FamilyParam(Family.GEGENBAUER, n, nu)), 1 / nu, n)
    return _compare("Thm2", n, (nu,), lhs, rhs)


def verify_nagel(n: int, big_n) -> IdentityReport:
    """RHP polynomial through the Gegenbauer polynomial of the same parameter."""
    big_n = as_rational(big_n)
    if big_n == 0:
        raise DegenerateParameterError("N = 0")
    lhs = family_poly(FamilyParam(Family.RHP, n, big_n))
    rhs = math.factorial(n) * compose_gegenbauer_algebraic(n, big_n, 1 / big_n)
    return _compare("Nagel", n, (big_n,), lhs, rhs)


def verify_thm3(n: int, cal_n) -> IdentityReport:
    """
    Positive-parameter Cariñena polynomial through the negative-parameter one.

    Both sides are multiplied by ``param^(n/2)`` so that they are rational
    polynomials in X.
    """
    cal_n = as_rational(cal_n)
    if cal_n <= 0:
        raise ValueError("Cariñena parameter must be positive")
    nu = cal_n + HALF - n
    if nu <= 0:
        raise DegenerateParameterError(
            f"nu = {format_rational(cal_n)} + 1/2 - {n} = {format_rational(nu)} <= 0")
    lhs = scale_arg_sqrt(family_poly(FamilyParam(Family.CARINENA_POS, n, cal_n)), cal_n, n)
    neg = family_poly(FamilyParam(Family.CARINENA_NEG, n, nu))
    rhs = (gegenbauer_alpha(n, nu) * math.factorial(n)) * compose_algebraic(neg, nu, 1, n)
    return _compare("Thm3", n, (cal_n,), lhs, rhs)


def verify_square(n: int, big_n) -> IdentityReport:
    """
    Commutation of the summary square, checked backwards from the
    negative-parameter Cariñena corner with nu = N.

    Path A undoes the right edge then the top edge; path B undoes the bottom
    edge then applies Nagel. Both must rebuild H_n^N.
    """
    big_n = as_rational(big_n)
    if big_n <= 0:
        raise ValueError("N must be positive")
    alpha = gegenbauer_alpha(n, big_n)
    fact = math.factorial(n)
    neg = family_poly(FamilyParam(Family.CARINENA_NEG, n, big_n))
    # right edge gives cal_n^(n/2) H(X sqrt(cal_n)) = N^(n/2) H^N(X sqrt(N)) by the top edge
    path_a = scale_arg_sqrt((alpha * fact) * compose_algebraic(neg, big_n, 1, n), 1 / big_n, n)
    gegen = alpha * scale_arg_sqrt(neg, big_n, n)
    path_b = fact * compose_algebraic(gegen, 1 / big_n, 1 / big_n, n)
    rep = _compare("Square", n, (big_n,), path_a, path_b)
    if not rep.exact_equal:
        return rep
    return _compare("Square", n, (big_n,), path_a, family_poly(FamilyParam(Family.RHP, n, big_n)))


_VERIFIERS = {
    "thm1": verify_thm1,
    "thm2": verify_thm2,
    "thm3": verify_thm3,
    "nagel": verify_nagel,
    "square": verify_square,
}


def _one(args):
    name, n, p = args
    try:
        return _VERIFIERS[name](n, p)
    except DegenerateParameterError as exc:
        return IdentityReport(name.capitalize() if name != "nagel" else "Nagel",
                              n, (as_rational(p),), None, skip_reason=str(exc))


def verify_grid(identity: str, n_max: int, params, workers: int = 1) -> list[IdentityReport]:
    """
    Run one identity for ``n = 0..n_max`` and every parameter.

    Degenerate points become reports with ``skip_reason`` set. Output order
    is (param, n) regardless of ``workers``.
    """
    if identity not in _VERIFIERS:
        raise ValueError(f"unknown identity {identity!r}")
    jobs = [(identity, n, as_rational(p)) for p in params for n in range(n_max + 1)]
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(workers) as pool:
            return list(pool.map(_one, jobs))
    return [_one(j) for j in jobs]


def hermite_limit_gap(n: int, big_n) -> Fraction:
    """Largest coefficient difference between H_n^N and the classical H_n."""
    big_n = as_rational(big_n)
    if big_n <= 0:
        raise ValueError("N must be positive")
    a = family_poly(FamilyParam(Family.RHP, n, big_n))
    b = family_poly(FamilyParam(Family.HERMITE, n))
    return max((abs(a.coeff(j) - b.coeff(j)) for j in range(max(a.degree, b.degree) + 1)),
               default=Fraction(0))
