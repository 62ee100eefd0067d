"""
Oscillator densities and the bijections between them.

1D: the relativistic density ``|h_n^N|^2`` pushed through
``Y = (X/sqrt(N)) / sqrt(1 + X^2/N)`` against the sphere density
``|c_n^N|^2`` on [-1, 1].

2D: the hyperbolic-plane density mapped onto the unit disk by
``(X, Y) = (x, y) / sqrt(1 + x^2 + y^2)`` against the sphere density.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property

import numpy as np
from scipy import integrate, stats

from .exact import ClosedFormConstant, as_rational, const_to_float, format_rational
from .moments import family_weight, inner_product
from .polys import Family, FamilyParam, ParityPoly, family_poly

__all__ = [
    "ConfigurationError",
    "DensitySpec",
    "SampleBatch",
    "Thm5Result",
    "density_eval_1d",
    "density_cdf",
    "pushforward_check_1d",
    "pushforward_grid",
    "nagel_map",
    "sample_1d",
    "ks_distance",
    "density_eval_2d",
    "hyperbolic_table_form",
    "map_2d",
    "map_2d_inverse",
    "jacobian_2d",
    "thm5_grid",
    "verify_thm5",
]

HALF = Fraction(1, 2)


class ConfigurationError(RuntimeError):
    pass


@dataclass(frozen=True)
class DensitySpec:
    """
    ``kind`` is one of ``"relativistic1d"`` (n, N), ``"sphere1d"`` (n, nu),
    ``"hyperbolic2d"`` (m, n, N) or ``"sphere2d"`` (m, n, nu).

    1D densities are normalized with the exact diagonal inner product;
    2D densities are left unnormalized.
    """

    kind: str
    n: int
    param: Fraction
    m: int = 0

    def __post_init__(self):
        object.__setattr__(self, "param", as_rational(self.param))
        if self.kind not in ("relativistic1d", "sphere1d", "hyperbolic2d", "sphere2d"):
            raise ValueError(f"unknown density kind {self.kind!r}")
        if self.param <= 0:
            raise ValueError("density parameter must be positive")

    @cached_property
    def polynomial(self) -> ParityPoly:
        fam = {"relativistic1d": Family.RHP, "sphere1d": Family.GEGENBAUER}[self.kind]
        return family_poly(FamilyParam(fam, self.n, self.param))

    @cached_property
    def normalization(self) -> ClosedFormConstant:
        fam = {"relativistic1d": Family.RHP, "sphere1d": Family.GEGENBAUER}[self.kind]
        p = self.polynomial
        return inner_product(p, p, family_weight(fam, self.param, self.n, self.n)).value

    @cached_property
    def _norm_float(self) -> float:
        return const_to_float(self.normalization)

    @property
    def domain(self):
        return "real" if self.kind == "relativistic1d" else (-1.0, 1.0)


def density_eval_1d(spec: DensitySpec, X):
    """Normalized 1D density; raises ValueError outside [-1, 1] for sphere1d."""
    X = np.asarray(X, dtype=float)
    N = float(spec.param)
    poly = spec.polynomial.evalf(X)
    if spec.kind == "relativistic1d":
        w = (1 + X**2 / N) ** (-(N + 1 + spec.n))
    elif spec.kind == "sphere1d":
        if np.any(np.abs(X) > 1):
            raise ValueError("sphere1d density is supported on [-1, 1]")
        w = (1 - X**2) ** (N - 0.5)
    else:
        raise ValueError("density_eval_1d needs a 1D kind")
    out = w * poly * poly / spec._norm_float
    return float(out) if out.ndim == 0 else out


def nagel_map(X, big_n):
    """``Y = (X/sqrt(N)) / sqrt(1 + X^2/N)``, mapping the real line onto (-1, 1)."""
    N = float(big_n)
    X = np.asarray(X, dtype=float)
    return X / np.sqrt(N + X**2)


def pushforward_check_1d(n: int, big_n, grid) -> float:
    """
    Max absolute difference between the pushforward of the relativistic
    density and the sphere density with nu = N, over ``grid`` in (-1, 1).
    """
    big_n = as_rational(big_n)
    if big_n <= 0:
        raise ValueError("N must be positive")
    Y = np.asarray(grid, dtype=float)
    if np.any(np.abs(Y) >= 1):
        raise ValueError("grid points must lie in (-1, 1)")
    N = float(big_n)
    one_m = 1 - Y**2
    x = math.sqrt(N) * Y / np.sqrt(one_m)
    dxdy = math.sqrt(N) * one_m ** -1.5
    lhs = density_eval_1d(DensitySpec("relativistic1d", n, big_n), x) * dxdy
    rhs = density_eval_1d(DensitySpec("sphere1d", n, big_n), Y)
    return float(np.max(np.abs(lhs - rhs)))


def pushforward_grid(points: int = 1001) -> np.ndarray:
    """``points`` equally spaced interior points of (-1, 1)."""
    return np.linspace(-1, 1, points + 2)[1:-1]


@dataclass
class SampleBatch:
    values: np.ndarray
    seed: int
    proposal_acceptance_rate: float
    bound: float = field(default=float("nan"))


def _t_pdf(x, df, scale):
    return stats.t.pdf(x, df, scale=scale)


def _rejection_bound(spec: DensitySpec, df: float, scale: float) -> float:
    theta = np.linspace(-math.pi / 2, math.pi / 2, 40001)[1:-1]
    x = np.tan(theta) * scale * 3
    ratio = density_eval_1d(spec, x) / _t_pdf(x, df, scale)
    N = float(spec.param)
    lead = float(spec.polynomial.coeffs[-1])
    # both sides decay like |x|^-(2N+2); compare the coefficients
    f_tail = lead**2 * N ** (N + 1 + spec.n) / spec._norm_float
    log_c0 = math.lgamma((df + 1) / 2) - math.lgamma(df / 2) - 0.5 * math.log(df * math.pi)
    g_tail = math.exp(log_c0) / scale * (df * scale * scale) ** ((df + 1) / 2)
    return max(float(np.max(ratio)), f_tail / g_tail)


def sample_1d(spec: DensitySpec, count: int, seed: int, batch: int = 65536) -> SampleBatch:
    """
    Rejection sampler for the relativistic density.

    The proposal is a scaled Student t with 2N + 1 degrees of freedom, whose
    tails decay at the same rate as the target. Draws use a counter-based
    Philox generator so a given seed is reproducible.
    """
    if spec.kind != "relativistic1d":
        raise ValueError("sample_1d supports relativistic1d only")
    if not spec.param > HALF:
        raise ValueError("N must exceed 1/2")
    df = 2 * float(spec.param) + 1
    best = None
    for scale in (0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0):
        b = _rejection_bound(spec, df, scale * math.sqrt(spec.n + 1))
        if best is None or b < best[0]:
            best = (b, scale * math.sqrt(spec.n + 1))
    if best is None or not math.isfinite(best[0]):
        raise ConfigurationError("could not bound the acceptance ratio")
    bound, scale = best[0] * 1.02, best[1]

    rng = np.random.Generator(np.random.Philox(seed))
    out = []
    have = proposed = 0
    while have < count:
        x = rng.standard_t(df, size=batch) * scale
        u = rng.random(batch)
        r = density_eval_1d(spec, x) / (bound * _t_pdf(x, df, scale))
        if np.any(r > 1):
            raise ConfigurationError("acceptance ratio exceeded 1; bound is too small")
        acc = x[u < r]
        proposed += batch
        out.append(acc)
        have += acc.size
    values = np.concatenate(out)[:count]
    return SampleBatch(values, seed, have / proposed, bound)


def density_cdf(density, points, lower=-np.inf, gap: float = 0.05, nodes: int = 16) -> np.ndarray:
    """
    CDF of a 1D density at sorted ``points``.

    Short gaps between neighbours use a fixed Gauss-Legendre rule; long gaps
    and the leading piece use adaptive quadrature.
    """
    pts = np.asarray(points, dtype=float)
    if pts.size == 0:
        return pts
    first, _ = integrate.quad(lambda t: float(density(t)), lower, pts[0], limit=200,
                              epsabs=1e-13, epsrel=1e-12)
    a, b = pts[:-1], pts[1:]
    h = b - a
    gx, gw = np.polynomial.legendre.leggauss(nodes)
    pieces = np.zeros_like(h)
    short = h <= gap
    if np.any(short):
        mid = 0.5 * (a[short] + b[short])
        half = 0.5 * h[short]
        xs = mid[:, None] + half[:, None] * gx[None, :]
        pieces[short] = half * (density(xs) @ gw)
    for i in np.flatnonzero(~short):
        pieces[i], _ = integrate.quad(lambda t: float(density(t)), a[i], b[i], limit=200,
                                      epsabs=1e-13, epsrel=1e-12)
    return first + np.concatenate([[0.0], np.cumsum(pieces)])


def ks_distance(samples, density, lower=-np.inf) -> float:
    """One-sample Kolmogorov-Smirnov statistic against the CDF of ``density``."""
    pts = np.sort(np.asarray(samples, dtype=float))
    F = density_cdf(density, pts, lower)
    res = stats.ks_1samp(pts, lambda y: np.interp(y, pts, F))
    return float(res.statistic)


def _gegenbauer_float(n: int, nu: Fraction) -> ParityPoly:
    if nu == 0:
        raise ValueError("Gegenbauer parameter 0 in 2D density")
    return family_poly(FamilyParam(Family.GEGENBAUER, n, nu))


def density_eval_2d(spec: DensitySpec, point):
    """
    Unnormalized 2D density.

    hyperbolic2d at (x, y) in R^2:
        (1+y^2)^n (1+x^2+y^2)^(-N+m-1/2)
        |C_n^(N-m-n)(y/sqrt(1+y^2))|^2 |C_m^(N-m+1/2)(x/sqrt(1+x^2+y^2))|^2
    sphere2d at (X, Y) in the open unit disk:
        (1-Y^2)^(m-1/2) (1-X^2-Y^2)^nu
        |C_n^(nu+m+1/2)(Y)|^2 |C_m^nu(X/sqrt(1-Y^2))|^2
    """
    u, v = (np.asarray(c, dtype=float) for c in point)
    m, n, p = spec.m, spec.n, spec.param
    if spec.kind == "hyperbolic2d":
        ca = _gegenbauer_float(n, p - m - n)
        cb = _gegenbauer_float(m, p - m + HALF)
        r2 = 1 + u**2 + v**2
        out = ((1 + v**2) ** n * r2 ** float(-p + m - HALF)
               * ca.evalf(v / np.sqrt(1 + v**2)) ** 2 * cb.evalf(u / np.sqrt(r2)) ** 2)
    elif spec.kind == "sphere2d":
        s2 = u**2 + v**2
        if np.any(s2 >= 1):
            raise ValueError("sphere2d density is supported on the open unit disk")
        ca = _gegenbauer_float(n, p + m + HALF)
        cb = _gegenbauer_float(m, p)
        out = ((1 - v**2) ** (m - 0.5) * (1 - s2) ** float(p)
               * ca.evalf(v) ** 2 * cb.evalf(u / np.sqrt(1 - v**2)) ** 2)
    else:
        raise ValueError("density_eval_2d needs a 2D kind")
    return float(out) if np.ndim(out) == 0 else out


def hyperbolic_table_form(m: int, n: int, big_n, y, z):
    """
    Product of squared Cariñena functions for the hyperbolic oscillator,
    ``|h_n^P(y sqrt(P))|^2 |h_m^N(z sqrt(N))|^2`` with ``P = N - m - 1/2``,
    ``h_k^P(t) = (1 + t^2/P)^(-P/2-1/4) H_k^P(t)`` and ``z = x/sqrt(1+y^2)``.

    Arguments are rescaled by ``sqrt(P)`` (unit scaling constants); with this
    reading the Gegenbauer parameters agree with :func:`density_eval_2d`, and
    the two forms differ by ``const * sqrt(1+y^2)``.
    """
    big_n = as_rational(big_n)
    p1 = big_n - m - HALF
    y = np.asarray(y, dtype=float)
    z = np.asarray(z, dtype=float)

    def h(k, P, t):
        poly = family_poly(FamilyParam(Family.CARINENA_POS, k, P))
        return (1 + t**2) ** (-float(P) / 2 - 0.25) * poly.evalf(t * math.sqrt(P))

    return h(n, p1, y) ** 2 * h(m, big_n, z) ** 2


def map_2d(x, y):
    """Hyperbolic-plane chart to the unit disk."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    r = np.sqrt(1 + x**2 + y**2)
    return x / r, y / r


def map_2d_inverse(X, Y):
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    s2 = X**2 + Y**2
    if np.any(s2 >= 1):
        raise ValueError("inverse map needs X^2 + Y^2 < 1")
    s = np.sqrt(1 - s2)
    return X / s, Y / s


def jacobian_2d(x, y) -> dict:
    """
    Determinant of d(X, Y)/d(x, y) three ways: from the explicit matrix,
    as ``(1+x^2+y^2)^-2`` and as ``(1-X^2-Y^2)^2``.
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    r2 = 1 + x**2 + y**2
    r3 = r2**1.5
    det = (1 + y**2) / r3 * (1 + x**2) / r3 - (x * y / r3) ** 2
    X, Y = map_2d(x, y)
    return {"matrix": det, "from_xy": r2**-2, "from_XY": (1 - X**2 - Y**2) ** 2}


def thm5_grid(size: int = 21, margin: float = 1e-3) -> tuple[np.ndarray, np.ndarray]:
    """Points of a ``size x size`` lattice on [-1, 1]^2 at distance >= margin from the circle."""
    t = np.linspace(-1, 1, size)
    t[np.abs(t) < 1e-12] = 0.0
    X, Y = np.meshgrid(t, t, indexing="ij")
    keep = np.sqrt(X**2 + Y**2) <= 1 - margin
    return X[keep], Y[keep]


@dataclass(frozen=True)
class Thm5Result:
    m: int
    n: int
    big_n: Fraction
    nu: Fraction
    points: int
    max_rel_error: float
    ratio_spread: float
    residual_spread: float

    def passed(self, tol: float = 1e-9) -> bool:
        return self.max_rel_error < tol and self.ratio_spread < tol

    def to_json(self, tol: float = 1e-9) -> dict:
        return {
            "params": {"m": self.m, "n": self.n, "N": format_rational(self.big_n),
                       "nu": format_rational(self.nu)},
            "grid_size": self.points,
            "max_error": self.max_rel_error,
            "ratio_spread": self.ratio_spread,
            "residual_spread": self.residual_spread,
            "compared_against": "g_{n,m,nu}(Y, X)",
            "pass": self.passed(tol),
        }


def verify_thm5(m: int, n: int, big_n, grid=None) -> Thm5Result:
    """
    Transport the hyperbolic density to the disk and compare with the sphere
    density with indices and arguments swapped, ``g_{n,m,nu}(Y, X)``,
    ``nu = N - m - n``.

    The transport uses the invariant measures ``dxdy/sqrt(1+x^2+y^2)`` and
    ``dXdY/sqrt(1-X^2-Y^2)``. Reports the max relative error, the spread of
    the pointwise ratio (max/min - 1), and the spread of that ratio after
    dividing out ``sqrt((1-X^2)/(1-X^2-Y^2))``. The first two use every point
    where both sides exceed 1e-30; the last ignores points within 1e-12 of
    the peak value's scale, which sit on polynomial roots.
    """
    big_n = as_rational(big_n)
    nu = big_n - m - n
    if not nu > 0:
        raise ValueError(f"need nu = N - m - n > 0, got {format_rational(nu)}")
    if big_n - m + HALF == 0:
        raise ValueError("need N - m + 1/2 != 0")
    X, Y = thm5_grid() if grid is None else (np.asarray(g, dtype=float) for g in grid)
    if np.any(X**2 + Y**2 >= 1):
        raise ValueError("grid points must lie in the open unit disk")
    x, y = map_2d_inverse(X, Y)
    J = jacobian_2d(x, y)["from_xy"]
    # f dxdy/sqrt(1+x^2+y^2) = ft dXdY/sqrt(1-X^2-Y^2), dxdy = dXdY/J
    transport = np.sqrt(1 - X**2 - Y**2) / (J * np.sqrt(1 + x**2 + y**2))
    lhs = density_eval_2d(DensitySpec("hyperbolic2d", n, big_n, m), (x, y)) * transport
    rhs = density_eval_2d(DensitySpec("sphere2d", m, nu, n), (Y, X))
    ok = (np.abs(lhs) > 1e-30) & (np.abs(rhs) > 1e-30)
    lhs, rhs = lhs[ok], rhs[ok]
    rel = np.abs(lhs - rhs) / np.abs(rhs)
    ratio = lhs / rhs
    # diagnostic only: drop points sitting on polynomial roots (pure roundoff there)
    big = np.minimum(np.abs(lhs), np.abs(rhs)) > 1e-12 * np.abs(rhs).max()
    Xo, Yo = X[ok][big], Y[ok][big]
    resid = ratio[big] / np.sqrt((1 - Xo**2) / (1 - Xo**2 - Yo**2))
    return Thm5Result(m, n, big_n, nu, int(ok.sum()), float(rel.max()),
                      float(ratio.max() / ratio.min() - 1), float(resid.max() / resid.min() - 1))
