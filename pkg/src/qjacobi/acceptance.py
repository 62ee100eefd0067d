"""
The acceptance suite as plain functions.

Each ``criterion_*`` returns a :class:`CriterionResult`; :func:`report_all`
runs them in order. The ``quick`` profile caps polynomial degrees at 6.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction as F

import numpy as np

from .exact import format_rational
from .identities import hermite_limit_gap, verify_grid
from .moments import (
    WeightSpec,
    family_weight,
    inner_product,
    moment_ratio,
    norm_constant_check,
    quadrature,
    verify_orthogonality,
)
from .nonextensive import (
    QGaussianSpec,
    q_from_family,
    q_gaussian_pdf,
    q_gaussian_support,
    q_pair_table3,
)
from .polys import Family, FamilyParam, family_poly, gegenbauer_recurrence
from .transforms import (
    DensitySpec,
    density_eval_1d,
    ks_distance,
    nagel_map,
    pushforward_check_1d,
    pushforward_grid,
    sample_1d,
    verify_thm5,
)

__all__ = ["CriterionResult", "CRITERIA", "report_all"]


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    seconds: float = 0.0
    detail: dict = field(default_factory=dict)

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number:2d}. {self.title} ({self.seconds:.2f}s)"

    def to_json(self) -> dict:
        return {"criterion": self.number, "title": self.title, "pass": self.passed,
                "seconds": round(self.seconds, 3), "detail": self.detail}


def _cap(n: int, profile: str) -> int:
    return min(n, 6) if profile == "quick" else n


def _identity_criterion(number, title, identity, n_max, params, limit, profile):
    t0 = time.perf_counter()
    reps = verify_grid(identity, _cap(n_max, profile), params)
    dt = time.perf_counter() - t0
    failed = [r.to_json() for r in reps if r.exact_equal is False]
    skipped = [r.to_json() for r in reps if r.skipped]
    checked = sum(r.exact_equal is True for r in reps)
    ok = not failed and dt < limit
    return CriterionResult(number, title, ok, dt, {
        "checked": checked, "failed": failed, "skipped": skipped, "time_limit_s": limit})


def criterion_1(profile="full"):
    return _identity_criterion(1, "positive Cariñena = rescaled RHP", "thm1", 12,
                               [F(3, 2), 2, F(7, 2), 5, 10, F(41, 4)], 5.0, profile)


def criterion_2(profile="full"):
    return _identity_criterion(2, "negative Cariñena = rescaled Gegenbauer", "thm2", 12,
                               [F(1, 2), 1, F(3, 2), 2, F(7, 2), 5], 5.0, profile)


def criterion_3(profile="full"):
    return _identity_criterion(3, "Nagel identity", "nagel", 12, [1, 2, F(7, 2), 5, 10], 5.0, profile)


def criterion_4(profile="full"):
    return _identity_criterion(4, "positive Cariñena via negative Cariñena", "thm3", 10,
                               [F(21, 2), 12, F(61, 4)], 5.0, profile)


ORTHO_GRID = [
    (Family.GEGENBAUER, [1, 2, F(7, 2)]),
    (Family.CARINENA_POS, [3, 5, 10]),
    (Family.CARINENA_NEG, [1, 2, F(7, 2)]),
    (Family.RHP, [2, 3, 5]),
]


def criterion_5(profile="full"):
    """
    Every off-diagonal inner product that exists must be the rational 0.
    Pairs whose integral diverges are listed as skips.
    """
    t0 = time.perf_counter()
    n_max = _cap(10, profile)
    nonzero, skips = [], []
    checked = 0
    for fam, params in ORTHO_GRID:
        for p in params:
            rep = verify_orthogonality(fam, p, n_max)
            for (m, n), e in rep.entries.items():
                if m != n:
                    checked += 1
                    if e.ratio_to_mu0 != 0:
                        nonzero.append({"family": fam.value, "param": format_rational(F(p)), "m": m,
                                        "n": n, "ratio_to_mu0": format_rational(e.ratio_to_mu0)})
            skips += [{"family": fam.value, "param": format_rational(F(p)), "m": m, "n": n}
                      for (m, n) in rep.skips if m != n]
    dt = time.perf_counter() - t0
    return CriterionResult(5, "Exact orthogonality of all four families", not nonzero and dt < 20, dt, {
        "checked_pairs": checked, "nonzero_pairs": nonzero,
        "non_integrable_pairs_skipped": len(skips), "time_limit_s": 20})


def criterion_6(profile="full"):
    t0 = time.perf_counter()
    n_max = _cap(8, profile)
    mismatches, float_bad = [], []
    corrected_ok = True
    worst = 0.0
    cases = [(Family.RHP, N) for N in (2, 3, F(7, 2), 5)] + [(Family.GEGENBAUER, nu) for nu in (1, 2, F(5, 2))]
    for fam, p in cases:
        for n in range(n_max + 1):
            if not norm_constant_check(fam, n, p):
                mismatches.append({"family": fam.value, "param": format_rational(F(p)), "n": n})
            if fam is Family.GEGENBAUER:
                corrected_ok &= norm_constant_check(fam, n, p, squared_gamma=True)
            poly = family_poly(FamilyParam(fam, n, p))
            w = family_weight(fam, p, n, n)
            exact = float(inner_product(poly, poly, w))
            numeric = quadrature(lambda x: float(poly.evalf(x)) ** 2 * float(w(x)), w.domain,
                                 tol=1e-14, rel_tol=1e-13)
            rel = abs(exact - numeric) / abs(exact)
            worst = max(worst, rel)
            if rel >= 1e-10:
                float_bad.append({"family": fam.value, "param": format_rational(F(p)), "n": n, "rel": rel})
    dt = time.perf_counter() - t0
    return CriterionResult(6, "Closed-form normalization constants", not mismatches and not float_bad, dt, {
        "closed_form_mismatches": mismatches,
        "gegenbauer_with_gamma_squared_all_equal": corrected_ok,
        "quadrature_max_rel_error": worst, "quadrature_failures": float_bad})


def criterion_7(profile="full"):
    t0 = time.perf_counter()
    problems = []
    ladder = [10, 10**2, 10**3, 10**4]
    for n in range(_cap(8, profile) + 1):
        gaps = [hermite_limit_gap(n, N) for N in ladder]
        if n < 2:
            if any(gaps):
                problems.append({"n": n, "why": "gap should vanish"})
        elif not all(a > b for a, b in zip(gaps, gaps[1:])):
            problems.append({"n": n, "why": "not decreasing", "gaps": [format_rational(g) for g in gaps]})
    spreads = {}
    for n in range(2, _cap(6, profile) + 1):
        a = 10**4 * hermite_limit_gap(n, 10**4)
        b = 10**6 * hermite_limit_gap(n, 10**6)
        spread = abs(a - b) / max(a, b)
        spreads[n] = float(spread)
        if not spread < F(5, 100):
            problems.append({"n": n, "why": "N*gap varies by >= 5%", "spread": float(spread)})
    dt = time.perf_counter() - t0
    return CriterionResult(7, "Hermite limit with O(1/N) gap", not problems, dt,
                           {"problems": problems, "n_times_gap_spread": spreads})


def criterion_8(profile="full"):
    t0 = time.perf_counter()
    checks = {}
    norm_err = 0.0
    for q in (0.3, 0.7, 1.0, 1.2, 1.5):
        spec = QGaussianSpec(q, 1.0)
        total = quadrature(lambda x: q_gaussian_pdf(spec, x), q_gaussian_support(spec), 1e-13, 1e-13)
        norm_err = max(norm_err, abs(total - 1))
    checks["normalization"] = norm_err < 1e-10
    X = np.linspace(-5, 5, 2001)
    gauss = q_gaussian_pdf(QGaussianSpec(1.0), X)
    cont = max(float(np.max(np.abs(q_gaussian_pdf(QGaussianSpec(q), X) - gauss)))
               for q in (1 - 1e-4, 1 + 1e-4))
    checks["continuity"] = cont < 1e-3
    checks["family_q_maps"] = (q_from_family("gegenbauer", 2)[0] == F(1, 3)
                        and q_from_family("carinena", 2)[0] == F(7, 5)
                        and q_from_family("rhp", (3, 0, 0))[0] == F(5, 4))
    checks["geometry_q_pairs"] = (q_pair_table3("sphere", 2, 1) == (F(1, 3), F(2, 3))
                        and q_pair_table3("hyperbolic", 3, 1) == (F(9, 7), F(3, 2)))
    dt = time.perf_counter() - t0
    return CriterionResult(8, "q-Gaussian layer and q maps", all(checks.values()) and dt < 5, dt, {
        **checks, "max_normalization_error": norm_err, "continuity_max_diff": cont})


def criterion_9(profile="full", seed: int = 42, count: int = 100_000):
    t0 = time.perf_counter()
    grid = pushforward_grid(1001)
    worst = max(pushforward_check_1d(n, N, grid)
                for n in range(6) for N in (2, 3, F(7, 2), 5))
    ks = {}
    for n, N in ((0, 3), (2, 3)):
        batch = sample_1d(DensitySpec("relativistic1d", n, N), count, seed)
        target = DensitySpec("sphere1d", n, N)
        ks[f"n={n},N={N}"] = ks_distance(nagel_map(batch.values, N),
                                         lambda y, t=target: density_eval_1d(t, y), lower=-1.0)
    dt = time.perf_counter() - t0
    ok = worst < 1e-10 and all(v < 0.02 for v in ks.values()) and dt < 30
    return CriterionResult(9, "1D pushforward (exact grid + Monte Carlo)", ok, dt,
                           {"max_abs_error": worst, "ks": ks, "seed": seed, "count": count})


def criterion_10(profile="full"):
    t0 = time.perf_counter()
    rows = [verify_thm5(m, n, N).to_json() for m, n, N in ((0, 0, 3), (1, 1, 5), (2, 1, 6), (0, 3, 7))]
    dt = time.perf_counter() - t0
    ok = all(r["pass"] for r in rows) and dt < 10
    return CriterionResult(10, "2D hyperbolic-to-sphere transport", ok, dt, {"cases": rows})


def criterion_11(profile="full", seed: int = 2024):
    t0 = time.perf_counter()
    mismatched = [(format_rational(F(nu)), n)
                  for nu in (F(1, 2), 1, F(3, 2), 2, F(7, 2), 5) for n in range(_cap(15, profile) + 1)
                  if family_poly(FamilyParam(Family.GEGENBAUER, n, nu)) != gegenbauer_recurrence(n, nu)]
    rng = random.Random(seed)
    worst = 0.0
    cases = []
    for _ in range(20):
        k = rng.randint(1, 4)
        if rng.random() < 0.5:
            c = F(rng.randint(1, 8), rng.randint(1, 4))
            a = k + F(3, 2) + F(rng.randint(0, 12), 2)
            w = WeightSpec.rational_decay(c, a)
        else:
            w = WeightSpec.compact_beta(F(rng.randint(1, 8), rng.randint(1, 4)), F(rng.randint(0, 12), 2))
        num = quadrature(lambda x: x ** (2 * k) * float(w(x)), w.domain, 1e-15, 1e-13)
        den = quadrature(lambda x: x ** (2 * k - 2) * float(w(x)), w.domain, 1e-15, 1e-13)
        exact = float(moment_ratio(w, k))
        rel = abs(num / den - exact) / abs(exact)
        worst = max(worst, rel)
        cases.append({"kind": w.kind, "scale": format_rational(w.scale),
                      "exponent": format_rational(w.exponent), "k": k, "rel": rel})
    dt = time.perf_counter() - t0
    return CriterionResult(11, "Oracle cross-checks (recurrence, moment quadrature)",
                           not mismatched and worst < 1e-8, dt,
                           {"recurrence_mismatches": mismatched, "moment_max_rel_error": worst,
                            "moment_cases": cases})


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def report_all(profile: str = "full") -> dict:
    if profile not in ("quick", "full"):
        raise ValueError("profile must be 'quick' or 'full'")
    t0 = time.perf_counter()
    results = [c(profile) for c in CRITERIA]
    return {
        "profile": profile,
        "all_pass": all(r.passed for r in results),
        "seconds": round(time.perf_counter() - t0, 3),
        "criteria": [r.to_json() for r in results],
    }
