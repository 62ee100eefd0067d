"""
Exact scalar arithmetic.

Rationals are :class:`fractions.Fraction`. Constants that involve pi, square
roots and gamma values at rational arguments are held in
:class:`ClosedFormConstant`, a canonical product form that supports exact
multiplication, division and structural equality.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

Rational = Fraction

__all__ = [
    "Rational",
    "as_rational",
    "format_rational",
    "parse_rational",
    "pochhammer",
    "squarefree_split",
    "ClosedFormConstant",
    "gamma_reduce",
    "const_eq",
    "const_to_float",
]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and 'p/q' strings to Fraction. Floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational parameter")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``. Decimal notation is refused on purpose."""
    s = text.strip()
    if not s or "." in s or "e" in s.lower():
        raise ValueError(f"not an exact rational: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def pochhammer(base, count: int) -> Fraction:
    """Rising factorial ``base (base+1) ... (base+count-1)``; 1 when count is 0."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    b = as_rational(base)
    out = Fraction(1)
    for j in range(count):
        out *= b + j
    return out


def squarefree_split(n: int) -> tuple[int, int]:
    """Return ``(k, s)`` with ``n == k*k*s`` and ``s`` squarefree (n > 0)."""
    if n <= 0:
        raise ValueError("squarefree_split needs a positive integer")
    k, s = 1, 1
    p = 2
    while p * p <= n:
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        k *= p ** (e // 2)
        if e % 2:
            s *= p
        p += 1
    return k, s * n


@dataclass(frozen=True)
class ClosedFormConstant:
    """
    ``coeff * pi**(pi_half_power/2) * sqrt(surd) * prod Gamma(arg)**exp``.

    Instances built through :func:`gamma_reduce` (or the arithmetic operators)
    are canonical: gamma arguments lie in (0, 1), Gamma(1/2) appears with
    exponent 0 or 1 (even powers of sqrt(pi) live in ``pi_half_power``), and
    the surd is a single squarefree integer greater than 1 or absent.
    """

    coeff: Fraction
    pi_half_power: int = 0
    surds: tuple[Fraction, ...] = ()
    gammas: tuple[tuple[Fraction, int], ...] = field(default=())

    def __mul__(self, other):
        if isinstance(other, ClosedFormConstant):
            return gamma_reduce(
                list(self.gammas) + list(other.gammas),
                self.coeff * other.coeff,
                self.pi_half_power + other.pi_half_power,
                list(self.surds) + list(other.surds),
            )
        return gamma_reduce(list(self.gammas), self.coeff * as_rational(other),
                            self.pi_half_power, list(self.surds))

    __rmul__ = __mul__

    def inverse(self) -> "ClosedFormConstant":
        if self.coeff == 0:
            raise ZeroDivisionError("inverse of zero constant")
        # 1/sqrt(s) = sqrt(s)/s
        coeff = 1 / self.coeff
        for s in self.surds:
            coeff /= s
        return gamma_reduce([(a, -e) for a, e in self.gammas], coeff,
                            -self.pi_half_power, list(self.surds))

    def __truediv__(self, other):
        if isinstance(other, ClosedFormConstant):
            return self * other.inverse()
        return self * (1 / as_rational(other))

    def decompose(self):
        """Raw pieces suitable for feeding back into :func:`gamma_reduce`."""
        return list(self.gammas), self.coeff, self.pi_half_power, list(self.surds)

    def to_json(self) -> dict:
        return {
            "coeff": format_rational(self.coeff),
            "pi_half_power": self.pi_half_power,
            "surds": [format_rational(s) for s in self.surds],
            "gammas": [{"arg": format_rational(a), "exp": e} for a, e in self.gammas],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "ClosedFormConstant":
        return gamma_reduce(
            [(parse_rational(g["arg"]), int(g["exp"])) for g in obj.get("gammas", [])],
            parse_rational(obj["coeff"]),
            int(obj.get("pi_half_power", 0)),
            [parse_rational(s) for s in obj.get("surds", [])],
        )

    def __float__(self) -> float:
        return const_to_float(self)

    def __str__(self) -> str:
        parts = [format_rational(self.coeff)]
        if self.pi_half_power:
            parts.append(f"pi^({self.pi_half_power}/2)")
        parts += [f"sqrt({format_rational(s)})" for s in self.surds]
        parts += [f"Gamma({format_rational(a)})^{e}" for a, e in self.gammas]
        return " * ".join(parts)


def gamma_reduce(
    raw: Iterable[tuple[object, int]],
    coeff=1,
    pi_half_power: int = 0,
    surds: Sequence[object] = (),
) -> ClosedFormConstant:
    """
    Canonicalize a product of gamma values, powers of sqrt(pi) and square roots.

    Each Gamma(x) with x > 1 is stepped down with Gamma(x) = (x-1) Gamma(x-1)
    until x is in (0, 1]; Gamma(1) is dropped.

    Raises
    ------
    ValueError
        If a gamma argument is not positive or a surd is negative.
    """
    c = as_rational(coeff)
    exps: dict[Fraction, int] = {}
    for arg, e in raw:
        x = as_rational(arg)
        e = int(e)
        if x <= 0:
            raise ValueError(f"gamma argument must be positive, got {format_rational(x)}")
        if e == 0:
            continue
        while x > 1:
            x -= 1
            c *= x ** e
        if x != 1:
            exps[x] = exps.get(x, 0) + e

    half = Fraction(1, 2)
    t = pi_half_power + exps.pop(half, 0)
    pi_half_power = t - (t % 2)
    if t % 2:
        exps[half] = 1

    radicand = Fraction(1)
    for s in surds:
        s = as_rational(s)
        if s < 0:
            raise ValueError("negative surd")
        radicand *= s
    if radicand == 0 or c == 0:
        return ClosedFormConstant(Fraction(0))
    # sqrt(p/q) = sqrt(p*q)/q
    k, sq = squarefree_split(radicand.numerator * radicand.denominator)
    c *= Fraction(k, radicand.denominator)

    gammas = tuple(sorted((a, e) for a, e in exps.items() if e != 0))
    return ClosedFormConstant(c, pi_half_power, (Fraction(sq),) if sq > 1 else (), gammas)


def const_eq(a: ClosedFormConstant, b: ClosedFormConstant) -> bool:
    """Structural equality of canonical forms."""
    return gamma_reduce(*a.decompose()) == gamma_reduce(*b.decompose())


def const_to_float(a: ClosedFormConstant, precision: int = 17):
    """
    Evaluate to ``precision`` significant digits.

    Returns a float when ``precision <= 17`` and an ``mpmath.mpf`` otherwise.
    """
    with mpmath.workdps(precision + 10):
        v = mpmath.mpf(a.coeff.numerator) / a.coeff.denominator
        if a.pi_half_power:
            v *= mpmath.sqrt(mpmath.pi) ** a.pi_half_power
        for s in a.surds:
            v *= mpmath.sqrt(mpmath.mpf(s.numerator) / s.denominator)
        for arg, e in a.gammas:
            v *= mpmath.gamma(mpmath.mpf(arg.numerator) / arg.denominator) ** e
        if precision <= 17:
            return float(v)
        return +v


def factorial(n: int) -> Fraction:
    return Fraction(math.factorial(n))
