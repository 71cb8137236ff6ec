"""Exact rational scalars and the small combinatorial functions built on them.

Everything in this package is an exact integer or rational; floats never
appear. ``Rational`` is :class:`fractions.Fraction`, which keeps values
normalized (lowest terms, positive denominator, zero as 0/1). Its string
form is the canonical text format used throughout the CLI and cache files:
"p/q" in lowest terms, plain "p" for integers, sign on the numerator.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Sequence

__all__ = [
    "Rational",
    "factorial",
    "binomial",
    "multinomial",
    "double_factorial",
    "harmonic",
    "HarmonicCache",
    "rational_to_text",
    "rational_from_text",
]

Rational = Fraction


def rational_to_text(value: Fraction | int) -> str:
    """Canonical text form of a rational: "p/q", or "p" when the value is integral."""
    return str(Fraction(value))


def rational_from_text(text: str) -> Fraction:
    """Parse the canonical text form back into a Rational."""
    return Fraction(text)


def binomial(n: int, j: int) -> int:
    """Binomial coefficient C(n, j) for n, j >= 0, with C(n, j) = 0 when j > n."""
    if n < 0 or j < 0:
        raise ValueError(f"binomial requires nonnegative arguments, got ({n}, {j})")
    return comb(n, j)


def multinomial(top: int, parts: Sequence[int]) -> int:
    """Multinomial coefficient top! / (parts[0]! * parts[1]! * ...).

    The parts must be nonnegative and sum to top.
    """
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be nonnegative, got {tuple(parts)}")
    if sum(parts) != top:
        raise ValueError(f"multinomial parts {tuple(parts)} do not sum to {top}")
    value = factorial(top)
    for p in parts:
        value //= factorial(p)
    return value


def double_factorial(a: int) -> Fraction:
    """Double factorial of an odd integer, extended to negative odd arguments.

    For a >= 1 this is a(a-2)(a-4)...1. The extension sets (-1)!! = 1 and
    (-(2i+1))!! = (-1)^i / (2i-1)!!, which is exactly what makes
    a * (a-2)!! = a!! hold for every odd a.
    """
    if a % 2 == 0:
        raise ValueError(f"double factorial is only defined for odd integers, got {a}")
    if a >= 1:
        product = 1
        while a >= 1:
            product *= a
            a -= 2
        return Fraction(product)
    if a == -1:
        return Fraction(1)
    i = (-a - 1) // 2
    odd_product = 1
    for j in range(1, 2 * i, 2):
        odd_product *= j
    return Fraction(-1 if i % 2 else 1, odd_product)


class HarmonicCache:
    """Prefix sums of 1/i^order, grown lazily and shared across callers."""

    def __init__(self, order: int):
        if order < 1:
            raise ValueError(f"harmonic order must be >= 1, got {order}")
        self.order = order
        self._values: list[Fraction] = [Fraction(0)]

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"harmonic index must be >= 0, got {n}")
        while len(self._values) <= n:
            i = len(self._values)
            self._values.append(self._values[-1] + Fraction(1, i**self.order))
        return self._values[n]


_HARMONIC_CACHES: dict[int, HarmonicCache] = {}


def harmonic(n: int, k: int = 1) -> Fraction:
    """Generalized harmonic number H_n^(k) = sum of 1/i^k for i = 1..n."""
    cache = _HARMONIC_CACHES.get(k)
    if cache is None:
        cache = _HARMONIC_CACHES[k] = HarmonicCache(k)
    return cache.value(n)
