"""Dense univariate polynomials over exact rationals.

Coefficient lists run low degree to high. These are plumbing for the
closed-form checks and the conjecture extraction; nothing here is clever.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

__all__ = [
    "poly_add",
    "poly_mul",
    "poly_scale",
    "poly_eval",
    "poly_trim",
    "poly_degree",
    "poly_text",
    "lagrange_interpolate",
]


def poly_add(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    out = [Fraction(0)] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return out


def poly_mul(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            if bj:
                out[i + j] += ai * bj
    return out


def poly_scale(a: Sequence[Fraction], c: Fraction | int) -> list[Fraction]:
    return [v * c for v in a]


def poly_eval(a: Sequence[Fraction], x: Fraction | int) -> Fraction:
    value = Fraction(0)
    for coeff in reversed(a):
        value = value * x + coeff
    return value


def poly_trim(a: Sequence[Fraction]) -> list[Fraction]:
    """Drop trailing zero coefficients; the zero polynomial becomes []."""
    out = list(a)
    while out and out[-1] == 0:
        out.pop()
    return out


def poly_degree(a: Sequence[Fraction]) -> int:
    """Degree after trimming; the zero polynomial reports -1."""
    return len(poly_trim(a)) - 1


def poly_text(a: Sequence[Fraction], variable: str = "n") -> str:
    """Readable form like "9 - 12*n + 4*n^2", low degree first."""
    trimmed = poly_trim(a)
    if not trimmed:
        return "0"
    pieces: list[str] = []
    for i, coeff in enumerate(trimmed):
        if coeff == 0:
            continue
        magnitude = str(abs(coeff))
        if i == 0:
            term = magnitude
        else:
            power = variable if i == 1 else f"{variable}^{i}"
            term = power if abs(coeff) == 1 else f"{magnitude}*{power}"
        if not pieces:
            pieces.append(term if coeff > 0 else f"-{term}")
        else:
            pieces.append(f"+ {term}" if coeff > 0 else f"- {term}")
    return " ".join(pieces)


def lagrange_interpolate(points: Sequence[tuple[Fraction | int, Fraction]]) -> list[Fraction]:
    """Coefficients of the unique polynomial of degree < len(points) through the points.

    All arithmetic is exact; duplicate abscissae are rejected.
    """
    xs = [Fraction(x) for x, _ in points]
    if len(set(xs)) != len(xs):
        raise ValueError("interpolation points must have distinct abscissae")
    result: list[Fraction] = []
    for i, (_, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, xj in enumerate(xs):
            if j == i:
                continue
            basis = poly_mul(basis, [-xj, Fraction(1)])
            denom *= xs[i] - xj
        result = poly_add(result, poly_scale(basis, yi / denom))
    return result if result else [Fraction(0)]
