"""Exact integer arithmetic used by the closed-form formulas.

Everything here works on plain Python ints; no floating point is ever used.
Products that feed the formulas are capped at ``PRODUCT_LIMIT`` so that a
port to fixed-width integers would never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

PRODUCT_LIMIT = 2**40


class ProductOverflowError(OverflowError):
    """A product of formula inputs exceeded ``PRODUCT_LIMIT``."""


def checked_mul(a: int, b: int) -> int:
    prod = a * b
    if abs(prod) > PRODUCT_LIMIT:
        raise ProductOverflowError(f"{a}*{b} exceeds 2^40")
    return prod


def _require_positive(**values: int) -> None:
    for name, v in values.items():
        if v < 1:
            raise ValueError(f"{name} must be >= 1 (got {v})")


def gcd(a: int, b: int) -> int:
    _require_positive(a=a, b=b)
    while b:
        a, b = b, a % b
    return a


@dataclass(frozen=True)
class BezoutResult:
    g: int
    x: int
    y: int


def bezout(a: int, b: int) -> BezoutResult:
    """Extended Euclid: return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    _require_positive(a=a, b=b)
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return BezoutResult(old_r, old_x, old_y)


def t_star(a: int, b: int) -> int:
    """Smallest positive t such that ``b`` divides ``a*t - gcd(a, b)``.

    The answer never exceeds ``b // gcd(a, b)``, so a linear scan is enough.
    """
    _require_positive(a=a, b=b)
    g = gcd(a, b)
    for t in range(1, b // g + 1):
        if (a * t - g) % b == 0:
            return t
    raise AssertionError("unreachable: Bezout guarantees a solution")  # pragma: no cover


def ceil_div(a: int, b: int) -> int:
    if b < 1:
        raise ValueError("divisor must be >= 1")
    return -((-a) // b)


def floor_div(a: int, b: int) -> int:
    if b < 1:
        raise ValueError("divisor must be >= 1")
    return a // b
