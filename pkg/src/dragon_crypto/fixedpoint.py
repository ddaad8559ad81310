"""Scaled-decimal fixed-point numbers.

A value is an integer mantissa over ``10**q``. Addition, subtraction and
integer multiplication are exact; the only rounding in the whole package
happens once, inside :func:`sin_cos_deg`.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

DEFAULT_PRECISION = 50
MIN_KEY_PRECISION = 10
GUARD_DIGITS = 10


@dataclass(frozen=True, order=True)
class FixedPoint:
    mantissa: int
    q: int

    def __post_init__(self):
        if self.q < 0:
            raise ValueError("precision must be non-negative")

    @classmethod
    def from_int(cls, value: int, q: int) -> FixedPoint:
        return cls(value * 10**q, q)

    @classmethod
    def zero(cls, q: int) -> FixedPoint:
        return cls(0, q)

    def _check(self, other: FixedPoint) -> None:
        if not isinstance(other, FixedPoint):
            raise TypeError(f"expected FixedPoint, got {type(other).__name__}")
        if other.q != self.q:
            raise ValueError(f"precision mismatch: {self.q} vs {other.q}")

    def __add__(self, other: FixedPoint) -> FixedPoint:
        self._check(other)
        return FixedPoint(self.mantissa + other.mantissa, self.q)

    def __sub__(self, other: FixedPoint) -> FixedPoint:
        self._check(other)
        return FixedPoint(self.mantissa - other.mantissa, self.q)

    def __neg__(self) -> FixedPoint:
        return FixedPoint(-self.mantissa, self.q)

    def mul_int(self, k: int) -> FixedPoint:
        return FixedPoint(self.mantissa * k, self.q)

    def is_integer(self) -> bool:
        return self.mantissa % 10**self.q == 0

    def to_int(self) -> int:
        """Integer value; only meaningful when :meth:`is_integer` holds."""
        if not self.is_integer():
            raise ValueError(f"{self} has a non-zero fractional part")
        return self.mantissa // 10**self.q

    def __str__(self) -> str:
        sign = "-" if self.mantissa < 0 else ""
        whole, frac = divmod(abs(self.mantissa), 10**self.q)
        if self.q == 0:
            return f"{sign}{whole}"
        return f"{sign}{whole}.{frac:0{self.q}d}"

    @classmethod
    def parse(cls, text: str, q: int) -> FixedPoint:
        """Inverse of ``str``. Accepts only the canonical spelling at precision ``q``."""
        m = _grammar(q).fullmatch(text)
        if m is None:
            raise ValueError(f"not a canonical fixed-point number at precision {q}: {text!r}")
        digits = text.replace("-", "").replace(".", "")
        mantissa = int(digits)
        if text.startswith("-"):
            if mantissa == 0:
                raise ValueError("negative zero is not canonical")
            mantissa = -mantissa
        return cls(mantissa, q)


@lru_cache(maxsize=None)
def _grammar(q: int) -> re.Pattern:
    frac = rf"\.[0-9]{{{q}}}" if q else ""
    return re.compile(rf"-?(?:0|[1-9][0-9]*){frac}")


def round_half_even(value: int, drop_digits: int) -> int:
    """Divide ``value`` by ``10**drop_digits``, rounding ties to even."""
    if drop_digits == 0:
        return value
    scale = 10**drop_digits
    quot, rem = divmod(value, scale)
    twice = 2 * rem
    if twice > scale or (twice == scale and quot % 2 == 1):
        quot += 1
    return quot


def _arctan_inv(x: int, scale: int) -> int:
    """arctan(1/x) * scale via the alternating series, truncating each term."""
    total = term = scale // x
    x2 = x * x
    k = 1
    sign = -1
    while term:
        term //= x2
        total += sign * (term // (2 * k + 1))
        sign = -sign
        k += 1
    return total


@lru_cache(maxsize=None)
def pi_scaled(digits: int) -> int:
    """pi * 10**digits, accurate to within a few units in the last place."""
    extra = 10
    scale = 10 ** (digits + extra)
    pi = 16 * _arctan_inv(5, scale) - 4 * _arctan_inv(239, scale)
    return pi // 10**extra


def _sin_cos_small(deg: int, digits: int) -> tuple[int, int]:
    """sin and cos of ``deg`` in [0, 45] degrees, scaled by ``10**digits``."""
    scale = 10**digits
    x = pi_scaled(digits) * deg // 180
    x2 = x * x

    sin_sum = term = x
    k = 1
    while term:
        term = -term * x2 // scale**2 // ((2 * k) * (2 * k + 1))
        sin_sum += term
        k += 1

    cos_sum = term = scale
    k = 1
    while term:
        term = -term * x2 // scale**2 // ((2 * k - 1) * (2 * k))
        cos_sum += term
        k += 1
    return sin_sum, cos_sum


@lru_cache(maxsize=None)
def sin_cos_deg(theta: int, q: int = DEFAULT_PRECISION) -> tuple[FixedPoint, FixedPoint]:
    """Return ``(sin theta, cos theta)`` for integer degrees at precision ``q``.

    The angle is folded into [0, 45] degrees, evaluated by Taylor series with
    ``GUARD_DIGITS`` extra digits and rounded half-even to ``q`` digits. Signs
    and swaps for the other octants are applied to the rounded magnitudes, so
    symmetric angles share mantissas exactly and multiples of 90 are exact.
    """
    if not 0 <= theta < 360:
        raise ValueError("theta must be an integer in [0, 360)")
    quadrant, r = divmod(theta, 90)
    if r == 0:
        s, c = 0, 10**q
    else:
        base = min(r, 90 - r)
        raw_s, raw_c = _sin_cos_small(base, q + GUARD_DIGITS)
        s = round_half_even(raw_s, GUARD_DIGITS)
        c = round_half_even(raw_c, GUARD_DIGITS)
        if r > 45:
            s, c = c, s

    # rotate (cos, sin) by quadrant * 90 degrees
    for _ in range(quadrant):
        s, c = c, -s
    return FixedPoint(s, q), FixedPoint(c, q)
