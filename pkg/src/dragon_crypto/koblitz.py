"""Koblitz embedding of integers as points on y^2 = x^3 + Ax + B over F_p.

An integer ``m`` goes to x = d*m + j for the smallest j in [0, d) that makes
the right-hand side a quadratic residue; decoding is just ``x // d``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    BlockTooLong,
    CodePointOutOfRange,
    EncodeFailure,
    InvalidKeyParameters,
    MessageTooLarge,
)
from .fieldmath import is_probable_prime, is_quadratic_residue, mod_sqrt

BASE = 1 << 16
MAX_BLOCK_CHARS = 160
DEFAULT_SPREAD = 100


def prime_failures(p: int) -> list[str]:
    failures = []
    if p < 7:
        failures.append(f"p = {p} must be at least 7")
    if p % 4 != 3:
        failures.append(f"p = {p} must be 3 mod 4")
    if not is_probable_prime(p):
        failures.append(f"p = {p} is not prime")
    return failures


@dataclass(frozen=True)
class CurveParams:
    """Curve y^2 = x^3 + a*x + b over F_p. ``a`` and ``b`` are reduced mod p."""

    p: int
    a: int
    b: int

    def __post_init__(self):
        failures = prime_failures(self.p)
        if failures:
            raise InvalidKeyParameters(failures)
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)
        if (4 * self.a**3 + 27 * self.b**2) % self.p == 0:
            raise InvalidKeyParameters("curve is singular (4a^3 + 27b^2 = 0 mod p)")

    def rhs(self, x: int) -> int:
        return (x * x * x + self.a * x + self.b) % self.p

    def contains(self, x: int, y: int) -> bool:
        return 0 <= x < self.p and 0 <= y < self.p and y * y % self.p == self.rhs(x)


@dataclass(frozen=True)
class CurvePoint:
    x: int
    y: int


@dataclass(frozen=True)
class MessageBlock:
    m: int
    chars: tuple[int, ...]


def pack(text: str) -> MessageBlock:
    """Pack up to 160 characters little-endian in base 2**16."""
    if len(text) > MAX_BLOCK_CHARS:
        raise BlockTooLong(f"block has {len(text)} characters, limit is {MAX_BLOCK_CHARS}")
    codes = tuple(ord(ch) for ch in text)
    m = 0
    for a in reversed(codes):
        if not 0 < a < BASE:
            raise CodePointOutOfRange(f"code point {a:#x} outside [1, 2^16)")
        m = m * BASE + a
    return MessageBlock(m, codes)


def unpack(m: int) -> str:
    if m < 0:
        raise ValueError("m must be non-negative")
    chars = []
    while m:
        m, a = divmod(m, BASE)
        chars.append(chr(a))
    return "".join(chars)


def encode(m: int, params: CurveParams, d: int = DEFAULT_SPREAD) -> CurvePoint:
    if d < 1:
        raise ValueError("d must be positive")
    if m < 0 or d * (m + 1) > params.p:
        raise MessageTooLarge(f"m = {m} does not fit: need d*(m+1) <= p")
    for j in range(d):
        x = d * m + j
        s = params.rhs(x)
        if is_quadratic_residue(s, params.p):
            return CurvePoint(x, mod_sqrt(s, params.p))
    raise EncodeFailure(f"no j in [0, {d}) gives a point for m = {m}")


def decode(pt: CurvePoint, d: int = DEFAULT_SPREAD) -> int:
    return pt.x // d
