"""Encrypt/decrypt pipeline and key generation.

encrypt: text -> Koblitz start points -> dragon endpoints -> padded string.
decrypt runs the same steps backwards and refuses anything that does not
land exactly back on a canonical curve point.
"""
from __future__ import annotations

import random
from math import log2

from . import dragon
from .codec import Ciphertext, PrivateKey, parse, render
from .errors import EncodingError, InvalidCodePoint, KeyMismatch, ParameterError
from .fieldmath import random_prime_3mod4
from .fixedpoint import DEFAULT_PRECISION, FixedPoint
from .koblitz import BASE, DEFAULT_SPREAD, MAX_BLOCK_CHARS, CurvePoint, decode, encode, pack, unpack


def block_chars(key: PrivateKey) -> int:
    """Characters per block in block mode: the most that always fit under p."""
    k = int(log2(key.p // key.d)) // 16 if key.p >= key.d else 0
    # guard against float rounding at exact powers of two
    while k > 0 and key.d * BASE**k > key.p:
        k -= 1
    return max(1, min(MAX_BLOCK_CHARS, k))


def split_units(text: str, key: PrivateKey) -> list[str]:
    if key.mode == "per-char":
        return list(text)
    size = block_chars(key)
    return [text[i:i + size] for i in range(0, len(text), size)]


def start_points(text: str, key: PrivateKey) -> list[CurvePoint]:
    curve = key.curve
    return [encode(pack(unit).m, curve, key.d) for unit in split_units(text, key)]


def encrypt(text: str, key: PrivateKey) -> Ciphertext:
    q = key.precision
    dx, dy = dragon.displacement(key.size, key.angle_deg, key.iterations, q)
    points = []
    for pt in start_points(text, key):
        points.append((FixedPoint.from_int(pt.x, q) + dx, FixedPoint.from_int(pt.y, q) + dy))
    return Ciphertext(points)


def decrypt(ct: Ciphertext, key: PrivateKey) -> str:
    q = key.precision
    curve = key.curve
    out = []
    for index, end in enumerate(ct.points):
        if end[0].q != q or end[1].q != q:
            raise KeyMismatch(f"unit {index}: ciphertext precision differs from the key's")
        sx, sy = dragon.reverse_start(end, key.size, key.angle_deg, key.iterations, q)
        if not (sx.is_integer() and sy.is_integer()):
            raise KeyMismatch(f"unit {index}: recovered start point is not integral")
        x, y = sx.to_int(), sy.to_int()
        if not curve.contains(x, y):
            raise KeyMismatch(f"unit {index}: recovered start point is not on the curve")
        m = decode(CurvePoint(x, y), key.d)
        if key.mode == "per-char" and not 0 < m < BASE:
            raise InvalidCodePoint(f"unit {index}: decoded value {m} is not a code point")
        if m == 0:
            raise InvalidCodePoint(f"unit {index}: decoded an empty block")
        try:
            canonical = encode(m, curve, key.d)
        except EncodingError:
            canonical = None
        if canonical != CurvePoint(x, y):
            raise KeyMismatch(f"unit {index}: start point is not the canonical encoding")
        out.append(chr(m) if key.mode == "per-char" else unpack(m))
    return "".join(out)


def encrypt_text(text: str, key: PrivateKey) -> str:
    return render(encrypt(text, key))


def decrypt_text(s: str, key: PrivateKey) -> str:
    return decrypt(parse(s, key.precision), key)


def generate_key(
    bits: int = 32,
    *,
    iterations: int | None = None,
    size: int | None = None,
    angle_deg: int | None = None,
    precision: int = DEFAULT_PRECISION,
    d: int = DEFAULT_SPREAD,
    mode: str = "per-char",
    seed: int | None = None,
) -> PrivateKey:
    """Random key with a ``bits``-bit prime p = 3 mod 4 and a non-singular curve.

    Fractal parameters left as ``None`` are drawn from the same generator, so
    an explicit ``seed`` makes the whole key reproducible.
    """
    rng = random.Random(seed) if seed is not None else random.SystemRandom()
    if d < 1:
        raise ParameterError("d must be positive")
    # smallest bits-bit prime is above 2**(bits-1); require room for any code point there
    if bits < 3 or d * (BASE + 1) > 2 ** (bits - 1):
        need = (d * (BASE + 1)).bit_length() + 1
        raise ParameterError(
            f"{bits}-bit primes are too small for d = {d}: every code point must "
            f"satisfy d*(m+1) <= p, which needs at least {need} bits"
        )
    p = random_prime_3mod4(bits, rng)
    while True:
        a, b = rng.randrange(p), rng.randrange(p)
        if (4 * a**3 + 27 * b**2) % p:
            break
    return PrivateKey(
        p=p,
        a=a,
        b=b,
        d=d,
        size=size if size is not None else rng.randint(1, 1000),
        iterations=iterations if iterations is not None else rng.randint(16, 64),
        angle_deg=angle_deg if angle_deg is not None else rng.randrange(360),
        precision=precision,
        mode=mode,
    )
