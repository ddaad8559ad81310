"""Text formats: the X/Y padded ciphertext string and the plain-text key file."""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property

from .errors import InvalidKeyParameters, MalformedCiphertext, MalformedKey
from .fixedpoint import DEFAULT_PRECISION, MIN_KEY_PRECISION, FixedPoint
from .koblitz import BASE, DEFAULT_SPREAD, CurveParams, prime_failures

KEY_VERSION = 1
MAX_ITERATIONS = 64
MODES = ("per-char", "block")

Point = tuple[FixedPoint, FixedPoint]


@dataclass(frozen=True)
class Ciphertext:
    points: list[Point] = field(default_factory=list)


def render(ct: Ciphertext) -> str:
    xs = "".join(str(x) + "X" for x, _ in ct.points)
    ys = "".join(str(y) + "Y" for _, y in ct.points)
    return f"X{xs}Y{ys}"


_COORD = re.compile(r"-?[0-9]+(?:\.([0-9]+))?")


def _split_side(side: str, delim: str) -> list[str]:
    if len(side) < 1 or side[0] != delim or side[-1] != delim:
        raise MalformedCiphertext(f"{delim}-side must start and end with {delim!r}")
    if side == delim:
        return []
    items = side[1:-1].split(delim)
    if any(item == "" for item in items):
        raise MalformedCiphertext(f"empty coordinate between {delim!r} delimiters")
    return items


def parse(s: str, precision: int | None = None) -> Ciphertext:
    """Parse the padded string back into endpoint pairs.

    With ``precision`` unset it is taken from the first coordinate, and every
    other coordinate must match it.
    """
    if s.count("XY") != 1:
        raise MalformedCiphertext("ciphertext must contain exactly one 'XY' mark")
    cut = s.index("XY") + 1
    xs = _split_side(s[:cut], "X")
    ys = _split_side(s[cut:], "Y")
    if len(xs) != len(ys):
        raise MalformedCiphertext(f"{len(xs)} x-coordinates but {len(ys)} y-coordinates")
    if not xs:
        return Ciphertext([])

    if precision is None:
        m = _COORD.fullmatch(xs[0])
        if m is None:
            raise MalformedCiphertext(f"bad coordinate {xs[0]!r}")
        precision = len(m.group(1) or "")
    try:
        points = [
            (FixedPoint.parse(x, precision), FixedPoint.parse(y, precision))
            for x, y in zip(xs, ys)
        ]
    except ValueError as exc:
        raise MalformedCiphertext(str(exc)) from None
    return Ciphertext(points)


@dataclass(frozen=True)
class PrivateKey:
    """Every secret the cipher needs.

    Curve (p, a, b) and Koblitz spread d place characters on the curve;
    size, iterations and angle_deg drive the dragon walk; precision is the
    number of decimal fractional digits used for coordinates.
    """

    p: int
    a: int
    b: int
    d: int = DEFAULT_SPREAD
    size: int = 1
    iterations: int = 16
    angle_deg: int = 0
    precision: int = DEFAULT_PRECISION
    mode: str = "per-char"

    def __post_init__(self):
        if isinstance(self.p, int) and self.p > 0:
            object.__setattr__(self, "a", self.a % self.p)
            object.__setattr__(self, "b", self.b % self.p)
        failures = self.failures()
        if failures:
            raise InvalidKeyParameters(failures)

    def failures(self) -> list[str]:
        out = prime_failures(self.p)
        if not out and (4 * self.a**3 + 27 * self.b**2) % self.p == 0:
            out.append("curve is singular (4a^3 + 27b^2 = 0 mod p)")
        if self.d < 1:
            out.append(f"d = {self.d} must be positive")
        if self.size < 1:
            out.append(f"size = {self.size} must be positive")
        if not 1 <= self.iterations <= MAX_ITERATIONS:
            out.append(f"iterations = {self.iterations} outside [1, {MAX_ITERATIONS}]")
        if not 0 <= self.angle_deg < 360:
            out.append(f"angle_deg = {self.angle_deg} outside [0, 360)")
        if self.precision < MIN_KEY_PRECISION:
            out.append(f"precision = {self.precision} below minimum {MIN_KEY_PRECISION}")
        if self.mode not in MODES:
            out.append(f"mode {self.mode!r} not one of {', '.join(MODES)}")
        if self.mode == "per-char" and self.d * (BASE + 1) > self.p:
            out.append("per-char mode needs d*(2^16+1) <= p so every code point encodes")
        return out

    @cached_property
    def curve(self) -> CurveParams:
        return CurveParams(self.p, self.a, self.b)


_KEY_FIELDS = ("version", "p", "a", "b", "d", "size", "iterations", "angle_deg", "precision", "mode")


def write_key(key: PrivateKey) -> str:
    values = {"version": KEY_VERSION, **{f: getattr(key, f) for f in _KEY_FIELDS[1:]}}
    return "".join(f"{name} = {values[name]}\n" for name in _KEY_FIELDS)


_INT = re.compile(r"-?[0-9]+")


def read_key(text: str) -> PrivateKey:
    values = {}
    for lineno, line in enumerate(text.split("\n"), 1):
        if not line:
            continue
        name, sep, value = line.partition(" = ")
        if not sep or name not in _KEY_FIELDS:
            raise MalformedKey(f"line {lineno}: expected 'name = value' with a known name")
        if name in values:
            raise MalformedKey(f"line {lineno}: duplicate field {name!r}")
        values[name] = value
    missing = [f for f in _KEY_FIELDS if f not in values]
    if missing:
        raise MalformedKey(f"missing fields: {', '.join(missing)}")
    if values["version"] != str(KEY_VERSION):
        raise MalformedKey(f"unsupported key version {values['version']!r}")

    ints = {}
    for name in _KEY_FIELDS[1:-1]:
        if not _INT.fullmatch(values[name]):
            raise MalformedKey(f"field {name!r} is not a decimal integer")
        ints[name] = int(values[name])
    return PrivateKey(mode=values["mode"], **ints)
