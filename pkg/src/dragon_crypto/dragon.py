"""Heighway dragon: turn sequences, turtle tracing and closed-form endpoints.

Turtle convention: each segment is a forward step of length ``l`` followed by
the turn for that segment. The walk for iteration ``n`` has ``2**n`` segments,
and its endpoint (unit steps, heading +x) is the Gaussian integer (1+i)**n.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import IterationOutOfRange
from .fixedpoint import FixedPoint, sin_cos_deg

MAX_TRACE_ITERATIONS = 26

Point = tuple[FixedPoint, FixedPoint]


class Turn(str, enum.Enum):
    L = "L"
    R = "R"

    def inverted(self) -> Turn:
        return Turn.R if self is Turn.L else Turn.L


@dataclass(frozen=True)
class TurnSequence:
    iteration: int
    turns: list[Turn]

    def __str__(self) -> str:
        return "".join("F" + t.value for t in self.turns)


@dataclass(frozen=True)
class LatticeDisplacement:
    a: int
    b: int


def _check_trace_range(n: int) -> None:
    if not 1 <= n <= MAX_TRACE_ITERATIONS:
        raise IterationOutOfRange(f"iteration {n} outside [1, {MAX_TRACE_ITERATIONS}]")


def turn_sequence(n: int) -> TurnSequence:
    """Folding recursion F_{k+1} = F_k + [L] + reversed(inverted(F_k)), plus the trailing L."""
    _check_trace_range(n)
    folds = [Turn.L]
    for _ in range(n - 1):
        folds = folds + [Turn.L] + [t.inverted() for t in reversed(folds)]
    folds.append(Turn.L)
    return TurnSequence(n, folds)


def nth_turn(k: int) -> Turn:
    """Left-right rule: strip factors of two from k, then L if the odd part is 1 mod 4."""
    if k < 1:
        raise ValueError("k must be a positive integer")
    odd = k // (k & -k)
    return Turn.L if odd % 4 == 1 else Turn.R


@lru_cache(maxsize=256)
def lattice_displacement(n: int) -> LatticeDisplacement:
    if n < 0:
        raise ValueError("n must be non-negative")
    a, b = 1, 0
    for _ in range(n):
        a, b = a - b, a + b
    return LatticeDisplacement(a, b)


def _unit_vectors(l: int, theta_deg: int, q: int) -> tuple[int, int, int, int]:
    """Mantissas of l*u and l*v where u is the heading and v is u turned left."""
    sin, cos = sin_cos_deg(theta_deg, q)
    return l * cos.mantissa, l * sin.mantissa, -l * sin.mantissa, l * cos.mantissa


def trace_polyline(start: Point, l: int, theta_deg: int, n: int) -> list[Point]:
    """All ``2**n + 1`` vertices of the walk, in the precision of ``start``."""
    _check_trace_range(n)
    if l < 1:
        raise ValueError("step size must be positive")
    q = start[0].q
    ux, uy, vx, vy = _unit_vectors(l, theta_deg, q)
    # headings in left-turn order: u, v, -u, -v
    steps = ((ux, uy), (vx, vy), (-ux, -uy), (-vx, -vy))

    x, y = start[0].mantissa, start[1].mantissa
    vertices = [(x, y)]
    heading = 0
    for k in range(1, 2**n + 1):
        dx, dy = steps[heading]
        x += dx
        y += dy
        vertices.append((x, y))
        heading = (heading + (1 if nth_turn(k) is Turn.L else -1)) % 4
    return [(FixedPoint(vx_, q), FixedPoint(vy_, q)) for vx_, vy_ in vertices]


@lru_cache(maxsize=4096)
def displacement(l: int, theta_deg: int, n: int, q: int) -> Point:
    """Fixed-point offset from start to end: l * (a*u + b*v)."""
    if l < 1:
        raise ValueError("step size must be positive")
    lat = lattice_displacement(n)
    ux, uy, vx, vy = _unit_vectors(l, theta_deg, q)
    return (
        FixedPoint(lat.a * ux + lat.b * vx, q),
        FixedPoint(lat.a * uy + lat.b * vy, q),
    )


def endpoint(start: Point, l: int, theta_deg: int, n: int, q: int) -> Point:
    dx, dy = displacement(l, theta_deg, n, q)
    return start[0] + dx, start[1] + dy


def reverse_start(end: Point, l: int, theta_deg: int, n: int, q: int) -> Point:
    dx, dy = displacement(l, theta_deg, n, q)
    return end[0] - dx, end[1] - dy
