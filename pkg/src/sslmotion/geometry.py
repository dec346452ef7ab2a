"""2-D vectors, angle wrapping and field bounds."""

from __future__ import annotations

import math
from dataclasses import dataclass


class DegenerateVectorError(ValueError):
    """Raised when a direction is requested from a zero-length vector."""


def _check_finite(*values: float) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"non-finite value: {v!r}")


@dataclass(frozen=True)
class Vec2:
    """Immutable 2-D vector (meters or meters/second)."""

    x: float
    y: float

    def __post_init__(self) -> None:
        _check_finite(self.x, self.y)

    def __add__(self, other: Vec2) -> Vec2:
        return Vec2(self.x + other.x, self.y + other.y)

    def __sub__(self, other: Vec2) -> Vec2:
        return Vec2(self.x - other.x, self.y - other.y)

    def __mul__(self, scalar: float) -> Vec2:
        return Vec2(self.x * scalar, self.y * scalar)

    def __rmul__(self, scalar: float) -> Vec2:
        return self * scalar

    def __neg__(self) -> Vec2:
        return Vec2(-self.x, -self.y)

    def dot(self, other: Vec2) -> float:
        return self.x * other.x + self.y * other.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def unit(self) -> Vec2:
        n = self.norm()
        if n == 0.0:
            raise DegenerateVectorError("zero-length vector has no direction")
        return Vec2(self.x / n, self.y / n)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)

    @staticmethod
    def zero() -> Vec2:
        return Vec2(0.0, 0.0)


@dataclass(frozen=True)
class FieldBounds:
    """Axis-aligned playing area centred on the origin.

    Defaults are the 12 m x 9 m Division A field.
    """

    half_length: float = 6.0
    half_width: float = 4.5

    def __post_init__(self) -> None:
        if not (self.half_length > 0 and self.half_width > 0):
            raise ValueError("field half extents must be positive")

    def contains(self, p: Vec2) -> bool:
        return abs(p.x) <= self.half_length and abs(p.y) <= self.half_width


def normalize_angle(theta: float) -> float:
    """Wrap ``theta`` into (-pi, pi]."""
    _check_finite(theta)
    wrapped = math.remainder(theta, 2.0 * math.pi)
    if wrapped <= -math.pi:
        wrapped += 2.0 * math.pi
    return wrapped


def angle_between(a: Vec2, b: Vec2) -> float:
    """Unsigned angle in [0, pi] between two non-zero vectors."""
    na, nb = a.norm(), b.norm()
    if na == 0.0 or nb == 0.0:
        raise DegenerateVectorError("angle undefined for a zero-length vector")
    # normalise first so tiny or huge vectors do not under/overflow the product
    ua = Vec2(a.x / na, a.y / na)
    ub = Vec2(b.x / nb, b.y / nb)
    return math.acos(min(1.0, max(-1.0, ua.dot(ub))))
