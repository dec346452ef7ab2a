"""Straight-line rolling ball under constant deceleration."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .geometry import Vec2


@dataclass(frozen=True)
class BallState:
    position: Vec2
    velocity: Vec2


@dataclass(frozen=True)
class BallMotionModel:
    """Rolling model with a single constant deceleration magnitude (m/s^2)."""

    deceleration: float = 0.5

    def __post_init__(self) -> None:
        if not self.deceleration > 0:
            raise ValueError("deceleration must be positive")


def _check_time(t: float) -> None:
    if not t >= 0:
        raise ValueError(f"time must be non-negative, got {t!r}")


def stop_time(v0: Vec2, model: BallMotionModel) -> float:
    return v0.norm() / model.deceleration


def travelled_distance(speed: float, t, model: BallMotionModel):
    """Path length after ``t`` seconds. Accepts scalar or array ``t``."""
    a = model.deceleration
    t_stop = speed / a
    tc = np.minimum(t, t_stop)
    return speed * tc - 0.5 * a * tc * tc


def predict_ball_velocity(v0: Vec2, t: float, model: BallMotionModel) -> Vec2:
    _check_time(t)
    speed = v0.norm()
    if speed == 0.0:
        return Vec2.zero()
    remaining = max(0.0, speed - model.deceleration * t)
    if remaining == 0.0:
        return Vec2.zero()
    scale = remaining / speed
    return Vec2(v0.x * scale, v0.y * scale)


def predict_ball_position(p0: Vec2, v0: Vec2, t: float, model: BallMotionModel) -> Vec2:
    _check_time(t)
    speed = v0.norm()
    if speed == 0.0:
        return p0
    s = float(travelled_distance(speed, t, model))
    return Vec2(p0.x + v0.x / speed * s, p0.y + v0.y / speed * s)


def stop_position(p0: Vec2, v0: Vec2, model: BallMotionModel) -> Vec2:
    return predict_ball_position(p0, v0, stop_time(v0, model), model)


def sample_trajectory(ball: BallState, times: np.ndarray, model: BallMotionModel):
    """Positions (n, 2) and speeds (n,) of the ball at each of ``times``."""
    times = np.asarray(times, dtype=float)
    speed = ball.velocity.norm()
    p0 = np.array(ball.position.as_tuple())
    if speed == 0.0:
        return np.broadcast_to(p0, (times.size, 2)).copy(), np.zeros(times.size)
    direction = np.array(ball.velocity.as_tuple()) / speed
    s = travelled_distance(speed, times, model)
    speeds = np.maximum(0.0, speed - model.deceleration * times)
    return p0 + s[:, None] * direction, speeds
