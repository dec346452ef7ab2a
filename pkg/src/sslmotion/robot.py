"""Trapezoidal-profile arrival times for a robot chasing a point."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .geometry import Vec2, normalize_angle


@dataclass(frozen=True)
class RobotState:
    position: Vec2
    velocity: Vec2 = Vec2(0.0, 0.0)
    yaw: Optional[float] = None

    def __post_init__(self) -> None:
        if self.yaw is not None and normalize_angle(self.yaw) != self.yaw:
            raise ValueError("yaw must lie in (-pi, pi]")


@dataclass(frozen=True)
class RobotKinematics:
    v_max: float = 3.0
    a_max: float = 3.0

    def __post_init__(self) -> None:
        if not (self.v_max > 0 and self.a_max > 0):
            raise ValueError("v_max and a_max must be positive")


def travel_time_1d_array(distance, v_start, v_end, v_max: float, a_max: float):
    """Vectorised :func:`travel_time_1d` without precondition checks."""
    d = np.asarray(distance, dtype=float)
    vs = np.asarray(v_start, dtype=float)
    ve = np.asarray(v_end, dtype=float)
    floor = np.abs(ve - vs) / a_max
    d_min = np.abs(ve * ve - vs * vs) / (2.0 * a_max)
    peak = np.sqrt(a_max * d + 0.5 * (vs * vs + ve * ve))
    triangular = (2.0 * peak - vs - ve) / a_max
    cruise = d - (2.0 * v_max * v_max - vs * vs - ve * ve) / (2.0 * a_max)
    trapezoid = (2.0 * v_max - vs - ve) / a_max + cruise / v_max
    t = np.where(peak <= v_max, triangular, trapezoid)
    return np.where(d < d_min, floor, t)


def travel_time_1d(distance: float, v_start: float, v_end: float, kin: RobotKinematics) -> float:
    """Minimum time to cover ``distance`` starting at ``v_start`` and ending at ``v_end``.

    Speed stays within [0, v_max] and |acceleration| within a_max. When the
    distance is too short to change speed from ``v_start`` to ``v_end``, the
    kinematic floor ``|v_end - v_start| / a_max`` is returned instead.
    """
    if not distance >= 0:
        raise ValueError(f"distance must be non-negative, got {distance!r}")
    for name, v in (("v_start", v_start), ("v_end", v_end)):
        if not 0 <= v <= kin.v_max:
            raise ValueError(f"{name}={v!r} outside [0, v_max={kin.v_max}]")
    return float(travel_time_1d_array(distance, v_start, v_end, kin.v_max, kin.a_max))


def approach_speed(robot: RobotState, target: Vec2, kin: RobotKinematics) -> float:
    offset = target - robot.position
    dist = offset.norm()
    if dist == 0.0:
        speed = robot.velocity.norm()
    else:
        speed = robot.velocity.dot(offset) / dist
    return min(max(0.0, speed), kin.v_max)


def approach_speeds(robot: RobotState, targets: np.ndarray, kin: RobotKinematics) -> np.ndarray:
    """:func:`approach_speed` for each row of an (n, 2) array of targets."""
    offsets = np.asarray(targets, dtype=float) - np.array(robot.position.as_tuple())
    dist = np.hypot(offsets[:, 0], offsets[:, 1])
    vel = np.array(robot.velocity.as_tuple())
    safe = np.where(dist > 0, dist, 1.0)
    along = np.where(dist > 0, (offsets @ vel) / safe, robot.velocity.norm())
    return np.clip(along, 0.0, kin.v_max)


def predict_robot_arrival_time(
    robot: RobotState, target: Vec2, target_speed: float, kin: RobotKinematics
) -> float:
    """Time for ``robot`` to reach ``target`` moving at ``target_speed``.

    Returns ``math.inf`` when ``target_speed`` exceeds ``kin.v_max``.
    """
    if not target_speed >= 0:
        raise ValueError("target_speed must be non-negative")
    if target_speed > kin.v_max:
        return math.inf
    dist = (target - robot.position).norm()
    return travel_time_1d(dist, approach_speed(robot, target, kin), target_speed, kin)
