"""Yaw alignment between the IMU frame and the vision frame.

The IMU is mounted flat, so the two frames differ only by a rotation about
the vertical axis. Each vision update gives a fresh offset; targets planned
in the vision frame are shifted by it before being sent to the robot.
"""

from __future__ import annotations

from dataclasses import dataclass

from .geometry import normalize_angle


@dataclass(frozen=True)
class YawOffset:
    delta_theta: float

    def __post_init__(self) -> None:
        if normalize_angle(self.delta_theta) != self.delta_theta:
            raise ValueError("delta_theta must lie in (-pi, pi]")


def yaw_offset(theta_c_imu: float, theta_c_ssl: float) -> YawOffset:
    """Offset from a simultaneous IMU and vision reading of the current yaw."""
    return YawOffset(normalize_angle(theta_c_imu - theta_c_ssl))


def to_imu_frame(theta_t_ssl: float, offset: YawOffset) -> float:
    return normalize_angle(theta_t_ssl + offset.delta_theta)


def to_ssl_frame(theta_imu: float, offset: YawOffset) -> float:
    return normalize_angle(theta_imu - offset.delta_theta)
