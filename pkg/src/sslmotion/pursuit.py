"""Search-based ball pursuit prediction and pursuit-time heatmaps."""

from __future__ import annotations

import enum
import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from dataclasses import field as dc_field

import numpy as np

from .ball import BallMotionModel, BallState, sample_trajectory, stop_position, stop_time
from .geometry import FieldBounds, Vec2, angle_between
from .robot import (
    RobotKinematics,
    RobotState,
    approach_speeds,
    predict_robot_arrival_time,
    travel_time_1d_array,
)


class Termination(str, enum.Enum):
    CONVERGED = "Converged"
    BALL_STOPPED = "BallStopped"
    OUT_OF_FIELD = "OutOfField"


@dataclass(frozen=True)
class PursuitConfig:
    """Search step, convergence band and detour-cost weights.

    ``omega1`` is the peak detour cost in seconds (the cost tops out at
    ``2 * omega1``); ``omega2`` is its decay length in meters.
    """

    dt: float = 0.01
    t_thres: float = 0.02
    omega1: float = 2.0
    omega2: float = 5.0
    field: FieldBounds = dc_field(default_factory=FieldBounds)
    ball_model: BallMotionModel = dc_field(default_factory=BallMotionModel)
    kin: RobotKinematics = dc_field(default_factory=RobotKinematics)

    def __post_init__(self) -> None:
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if not self.t_thres > 0:
            raise ValueError("t_thres must be positive")
        if not self.omega1 >= 0:
            raise ValueError("omega1 must be non-negative")
        if not self.omega2 > 0:
            raise ValueError("omega2 must be positive")


@dataclass(frozen=True)
class PursuitResult:
    point: Vec2
    time: float
    termination: Termination


def detour_cost(r: float, theta: float, omega1: float, omega2: float) -> float:
    """Extra time for going around the ball, largest when close and head-on."""
    return omega1 * math.exp(-r / omega2) * (1.0 - math.cos(theta))


def encounter_detour(ball: BallState, robot_position: Vec2, cfg: PursuitConfig) -> float:
    """Detour cost from the initial robot-to-ball geometry.

    The angle is measured between the robot-to-ball offset and the ball
    velocity, so a robot directly behind the rolling ball pays nothing.
    """
    offset = ball.position - robot_position
    r = offset.norm()
    if r == 0.0 or ball.velocity.norm() == 0.0:
        return 0.0
    return detour_cost(r, angle_between(offset, ball.velocity), cfg.omega1, cfg.omega2)


@dataclass(frozen=True)
class _Trajectory:
    """Ball samples at k*dt up to the ball stopping or leaving the field."""

    times: np.ndarray
    points: np.ndarray
    speeds: np.ndarray
    # True when the sampling ended because a sample left the field
    exits_field: bool
    stop_point: Vec2

    @classmethod
    def build(cls, ball: BallState, cfg: PursuitConfig) -> _Trajectory:
        t_stop = stop_time(ball.velocity, cfg.ball_model)
        k_last = int(math.floor(t_stop / cfg.dt))
        while (k_last + 1) * cfg.dt <= t_stop:
            k_last += 1
        while k_last > 0 and k_last * cfg.dt > t_stop:
            k_last -= 1
        times = np.arange(k_last + 1) * cfg.dt
        points, speeds = sample_trajectory(ball, times, cfg.ball_model)
        fb = cfg.field
        inside = (np.abs(points[:, 0]) <= fb.half_length) & (np.abs(points[:, 1]) <= fb.half_width)
        exits = not bool(inside.all())
        if exits:
            n = int(np.argmin(inside))
            # a ball that starts outside keeps its first sample
            n = max(n, 1)
            times, points, speeds = times[:n], points[:n], speeds[:n]
        return cls(times, points, speeds, exits, stop_position(ball.position, ball.velocity, cfg.ball_model))


def _arrival_times(traj: _Trajectory, robot: RobotState, kin: RobotKinematics) -> np.ndarray:
    offsets = traj.points - np.array(robot.position.as_tuple())
    dist = np.hypot(offsets[:, 0], offsets[:, 1])
    v_start = approach_speeds(robot, traj.points, kin)
    v_end = np.minimum(traj.speeds, kin.v_max)
    t = travel_time_1d_array(dist, v_start, v_end, kin.v_max, kin.a_max)
    return np.where(traj.speeds > kin.v_max, np.inf, t)


def _search(traj: _Trajectory, ball: BallState, robot: RobotState, cfg: PursuitConfig) -> PursuitResult:
    detour = encounter_detour(ball, robot.position, cfg)
    totals = _arrival_times(traj, robot, cfg.kin) + detour
    hit = (np.abs(totals - traj.times) <= cfg.t_thres) | (totals <= traj.times)
    if hit.any():
        k = int(np.argmax(hit))
        return PursuitResult(Vec2(*map(float, traj.points[k])), float(totals[k]), Termination.CONVERGED)
    if traj.exits_field:
        return PursuitResult(Vec2(*map(float, traj.points[-1])), float(totals[-1]), Termination.OUT_OF_FIELD)
    stop = traj.stop_point
    t = predict_robot_arrival_time(robot, stop, 0.0, cfg.kin) + detour
    return PursuitResult(stop, t, Termination.BALL_STOPPED)


def predict_pursuit(ball: BallState, robot: RobotState, cfg: PursuitConfig = PursuitConfig()) -> PursuitResult:
    """Earliest trajectory point the robot reaches together with the ball.

    Walks the ball trajectory in steps of ``cfg.dt``. At each sample the
    robot arrival time (matching the ball's speed there) plus the detour
    cost is compared with the ball's own time; the search stops at the
    first sample where the two agree within ``cfg.t_thres`` or the robot is
    already early. If the ball rolls out of the field first, the last
    in-field sample is returned; if it stops first, its resting point is.
    """
    if not (cfg.field.contains(ball.position) and cfg.field.contains(robot.position)):
        warnings.warn("pursuit query with ball or robot outside the field", stacklevel=2)
    return _search(_Trajectory.build(ball, cfg), ball, robot, cfg)


@dataclass(frozen=True)
class HeatmapGrid:
    """Pursuit times on a regular grid; ``values[j, i]`` is the cell at column i, row j."""

    origin: Vec2
    cell_size: float
    nx: int
    ny: int
    values: np.ndarray

    def __post_init__(self) -> None:
        if not self.cell_size > 0:
            raise ValueError("cell_size must be positive")
        if self.values.shape != (self.ny, self.nx):
            raise ValueError("values shape does not match nx, ny")

    def cell_centers(self) -> tuple[np.ndarray, np.ndarray]:
        xs = self.origin.x + self.cell_size * np.arange(self.nx)
        ys = self.origin.y + self.cell_size * np.arange(self.ny)
        return np.meshgrid(xs, ys)


def _heatmap_row(args) -> np.ndarray:
    ball, ys, xs, cfg = args
    traj = _Trajectory.build(ball, cfg)
    return np.array([_search(traj, ball, RobotState(Vec2(float(x), float(ys))), cfg).time for x in xs])


def pursuit_heatmap(
    ball: BallState,
    origin: Vec2,
    cell_size: float,
    nx: int,
    ny: int,
    cfg: PursuitConfig = PursuitConfig(),
    workers: int = 1,
) -> HeatmapGrid:
    """Pursuit time for a resting robot placed at each cell centre.

    Cell (i, j) has its centre at ``origin + cell_size * (i, j)``. Rows are
    independent work items; ``workers > 1`` farms them out to processes and
    gives byte-identical output to the serial path.
    """
    if nx < 1 or ny < 1:
        raise ValueError("grid dimensions must be at least 1")
    xs = origin.x + cell_size * np.arange(nx)
    ys = origin.y + cell_size * np.arange(ny)
    jobs = [(ball, y, xs, cfg) for y in ys]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_heatmap_row, jobs))
    else:
        rows = [_heatmap_row(job) for job in jobs]
    return HeatmapGrid(origin, cell_size, nx, ny, np.vstack(rows))
