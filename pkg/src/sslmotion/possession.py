"""Which team is likely to win a free ball."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field, replace
from typing import Optional, Sequence

import numpy as np

from .ball import BallState
from .pursuit import PursuitConfig, _Trajectory, predict_pursuit
from .robot import RobotKinematics, RobotState, approach_speeds, travel_time_1d_array


class IllPosedQueryError(ValueError):
    """A team has no field players to compare."""


class Verdict(str, enum.Enum):
    OURS = "Ours"
    THEIRS = "Theirs"
    CONTESTED = "Contested"


@dataclass(frozen=True)
class RosterEntry:
    id: int
    state: RobotState
    is_goalie: bool = False


@dataclass(frozen=True)
class TeamSnapshot:
    robots: Sequence[RosterEntry]
    kin: RobotKinematics = field(default_factory=RobotKinematics)

    def __post_init__(self) -> None:
        ids = [r.id for r in self.robots]
        if len(ids) != len(set(ids)):
            raise ValueError("robot ids must be unique within a team")

    def field_players(self) -> list[RosterEntry]:
        return [r for r in self.robots if not r.is_goalie]


@dataclass(frozen=True)
class PossessionReport:
    verdict: Verdict
    our_best: tuple[int, float]
    their_best: tuple[int, float]
    margin: float

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict.value,
            "our_best_id": self.our_best[0],
            "our_best_time_s": self.our_best[1],
            "their_best_id": self.their_best[0],
            "their_best_time_s": self.their_best[1],
            "margin_s": self.margin,
        }


def interception_time(
    robot: RobotState,
    ball: BallState,
    kin: RobotKinematics,
    cfg: PursuitConfig = PursuitConfig(),
) -> float:
    """First sampled ball time at which the robot can already be waiting there.

    The robot must reach the trajectory point and come to rest no later than
    the ball does. Returns ``math.inf`` if that never happens before the ball
    stops or leaves the field.
    """
    traj = _Trajectory.build(ball, cfg)
    pos = np.array(robot.position.as_tuple())
    offsets = traj.points - pos
    dist = np.hypot(offsets[:, 0], offsets[:, 1])
    v_start = approach_speeds(robot, traj.points, kin)
    t_robot = travel_time_1d_array(dist, v_start, 0.0, kin.v_max, kin.a_max)
    ok = t_robot <= traj.times
    if not ok.any():
        return math.inf
    return float(traj.times[int(np.argmax(ok))])


def gain_time(
    robot: RobotState,
    ball: BallState,
    kin: RobotKinematics,
    cfg: PursuitConfig = PursuitConfig(),
) -> float:
    """Shorter of the interception and pursuit estimates."""
    pursuit_cfg = cfg if cfg.kin == kin else replace(cfg, kin=kin)
    return min(interception_time(robot, ball, kin, cfg), predict_pursuit(ball, robot, pursuit_cfg).time)


def _team_best(team: TeamSnapshot, ball: BallState, cfg: PursuitConfig, factor: float) -> tuple[int, float]:
    players = team.field_players()
    if not players:
        raise IllPosedQueryError("team has no non-goalie robots")
    best: Optional[tuple[int, float]] = None
    for entry in players:
        t = gain_time(entry.state, ball, team.kin, cfg) * factor
        if best is None or t < best[1] or (t == best[1] and entry.id < best[0]):
            best = (entry.id, t)
    return best


def predict_possession(
    ours: TeamSnapshot,
    theirs: TeamSnapshot,
    ball: BallState,
    cfg: PursuitConfig = PursuitConfig(),
    opponent_factor: float = 1.0,
    tie_epsilon: float = 0.05,
) -> PossessionReport:
    """Compare each team's fastest field player to the ball.

    Opponent times are scaled by ``opponent_factor`` (values below one make
    the prediction more pessimistic for us). Margins within ``tie_epsilon``
    seconds are reported as contested.
    """
    if not opponent_factor > 0:
        raise ValueError("opponent_factor must be positive")
    our_best = _team_best(ours, ball, cfg, 1.0)
    their_best = _team_best(theirs, ball, cfg, opponent_factor)
    margin = _margin(their_best[1], our_best[1])
    if margin > tie_epsilon:
        verdict = Verdict.OURS
    elif margin < -tie_epsilon:
        verdict = Verdict.THEIRS
    else:
        verdict = Verdict.CONTESTED
    return PossessionReport(verdict, our_best, their_best, margin)


def _margin(theirs: float, ours: float) -> float:
    if math.isinf(theirs) and math.isinf(ours):
        return 0.0
    return theirs - ours
