"""Motion prediction and impact simulation for small-size robot soccer."""

from .ball import (
    BallMotionModel,
    BallState,
    predict_ball_position,
    predict_ball_velocity,
    stop_position,
    stop_time,
)
from .dribbler import (
    DivergenceError,
    DribblerParams,
    DribblerTrace,
    mass_sweep,
    mechanical_energy,
    peak_displacement,
    separation_count,
    settling_time,
    simulate,
)
from .geometry import DegenerateVectorError, FieldBounds, Vec2, angle_between, normalize_angle
from .imu import YawOffset, to_imu_frame, to_ssl_frame, yaw_offset
from .possession import (
    IllPosedQueryError,
    PossessionReport,
    RosterEntry,
    TeamSnapshot,
    Verdict,
    gain_time,
    interception_time,
    predict_possession,
)
from .pursuit import (
    HeatmapGrid,
    PursuitConfig,
    PursuitResult,
    Termination,
    detour_cost,
    predict_pursuit,
    pursuit_heatmap,
)
from .robot import RobotKinematics, RobotState, predict_robot_arrival_time, travel_time_1d
from .scheduler import Candidate, DecisionScheduler, HeldDecision, MonotonicClockError, SchedulerConfig

__version__ = "0.1.0"
