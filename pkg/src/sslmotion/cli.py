"""Command-line front end.

Subcommands: pursue, heatmap, possess, dribbler, imu-offset, schedule.
Exit codes: 0 ok, 2 usage or bad input, 3 file I/O error, 4 numerical
divergence. Negative pairs must be attached with ``=``, e.g.
``--ball-vel=-1,0``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import export
from .ball import BallState
from .config import ConfigError, RunConfig, load_config
from .dribbler import DivergenceError, mass_sweep, simulate
from .geometry import Vec2
from .imu import to_imu_frame, yaw_offset
from .possession import IllPosedQueryError, RosterEntry, TeamSnapshot, predict_possession
from .pursuit import predict_pursuit, pursuit_heatmap
from .robot import RobotKinematics, RobotState
from .scheduler import Candidate, DecisionScheduler

EXIT_USAGE = 2
EXIT_IO = 3
EXIT_DIVERGED = 4


class InputError(ValueError):
    """Bad user-supplied data found after argument parsing."""


def _floats(text: str, n: Optional[int] = None) -> list[float]:
    parts = text.split(",")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None
    if n is not None and len(vals) != n:
        raise argparse.ArgumentTypeError(f"expected {n} comma-separated numbers, got {text!r}")
    return vals


def pair(text: str) -> Vec2:
    x, y = _floats(text, 2)
    try:
        return Vec2(x, y)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def int_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(p) for p in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers NX,NY, got {text!r}") from None
    if a < 1 or b < 1:
        raise argparse.ArgumentTypeError("grid dimensions must be at least 1")
    return a, b


def number_list(text: str) -> list[float]:
    return _floats(text)


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _cmd_pursue(args, cfg: RunConfig) -> int:
    ball = BallState(args.ball_pos, args.ball_vel)
    robot = RobotState(args.robot_pos, args.robot_vel)
    _emit(export.pursuit_result_dict(predict_pursuit(ball, robot, cfg.pursuit)))
    return 0


def _cmd_heatmap(args, cfg: RunConfig) -> int:
    nx, ny = args.grid
    if not args.cell > 0:
        raise InputError("--cell must be positive")
    origin = args.origin
    if origin is None:
        origin = Vec2(args.ball_pos.x - 0.5 * (nx - 1) * args.cell, args.ball_pos.y - 0.5 * (ny - 1) * args.cell)
    grid = pursuit_heatmap(BallState(args.ball_pos, args.ball_vel), origin, args.cell, nx, ny, cfg.pursuit, workers=args.workers)
    export.write_heatmap(grid, args.out)
    return 0


def _load_team(path: str, default_kin: RobotKinematics) -> TeamSnapshot:
    """Roster file: ``{"robots": [{"id", "pos", "vel"?, "goalie"?}], "kin"?: {...}}``."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON ({exc})") from exc
    try:
        kin = RobotKinematics(**doc["kin"]) if "kin" in doc else default_kin
        robots = [
            RosterEntry(
                int(r["id"]),
                RobotState(Vec2(*map(float, r["pos"])), Vec2(*map(float, r.get("vel", (0.0, 0.0))))),
                bool(r.get("goalie", False)),
            )
            for r in doc["robots"]
        ]
        return TeamSnapshot(robots, kin)
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: bad roster ({exc})") from exc


def _cmd_possess(args, cfg: RunConfig) -> int:
    ours = _load_team(args.ours, cfg.kin)
    theirs = _load_team(args.theirs, cfg.kin)
    factor = cfg.possession.opponent_factor if args.opponent_factor is None else args.opponent_factor
    report = predict_possession(
        ours, theirs, BallState(args.ball_pos, args.ball_vel), cfg.pursuit, factor, cfg.possession.tie_epsilon
    )
    _emit({k: export.round6(v) if isinstance(v, float) else v for k, v in report.to_dict().items()})
    return 0


def _cmd_dribbler(args, cfg: RunConfig) -> int:
    params = cfg.dribbler
    if args.sweep is not None:
        text = export.sweep_csv(mass_sweep(params, args.sweep, args.band))
    else:
        if args.M is not None:
            params = params.with_mass(args.M)
        text = export.trace_csv(simulate(params))
    Path(args.out).write_text(text, encoding="utf-8")
    return 0


def _cmd_imu(args, cfg: RunConfig) -> int:
    offset = yaw_offset(args.imu_yaw, args.ssl_yaw)
    out = {"delta_theta": export.round6(offset.delta_theta)}
    if args.target is not None:
        out["theta_t_imu"] = export.round6(to_imu_frame(args.target, offset))
    _emit(out)
    return 0


def _cmd_schedule(args, cfg: RunConfig) -> int:
    """Replay ``{"frames": [{"t", "candidate"?: {"id", "payload"}, "direct"?}]}``."""
    with open(args.timeline, encoding="utf-8") as fh:
        try:
            frames = json.load(fh)["frames"]
        except (json.JSONDecodeError, KeyError, TypeError) as exc:
            raise InputError(f"{args.timeline}: bad timeline ({exc})") from exc

    def slow(frame):
        c = frame.get("candidate")
        return None if c is None else Candidate(c["id"], Vec2(*map(float, c["payload"])))

    sched = DecisionScheduler(cfg.scheduler)
    ticks = []
    try:
        for frame in frames:
            t = float(frame["t"])
            out = sched.tick(t, slow, lambda f: f.get("direct"), frame)
            if out is None:
                ticks.append({"t": export.round6(t), "source": "none"})
            elif out is sched.held:
                ticks.append({
                    "t": export.round6(t),
                    "source": "held",
                    "decision_id": out.decision_id,
                    "payload": [export.round6(out.payload.x), export.round6(out.payload.y)],
                })
            else:
                ticks.append({"t": export.round6(t), "source": "direct", "action": out})
    except (KeyError, TypeError) as exc:
        raise InputError(f"{args.timeline}: bad frame ({exc})") from exc
    _emit({"ticks": ticks, "slow_calls": sched.slow_calls})
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sslmotion", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, description=help_text, formatter_class=fmt)
        p.add_argument("--config", help="JSON run configuration (defaults used for missing keys)")
        return p

    p = add("pursue", "predict where and when a robot catches a rolling ball")
    p.add_argument("--ball-pos", type=pair, required=True, help="ball position X,Y [m]")
    p.add_argument("--ball-vel", type=pair, required=True, help="ball velocity X,Y [m/s]")
    p.add_argument("--robot-pos", type=pair, required=True, help="robot position X,Y [m]")
    p.add_argument("--robot-vel", type=pair, default="0,0", help="robot velocity X,Y [m/s]")
    p.set_defaults(func=_cmd_pursue)

    p = add("heatmap", "pursuit time for a resting robot at every grid cell")
    p.add_argument("--ball-pos", type=pair, default="0,0", help="ball position X,Y [m]")
    p.add_argument("--ball-vel", type=pair, required=True, help="ball velocity X,Y [m/s]")
    p.add_argument("--grid", type=int_pair, required=True, help="cell counts NX,NY")
    p.add_argument("--cell", type=float, required=True, help="cell size [m]")
    p.add_argument("--origin", type=pair, default=None, help="centre of cell (0,0); default centres the grid on the ball")
    p.add_argument("--workers", type=int, default=1, help="worker processes (output is identical for any value)")
    p.add_argument("--out", required=True, help="output file, .csv or .pgm (a .pgm.txt mapping file is added)")
    p.set_defaults(func=_cmd_heatmap)

    p = add("possess", "which team reaches a free ball first")
    p.add_argument("--ours", required=True, help="our roster JSON")
    p.add_argument("--theirs", required=True, help="opponent roster JSON")
    p.add_argument("--ball-pos", type=pair, required=True, help="ball position X,Y [m]")
    p.add_argument("--ball-vel", type=pair, default="0,0", help="ball velocity X,Y [m/s]")
    p.add_argument("--opponent-factor", type=float, default=None, help="multiplier on opponent times (config value if omitted)")
    p.set_defaults(func=_cmd_possess)

    p = add("dribbler", "simulate the ball hitting the dribbler")
    p.add_argument("--M", type=float, default=None, help="dribbler mass [kg] for a single trace (config value if omitted)")
    p.add_argument("--sweep", type=number_list, default=None, help="comma-separated masses; writes a summary instead of a trace")
    p.add_argument("--band", type=float, default=0.02, help="settling band as a fraction of the final position")
    p.add_argument("--out", required=True, help="output CSV")
    p.set_defaults(func=_cmd_dribbler)

    p = add("imu-offset", "yaw offset between IMU and vision frames")
    p.add_argument("--imu-yaw", type=float, required=True, help="current yaw reported by the IMU [rad]")
    p.add_argument("--ssl-yaw", type=float, required=True, help="current yaw seen by vision [rad]")
    p.add_argument("--target", type=float, default=None, help="target yaw in the vision frame to convert [rad]")
    p.set_defaults(func=_cmd_imu)

    p = add("schedule", "replay a world timeline through the two-rate decision scheduler")
    p.add_argument("--timeline", required=True, help="timeline JSON")
    p.set_defaults(func=_cmd_schedule)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(args.config)
        return args.func(args, cfg)
    except DivergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DIVERGED
    except (ConfigError, InputError, IllPosedQueryError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
