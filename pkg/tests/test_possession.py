import math
from dataclasses import replace

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import ball, robot
from oracles import closed_form_time
from sslmotion import (
    BallMotionModel,
    IllPosedQueryError,
    PursuitConfig,
    RobotKinematics,
    RosterEntry,
    TeamSnapshot,
    Vec2,
    Verdict,
    gain_time,
    interception_time,
    predict_ball_position,
    predict_possession,
    predict_pursuit,
)

KIN = RobotKinematics()


def team(*robots, goalie=None):
    return TeamSnapshot([RosterEntry(i, r, i == goalie) for i, r in enumerate(robots)])


def brute_interception(r, b, cfg):
    """Scan every trajectory sample until the robot can be waiting there."""
    t_stop = b.velocity.norm() / cfg.ball_model.deceleration
    k = 0
    while k * cfg.dt <= t_stop:
        t = k * cfg.dt
        p = predict_ball_position(b.position, b.velocity, t, cfg.ball_model)
        if not cfg.field.contains(p):
            break
        off = p - r.position
        d = off.norm()
        along = r.velocity.dot(off) / d if d > 0 else r.velocity.norm()
        vs = min(max(0.0, along), cfg.kin.v_max)
        if closed_form_time(d, vs, 0.0, cfg.kin.v_max, cfg.kin.a_max) <= t:
            return t
        k += 1
    return math.inf


def test_interception_robot_waiting_on_path(cfg):
    b = ball(0, 0, 2.0, 0.0)
    r = robot(1.0, 0.0)
    t = interception_time(r, b, KIN, cfg)
    assert t == pytest.approx(brute_interception(r, b, cfg), abs=1e-12)
    # never later than the ball reaching the robot where it stands
    ball_arrival = (2.0 - math.sqrt(4.0 - 2 * 0.5 * 1.0)) / 0.5
    assert t <= ball_arrival + cfg.dt


def test_interception_at_resting_ball(cfg):
    assert interception_time(robot(2, 1), ball(2, 1), KIN, cfg) == 0.0


def test_interception_infeasible(cfg):
    slow_decel = replace(cfg, ball_model=BallMotionModel(0.01))
    assert interception_time(robot(-1, 0), ball(0, 0, 4.0, 0.0), KIN, slow_decel) == math.inf


def test_interception_matches_brute_force_random(cfg):
    rng = np.random.default_rng(11)
    for _ in range(40):
        b = ball(*rng.uniform(-4, 4, 2), *rng.uniform(-3, 3, 2))
        r = robot(*rng.uniform(-4, 4, 2), *rng.uniform(-2, 2, 2))
        assert interception_time(r, b, KIN, cfg) == brute_interception(r, b, cfg)


def test_gain_time_stationary_ball_is_pursuit(cfg):
    b, r = ball(1, 1), robot(-1, 0)
    assert gain_time(r, b, KIN, cfg) == predict_pursuit(b, r, cfg).time


def test_gain_time_head_on(cfg):
    rng = np.random.default_rng(5)
    for _ in range(30):
        # the ball rolls past the robot before stopping (stop distance >= 2.25 m)
        speed = rng.uniform(1.5, 3.0)
        dist = rng.uniform(0.5, 2.0)
        b = ball(-2.0, 0.0, speed, 0.0)
        r = robot(-2.0 + dist, rng.uniform(-0.2, 0.2))
        icpt = interception_time(r, b, KIN, cfg)
        assert icpt <= predict_pursuit(b, r, cfg).time
        assert gain_time(r, b, KIN, cfg) == icpt


def test_gain_time_finite_when_pursuit_infinite(cfg):
    b, r = ball(0, 0, 4.0, 0.0), robot(3.0, 0.0)
    assert predict_pursuit(b, r, cfg).time == math.inf
    g = gain_time(r, b, KIN, cfg)
    assert math.isfinite(g) and g == interception_time(r, b, KIN, cfg)


def test_possession_dominance(cfg):
    rep = predict_possession(team(robot(0.5, 0)), team(robot(-4, 0)), ball(0, 0), cfg)
    assert rep.verdict is Verdict.OURS
    assert rep.margin > 0.05


def test_possession_mirrored_is_contested(cfg):
    ours = team(robot(-1.0, 0.5), robot(-3, -2))
    theirs = team(robot(1.0, -0.5), robot(3, 2))
    rep = predict_possession(ours, theirs, ball(0, 0), cfg)
    assert rep.verdict is Verdict.CONTESTED
    assert rep.margin == pytest.approx(0.0, abs=1e-12)


def test_goalies_ignored(cfg):
    ours = team(robot(0.01, 0), robot(0.5, 0), goalie=0)
    theirs = team(robot(0, 0.01), robot(-4, 0), goalie=0)
    rep = predict_possession(ours, theirs, ball(0, 0), cfg)
    assert rep.verdict is Verdict.OURS
    assert rep.our_best[0] == 1 and rep.their_best[0] == 1


def test_no_field_players(cfg):
    with pytest.raises(IllPosedQueryError):
        predict_possession(team(robot(0, 0), goalie=0), team(robot(1, 1)), ball(0, 0), cfg)
    with pytest.raises(IllPosedQueryError):
        predict_possession(team(robot(0, 0)), TeamSnapshot([]), ball(0, 0), cfg)


def test_duplicate_ids_rejected():
    with pytest.raises(ValueError):
        TeamSnapshot([RosterEntry(1, robot(0, 0)), RosterEntry(1, robot(1, 0))])


def test_opponent_factor_is_pessimism(cfg):
    ours, theirs = team(robot(-1, 0)), team(robot(1.2, 0))
    plain = predict_possession(ours, theirs, ball(0, 0), cfg)
    assert plain.verdict is Verdict.OURS
    scared = predict_possession(ours, theirs, ball(0, 0), cfg, opponent_factor=0.5)
    assert scared.verdict is Verdict.THEIRS


def test_report_json_fields(cfg):
    rep = predict_possession(team(robot(0.5, 0)), team(robot(-4, 0)), ball(0, 0), cfg)
    assert list(rep.to_dict()) == ["verdict", "our_best_id", "our_best_time_s", "their_best_id", "their_best_time_s", "margin_s"]


xy = st.tuples(st.floats(-4, 4), st.floats(-4, 4))


@settings(max_examples=40, deadline=None)
@given(st.lists(xy, min_size=1, max_size=3), st.lists(xy, min_size=1, max_size=3), xy, xy)
def test_adding_robot_never_hurts(ours_xy, extra_xy, bp, bv):
    cfg = PursuitConfig()
    b = ball(*bp, *bv)
    base = team(*(robot(*p) for p in ours_xy))
    bigger = team(*(robot(*p) for p in ours_xy + extra_xy))
    other = team(robot(5, 4))
    assert predict_possession(bigger, other, b, cfg).our_best[1] <= predict_possession(base, other, b, cfg).our_best[1]


def test_time_scaling_invariance():
    """Doubling every speed and quadrupling every acceleration halves every time."""
    cfg = PursuitConfig()
    fast = replace(
        cfg,
        dt=cfg.dt / 2,
        t_thres=cfg.t_thres / 2,
        omega1=cfg.omega1 / 2,
        ball_model=BallMotionModel(cfg.ball_model.deceleration * 4),
        kin=RobotKinematics(cfg.kin.v_max * 2, cfg.kin.a_max * 4),
    )
    rng = np.random.default_rng(3)
    for _ in range(20):
        bp, bv = rng.uniform(-3, 3, 2), rng.uniform(-1.5, 1.5, 2)
        ours = [rng.uniform(-4, 4, 2) for _ in range(3)]
        theirs = [rng.uniform(-4, 4, 2) for _ in range(3)]
        slow_rep = predict_possession(team(*(robot(*p) for p in ours)), team(*(robot(*p) for p in theirs)), ball(*bp, *bv), cfg)
        fast_rep = predict_possession(
            TeamSnapshot([RosterEntry(i, robot(*p)) for i, p in enumerate(ours)], fast.kin),
            TeamSnapshot([RosterEntry(i, robot(*p)) for i, p in enumerate(theirs)], fast.kin),
            ball(*bp, *(2 * bv)),
            fast,
            tie_epsilon=0.025,
        )
        assert fast_rep.verdict is slow_rep.verdict
        assert fast_rep.our_best[0] == slow_rep.our_best[0]
        assert fast_rep.their_best[0] == slow_rep.their_best[0]
        assert fast_rep.our_best[1] == pytest.approx(slow_rep.our_best[1] / 2, rel=1e-9)
