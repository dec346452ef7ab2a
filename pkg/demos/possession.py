# %% [markdown]
# # Who gets to the ball first?
#
# Each robot's gain time is the quicker of two options: stand in the ball's
# path, or chase it down. The team minimum decides possession.

# %%
from sslmotion import (
    BallState,
    PursuitConfig,
    RobotState,
    RosterEntry,
    TeamSnapshot,
    Vec2,
    predict_possession,
)

cfg = PursuitConfig()
ball = BallState(Vec2(0.0, 0.0), Vec2(2.0, 0.5))

ours = TeamSnapshot([
    RosterEntry(0, RobotState(Vec2(-5.5, 0.0)), is_goalie=True),
    RosterEntry(3, RobotState(Vec2(1.5, 1.5))),
    RosterEntry(5, RobotState(Vec2(-1.0, -2.0), Vec2(1.0, 0.0))),
])
theirs = TeamSnapshot([
    RosterEntry(1, RobotState(Vec2(3.0, -1.0))),
    RosterEntry(2, RobotState(Vec2(2.5, 3.0))),
])

report = predict_possession(ours, theirs, ball, cfg)
for k, v in report.to_dict().items():
    print(f"{k:>18}: {v}")

# %% [markdown]
# A cautious team can shrink the opponents' times before comparing,
# as if they were quicker than our model says.

# %%
for factor in (1.0, 0.8, 0.6):
    r = predict_possession(ours, theirs, ball, cfg, opponent_factor=factor)
    print(f"opponent factor {factor}: {r.verdict.value:>9}  margin {r.margin:+.3f} s")
