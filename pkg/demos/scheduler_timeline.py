# %% [markdown]
# # Holding a decision
#
# Strategy runs slowly and commits to a candidate for five seconds, so the
# team does not flip between two nearly equal plans. A fast check runs every
# frame and can fire a direct action (a shot, say) without dropping the plan.

# %%
from sslmotion import Candidate, DecisionScheduler, HeldDecision

sched = DecisionScheduler()


def slow_eval(t):
    # plan B becomes better at t = 3 s, but A is still being held
    return Candidate("B" if t >= 3.0 else "A", None)


def fast_check(t):
    return "shoot" if 2.0 <= t < 2.02 else None


last = None
for k in range(74 * 8):
    t = k / 74
    out = sched.tick(t, slow_eval, fast_check, t)
    label = f"held {out.decision_id}" if isinstance(out, HeldDecision) else f"direct {out}"
    if label != last:
        print(f"t = {t:6.3f} s  {label}")
        last = label
print(f"slow evaluations: {sched.slow_calls}")
