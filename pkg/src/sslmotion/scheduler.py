"""Two-rate decision loop: slow candidate selection with holding, fast direct actions.

Expensive candidate scoring (pass points, dribble points) runs at a low
rate and its winner is held for a fixed time so the robot does not keep
switching targets. A cheap check runs on every tick; when it finds an
immediately feasible action (a direct pass or shot) that action is
returned for that tick only, and the held decision is left untouched.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Hashable, Optional, Union

from .geometry import Vec2


class MonotonicClockError(ValueError):
    """``now`` went backwards between two ticks."""


@dataclass(frozen=True)
class SchedulerConfig:
    slow_period: float = 0.5
    hold_duration: float = 5.0
    fast_period: float = 1.0 / 74.0

    def __post_init__(self) -> None:
        if not (self.slow_period > 0 and self.hold_duration > 0 and self.fast_period > 0):
            raise ValueError("scheduler periods must be positive")
        if self.fast_period > self.slow_period:
            raise ValueError("fast_period must not exceed slow_period")


@dataclass(frozen=True)
class Candidate:
    """What the slow evaluation proposes."""

    decision_id: Hashable
    payload: Vec2


@dataclass(frozen=True)
class HeldDecision:
    decision_id: Hashable
    payload: Vec2
    chosen_at: float
    hold_duration: float

    def __post_init__(self) -> None:
        if not self.hold_duration > 0:
            raise ValueError("hold_duration must be positive")

    def active(self, t: float) -> bool:
        return self.chosen_at <= t < self.chosen_at + self.hold_duration


SlowEval = Callable[[Any], Optional[Candidate]]
FastCheck = Callable[[Any], Any]


class DecisionScheduler:
    """Holds slow decisions for ``hold_duration`` and lets fast actions preempt output.

    >>> s = DecisionScheduler()
    >>> s.tick(0.0, lambda w: Candidate("A", Vec2(1, 0)), lambda w: None, None).decision_id
    'A'
    >>> s.tick(3.0, lambda w: Candidate("B", Vec2(2, 0)), lambda w: None, None).decision_id
    'A'
    """

    def __init__(self, config: SchedulerConfig = SchedulerConfig()):
        self.config = config
        self.held: Optional[HeldDecision] = None
        self.slow_calls = 0
        self._last_slow: Optional[float] = None
        self._last_now: Optional[float] = None

    def reset(self) -> None:
        self.held = None
        self._last_slow = None

    def tick(self, now: float, slow_eval: SlowEval, fast_check: FastCheck, world: Any) -> Union[HeldDecision, Any, None]:
        """Advance to ``now`` and return the direct action if any, else the held decision."""
        if self._last_now is not None and now < self._last_now:
            raise MonotonicClockError(f"time went backwards: {now} < {self._last_now}")
        self._last_now = now

        if self.held is not None and not self.held.active(now):
            self.held = None
        if self.held is None:
            due = self._last_slow is None or now - self._last_slow >= self.config.slow_period
            if due:
                self._last_slow = now
                self.slow_calls += 1
                cand = slow_eval(world)
                if cand is not None:
                    self.held = HeldDecision(cand.decision_id, cand.payload, now, self.config.hold_duration)

        action = fast_check(world)
        if action is not None:
            return action
        return self.held
