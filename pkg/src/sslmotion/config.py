"""JSON run configuration shared by the command-line tools.

Every section is optional and every key inside a section is optional;
missing values fall back to the library defaults. Unknown sections or
keys raise ``ConfigError``. Layout::

    {
      "pursuit":    {"dt": 0.01, "t_thres": 0.02, "omega1": 2.0, "omega2": 5.0},
      "field":      {"half_length": 6.0, "half_width": 4.5},
      "ball":       {"deceleration": 0.5},
      "robot":      {"v_max": 3.0, "a_max": 3.0},
      "dribbler":   {"M": 0.15, "m": 0.046, "k1": 4000, "k2": 100, "c1": 5, "c2": 20,
                     "v0": 2.0, "f": 0.13524, "dt": 1e-4, "t_end": 1.0},
      "scheduler":  {"slow_period": 0.5, "hold_duration": 5.0, "fast_period": 0.0135135},
      "possession": {"opponent_factor": 1.0, "tie_epsilon": 0.05}
    }
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Optional, Union

from .ball import BallMotionModel
from .dribbler import DribblerParams
from .geometry import FieldBounds
from .pursuit import PursuitConfig
from .robot import RobotKinematics
from .scheduler import SchedulerConfig


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class PossessionSettings:
    opponent_factor: float = 1.0
    tie_epsilon: float = 0.05

    def __post_init__(self) -> None:
        if not self.opponent_factor > 0:
            raise ValueError("opponent_factor must be positive")
        if not self.tie_epsilon >= 0:
            raise ValueError("tie_epsilon must be non-negative")


@dataclass(frozen=True)
class RunConfig:
    pursuit: PursuitConfig = field(default_factory=PursuitConfig)
    dribbler: DribblerParams = field(default_factory=DribblerParams)
    scheduler: SchedulerConfig = field(default_factory=SchedulerConfig)
    possession: PossessionSettings = field(default_factory=PossessionSettings)

    @property
    def kin(self) -> RobotKinematics:
        return self.pursuit.kin


_FLAT_SECTIONS = {
    "field": FieldBounds,
    "ball": BallMotionModel,
    "robot": RobotKinematics,
    "dribbler": DribblerParams,
    "scheduler": SchedulerConfig,
    "possession": PossessionSettings,
}
_PURSUIT_KEYS = ("dt", "t_thres", "omega1", "omega2")


def _numbers(section: str, values: Any, names) -> dict[str, float]:
    if not isinstance(values, dict):
        raise ConfigError(f"section {section!r} must be an object")
    unknown = sorted(set(values) - set(names))
    if unknown:
        raise ConfigError(f"unknown key(s) in {section!r}: {', '.join(unknown)}")
    for k, v in values.items():
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise ConfigError(f"{section}.{k} must be a number")
    return {k: float(v) for k, v in values.items()}


def _build(cls, section: str, values: Any):
    kwargs = _numbers(section, values, [f.name for f in dataclasses.fields(cls)])
    try:
        return cls(**kwargs)
    except ValueError as exc:
        raise ConfigError(f"{section}: {exc}") from exc


def parse_config(doc: dict) -> RunConfig:
    if not isinstance(doc, dict):
        raise ConfigError("configuration must be a JSON object")
    unknown = sorted(set(doc) - set(_FLAT_SECTIONS) - {"pursuit"})
    if unknown:
        raise ConfigError(f"unknown section(s): {', '.join(unknown)}")
    parts = {name: _build(cls, name, doc[name]) for name, cls in _FLAT_SECTIONS.items() if name in doc}
    search = _numbers("pursuit", doc.get("pursuit", {}), _PURSUIT_KEYS)
    try:
        pursuit = PursuitConfig(
            **search,
            field=parts.get("field", FieldBounds()),
            ball_model=parts.get("ball", BallMotionModel()),
            kin=parts.get("robot", RobotKinematics()),
        )
    except ValueError as exc:
        raise ConfigError(f"pursuit: {exc}") from exc
    return RunConfig(
        pursuit=pursuit,
        dribbler=parts.get("dribbler", DribblerParams()),
        scheduler=parts.get("scheduler", SchedulerConfig()),
        possession=parts.get("possession", PossessionSettings()),
    )


def load_config(path: Optional[Union[str, Path]]) -> RunConfig:
    """Read a config file; ``None`` gives the defaults."""
    if path is None:
        return RunConfig()
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: invalid JSON ({exc})") from exc
    return parse_config(doc)
