"""1-D ball/dribbler impact model: two masses, contact spring-damper, RK4."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np


class DivergenceError(ArithmeticError):
    """Integration produced a non-finite state."""

    def __init__(self, step: int, time: float):
        super().__init__(f"non-finite state at step {step} (t={time:.6g} s)")
        self.step = step
        self.time = time


@dataclass(frozen=True)
class DribblerParams:
    """Ball mass ``m`` meets dribbler mass ``M`` through spring ``k1``/damper ``c1``.

    The dribbler hangs on ``k2``/``c2``. ``f`` is a constant force on the
    ball; ``v0`` its initial speed toward the dribbler. Defaults are the
    middle run of the mass sweep.
    """

    M: float = 0.15
    m: float = 0.046
    k1: float = 4000.0
    k2: float = 100.0
    c1: float = 5.0
    c2: float = 20.0
    v0: float = 2.0
    f: float = 0.13524
    dt: float = 1e-4
    t_end: float = 1.0

    def __post_init__(self) -> None:
        for name in ("M", "m", "k1", "k2"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        for name in ("c1", "c2"):
            if not getattr(self, name) >= 0:
                raise ValueError(f"{name} must be non-negative")
        if not self.dt > 0:
            raise ValueError("dt must be positive")
        if not self.t_end > self.dt:
            raise ValueError("t_end must exceed dt")
        for name in ("v0", "f"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")

    def with_mass(self, M: float) -> DribblerParams:
        return replace(self, M=M)


# dribbler masses compared in the original study (kg)
MASS_SWEEP = (0.05, 0.15, 0.25)


@dataclass(frozen=True)
class DribblerTrace:
    times: np.ndarray
    x1: np.ndarray
    x2: np.ndarray
    v1: np.ndarray
    v2: np.ndarray
    in_contact: np.ndarray

    def __len__(self) -> int:
        return len(self.times)


def _accelerations(p: DribblerParams, contact: bool, x1, x2, v1, v2):
    spring2 = -p.k2 * x2 - p.c2 * v2
    if contact:
        coupling = p.k1 * (x1 - x2) + p.c1 * (v1 - v2)
        return (p.f - coupling) / p.m, (spring2 + coupling) / p.M
    return p.f / p.m, spring2 / p.M


def _rk4(p: DribblerParams, contact: bool, s, h: float):
    x1, x2, v1, v2 = s
    acc = _accelerations
    a1, b1 = acc(p, contact, x1, x2, v1, v2)
    u1, u2 = v1 + 0.5 * h * a1, v2 + 0.5 * h * b1
    a2, b2 = acc(p, contact, x1 + 0.5 * h * v1, x2 + 0.5 * h * v2, u1, u2)
    w1, w2 = v1 + 0.5 * h * a2, v2 + 0.5 * h * b2
    a3, b3 = acc(p, contact, x1 + 0.5 * h * u1, x2 + 0.5 * h * u2, w1, w2)
    z1, z2 = v1 + h * a3, v2 + h * b3
    a4, b4 = acc(p, contact, x1 + h * w1, x2 + h * w2, z1, z2)
    k = h / 6.0
    return (
        x1 + k * (v1 + 2.0 * u1 + 2.0 * w1 + z1),
        x2 + k * (v2 + 2.0 * u2 + 2.0 * w2 + z2),
        v1 + k * (a1 + 2.0 * a2 + 2.0 * a3 + a4),
        v2 + k * (b1 + 2.0 * b2 + 2.0 * b3 + b4),
    )


# regime switches allowed inside one output step before giving up on locating them
_MAX_SWITCHES = 8
_BISECT_ITERS = 60


def _advance(p: DribblerParams, s, h: float):
    """One output step of length ``h``, switching regime where the gap crosses zero.

    The crossing instant is located by bisection on the RK4 step length
    so the contact force is never applied across a separation.
    """
    remaining = h
    for _ in range(_MAX_SWITCHES):
        contact = s[0] - s[1] >= 0.0
        trial = _rk4(p, contact, s, remaining)
        if (trial[0] - trial[1] >= 0.0) == contact:
            return trial
        lo, hi = 0.0, remaining
        s_hi = trial
        for _ in range(_BISECT_ITERS):
            mid = 0.5 * (lo + hi)
            if mid <= lo or mid >= hi:
                break
            s_mid = _rk4(p, contact, s, mid)
            if (s_mid[0] - s_mid[1] >= 0.0) == contact:
                lo = mid
            else:
                hi, s_hi = mid, s_mid
        s = s_hi
        remaining -= hi
        if remaining <= 0.0:
            return s
    return _rk4(p, s[0] - s[1] >= 0.0, s, remaining)


def simulate(params: DribblerParams) -> DribblerTrace:
    """Integrate from x1 = x2 = 0, v1 = v0, v2 = 0 with fixed-step RK4.

    The ball is in contact whenever x1 - x2 >= 0. Samples are spaced
    ``dt`` apart; a step in which the gap changes sign is split at the
    crossing and finished under the other regime.
    """
    p = params
    h = p.dt
    n = int(round(p.t_end / h))
    out = np.empty((n + 1, 4))
    s = (0.0, 0.0, p.v0, 0.0)
    out[0] = s
    for i in range(1, n + 1):
        s = _advance(p, s, h)
        if not math.isfinite(s[0] + s[1] + s[2] + s[3]):
            raise DivergenceError(i, i * h)
        out[i] = s
    times = np.arange(n + 1) * h
    return DribblerTrace(times, out[:, 0], out[:, 1], out[:, 2], out[:, 3], out[:, 0] - out[:, 1] >= 0.0)


def mechanical_energy(trace: DribblerTrace, params: DribblerParams) -> np.ndarray:
    """Kinetic energy plus both spring potentials; the contact spring counts only in contact."""
    gap = np.where(trace.in_contact, trace.x1 - trace.x2, 0.0)
    return (
        0.5 * params.m * trace.v1**2
        + 0.5 * params.M * trace.v2**2
        + 0.5 * params.k1 * gap**2
        + 0.5 * params.k2 * trace.x2**2
    )


def peak_displacement(trace: DribblerTrace) -> float:
    """Largest excursion of the ball from its start, in either direction.

    Rebounds move the ball toward negative x, so the magnitude is taken.
    """
    if len(trace) == 0:
        raise ValueError("empty trace")
    return float(np.max(np.abs(trace.x1)))


def settling_time(trace: DribblerTrace, band_fraction: float = 0.02) -> float:
    """Earliest time after which x1 stays within a band around its final value.

    The band half-width is ``band_fraction * |x1(t_end)|``; if the trace ends
    at exactly zero, ``band_fraction * peak_displacement`` is used instead.
    Returns the last sample time if the trace never settles earlier.
    """
    if not 0 < band_fraction < 1:
        raise ValueError("band_fraction must lie in (0, 1)")
    peak = peak_displacement(trace)
    if peak == 0.0:
        return 0.0
    final = float(trace.x1[-1])
    scale = abs(final) if final != 0.0 else peak
    outside = np.flatnonzero(np.abs(trace.x1 - final) > band_fraction * scale)
    if outside.size == 0:
        return float(trace.times[0])
    last = int(outside[-1])
    return float(trace.times[min(last + 1, len(trace) - 1)])


def separation_count(trace: DribblerTrace) -> int:
    """Number of separate gaps opening after the ball first touches the dribbler."""
    contact = np.asarray(trace.in_contact, dtype=bool)
    touched = np.flatnonzero(contact)
    if touched.size == 0:
        return 0
    tail = contact[touched[0]:]
    # a gap run begins wherever contact is followed by no contact
    return int(np.count_nonzero(tail[:-1] & ~tail[1:]))


def mass_sweep(params: DribblerParams, masses=MASS_SWEEP, band_fraction: float = 0.02):
    """Peak, settling time and separation count for each dribbler mass."""
    rows = []
    for M in masses:
        tr = simulate(params.with_mass(M))
        rows.append((M, peak_displacement(tr), settling_time(tr, band_fraction), separation_count(tr)))
    return rows
