import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sslmotion import DegenerateVectorError, FieldBounds, Vec2, angle_between, normalize_angle

angles = st.floats(min_value=-1e6, max_value=1e6, allow_nan=False)
coords = st.floats(min_value=-100, max_value=100, allow_nan=False).filter(lambda v: abs(v) > 1e-3)


@pytest.mark.parametrize(
    "theta, expected",
    [(0.0, 0.0), (2 * math.pi, 0.0), (6.0, 6.0 - 2 * math.pi), (math.pi, math.pi), (-math.pi, math.pi), (3 * math.pi, math.pi)],
)
def test_normalize_angle_examples(theta, expected):
    assert normalize_angle(theta) == pytest.approx(expected, abs=1e-12)


def test_normalize_angle_rejects_nonfinite():
    with pytest.raises(ValueError):
        normalize_angle(math.inf)
    with pytest.raises(ValueError):
        normalize_angle(math.nan)


@given(angles)
def test_normalize_angle_range_and_congruence(x):
    y = normalize_angle(x)
    assert -math.pi < y <= math.pi
    turns = (y - x) / (2 * math.pi)
    assert abs(turns - round(turns)) * 2 * math.pi < 1e-9
    assert normalize_angle(y) == y


@pytest.mark.parametrize(
    "a, b, expected",
    [((1, 0), (1, 0), 0.0), ((1, 0), (-1, 0), math.pi), ((1, 0), (0, 1), math.pi / 2)],
)
def test_angle_between_examples(a, b, expected):
    assert angle_between(Vec2(*a), Vec2(*b)) == pytest.approx(expected, abs=1e-12)


def test_angle_between_zero_vector():
    with pytest.raises(DegenerateVectorError):
        angle_between(Vec2(0, 0), Vec2(1, 0))


@given(coords, coords, coords, coords, st.floats(min_value=1e-3, max_value=1e3))
def test_angle_between_symmetric_and_scale_invariant(ax, ay, bx, by, k):
    a, b = Vec2(ax, ay), Vec2(bx, by)
    ang = angle_between(a, b)
    assert 0.0 <= ang <= math.pi
    assert angle_between(b, a) == pytest.approx(ang, abs=1e-12)
    assert angle_between(a * k, b) == pytest.approx(ang, abs=1e-6)


def test_vec2_rejects_nonfinite():
    with pytest.raises(ValueError):
        Vec2(math.nan, 0.0)


def test_field_bounds():
    fb = FieldBounds()
    assert (fb.half_length, fb.half_width) == (6.0, 4.5)
    assert fb.contains(Vec2(6.0, -4.5))
    assert not fb.contains(Vec2(6.01, 0.0))
    with pytest.raises(ValueError):
        FieldBounds(0.0, 1.0)


def test_angle_between_tiny_and_huge_vectors():
    tiny = 8.0e-207
    assert angle_between(Vec2(0.0, -tiny), Vec2(0.0, tiny)) == pytest.approx(math.pi)
    assert angle_between(Vec2(1e200, 0.0), Vec2(0.0, 1e200)) == pytest.approx(math.pi / 2)
