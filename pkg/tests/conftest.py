import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from sslmotion import BallState, PursuitConfig, RobotState, Vec2  # noqa: E402


@pytest.fixture
def cfg():
    return PursuitConfig()


@pytest.fixture
def rest():
    return Vec2(0.0, 0.0)


def ball(px, py, vx=0.0, vy=0.0):
    return BallState(Vec2(px, py), Vec2(vx, vy))


def robot(px, py, vx=0.0, vy=0.0):
    return RobotState(Vec2(px, py), Vec2(vx, vy))


_criteria = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is not None and report.when == "call":
        _criteria.append((marker.args[0], marker.args[1], report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, outcome in sorted(_criteria):
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  criterion {number}: {title}")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")
