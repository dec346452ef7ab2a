import json

import numpy as np
import pytest

from sslmotion import HeatmapGrid, PursuitResult, Termination, Vec2
from sslmotion.config import ConfigError, RunConfig, load_config, parse_config
from sslmotion.dribbler import DribblerParams, simulate
from sslmotion.export import fmt, heatmap_csv, heatmap_pgm, pursuit_result_dict, sweep_csv, trace_csv, write_heatmap


def test_empty_config_is_defaults():
    assert parse_config({}) == RunConfig()
    assert load_config(None) == RunConfig()


def test_partial_override(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(json.dumps({"pursuit": {"dt": 0.02}, "robot": {"v_max": 2.0}, "dribbler": {"M": 0.25}}))
    cfg = load_config(path)
    assert cfg.pursuit.dt == 0.02 and cfg.pursuit.t_thres == 0.02
    assert cfg.kin.v_max == 2.0 and cfg.kin.a_max == 3.0
    assert cfg.dribbler.M == 0.25 and cfg.dribbler.m == 0.046


@pytest.mark.parametrize(
    "doc",
    [
        {"bogus": {}},
        {"pursuit": {"dtt": 0.1}},
        {"dribbler": {"dt": 0.0}},
        {"robot": {"v_max": "fast"}},
        {"robot": {"v_max": True}},
        {"pursuit": []},
        [],
    ],
)
def test_bad_configs(doc):
    with pytest.raises(ConfigError):
        parse_config(doc)


def test_bad_json(tmp_path):
    path = tmp_path / "c.json"
    path.write_text("{nope")
    with pytest.raises(ConfigError):
        load_config(path)


def test_fmt_six_significant_digits():
    assert fmt(1.23456789) == "1.23457"
    assert fmt(float("inf")) == "inf"
    assert fmt(0.0) == "0"


def test_pursuit_result_json():
    d = pursuit_result_dict(PursuitResult(Vec2(1.0, 0.0), 1.1547005383792515, Termination.BALL_STOPPED))
    assert d == {"point": [1.0, 0.0], "time_s": 1.1547, "termination": "BallStopped"}


def grid_2x2():
    vals = np.array([[0.5, 1.0], [2.5, np.inf]])
    return HeatmapGrid(Vec2(-1.0, -1.0), 2.0, 2, 2, vals)


def test_heatmap_csv_layout():
    text = heatmap_csv(grid_2x2())
    assert text.splitlines() == ["x,y,time_s", "-1,-1,0.5", "1,-1,1", "-1,1,2.5", "1,1,inf"]


def test_heatmap_pgm_bytes():
    data, mapping = heatmap_pgm(grid_2x2())
    header = b"P5\n2 2\n255\n"
    assert data.startswith(header)
    # top row is the larger y: [2.5 -> 254, inf -> 255], then [0.5 -> 0, 1.0 -> 64]
    assert list(data[len(header):]) == [254, 255, 0, 64]
    assert "t_min_s 0.5" in mapping and "t_max_s 2.5" in mapping


def test_write_heatmap_suffix(tmp_path):
    written = write_heatmap(grid_2x2(), tmp_path / "h.pgm")
    assert [p.name for p in written] == ["h.pgm", "h.pgm.txt"]
    assert (tmp_path / "h.pgm").read_bytes().startswith(b"P5")
    write_heatmap(grid_2x2(), tmp_path / "h.csv")
    assert (tmp_path / "h.csv").read_text().startswith("x,y,time_s\n")


def test_heatmap_grid_validation():
    with pytest.raises(ValueError):
        HeatmapGrid(Vec2(0, 0), 0.0, 1, 1, np.zeros((1, 1)))
    with pytest.raises(ValueError):
        HeatmapGrid(Vec2(0, 0), 1.0, 2, 1, np.zeros((2, 2)))


def test_trace_and_sweep_csv():
    tr = simulate(DribblerParams(t_end=0.001))
    lines = trace_csv(tr).splitlines()
    assert lines[0] == "t,x1,x2,v1,v2,contact"
    assert lines[1] == "0,0,0,2,0,1"
    assert len(lines) == len(tr) + 1
    assert sweep_csv([(0.05, 0.0084, 0.8363, 2)]).splitlines() == ["M,peak_m,settling_s,separations", "0.05,0.0084,0.8363,2"]
