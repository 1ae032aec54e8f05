from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewcodes.config import ConfigError, JobConfig, format_config, load_config, parse_config

EXAMPLE = """\
# worked example, single code
p = 5
m = 2
n = 12
delta = 1-2v^2
gray_matrix = example1-5-2
f0 = x^2 + (2t+3)x + 3t+3
f1 = (4t+3)1
f2 = (3t+2)1
"""


def test_parse_example():
    cfg = parse_config(EXAMPLE)
    assert (cfg.p, cfg.m, cfg.n) == (5, 2, 12)
    assert cfg.modulus == (2, 4, 1)  # Conway default filled in
    assert cfg.delta == ("1", "4", "4")
    assert cfg.f0 == "(3t+3)(2t+3)1"
    F = cfg.field()
    assert [str(l) for l in cfg.delta_element(F).to_crt()] == ["1", "4", "4"]
    assert cfg.gray(F).alpha == F(4)
    assert [f.degree for f in cfg.generators(F)] == [2, 1, 1]


def test_defaults():
    cfg = parse_config("p = 7\nn = 8\ndelta = 1,1,1\n")
    assert cfg.m == 1 and cfg.modulus is None and cfg.gray_order == "blocks"
    assert cfg.generators() is None
    assert cfg.degree_bounds == (1, 1, 1)
    with pytest.raises(ConfigError):
        cfg.gray()  # no preset for F_7


def test_explicit_gray_rows():
    cfg = parse_config("p = 5\nn = 4\ndelta = 1, 1, 1\ngray_matrix = 3 2 1; 3 4 3; 4 3 2\n")
    assert cfg.gray_matrix == (("3", "2", "1"), ("3", "4", "3"), ("4", "3", "2"))
    assert cfg.gray().alpha == cfg.field()(4)


@pytest.mark.parametrize(
    "text,line,fragment",
    [
        ("p = 5\nn = 4\nfoo = 1\ndelta = 1,1,1\n", 3, "unknown key"),
        ("p = 5\np = 5\n", 2, "duplicate"),
        ("p = 5\nn four\n", 2, "key = value"),
        ("p = 5\nn = x\ndelta = 1,1,1\n", 2, "n"),
        ("p = 4\nn = 4\ndelta = 1,1,1\n", 1, "prime"),
        ("p = 5\nm = 2\nmodulus = 1, 0, 1\nn = 4\ndelta = 1,1,1\n", 3, "reducible"),
        ("p = 5\nn = 4\n\ndelta = 1, 1\n", 4, "three"),
        ("p = 5\nn = 4\ndelta = 1,1,1\ngray_order = diagonal\n", 4, "gray_order"),
        ("p = 5\nn = 4\ndelta = 1,1,1\ngray_matrix = 1 2 3; 2 4 6; 0 0 1\n", 4, "singular"),
        ("p = 5\nn = 4\ndelta = 1,1,1\n# comment\nf0 = x + y\n", 5, "f0"),
        ("p = 5\nn = 4\ndelta = 1,1,1\ndegree_bounds = 1, 2\n", 4, "degree_bounds"),
        ("p = 5\nn = 4\ndelta =\n", 3, "empty"),
    ],
)
def test_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(ConfigError) as info:
        parse_config(text)
    assert info.value.line == line
    assert str(info.value).startswith(f"line {line}:")
    assert fragment in str(info.value)


def test_missing_required_key():
    with pytest.raises(ConfigError, match="missing required key 'delta'"):
        parse_config("p = 5\nn = 4\n")


def test_load_missing_file(tmp_path):
    with pytest.raises(ConfigError, match="cannot read"):
        load_config(str(tmp_path / "absent.cfg"))


FIELDS = st.sampled_from([(5, 2, "example1-5-2"), (3, 2, "table-3-2"), (7, 2, "table-7-2"), (5, 1, None), (11, 1, None)])
DELTAS = st.sampled_from(["1", "-1", "1-2v^2", "2v^2-1", "1, -1, 1", "-1,-1,1"])
POLYS = st.sampled_from([None, "x + 1", "x^2 + 2x + 1", "111", "(1)(0)1"])


@settings(max_examples=60, deadline=None)
@given(FIELDS, DELTAS, st.integers(1, 30), st.sampled_from(["blocks", "interleaved"]),
       st.lists(st.integers(0, 4), min_size=3, max_size=3), POLYS, st.integers(1, 6), st.integers(1, 4))
def test_round_trip(fld, delta, n, order, bounds, f, d_max, workers):
    p, m, gray = fld
    lines = [f"p = {p}", f"m = {m}", f"n = {n}", f"delta = {delta}", f"gray_order = {order}",
             "degree_bounds = " + ", ".join(map(str, bounds)), f"d_max = {d_max}", f"workers = {workers}"]
    if gray:
        lines.append(f"gray_matrix = {gray}")
    if f:
        lines += [f"f0 = {f}", f"f1 = {f}", f"f2 = {f}"]
    cfg = parse_config("\n".join(lines))
    assert isinstance(cfg, JobConfig)
    again = parse_config(format_config(cfg))
    assert again == cfg
    assert format_config(again) == format_config(cfg)


def test_shipped_configs_parse():
    import pathlib

    root = pathlib.Path(__file__).resolve().parent.parent / "configs"
    files = sorted(root.glob("*.cfg"))
    assert files
    for path in files:
        cfg = load_config(str(path))
        assert parse_config(format_config(cfg)) == cfg
