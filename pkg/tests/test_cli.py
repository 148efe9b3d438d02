import json
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from crystalagt import checks
from crystalagt.cli import (
    RunConfig,
    Table,
    UsageError,
    build_table,
    cmd_verify,
    dump_table_json,
    main,
    render_table,
)
from crystalagt.exactfield import from_text


def run(argv, capsys):
    code = main(argv)
    return code, capsys.readouterr()


def test_table_c_tilde_level_one(capsys):
    code, out = run(["table", "c_tilde", "--level", "1"], capsys)
    assert code == 0
    obj = json.loads(out.out)
    assert obj["rows"] == [[[], [1]], [[1], []]]
    assert from_text(obj["entries"][0][1]) == from_text("u2/(u1-u2)")


def test_table_kac_level_zero(capsys):
    code, out = run(["table", "kac", "--level", "0"], capsys)
    assert code == 0 and json.loads(out.out)["entries"] == [["1"]]


def test_table_alpha_level_two_shape(capsys):
    code, out = run(["table", "alpha", "--level", "2", "-N", "2"], capsys)
    obj = json.loads(out.out)
    assert code == 0 and len(obj["entries"]) == 5 and all(len(r) == 5 for r in obj["entries"])


def test_multi_level_json_is_a_list(capsys):
    code, out = run(["table", "c_tilde_star", "-L", "1,2"], capsys)
    assert code == 0 and [t["level"] for t in json.loads(out.out)] == [1, 2]


@pytest.mark.parametrize("fmt", ["text", "latex"])
def test_other_formats(fmt, capsys):
    code, out = run(["table", "c_tilde", "-L", "1", "--format", fmt], capsys)
    assert code == 0 and ("u2" in out.out or "u_{2}" in out.out)


@settings(max_examples=12, deadline=None)
@given(st.sampled_from(["alpha", "beta", "c_tilde", "c_tilde_star", "shapovalov", "kac"]), st.integers(0, 2))
def test_json_round_trip(kind, level):
    tab = build_table(kind, level)
    text = render_table(tab, "json")
    back = Table.from_json(json.loads(text))
    assert back == tab
    assert dump_table_json(back.to_json()) + "\n" == text


def test_series(capsys):
    code, out = run(["series", "z_tilde_pure", "--order", "2"], capsys)
    vals = [from_text(s) for s in json.loads(out.out)]
    assert code == 0 and vals[0] == from_text("1") and vals[1] == from_text("1/(1-1/t)")
    code, out = run(["series", "four_point", "--order", "1", "--method", "closed"], capsys)
    vals = [from_text(s) for s in json.loads(out.out)]
    assert vals == [from_text("1"), from_text("(1-w1*w2/(v1*v2))/(1-1/t)")]
    code, out = run(["series", "z_pure", "--order", "0"], capsys)
    assert json.loads(out.out) == ["1"]


def test_verify_level_zero(capsys):
    code, out = run(["verify", "all", "--level", "0"], capsys)
    rep = json.loads(out.out)
    assert code == 0
    assert {c["name"] for c in rep["checks"]} == set(checks.REGISTRY)
    assert all(c["status"] in {"proved-equal", "conjecture-holds", "literal-holds", "literal-fails"} for c in rep["checks"])


def test_verify_suite_selection(capsys):
    code, out = run(["verify", "--suite", "nekrasov", "--suite", "symfunc", "-L", "1"], capsys)
    suites = {c["suite"] for c in json.loads(out.out)["checks"]}
    assert code == 0 and suites == {"nekrasov", "symfunc"}


def test_theorem_failure_sets_exit_one(monkeypatch):
    fake = checks.Check("always-false", "nekrasov", "a deliberately false identity", "theorem", 1, lambda L: False)
    monkeypatch.setitem(checks.REGISTRY, "always-false", fake)
    rep, code = cmd_verify(RunConfig([1], suites=["nekrasov"]))
    assert code == 1
    assert {c["name"]: c["status"] for c in rep["checks"]}["always-false"] == "theorem-fails"


def test_conjecture_failure_is_a_finding(monkeypatch):
    fake = checks.Check("never", "nekrasov", "a false conjecture", "conjecture", 1, lambda L: False)
    monkeypatch.setitem(checks.REGISTRY, "never", fake)
    _, code = cmd_verify(RunConfig([1], suites=["nekrasov"]))
    assert code == 0


def test_usage_errors(capsys):
    assert main(["table", "nonsense"]) == 2
    assert main(["table", "alpha", "-L", "-1"]) == 2
    assert main(["table", "c_tilde", "-L", "1", "-N", "3"]) == 2
    with pytest.raises(UsageError):
        RunConfig([-1])


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "crystalagt", "table", "kac", "-L", "0"], capture_output=True, text=True, check=False)
    assert res.returncode == 0 and json.loads(res.stdout)["entries"] == [["1"]]
    res = subprocess.run([sys.executable, "-m", "crystalagt", "bogus"], capture_output=True, text=True, check=False)
    assert res.returncode == 2
