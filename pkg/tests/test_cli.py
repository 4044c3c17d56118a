import json

import pytest

from artifact import cli
from artifact.qlaurent import LaurentPoly


def run(capsys, *argv):
    code = cli.main(list(argv))
    return code, capsys.readouterr().out


def test_icanon_level_zero_is_identity(capsys):
    code, out = run(capsys, "icanon", "--l", "0", "--format", "json")
    assert code == 0
    assert json.loads(out)["matrix"] == [[{"0": 1}]]


def test_icanon_level_two(capsys):
    code, out = run(capsys, "icanon", "--l", "2", "--format", "json")
    m = json.loads(out)["matrix"]
    assert LaurentPoly.from_json(m[0][2]) == LaurentPoly.monomial(-1)
    assert m[1][2] == {} and m[2][2] == {"0": 1}
    code, out = run(capsys, "icanon", "--l", "2", "--format", "latex")
    assert r"\begin{array}" in out and "q^{-1}" in out


def test_icanon_level_five(capsys):
    code, out = run(capsys, "icanon", "--l", "5")
    assert code == 0 and len(out.strip().splitlines()) == 7


def test_decompose(capsys):
    code, out = run(capsys, "decompose", "--l", "3", "--n", "0", "--format", "json")
    assert json.loads(out)["multiplicities"] == {"0": {"0": 1}}
    code, out = run(capsys, "decompose", "--l", "2", "--n", "2", "--format", "json")
    assert json.loads(out)["multiplicities"] == {"2": {"-1": 1, "1": 1}}
    code, out = run(capsys, "decompose", "--l", "3", "--n", "3", "--format", "json")
    got = {int(m): LaurentPoly.from_json(c) for m, c in json.loads(out)["multiplicities"].items()}
    assert got == {1: LaurentPoly.const(1), 3: LaurentPoly({3: 1, 1: 2, -1: 2, -3: 1})}


def test_verify_report_schema(capsys):
    code, out = run(capsys, "verify", "--suite", "iqmod", "--l", "4", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert set(rep) == {"suite", "l", "checks", "elapsed_ms"}
    assert rep["suite"] == "iqmod" and rep["l"] == 4
    names = [c["name"] for c in rep["checks"]]
    assert names == sorted(names)
    for c in rep["checks"]:
        assert c["status"] == "pass"
        assert set(c) == {"name", "paper_ref", "status"}


def test_verify_is_deterministic(capsys):
    outs = []
    for _ in range(2):
        _, out = run(capsys, "verify", "--suite", "frobenius", "--l", "2", "--seed", "3", "--format", "json")
        rep = json.loads(out)
        rep.pop("elapsed_ms")
        outs.append(rep)
    assert outs[0] == outs[1]


def test_verify_bimod_level_three(capsys):
    code, out = run(capsys, "verify", "--suite", "bimod", "--l", "3", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert all(c["status"] == "pass" and "witness" not in c for c in rep["checks"])


def test_verify_out_of_range_is_skipped(capsys):
    code, out = run(capsys, "verify", "--suite", "bimod", "--l", "99", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    (c,) = rep["checks"]
    assert c["status"] == "skipped" and "outside the supported range" in c["name"]


def test_verify_text_and_latex(capsys):
    code, out = run(capsys, "verify", "--suite", "symfunc", "--l", "2")
    assert code == 0 and "[pass]" in out
    code, out = run(capsys, "verify", "--suite", "symfunc", "--l", "2", "--format", "latex")
    assert r"\end{array}" in out


@pytest.mark.parametrize("argv", [
    [], ["bogus"], ["icanon"], ["icanon", "--l", "x"], ["icanon", "--l", "-1"],
    ["decompose", "--l", "2"], ["decompose", "--l", "2", "--n", "-1"],
    ["verify", "--l", "2", "--suite", "nope"], ["verify", "--l", "2", "--format", "xml"],
])
def test_usage_errors_exit_2(capsys, argv):
    assert cli.main(argv) == 2


def test_failure_exit_code(capsys, monkeypatch):
    from artifact import checks
    fake = lambda l, seed=0: [checks._chk("always wrong", "plumbing", False, "w")]
    monkeypatch.setitem(checks.SUITES, "symfunc", (fake, 0, 9))
    code, out = run(capsys, "verify", "--suite", "symfunc", "--l", "1", "--format", "json")
    assert code == 1
    assert json.loads(out)["checks"][0]["witness"] == "w"
