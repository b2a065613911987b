import json

import pytest

from latlift.cli import main

from conftest import fixture_path


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv, "--format", "json")
    report = json.loads(out)
    # the schema round-trips
    assert json.loads(json.dumps(report)) == report
    assert report["exit_code"] == code
    assert report["passed"] == (code == 0)
    return code, report


def test_check_lattice_pass(capsys):
    code, report = run_json(capsys, "check-lattice", fixture_path("l6.json"))
    assert code == 0
    assert report["results"]["violations"] == []


def test_check_lattice_fail(capsys):
    code, report = run_json(capsys, "check-lattice", fixture_path("l6_broken.json"))
    assert code == 1
    laws = {v["law"] for v in report["results"]["violations"]}
    assert "distributivity" in laws or "annihilation" in laws


def test_check_lattice_missing_file(capsys):
    assert main(["check-lattice", fixture_path("nope.json")]) == 2


def test_lift_named_wire(capsys):
    code, report = run_json(capsys, "lift", fixture_path("l6.json"), "--wire", "0,a,b,c,1")
    assert code == 0
    entry = report["results"]["wires"][0]
    assert entry["ideal_count"] == 6
    assert entry["certified"] and entry["weak_ideal_system"] and not entry["ideal_system"]
    assert not entry["is_m_wire"]
    assert entry["m_witness"] == ["a", "b", "1"]
    ideals = {frozenset(i) for i in entry["ideals"]}
    assert frozenset(["0", "a", "b", "c"]) in ideals


def test_lift_non_wire_exits_nonzero(capsys):
    code, report = run_json(capsys, "lift", fixture_path("l6.json"), "--wire", "0,a,1")
    assert code == 1
    assert report["results"]["is_wire"] is False
    assert report["results"]["generates"] is False


def test_lift_unknown_wire_element_is_usage_error(capsys):
    assert main(["lift", fixture_path("l6.json"), "--wire", "0,zz,1"]) == 2


def test_lift_m_wires_only_empty(capsys):
    code, report = run_json(capsys, "lift", fixture_path("l6.json"), "--m-wires-only")
    assert code == 0
    assert report["results"]["wires"] == []
    assert report["results"]["note"] == "no M-wires"


def test_lift_all_wires_two(capsys):
    code, report = run_json(capsys, "lift", fixture_path("two.json"), "--all-wires")
    assert code == 0
    assert report["results"]["wire_count"] == 1
    entry = report["results"]["wires"][0]
    assert entry["is_m_wire"] and entry["ideal_system"]


def test_corpus_small(capsys):
    code, report = run_json(capsys, "corpus", "--max-n", "3")
    assert code == 0
    assert report["results"]["lattices"] == 4
    assert report["results"]["violations"] == []


def test_corpus_limit_caps_each_size(capsys):
    code, report = run_json(capsys, "corpus", "--max-n", "4", "--limit", "5")
    assert code == 0
    assert report["results"]["lattices"] == 1 + 1 + 2 + 5


def test_corpus_bad_max_n(capsys):
    assert main(["corpus", "--max-n", "9"]) == 2


def test_quad_division_closure_counterexample(capsys):
    code, report = run_json(capsys, "quad", "division-closure", "--d", "-17", "--bound", "50")
    assert code == 1
    assert report["results"]["counterexample"] == [9, 18, 2]


def test_quad_verdict_consistent(capsys):
    code, report = run_json(capsys, "quad", "verdict", "--d", "-5", "--bound", "2000")
    assert code == 0
    assert report["results"]["verdict"] == "CONSISTENT-WITH-M-WIRE-UP-TO-BOUND"


def test_quad_norms(capsys):
    code, report = run_json(capsys, "quad", "norms", "--d", "-5", "--bound", "30")
    assert code == 0
    assert report["results"]["values"][:6] == [1, 4, 5, 6, 9, 14]


def test_quad_s_wire(capsys):
    code, report = run_json(capsys, "quad", "s-wire", "--d", "-5",
                            "--prime-bound", "50", "--search-bound", "100000")
    assert code == 0
    assert report["results"]["unresolved"] == []


def test_quad_invalid_d(capsys):
    assert main(["quad", "verdict", "--d", "-4"]) == 2


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main(["no-such-command"])
    assert exc.value.code == 2


def test_text_format_smoke(capsys):
    code, out = run(capsys, "lift", fixture_path("l6.json"), "--wire", "0,a,b,c,1")
    assert code == 0
    assert "6 ideals" in out and "PASS" in out
