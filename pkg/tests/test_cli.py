from __future__ import annotations

import json
import subprocess
import sys

import pytest

from gaussknot.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_alexander_human(capsys):
    assert run(capsys, "alexander", "--braid", "1 1 1") == (0, "t^-1 - 1 + t\n", "")
    assert run(capsys, "alexander", "--braid", "1")[1] == "1\n"
    assert run(capsys, "alexander", "--braid", "1 -2 1 -2")[1] == "-t^-1 + 3 - t\n"


def test_alexander_json(capsys):
    code, out, _ = run(capsys, "alexander", "--braid", "1 1 1", "--json")
    assert code == 0
    assert json.loads(out) == {
        "alexander": {"-1": "1", "0": "-1", "1": "1"},
        "checks": {"symmetry": True, "at_one": "1"},
    }


def test_alexander_reduced_route(capsys):
    assert run(capsys, "alexander", "--braid", "1 2 1 2", "--route", "reduced")[1] == "t^-1 - 1 + t\n"


def test_link_is_domain_error(capsys):
    code, out, err = run(capsys, "alexander", "--braid", "1 2", "--strands", "4")
    assert code == 3
    assert out == ""
    assert "2 components" in err


@pytest.mark.parametrize(
    "argv",
    [
        ("invariant", "--braid", "0"),
        ("alexander", "--braid", "1 x"),
        ("alexander", "--braid", "3", "--strands", "2"),
        ("alexander", "--braid", "1", "--strands", "0"),
        ("verify", "--suite", "nosuch"),
        ("nosuch",),
        (),
    ],
)
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_invariant(capsys):
    code, out, _ = run(capsys, "invariant", "--braid", "1 1 1", "--order", "4", "--json")
    assert code == 0
    assert json.loads(out) == {"order": 4, "coeffs": ["1", "0", "-1", "1", "0"]}
    out = run(capsys, "invariant", "--braid", "1", "--json")[1]
    assert json.loads(out) == {"order": 8, "coeffs": ["1"] + ["0"] * 8}
    assert run(capsys, "invariant", "--braid", "1 1 1", "--order", "2")[1] == "1 - h^2 + O(h^3)\n"


def test_burau(capsys):
    code, out, _ = run(capsys, "burau", "--braid", "1")
    assert code == 0
    m = json.loads(out)
    assert len(m) == 2 and all(len(r) == 2 for r in m)
    assert m[1][0] == {"0": "1"}
    red = json.loads(run(capsys, "burau", "--braid", "1", "--reduced")[1])
    assert red["matrix"] == [[{"1": "-1"}]]
    assert red["star_row"] == [{"0": "1"}]


def test_cable(capsys):
    code, out, _ = run(capsys, "cable", "--braid", "1 1 1", "--n", "2", "--json")
    assert code == 0
    payload = json.loads(out)
    assert payload["strands"] == 4
    assert payload["alexander"] == {"-2": "1", "0": "-1", "2": "1"}
    assert run(capsys, "cable", "--braid", "1", "--strands", "3", "--n", "2")[0] == 3


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "lemma2", "--max-strands", "4",
                       "--max-length", "10", "--seed", "42", "--count", "40")
    assert code == 0
    assert "0 failed" in out


def test_verify_json_deterministic(capsys):
    argv = ("verify", "--suite", "thm1", "--seed", "7", "--count", "30", "--json")
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second
    report = json.loads(first[1])
    assert first[0] == 0
    assert report["suite"] == "thm1"
    assert report["failed"] == 0 and report["failing_inputs"] == []
    assert report["passed"] == len(report["results"])


def test_verify_hopf_single_lambda(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "hopf", "--lambda", "5/2", "--degree", "6", "--json")
    assert code == 0
    assert json.loads(out)["failed"] == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "gaussknot", "alexander", "--braid", "1 1 1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout == "t^-1 - 1 + t\n"
