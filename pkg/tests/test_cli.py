import json
import subprocess
import sys

import pytest

from unilink.cli import main
from unilink.laurent import LaurentPoly
from unilink.oracles import jones_tl
from unilink.braid import BraidWord


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_unknot_a_gamma(capsys):
    assert run(capsys, "compute", "--mode", "a_gamma", "--level", "2", "--braid", "", "--strands", "1") == (0, "y\n")


def test_ado_matches_alexander(capsys):
    code, out = run(capsys, "compute", "--mode", "ado", "--level", "2", "--braid", "1 1 1")
    assert code == 0
    assert LaurentPoly.from_text(out.strip()) == LaurentPoly.from_text("1 - x^2 + x^4")


def test_hopf_jones_matches_oracle(capsys):
    code, out = run(capsys, "compute", "--mode", "jones", "--colours", "2", "--braid", "1 1")
    assert code == 0
    assert LaurentPoly.from_text(out.strip()) == jones_tl(BraidWord(2, (1, 1)))


@pytest.mark.parametrize("mode", ["a_gamma", "j_gamma", "ado", "jones"])
def test_json_round_trip(capsys, mode):
    code, out = run(capsys, "compute", "--mode", mode, "--level", "3", "--braid", "1 -2 1 -2", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    value = LaurentPoly.from_json_obj(obj["value"])
    assert value.to_text() == obj["text"]
    if mode != "ado":  # the text parser reads integer coefficients only
        assert LaurentPoly.from_text(obj["text"]) == value


def test_output_is_deterministic_across_job_counts(capsys):
    args = ["compute", "--mode", "a_gamma", "--level", "3", "--braid", "1 1 2 2", "--format", "json"]
    _, serial = run(capsys, *args)
    _, again = run(capsys, *args)
    _, parallel = run(capsys, *args, "--jobs", "2")
    assert serial == again == parallel


def test_oracle(capsys):
    code, out = run(capsys, "oracle", "--braid", "", "--strands", "1")
    assert code == 0 and out == "alexander: 1\njones: 1\n"
    _, out = run(capsys, "oracle", "--braid", "1 1 1")
    assert "alexander: 1 - t + t^2" in out


def test_limit_reports_coherence(capsys):
    code, out = run(capsys, "limit", "--braid", "1 1", "--max-level", "3")
    obj = json.loads(out)
    assert code == 0 and obj["coherent"] and [lv["level"] for lv in obj["levels"]] == [2, 3]


def test_verify_suites(capsys):
    assert run(capsys, "verify", "markov", "--level", "2")[0] == 0
    assert run(capsys, "verify", "oracles")[0] == 0
    code, out = run(capsys, "verify", "unification", "--max-level", "4", "--corpus", "small", "--format", "json")
    assert code == 0 and json.loads(out)["ok"]


@pytest.mark.parametrize("argv", [
    ["compute", "--braid", "1 x"],
    ["compute", "--braid", "1", "--level", "1"],
    ["compute", "--braid", "1 1", "--mode", "j_gamma", "--colours", "2 3 4"],
    ["compute", "--braid", "3", "--strands", "2"],
    ["verify", "nonsense"],
])
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "unilink.cli", "compute", "--braid", "", "--strands", "1"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout == "y\n"
