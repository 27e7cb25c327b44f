import json
import subprocess
import sys

import pytest

from apforge.cli import EXIT_INVALID, EXIT_OK, EXIT_UNKNOWN, EXIT_VIOLATION, main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, "--json", *argv)
    return code, json.loads(out)


def test_validate_exit_codes(capsys):
    code, out = run(capsys, "validate", "corpus:t.ap", "corpus:r.ap")
    assert code == EXIT_OK
    assert out.count("PASS") == 2
    code, rep = run_json(capsys, "validate", "corpus:s.ap")
    assert code == EXIT_INVALID
    (entry,) = rep["results"]
    assert entry["valid"] is False
    assert entry["violation"]["first_divergence"] == 3
    assert entry["asymmetry"] == "A[1][2] = -3 but A[2][1] = -1"


def test_report_schema_and_digest(capsys):
    _, rep = run_json(capsys, "abelian", "corpus:s_corrected.ap")
    assert rep["schema"] == "apforge.report/1"
    assert rep["command"] == "abelian"
    assert len(rep["inputs_digest"]) == 64
    assert "timings" not in rep
    assert rep["results"]["h1"] == "0"


def test_reports_are_deterministic(capsys, tmp_path):
    outs = []
    for _ in range(2):
        code, out = run(capsys, "--json", "--seed", "7", "torelli", "--random", "3", "--size", "5")
        assert code == EXIT_OK
        outs.append(out)
    assert outs[0] == outs[1]
    assert json.loads(outs[0])["results"]["torelli"] is True


def test_mul_orders(capsys):
    code, rep = run_json(capsys, "mul", "corpus:t.ap", "corpus:s_corrected.ap", "--order", "both", "--compare", "corpus:r.ap")
    assert code == EXIT_OK
    matches = {k: v["matches_compare"] for k, v in rep["results"].items()}
    assert sorted(matches.values()) == [False, True]


def test_inverse_round_trip(capsys, tmp_path):
    code, out = run(capsys, "inv", "corpus:t.ap")
    assert code == EXIT_OK
    inv = tmp_path / "tinv.ap"
    inv.write_text(out)
    code, rep = run_json(capsys, "mul", "corpus:t.ap", str(inv))
    (entry,) = rep["results"].values()
    assert all(w == "1" for w in entry["relators"])


def test_braid_input(capsys, tmp_path):
    f = tmp_path / "twist.braid"
    f.write_text("n=2\ns1^2\nframing: 1, -2\n")
    code, rep = run_json(capsys, "abelian", str(f))
    assert code == EXIT_OK
    assert rep["results"]["matrix"] == [[0, -1], [-1, -2]]


def test_enumerate(capsys):
    code, out = run(capsys, "enumerate", "corpus:e8.ap", "--simplify")
    assert code == EXIT_OK and out.startswith("index 120")
    code, out = run(capsys, "enumerate", "corpus:s_corrected.ap", "--max-cosets", "50")
    assert code == EXIT_UNKNOWN


def test_homs_and_knots(capsys):
    code, rep = run_json(capsys, "homs", "corpus:s_corrected.ap", "--knot", "3", "--target", "s3")
    assert code == EXIT_OK
    assert (rep["results"]["total"], rep["results"]["surjective"]) == (12, 6)
    code, out = run(capsys, "alexander", "corpus:r.ap", "--knot", "3")
    assert code == EXIT_OK and out.splitlines()[0] == "t^2-3t+1"
    assert "AP-delete-one" in out
    code, out = run(capsys, "knot-group", "corpus:r.ap", "--knot", "3")
    assert code == EXIT_OK and "meridian x3" in out


def test_alexander_not_computable(capsys):
    code, _ = run(capsys, "alexander", "corpus:identity4.ap", "--knot", "1")
    assert code == EXIT_UNKNOWN


def test_form(capsys):
    code, rep = run_json(capsys, "form", "--matrix", "[[2,1],[1,1]]")
    assert code == EXIT_OK
    assert rep["results"]["diagonalizable_to_identity"] == "Yes"
    code, rep = run_json(capsys, "form", "corpus:e8.ap")
    assert rep["results"]["parity"] == "Even" and rep["results"]["diagonalizable_to_identity"] == "No"
    code, _ = run(capsys, "form", "--matrix", "[[1,2],[0,1]]")
    assert code == EXIT_INVALID


def test_triality_verdicts(capsys):
    code, rep = run_json(capsys, "triality", "corpus:e8.ap", "corpus:s_corrected.ap")
    assert code == EXIT_OK
    assert [r["verdict"] for r in rep["results"]] == ["I120", "Trivial"]


def test_donaldson(capsys):
    code, out = run(capsys, "donaldson", "corpus:e8.ap", "--budget", "30")
    assert code == EXIT_OK
    assert out.startswith("NontrivialityCertified via SL(2,5)")


def test_errors(capsys, tmp_path):
    code, out = run(capsys, "validate", str(tmp_path / "missing.ap"))
    assert code == EXIT_INVALID and "no such file" in out
    bad = tmp_path / "bad.ap"
    bad.write_text("n=2\nx1 ^\n\n")
    code, out = run(capsys, "validate", str(bad))
    assert code == EXIT_INVALID and "line 2" in out
    code, out = run(capsys, "homs", "corpus:t.ap", "--target", "monster")
    assert code == EXIT_INVALID


def test_report_file(capsys, tmp_path):
    dest = tmp_path / "report.json"
    run(capsys, "--report", str(dest), "validate", "corpus:t.ap")
    assert json.loads(dest.read_text())["results"][0]["valid"] is True


def test_exit_code_constants():
    assert (EXIT_OK, EXIT_INVALID, EXIT_UNKNOWN, EXIT_VIOLATION) == (0, 2, 3, 4)


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "apforge.cli", "validate", "corpus:t.ap"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "PASS corpus:t.ap"


def test_global_options_either_side_of_command(capsys):
    _, before = run(capsys, "--json", "--seed", "3", "torelli", "--random", "3", "--size", "4")
    _, after = run(capsys, "torelli", "--random", "3", "--size", "4", "--seed", "3", "--json")
    assert before == after
    assert json.loads(after)["seed"] == 3
