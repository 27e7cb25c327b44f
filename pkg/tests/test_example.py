import pytest

from apforge.example import (
    FAIL,
    FIGURE8,
    PASS,
    SKIPPED,
    TREFOIL,
    corpus_text,
    erratum_candidates,
    reproduce,
    run_protocol,
)


@pytest.fixture(scope="module")
def report():
    return reproduce()


def test_printed_s_fails_validation(report):
    p = report.printed
    assert p.step("a").status == PASS
    assert p.step("b").status == FAIL
    assert [p.step(k).status for k in "cdef"] == [SKIPPED] * 4
    (err,) = p.errata
    assert err["file"] == "s.ap"
    assert err["violation"]["first_divergence"] == 3
    assert err["asymmetry"] == "A[1][2] = -3 but A[2][1] = -1"
    assert err["exponent_matrix"][0][1] == -3
    assert err["exponent_matrix"][1][0] == -1


def test_unique_single_letter_repair(report):
    assert len(report.candidates) == 1
    c = report.candidates[0]
    assert (c["file"], c["line"], c["from"], c["to"]) == ("s.ap", 4, "x1", "x2")
    assert c["text"].strip() == "(x2 x3)^2 x2 r2"


def test_corrected_s_reproduces_every_claim(report):
    run = report.corrected
    assert run is not None and run.passed
    assert run.step("c").detail["order"] == 1
    d = run.step("d").detail
    assert d["alexander"] == ["1", "1", str(TREFOIL), "1"]
    assert run.step("e").detail["matching_orders"] == ["t-then-s"]
    f = run.step("f").detail
    assert f["order"] == 1
    assert f["alexander"][2] == str(FIGURE8)


def test_corrected_file_is_the_candidate():
    text = corpus_text("s_corrected.ap")
    assert "(x2 x3)^2 x2 r2" in text
    # the corrected file is valid, so no single-letter edit is needed; edits of a valid file are
    # only reported when they stay valid, and none do here
    assert erratum_candidates(text) == []


def test_protocol_is_deterministic():
    a = run_protocol("s_corrected.ap").to_json()
    b = run_protocol("s_corrected.ap").to_json()
    assert a == b
