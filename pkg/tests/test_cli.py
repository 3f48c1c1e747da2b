import json
import subprocess
import sys

import pytest

from simt.cli import main
from simt.fixtures import COUNTEREXAMPLE, OHARE
from simt.presfile import format_presentation


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, pres in (("counterexample", COUNTEREXAMPLE), ("ohare", OHARE)):
        path = tmp_path / f"{name}.txt"
        path.write_text(format_presentation(pres), encoding="utf-8")
        out[name] = str(path)
    bad = tmp_path / "bad.txt"
    bad.write_text("gens: ab\nrel: ac\n", encoding="utf-8")
    out["bad"] = str(bad)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_benois_text(capsys, files):
    code, out, _ = run(capsys, "benois", files["counterexample"], "--refine")
    assert code == 0
    assert "benois: a|baBbAB" in out
    assert "refined: a|baB|bAB" in out
    assert "group_verdict: unknown" in out
    assert "not_group_certificate: a->1, b->x (witness b)" in out


def test_benois_json(capsys, files, tmp_path):
    dot = tmp_path / "aut.dot"
    code, out, _ = run(capsys, "benois", files["ohare"], "--json", "--dot", str(dot))
    data = json.loads(out)
    assert code == 0
    assert data["factorizations"][0]["pieces"] == ["abcd", "acd", "ad", "abbcd", "acd"]
    # a -> x, d -> x^-1 sends the relator to (x x^-1)^5 = 1, so a is not a unit
    assert data["group_verdict"] == "unknown"
    assert data["not_group_certificate"] == {
        "hom": {"a": "x", "b": "", "c": "", "d": "X"},
        "witness_letter": "a",
    }
    assert dot.read_text().startswith("digraph")


def test_member(capsys):
    assert run(capsys, "member", "--gens", "ab", "--set", "ab,B", "--word", "a")[1] == "true\n"
    assert run(capsys, "member", "--gens", "ab", "--set", "ab,B", "--word", "A")[1] == "false\n"
    assert run(capsys, "member", "--gens", "ab", "--set", "ab,BA", "--semigroup-identity")[1] == "true\n"
    code, _, err = run(capsys, "member", "--gens", "ab", "--set", "ab")
    assert code == 2 and "--word" in err
    assert run(capsys, "member", "--gens", "ab", "--set", "ab", "--word", "c")[0] == 2


def test_classify(capsys):
    assert run(capsys, "classify", "abcd")[1] == "positive, reduced, cyclically_reduced, self_overlap_free\n"
    assert run(capsys, "classify", "aAa")[1] == "none\n"
    assert run(capsys, "classify", "a1")[0] == 2


def test_stephen(capsys, files):
    code, out, _ = run(capsys, "stephen", files["counterexample"], "--word", "a")
    assert code == 0 and out.startswith("proved (rounds=1")
    code, out, _ = run(capsys, "stephen", files["counterexample"], "--word", "b", "--invertible", "--json", "--max-rounds", "2")
    data = json.loads(out)
    assert data["status"] == "unknown" and data["rounds"] <= 2


def test_construct(capsys):
    code, out, _ = run(capsys, "construct", "rwr", "--gens", "ab", "--rel", "abAB")
    assert code == 0 and "rel: aAAabBBbabABaAAabBBb" in out
    assert "rel: babbbbab" in run(capsys, "construct", "positive", "--gens", "ab", "--rel", "abba")[1]
    assert run(capsys, "construct", "positive", "--gens", "ab", "--rel", "abab")[0] == 2
    out = run(capsys, "construct", "ohare", "--kind", "b", "--i", "2", "--json")[1]
    assert json.loads(out)["group_verdict"] == "group"
    out = run(capsys, "construct", "sample", "--u", "ab", "--v", "ba", "--samples", "5")[1]
    assert json.loads(out)["group"] == 5


def test_input_errors(capsys, files):
    code, _, err = run(capsys, "benois", files["bad"])
    assert code == 2 and "line 2" in err
    assert run(capsys, "benois", "/nonexistent/file")[0] == 2


def test_fixtures_filter(capsys):
    code, out, _ = run(capsys, "fixtures", "--filter", "counterexample-benois")
    assert code == 0 and out.startswith("PASS")
    code, out, err = run(capsys, "fixtures", "--filter", "no-such-fixture")
    assert code == 0 and "warning" in err


def test_fixture_failure_exit_code(capsys, monkeypatch):
    from simt import fixtures

    broken = fixtures.FixtureCase("broken", "always fails", lambda: (False, "nope"))
    monkeypatch.setattr(fixtures, "CASES", [broken])
    code, out, _ = run(capsys, "fixtures")
    assert code == 1 and "FAIL  broken" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "simt", "classify", "ab"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "positive, reduced, cyclically_reduced, self_overlap_free"
    assert subprocess.run([sys.executable, "-m", "simt"], capture_output=True).returncode == 2
