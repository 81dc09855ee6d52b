import json
import subprocess
import sys

import pytest

from hurwitzwp.cli import main

COMM = "< a b | a b a^-1 b^-1 >"


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err.strip()


class TestAct:
    def test_sigma(self, capsys):
        code, out, _ = run(capsys, "act", "[ (x1|e) ; (x2|e) ]", "1")
        assert code == 0 and out == "[ (x2|e) ; (x2^-1 x1 x2|e) ]"

    def test_empty_braid_canonicalizes(self, capsys):
        code, out, _ = run(capsys, "act", "[ (x1 x1|e) ; (x2|e) ]", "")
        assert code == 0 and out == "[ (x1^2|e) ; (x2|e) ]"

    def test_cancelling_braid(self, capsys):
        assert run(capsys, "act", "[ x1 ; x2 ]", "1 -1")[1] == "[ x1 ; x2 ]"

    def test_parse_error(self, capsys):
        code, _, err = run(capsys, "act", "[ x1 ; y ]", "1")
        assert code == 2 and "error" in err

    def test_structured(self, capsys):
        code, out, _ = run(capsys, "act", "[ x1 ; x2 ]", "1", "--format", "structured")
        assert json.loads(out) == {"command": "act", "result": "[ x2 ; x2^-1 x1 x2 ]"}


class TestFtl:
    def test_length(self, capsys):
        code, out, _ = run(capsys, "ftl", COMM, "e", "--no-embed")
        assert code == 0 and out.count(";") == 6

    def test_invalid_word(self, capsys):
        assert run(capsys, "ftl", COMM, "a c")[0] == 2

    def test_deterministic(self, capsys):
        first = run(capsys, "ftl", COMM, "a b")[1]
        assert run(capsys, "ftl", COMM, "a b")[1] == first

    def test_file_input(self, capsys, tmp_path):
        path = tmp_path / "p.txt"
        path.write_text(COMM + "\n")
        assert run(capsys, "ftl", f"@{path}", "a")[1] == run(capsys, "ftl", COMM, "a")[1]

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "ftl", f"@{tmp_path / 'nope'}", "a")[0] == 2


class TestCompileWitness:
    def test_verified(self, capsys):
        code, out, _ = run(capsys, "compile-witness", COMM, "a b", "b a", "- r1 by w2 w1")
        assert code == 0 and "verified: yes (pre-embedding), yes" in out

    def test_wrong_certificate(self, capsys):
        code, out, _ = run(capsys, "compile-witness", COMM, "a b", "b a", "+ r1 by e")
        assert code == 1 and "NO" in out

    def test_empty_certificate(self, capsys):
        code, out, _ = run(
            capsys, "compile-witness", COMM, "a b", "a b", "", "--format", "structured"
        )
        rec = json.loads(out)
        assert code == 0 and rec["braid_length"] == 0 and rec["verified"]

    def test_index_error(self, capsys):
        code, _, err = run(capsys, "compile-witness", COMM, "a", "a", "+ r9 by e")
        assert code == 2 and "r9" in err


class TestOrbit:
    def test_identical(self, capsys):
        code, out, _ = run(capsys, "orbit", "[ x1 ; x2 ]", "[ x1 ; x2 ]")
        assert code == 0 and "status: found" in out and "(empty)" in out

    def test_found(self, capsys):
        code, out, _ = run(capsys, "orbit", "[ x1 ; x2 ]", "[ x2 ; x2^-1 x1 x2 ]", "--format", "structured")
        rec = json.loads(out)
        assert rec["status"] == "found" and rec["witness"] == "1"

    def test_refuted(self, capsys):
        code, out, _ = run(capsys, "orbit", "[ x1 ; x2 ]", "[ x2 ; x1 ]")
        assert code == 0 and "refuted" in out

    def test_bad_budget(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["orbit", "[ x1 ]", "[ x1 ]", "--budget-nodes", "0"])
        assert info.value.code == 2


def test_stabcheck(capsys):
    assert run(capsys, "stabcheck", "[ x1 ; x2 ]", "")[1] == "true"
    assert run(capsys, "stabcheck", "[ x1 ; x2 ]", "1")[1] == "false"


def test_wordinfo(capsys):
    code, out, _ = run(capsys, "wordinfo", "x1 x2 x1 x2", "--format", "structured")
    rec = json.loads(out)
    assert rec["root"] == "x1 x2" and rec["exponent"] == 2


def test_wordinfo_identity(capsys):
    out = run(capsys, "wordinfo", "e")[1]
    assert "root: none" in out


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "hurwitzwp", "act", "[ x1 ; x2 ]", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "[ x2 ; x2^-1 x1 x2 ]"
