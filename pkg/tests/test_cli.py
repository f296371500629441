"""Command-line behaviour: output, exit codes, failure paths."""

import json
from pathlib import Path

from xpdp import CombinerId, PairValue, ZERO
from xpdp.cli import (
    EXIT_CHECK_FAILED,
    EXIT_DATA,
    EXIT_DENY,
    EXIT_INDETERMINATE,
    EXIT_NOT_APPLICABLE,
    EXIT_PERMIT,
    EXIT_USAGE,
    main,
)

SAMPLES = Path(__file__).resolve().parent.parent / "samples"
POLICY = str(SAMPLES / "patient_policy.pol")
READ_REQ = str(SAMPLES / "request_doctor_read.req")
WRITE_REQ = str(SAMPLES / "request_doctor_write.req")


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestEval:
    def test_permit(self, capsys):
        code, out, err = run(capsys, "eval", "--policy", POLICY, "--request", READ_REQ)
        assert code == EXIT_PERMIT
        assert out == "Permit\n"
        assert err == ""

    def test_deny(self, capsys):
        code, out, _ = run(capsys, "eval", "--policy", POLICY, "--request", WRITE_REQ)
        assert code == EXIT_DENY
        assert out == "Deny\n"

    def test_not_applicable(self, capsys, tmp_path):
        req = tmp_path / "other.req"
        req.write_text("{ subject(visitor), action(sleep) }\n")
        code, out, _ = run(capsys, "eval", "--policy", POLICY, "--request", str(req))
        assert code == EXIT_NOT_APPLICABLE
        assert out == "NotApplicable\n"

    def test_indeterminate(self, capsys, tmp_path):
        req = tmp_path / "errored.req"
        req.write_text(
            "{ action(read), resource(patient_record), error:subject(doctor) }\n"
        )
        code, out, _ = run(capsys, "eval", "--policy", POLICY, "--request", str(req))
        assert code == EXIT_INDETERMINATE
        assert out == "Indeterminate{P}\n"

    def test_trace(self, capsys):
        code, out, _ = run(
            capsys, "eval", "--policy", POLICY, "--request", WRITE_REQ, "--trace"
        )
        assert code == EXIT_DENY
        lines = out.splitlines()
        assert lines[0] == "Deny"
        assert len(lines) == 9
        assert any("rule RM2" in line and "result=Deny" in line for line in lines)

    def test_structured(self, capsys):
        code, out, _ = run(
            capsys,
            "eval", "--policy", POLICY, "--request", READ_REQ,
            "--trace", "--format", "structured",
        )
        assert code == EXIT_PERMIT
        obj = json.loads(out)
        assert obj["decision"] == "Permit"
        assert obj["trace"]["kind"] == "policyset"

    def test_missing_file(self, capsys):
        code, out, err = run(capsys, "eval", "--policy", POLICY, "--request", "no_such.req")
        assert code == EXIT_DATA
        assert out == ""
        assert "no_such.req" in err

    def test_parse_error(self, capsys, tmp_path):
        bad = tmp_path / "bad.pol"
        bad.write_text("policy P {")
        code, out, err = run(capsys, "eval", "--policy", str(bad), "--request", READ_REQ)
        assert code == EXIT_DATA
        assert out == ""
        assert err.startswith("xpdp:")

    def test_missing_flag_is_usage_error(self, capsys):
        code, _, _ = run(capsys, "eval", "--policy", POLICY)
        assert code == EXIT_USAGE


class TestCheckEquivalence:
    def test_single_algorithm_zero_length(self, capsys):
        code, out, _ = run(capsys, "check-equivalence", "--algorithm", "p-o", "--max-len", "0")
        assert code == 0
        assert "p-o: 1 sequences (length <= 0), 0 counterexamples" in out

    def test_all_default_length(self, capsys):
        code, out, _ = run(capsys, "check-equivalence")
        assert code == 0
        lines = out.strip().splitlines()
        assert len(lines) == 4
        assert all("9331 sequences" in line for line in lines)
        assert all("0 counterexamples" in line for line in lines)

    def test_structured(self, capsys):
        code, out, _ = run(
            capsys, "check-equivalence", "--algorithm", "f-a", "--max-len", "2",
            "--format", "structured",
        )
        assert code == 0
        obj = json.loads(out)
        assert obj == {
            "algorithm": "f-a",
            "max_length": 2,
            "sequences_checked": 43,
            "counterexamples": 0,
        }

    def test_unknown_algorithm(self, capsys):
        code, _, err = run(capsys, "check-equivalence", "--algorithm", "x-o")
        assert code == EXIT_USAGE
        assert "x-o" in err

    def test_negative_length(self, capsys):
        code, _, err = run(capsys, "check-equivalence", "--max-len", "-1")
        assert code == EXIT_USAGE
        assert "max-len" in err

    def test_mutated_combiner_is_caught(self, capsys, monkeypatch):
        # A deliberately broken pair-side implementation must surface as
        # a counterexample and exit 70.
        import xpdp.combiners as combiners

        monkeypatch.setitem(
            combiners._PAIR_COMBINERS,
            CombinerId.PERMIT_OVERRIDES,
            lambda values: PairValue(ZERO, ZERO),
        )
        code, out, _ = run(
            capsys, "check-equivalence", "--algorithm", "p-o", "--max-len", "1"
        )
        assert code == EXIT_CHECK_FAILED
        assert "first counterexample" in out


class TestCompare:
    def test_divergent_pair(self, capsys):
        code, out, _ = run(capsys, "compare", "Indeterminate{P}", "Deny")
        assert code == 0
        assert "Indeterminate{DP}" in out
        assert "[1/2,1/2]" in out
        assert "ff" in out
        assert "{p,d}" in out
        assert out.count("DIVERGES") == 2

    def test_agreement(self, capsys):
        code, out, _ = run(capsys, "compare", "Permit", "NotApplicable")
        assert code == 0
        assert "DIVERGES" not in out

    def test_structured(self, capsys):
        code, out, _ = run(
            capsys, "compare", "Indeterminate{P}", "Deny", "--format", "structured"
        )
        assert code == 0
        obj = json.loads(out)
        assert obj["v6"] == "Indeterminate{DP}"
        assert obj["pair"] == "[1/2,1/2]"
        assert obj["belnap"] == "ff"
        assert obj["dalg"] == "{p,d}"
        assert obj["belnap_agrees"] is False
        assert obj["dalg_agrees"] is False
        assert obj["pair_agrees"] is True

    def test_unknown_decision(self, capsys):
        code, _, err = run(capsys, "compare", "Bogus", "Deny")
        assert code == EXIT_USAGE
        assert "Bogus" in err


class TestLattice:
    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "lattice", "--name", "pair9")
        assert code == 0
        assert out.startswith('digraph "pair9"')
        assert out.count("->") == 12

    def test_file_output(self, capsys, tmp_path):
        out_path = tmp_path / "po.dot"
        code, out, _ = run(capsys, "lattice", "--name", "po", "--out", str(out_path))
        assert code == 0
        assert out == ""
        assert out_path.read_text().startswith('digraph "po"')

    def test_unknown(self, capsys):
        code, _, err = run(capsys, "lattice", "--name", "nope")
        assert code == EXIT_USAGE
        assert "nope" in err


class TestUsage:
    def test_no_command(self, capsys):
        assert run(capsys, )[0] == EXIT_USAGE

    def test_unknown_command(self, capsys):
        assert run(capsys, "frobnicate")[0] == EXIT_USAGE
