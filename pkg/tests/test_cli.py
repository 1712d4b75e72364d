import csv
import io
import json

import pytest

from nilpath.cli import run


def run_cli(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


class TestExitCodes:
    def test_pass_is_zero(self, capsys):
        code, out, _ = run_cli(capsys, "check-nilpotent", "--m", "3")
        assert code == 0
        assert "PASS" in out

    def test_fail_is_one(self, capsys):
        code, out, _ = run_cli(capsys, "check-nilpotent", "--n", "2")
        assert code == 1
        assert "FAIL" in out

    def test_unknown_command_is_two(self, capsys):
        assert run_cli(capsys, "frobnicate")[0] == 2

    def test_malformed_integer_is_two(self, capsys):
        assert run_cli(capsys, "check-nilpotent", "--m", "three")[0] == 2

    def test_missing_required_flag_is_two(self, capsys):
        assert run_cli(capsys, "walk-count", "--n", "5")[0] == 2

    def test_no_command_is_two(self, capsys):
        assert run_cli(capsys)[0] == 2

    def test_help_is_zero(self, capsys):
        assert run_cli(capsys, "--help")[0] == 0

    def test_domain_error_is_two_with_message(self, capsys):
        code, _, err = run_cli(capsys, "walk-count", "--n", "5", "--x", "9", "--y", "1", "--k", "2")
        assert code == 2
        assert "outside" in err


class TestCheckNilpotent:
    def test_reports_index(self, capsys):
        code, parsed, _ = run_json(capsys, "check-nilpotent", "--m", "3")
        assert code == 0
        assert parsed["parameters"] == {"m": 3, "n": 7}
        rows = {d["check"]: d for d in parsed["details"]}
        assert rows["nilpotency index"]["observed"] == 7

    def test_explicit_n_form(self, capsys):
        code, parsed, _ = run_json(capsys, "check-nilpotent", "--n", "15")
        assert code == 0
        assert parsed["parameters"]["m"] == 4

    def test_m_and_n_conflict(self, capsys):
        assert run_cli(capsys, "check-nilpotent", "--m", "3", "--n", "7")[0] == 2


class TestWalkCount:
    def test_exact_mode(self, capsys):
        code, parsed, _ = run_json(
            capsys, "walk-count", "--n", "7", "--x", "3", "--y", "2", "--k", "7"
        )
        assert code == 0
        assert parsed["details"][0]["observed"] == 28

    def test_parity_mode(self, capsys):
        code, parsed, _ = run_json(
            capsys,
            "walk-count", "--n", "7", "--x", "3", "--y", "2", "--k", "7", "--parity",
        )
        assert code == 0
        assert parsed["details"][0]["observed"] == 0

    def test_modes_conflict(self, capsys):
        code, _, _ = run_cli(
            capsys,
            "walk-count", "--n", "7", "--x", "1", "--y", "1", "--k", "2",
            "--exact", "--parity",
        )
        assert code == 2


class TestVerifyLemma:
    def test_small_table_passes(self, capsys):
        code, parsed, _ = run_json(capsys, "verify-lemma", "--n", "3", "--max-k", "6")
        assert code == 0
        assert len(parsed["details"]) == 7
        assert all(d["observed"] == "0 mismatches" for d in parsed["details"])

    def test_cap_guard(self, capsys):
        code, _, err = run_cli(capsys, "verify-lemma", "--n", "3", "--max-k", "99")
        assert code == 2
        assert "cap" in err


class TestVerifyTheorem:
    def test_single_case(self, capsys):
        code, parsed, _ = run_json(
            capsys, "verify-theorem", "--m", "3", "--k", "7", "--x", "3", "--y", "2"
        )
        assert code == 0
        assert parsed["command"] == "verify-theorem"
        assert parsed["verdict"] == "pass"

    def test_below_bound_is_usage_error(self, capsys):
        code, _, err = run_cli(
            capsys, "verify-theorem", "--m", "3", "--k", "5", "--x", "1", "--y", "1"
        )
        assert code == 2
        assert "k >= n" in err

    def test_missing_flags_is_usage_error(self, capsys):
        code, _, err = run_cli(capsys, "verify-theorem", "--m", "3", "--k", "7")
        assert code == 2
        assert "--x" in err

    def test_all_flag_conflicts_with_point_query(self, capsys):
        code, _, _ = run_cli(capsys, "verify-theorem", "--all", "--m", "2")
        assert code == 2

    def test_full_sweep(self, capsys):
        code, parsed, _ = run_json(capsys, "verify-theorem", "--all")
        assert code == 0
        assert len(parsed["details"]) == 20  # 4 values of m, 5 lengths each
        assert all(d["observed"].startswith("0 failures") for d in parsed["details"])


class TestInvolutionTest:
    def test_seven_path_sweep(self, capsys):
        code, parsed, _ = run_json(capsys, "involution-test", "--m", "3", "--k", "8")
        assert code == 0
        rows = {d["check"]: d for d in parsed["details"]}
        assert rows["class-3 walks tested"]["observed"] > 0
        assert rows["no fixed points"]["observed"] == 0

    def test_single_vertex_is_usage_error(self, capsys):
        assert run_cli(capsys, "involution-test", "--m", "1", "--k", "3")[0] == 2

    def test_cap_guard(self, capsys):
        assert run_cli(capsys, "involution-test", "--m", "3", "--k", "99")[0] == 2


class TestCensus:
    def test_values_and_partition(self, capsys):
        code, parsed, _ = run_json(
            capsys,
            "census", "--n", "7", "--pivot", "4", "--x", "3", "--y", "2", "--k", "7",
        )
        assert code == 0
        rows = {d["check"]: d for d in parsed["details"]}
        assert rows["class 1 (pivot never visited)"]["observed"] == 8
        assert rows["class 2 (pivot visited once)"]["observed"] == 8
        assert rows["class 3 (pivot visited twice or more)"]["observed"] == 12
        assert rows["classes partition all walks"]["expected"] == 28


class TestNaiveDemo:
    def test_witness_found_on_seven_path(self, capsys):
        code, parsed, _ = run_json(capsys, "naive-demo", "--n", "7", "--k", "7")
        assert code == 0
        rows = {d["check"]: d for d in parsed["details"]}
        assert rows["witness walk"]["observed"] == "1-2-3-4-3-2-1-2"
        assert rows["reflecting at the naive pivot"]["observed"] == "out of bounds"

    def test_no_witness_is_a_failing_demo(self, capsys):
        code, parsed, _ = run_json(capsys, "naive-demo", "--n", "3", "--k", "3")
        assert code == 1
        assert parsed["verdict"] == "fail"

    def test_env_cap_override(self, capsys, monkeypatch):
        monkeypatch.setenv("NILPATH_ENUM_CAP", "3")
        code, _, err = run_cli(capsys, "naive-demo", "--n", "7", "--k", "7")
        assert code == 2
        assert "cap" in err

    def test_env_cap_must_be_integer(self, capsys, monkeypatch):
        monkeypatch.setenv("NILPATH_ENUM_CAP", "lots")
        code, _, err = run_cli(capsys, "naive-demo", "--n", "7", "--k", "7")
        assert code == 2
        assert "NILPATH_ENUM_CAP" in err


class TestCharpolyCommand:
    def test_monomial_check_passes(self, capsys):
        code, parsed, _ = run_json(
            capsys, "charpoly", "--n", "7", "--check-monomial"
        )
        assert code == 0
        assert parsed["details"][0]["observed"] == "x^7"

    def test_monomial_check_fails_off_family(self, capsys):
        code, parsed, _ = run_json(
            capsys, "charpoly", "--n", "6", "--check-monomial"
        )
        assert code == 1
        rows = {d["check"]: d for d in parsed["details"]}
        assert rows["equals x^6"]["observed"] == "no"

    def test_plain_report_passes_anywhere(self, capsys):
        assert run_cli(capsys, "charpoly", "--n", "6")[0] == 0


class TestBench:
    def test_small_sweep(self, capsys):
        code, parsed, _ = run_json(capsys, "bench", "--max-m", "4")
        assert code == 0
        assert len(parsed["details"]) == 4
        assert all(d["observed"] == "zero matrix" for d in parsed["details"])
        assert all("ms" in d["provenance"] for d in parsed["details"])


class TestOutputFormats:
    def test_csv_detail_rows(self, capsys):
        code, out, _ = run_cli(
            capsys, "check-nilpotent", "--m", "3", "--format", "csv"
        )
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == ["check", "expected", "observed", "provenance"]
        assert len(rows) == 4

    def test_json_key_order(self, capsys):
        _, out, _ = run_cli(
            capsys, "walk-count", "--n", "3", "--x", "1", "--y", "1", "--k", "2",
            "--format", "json",
        )
        parsed = json.loads(out, object_pairs_hook=list)
        assert [k for k, _ in parsed] == [
            "command",
            "parameters",
            "verdict",
            "details",
            "elapsed_ms",
        ]

    def test_identical_argv_identical_report(self, capsys):
        argv = ["census", "--n", "7", "--pivot", "4", "--x", "1", "--y", "1",
                "--k", "8", "--format", "json"]
        run(argv)
        first = json.loads(capsys.readouterr().out)
        run(argv)
        second = json.loads(capsys.readouterr().out)
        first.pop("elapsed_ms")
        second.pop("elapsed_ms")
        assert first == second

    def test_rejects_unknown_format(self, capsys):
        code, _, _ = run_cli(
            capsys, "check-nilpotent", "--m", "2", "--format", "yaml"
        )
        assert code == 2


class TestConsoleEntry:
    def test_console_main_exits_with_run_code(self, capsys, monkeypatch):
        from nilpath.cli import console_main

        monkeypatch.setattr("sys.argv", ["nilpath", "charpoly", "--n", "3"])
        with pytest.raises(SystemExit) as exc:
            console_main()
        assert exc.value.code == 0
