import json
from fractions import Fraction

import pytest

from hextiling.cli import (
    SWEEP_HEADER,
    SweepRow,
    main,
    rows_from_csv,
    rows_from_json,
    rows_to_csv,
    rows_to_json,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_count_command(capsys):
    code, out, _ = run_cli(capsys, "count", "--sides", "2", "2")
    assert code == 0 and out.strip() == "20"
    code, out, _ = run_cli(capsys, "count", "--sides", "1", "1")
    assert code == 0 and out.strip() == "2"
    code, out, _ = run_cli(capsys, "count", "--sides", "3", "4")
    assert code == 0 and out.strip() == "4116"


def test_fixed_command(capsys):
    code, out, _ = run_cli(capsys, "fixed", "--sides", "2", "2", "--l", "1")
    assert code == 0
    assert out.splitlines() == ["total 20", "fixed 8", "proportion 2/5"]

    code, out, _ = run_cli(capsys, "fixed", "--sides", "3", "4", "--l", "2")
    assert "proportion 1/3" in out

    code, out, _ = run_cli(capsys, "fixed", "--sides", "3", "3", "--l", "2")
    assert out.splitlines()[:2] == ["total 980", "fixed 252"]


def test_fixed_output_is_consistent(capsys):
    _, out, _ = run_cli(capsys, "fixed", "--sides", "3", "2", "--l", "2")
    lines = dict(line.split(" ", 1) for line in out.splitlines())
    assert Fraction(lines["proportion"]) == Fraction(int(lines["fixed"]), int(lines["total"]))


def test_fixed_errors(capsys):
    code, _, err = run_cli(capsys, "fixed", "--sides", "1", "1", "--l", "1")
    assert code == 2 and "no rhombus" in err
    code, _, err = run_cli(capsys, "fixed", "--sides", "2", "2", "--l", "5")
    assert code == 2 and "l must lie" in err
    code, _, err = run_cli(capsys, "fixed", "--sides", "2", "0", "--l", "1")
    assert code == 2 and "M=0" in err


def test_count_invalid_sides(capsys):
    code, _, err = run_cli(capsys, "count", "--sides", "0", "2")
    assert code == 2 and "error" in err


def test_unknown_suite_is_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "--suite", "nonsense"])
    assert exc.value.code == 2


def test_verify_suite_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "lemma5",
                           "--max-n", "4", "--max-m", "4")
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("PASS") for line in lines[:-1])
    assert lines[-1] == "lemma5: 20/20 checks passed"


def test_verify_failure_sets_exit_code(capsys, monkeypatch):
    from hextiling import verify

    def broken(**_):
        return [verify.CaseResult("forced failure", False, "injected")]

    monkeypatch.setitem(verify.SUITES, "corollary", broken)
    code, out, err = run_cli(capsys, "verify", "--suite", "corollary")
    assert code == 1
    assert "FAIL forced failure" in out
    assert "FAILED" in err


def test_verify_hyp_chain_reports_skips(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "hyp-chain",
                           "--max-n", "4", "--max-m", "1")
    assert code == 0
    assert any(line.startswith("SKIP") for line in out.splitlines())
    assert "skipped" in out.strip().splitlines()[-1]


def test_commands_are_deterministic(capsys):
    first = run_cli(capsys, "sweep", "--a", "0.5", "--b", "0.5",
                    "--n", "4", "8", "12")
    second = run_cli(capsys, "sweep", "--a", "0.5", "--b", "0.5",
                     "--n", "4", "8", "12")
    assert first == second


def test_sweep_csv_shape(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--a", "0.5", "--b", "0.5",
                           "--n", "10", "20", "40")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == SWEEP_HEADER
    errors = [float(line.split(",")[-1]) for line in lines[1:]]
    assert errors == sorted(errors, reverse=True)  # shrinking toward the limit
    limits = {line.split(",")[-2] for line in lines[1:]}
    assert len(limits) == 1  # the limit column is constant


def test_sweep_clamps_tiny_parameters(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--a", "0.4", "--b", "0.01",
                           "--n", "3")
    assert code == 0
    row = out.strip().splitlines()[1].split(",")
    assert (row[0], row[1], row[2]) == ("3", "1", "1")


def test_sweep_rejects_bad_ratios(capsys):
    code, _, err = run_cli(capsys, "sweep", "--a", "0.5", "--b", "1.5", "--n", "4")
    assert code == 2 and "0 < b < 1" in err


def test_sweep_roundtrip_csv_and_json():
    rows = [SweepRow.compute(n, 0.5, 0.25) for n in (6, 12, 24)]
    assert rows_from_csv(rows_to_csv(rows)) == rows
    assert rows_from_json(rows_to_json(rows)) == rows


def test_sweep_json_rationals_are_strings(capsys):
    code, out, _ = run_cli(capsys, "sweep", "--a", "0.5", "--b", "0.5",
                           "--n", "8", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert isinstance(payload, list)
    num, den = payload[0]["proportion_exact"].split("/")
    assert int(den) > 0
    assert abs(int(num) / int(den) - payload[0]["proportion_float"]) < 1e-12
