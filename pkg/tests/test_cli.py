"""Tests for the command-line surface: formats, determinism, exit codes."""

import json

import pytest

from streakcalc.cli import (
    EXIT_CAPACITY,
    EXIT_OK,
    EXIT_USAGE,
    EXIT_VERIFY_FAILED,
    main,
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_counts_csv(capsys):
    code, out, err = run_cli(
        capsys, "counts", "--k", "3", "--n-max", "6", "--format", "csv"
    )
    assert code == EXIT_OK
    assert err == ""
    lines = out.split("\r\n")
    assert lines[0] == "n,count"
    assert lines[1] == "0,0"
    assert lines[7] == "6,4"


def test_counts_single_row(capsys):
    code, out, _ = run_cli(capsys, "counts", "--k", "1", "--n-max", "0")
    assert code == EXIT_OK
    envelope = json.loads(out)
    assert envelope["rows"] == [{"n": 0, "count": 0}]


def test_counts_rejects_bad_k(capsys):
    code, out, err = run_cli(capsys, "counts", "--k", "0", "--n-max", "3")
    assert code == EXIT_USAGE
    assert out == ""
    assert "run length" in err


def test_counts_envelope_shape_and_determinism(capsys):
    code, first, _ = run_cli(capsys, "counts", "--k", "2", "--n-max", "8")
    assert code == EXIT_OK
    code, second, _ = run_cli(capsys, "counts", "--k", "2", "--n-max", "8")
    assert first == second
    envelope = json.loads(first)
    assert list(envelope) == ["command", "format_version", "parameters", "rows"]
    assert envelope["command"] == "counts"
    assert envelope["parameters"]["k"] == 2
    assert envelope["parameters"]["n_max"] == 8


def test_counts_capacity_exit(capsys):
    code, out, err = run_cli(capsys, "counts", "--k", "2", "--n-max", "200000")
    assert code == EXIT_CAPACITY
    assert out == ""
    assert "capacity" in err


def test_counts_capacity_env_override(capsys, monkeypatch):
    monkeypatch.setenv("STREAKCALC_TABLE_CAP", "10")
    code, _, err = run_cli(capsys, "counts", "--k", "2", "--n-max", "20")
    assert code == EXIT_CAPACITY
    assert "STREAKCALC_TABLE_CAP" in err
    monkeypatch.setenv("STREAKCALC_TABLE_CAP", "1000")
    code, out, _ = run_cli(capsys, "counts", "--k", "2", "--n-max", "20")
    assert code == EXIT_OK


def test_expect_reproduces_expectation_column(capsys):
    code, out, _ = run_cli(capsys, "expect", "--k-min", "1", "--k-max", "5")
    assert code == EXIT_OK
    envelope = json.loads(out)
    assert [row["closed_form"] for row in envelope["rows"]] == [
        "2", "6", "14", "30", "62",
    ]
    assert [row["half_derivative"] for row in envelope["rows"]] == [
        "2", "6", "14", "30", "62",
    ]
    assert all(row["exact_agreement"] is True for row in envelope["rows"])
    assert any("k=2" in note for note in envelope["notes"])


def test_expect_truncated_column_is_exact_string(capsys):
    from fractions import Fraction

    from streakcalc.counts import RunSpec
    from streakcalc.distribution import truncated_expectation

    code, out, _ = run_cli(
        capsys, "expect", "--k-min", "4", "--k-max", "4", "--n-max", "256"
    )
    assert code == EXIT_OK
    row = json.loads(out)["rows"][0]
    expected = truncated_expectation(RunSpec(4), 256)
    assert row["series_truncated"] == str(expected)
    # about 0.0245 below the limit 30 at this horizon
    assert Fraction(2, 100) < 30 - expected < Fraction(3, 100)


def test_expect_rejects_empty_range(capsys):
    code, _, err = run_cli(capsys, "expect", "--k-min", "2", "--k-max", "1")
    assert code == EXIT_USAGE
    assert "empty range" in err


def test_expect_with_simulation_column(capsys):
    code, out, _ = run_cli(
        capsys,
        "expect", "--k-min", "1", "--k-max", "2",
        "--simulate", "--trials", "20000", "--seed", "3",
    )
    assert code == EXIT_OK
    rows = json.loads(out)["rows"]
    assert abs(rows[0]["monte_carlo_mean"] - 2) < 0.1
    assert abs(rows[1]["monte_carlo_mean"] - 6) < 0.3


def test_simulate_single_trial(capsys):
    code, out, _ = run_cli(
        capsys, "simulate", "--k", "1", "--trials", "1", "--seed", "9"
    )
    assert code == EXIT_OK
    envelope = json.loads(out)
    row = envelope["rows"][0]
    assert row["completed_trials"] + row["truncated_trials"] == 1
    assert row["seed"] == 9
    assert row["rng_algorithm"] == "numpy-pcg64"
    assert envelope["parameters"]["p"] == "1/2"


def test_simulate_deterministic_output(capsys):
    args = ("simulate", "--k", "2", "--trials", "5000", "--seed", "21")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    assert first == second


def test_simulate_rejects_bad_probability(capsys):
    code, _, err = run_cli(
        capsys, "simulate", "--k", "1", "--p", "1.5", "--trials", "10"
    )
    assert code == EXIT_USAGE
    assert "probability" in err
    code, _, err = run_cli(
        capsys, "simulate", "--k", "1", "--p", "zebra", "--trials", "10"
    )
    assert code == EXIT_USAGE


def test_simulate_csv_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "simulate", "--k", "1", "--trials", "100", "--seed", "4",
        "--format", "csv",
    )
    assert code == EXIT_OK
    lines = out.split("\r\n")
    assert lines[0] == (
        "completed_trials,truncated_trials,sample_mean,sample_variance,"
        "seed,rng_algorithm"
    )
    assert lines[1].endswith("numpy-pcg64")


def test_verify_passes_and_names_checks(capsys):
    code, out, _ = run_cli(capsys, "verify", "--k-max", "5")
    assert code == EXIT_OK
    rows = json.loads(out)["rows"]
    assert all(row["result"] == "PASS" for row in rows)
    names = [row["check"] for row in rows]
    assert "recurrence-vs-enumeration[k=5]" in names
    assert "expectation-agreement[k=3]" in names


def test_verify_smallest_instance_mentions_normalization(capsys):
    code, out, _ = run_cli(capsys, "verify", "--k-max", "1")
    assert code == EXIT_OK
    rows = json.loads(out)["rows"]
    normalization = [row for row in rows if row["check"] == "y(1/2)=1[k=1]"]
    assert len(normalization) == 1
    assert normalization[0]["result"] == "PASS"


def test_verify_rejects_bad_range(capsys):
    code, _, err = run_cli(capsys, "verify", "--k-max", "0")
    assert code == EXIT_USAGE
    assert err != ""


def test_usage_error_on_unknown_command(capsys):
    code, _, _ = run_cli(capsys, "frobnicate")
    assert code == EXIT_USAGE


def test_usage_error_on_missing_required_flag(capsys):
    code, _, _ = run_cli(capsys, "counts", "--n-max", "3")
    assert code == EXIT_USAGE


def test_exit_codes_are_distinct():
    assert len({EXIT_OK, EXIT_VERIFY_FAILED, EXIT_USAGE, EXIT_CAPACITY}) == 4
