"""Command-line interface.

Subcommands: ``counts``, ``expect``, ``simulate``, ``verify``.  Output
goes to stdout as a single JSON envelope (default) or an RFC-4180-style
CSV with a header row; diagnostics go to stderr.  Exact values are
serialized as fraction strings ("num/den") or integers, never floats;
floating point appears only in clearly labeled Monte Carlo columns.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 capacity error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import counts as counts_mod
from . import distribution, genfunc, oracle
from .counts import RunSpec
from .errors import CapacityError, DomainError, SingularityError

FORMAT_VERSION = "1.0.0"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_CAPACITY = 3


def _fraction_arg(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="streakcalc",
        description=(
            "Exact distribution and expectation of the number of fair coin "
            "tosses until the first run of k consecutive heads."
        ),
        epilog=(
            f"The environment variable {counts_mod.TABLE_CAP_ENV} overrides "
            f"the count-table capacity (default {counts_mod.DEFAULT_TABLE_CAP} entries)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_counts = sub.add_parser(
        "counts", help="table of first-completion counts c(n) for n = 0..n_max"
    )
    p_counts.add_argument("--k", type=int, required=True, help="run length")
    p_counts.add_argument("--n-max", type=int, required=True, help="last table index")
    p_counts.add_argument("--format", choices=("json", "csv"), default="json")

    p_expect = sub.add_parser(
        "expect", help="expectation table comparing all computation routes"
    )
    p_expect.add_argument("--k-min", type=int, required=True)
    p_expect.add_argument("--k-max", type=int, required=True)
    p_expect.add_argument(
        "--n-max", type=int, default=None,
        help="series truncation horizon (default 64*k per row)",
    )
    p_expect.add_argument(
        "--simulate", action="store_true",
        help="append a Monte Carlo mean column",
    )
    p_expect.add_argument("--trials", type=int, default=100_000)
    p_expect.add_argument("--seed", type=int, default=0)
    p_expect.add_argument("--format", choices=("json", "csv"), default="json")

    p_sim = sub.add_parser("simulate", help="Monte Carlo run with full report")
    p_sim.add_argument("--k", type=int, required=True)
    p_sim.add_argument(
        "--p", type=_fraction_arg, default=Fraction(1, 2),
        help="success probability as a fraction or decimal (default 1/2)",
    )
    p_sim.add_argument("--trials", type=int, default=100_000)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--max-steps", type=int, default=None)
    p_sim.add_argument("--format", choices=("json", "csv"), default="json")

    p_verify = sub.add_parser(
        "verify", help="cross-validation battery over k = 1..k_max"
    )
    p_verify.add_argument("--k-max", type=int, required=True)
    p_verify.add_argument("--format", choices=("json", "csv"), default="json")

    return parser


@dataclass(frozen=True)
class OutputEnvelope:
    """Machine-readable result wrapper.

    ``parameters`` echoes every input affecting the result, including
    seeds and truncation bounds, so identical invocations are
    identifiable and reproduce byte-identical output.
    """

    command: str
    parameters: dict
    rows: list
    format_version: str = FORMAT_VERSION
    notes: list = field(default_factory=list)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "format_version": self.format_version,
            "parameters": self.parameters,
            "rows": self.rows,
        }
        if self.notes:
            payload["notes"] = self.notes
        return json.dumps(payload, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        if self.rows:
            writer = csv.DictWriter(
                buf, fieldnames=list(self.rows[0]), lineterminator="\r\n"
            )
            writer.writeheader()
            for row in self.rows:
                writer.writerow({key: _csv_cell(val) for key, val in row.items()})
        return buf.getvalue()


def _emit(command, parameters, rows, fmt, notes=None) -> None:
    envelope = OutputEnvelope(
        command=command, parameters=parameters, rows=rows, notes=notes or []
    )
    sys.stdout.write(envelope.to_csv() if fmt == "csv" else envelope.to_json())


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    return str(value)


def _cmd_counts(args) -> int:
    spec = RunSpec(args.k)
    if args.n_max < 0:
        raise DomainError(f"--n-max must be >= 0, got {args.n_max}")
    table = counts_mod.build_count_table(spec, args.n_max)
    rows = [{"n": n, "count": c} for n, c in enumerate(table.values)]
    _emit(
        "counts",
        {"k": args.k, "n_max": args.n_max, "format": args.format},
        rows,
        args.format,
    )
    return EXIT_OK


def _cmd_expect(args) -> int:
    if args.k_min < 1:
        raise DomainError(f"--k-min must be >= 1, got {args.k_min}")
    if args.k_max < args.k_min:
        raise DomainError(
            f"empty range: --k-min {args.k_min} exceeds --k-max {args.k_max}"
        )
    if args.n_max is not None and args.n_max < 1:
        raise DomainError(f"--n-max must be >= 1, got {args.n_max}")
    rows = []
    notes = []
    all_agree = True
    for k in range(args.k_min, args.k_max + 1):
        spec = RunSpec(k)
        horizon = args.n_max or distribution.DEFAULT_HORIZON_FACTOR * k
        closed = genfunc.expectation_closed_form(spec)
        derived = genfunc.expectation(spec)
        truncated = distribution.truncated_expectation(spec, horizon)
        agree = closed == derived
        all_agree = all_agree and agree
        row = {
            "k": k,
            "closed_form": str(closed),
            "half_derivative": str(derived),
            "series_n_max": horizon,
            "series_truncated": str(truncated),
            "exact_agreement": agree,
        }
        if args.simulate:
            report = oracle.simulate(
                oracle.SimConfig(
                    k=k,
                    success_prob=Fraction(1, 2),
                    trials=args.trials,
                    seed=args.seed,
                )
            )
            row["monte_carlo_mean"] = report.sample_mean
        rows.append(row)
        if k == 2:
            notes.append(
                "k=2: both exact routes give 6; a published table of these "
                "expectations prints 2 for this row, which contradicts the "
                "closed form 2*(2^k - 1) it accompanies; 6 is correct."
            )
    _emit(
        "expect",
        {
            "k_min": args.k_min,
            "k_max": args.k_max,
            "n_max": args.n_max,
            "simulate": args.simulate,
            "trials": args.trials if args.simulate else None,
            "seed": args.seed if args.simulate else None,
            "format": args.format,
        },
        rows,
        args.format,
        notes=notes,
    )
    return EXIT_OK if all_agree else EXIT_VERIFY_FAILED


def _cmd_simulate(args) -> int:
    config = oracle.SimConfig(
        k=args.k,
        success_prob=args.p,
        trials=args.trials,
        seed=args.seed,
        max_steps_per_trial=args.max_steps,
    )
    report = oracle.simulate(config)
    rows = [
        {
            "completed_trials": report.completed_trials,
            "truncated_trials": report.truncated_trials,
            "sample_mean": report.sample_mean,
            "sample_variance": report.sample_variance,
            "seed": report.seed,
            "rng_algorithm": report.rng_algorithm,
        }
    ]
    _emit(
        "simulate",
        {
            "k": args.k,
            "p": str(config.success_prob),
            "trials": args.trials,
            "seed": args.seed,
            "max_steps_per_trial": config.max_steps_per_trial,
            "format": args.format,
        },
        rows,
        args.format,
    )
    return EXIT_OK


def _verify_checks(k_max: int):
    half = Fraction(1, 2)
    for k in range(1, k_max + 1):
        spec = RunSpec(k)

        mismatches = []
        for n in range(1, min(2 * k + 8, 18) + 1):
            got = counts_mod.count_at(spec, n)
            want = oracle.enumerate_counts(k, n)
            if got != want:
                mismatches.append(f"n={n}: recurrence {got} != enumeration {want}")
        yield f"recurrence-vs-enumeration[k={k}]", mismatches

        problems = []
        n0 = min(2 * k + 6, 16)
        ends, no_run = oracle.enumerate_first_run_histogram(k, n0)
        if sum(ends) + no_run != 1 << n0:
            problems.append(
                f"partition broken: {sum(ends)} + {no_run} != 2^{n0}"
            )
        for m in range(1, n0 + 1):
            want = counts_mod.count_at(spec, m) << (n0 - m)
            if ends[m] != want:
                problems.append(f"end-at-{m}: {ends[m]} != {want}")
        cdf_enum = Fraction(sum(ends), 1 << n0)
        cdf_exact = 1 - distribution.tail_mass(spec, n0)
        if cdf_enum != cdf_exact:
            problems.append(f"cdf mismatch: {cdf_enum} != {cdf_exact}")
        yield f"pmf-partition-vs-enumeration[k={k}]", problems

        y_half = genfunc.eval_y(spec, half)
        yield (
            f"y(1/2)=1[k={k}]",
            [] if y_half == 1 else [f"y(1/2) = {y_half}"],
        )

        problems = []
        derived = genfunc.expectation(spec)
        closed = genfunc.expectation_closed_form(spec)
        if derived != closed:
            problems.append(f"derivative route {derived} != closed form {closed}")
        truncated = distribution.truncated_expectation(
            spec, distribution.DEFAULT_HORIZON_FACTOR * k
        )
        if not truncated < closed:
            problems.append(f"truncated {truncated} not below {closed}")
        yield f"expectation-agreement[k={k}]", problems


def _cmd_verify(args) -> int:
    if args.k_max < 1:
        raise DomainError(f"--k-max must be >= 1, got {args.k_max}")
    rows = []
    any_failed = False
    for name, problems in _verify_checks(args.k_max):
        ok = not problems
        any_failed = any_failed or not ok
        rows.append(
            {
                "check": name,
                "result": "PASS" if ok else "FAIL",
                "discrepancy": "0" if ok else "; ".join(problems),
            }
        )
    _emit(
        "verify",
        {"k_max": args.k_max, "format": args.format},
        rows,
        args.format,
    )
    return EXIT_OK if not any_failed else EXIT_VERIFY_FAILED


_DISPATCH = {
    "counts": _cmd_counts,
    "expect": _cmd_expect,
    "simulate": _cmd_simulate,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the message
        return int(exc.code or 0)
    try:
        return _DISPATCH[args.command](args)
    except CapacityError as exc:
        print(f"streakcalc: capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (DomainError, SingularityError) as exc:
        print(f"streakcalc: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
