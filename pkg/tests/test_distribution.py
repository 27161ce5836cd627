"""Tests for the exact fair-coin first-passage distribution."""

from fractions import Fraction

import pytest

from streakcalc.counts import RunSpec
from streakcalc.distribution import (
    pmf,
    pmf_table,
    tail_mass,
    truncated_expectation,
)
from streakcalc.errors import DomainError
from streakcalc.oracle import enumerate_counts


@pytest.mark.parametrize(
    "k, n, expected",
    [
        (3, 3, Fraction(1, 8)),
        (3, 2, Fraction(0)),
        (2, 4, Fraction(1, 8)),
        (1, 1, Fraction(1, 2)),
    ],
)
def test_pmf_examples(k, n, expected):
    assert pmf(RunSpec(k), n) == expected


def test_pmf_rejects_nonpositive_n():
    with pytest.raises(DomainError):
        pmf(RunSpec(2), 0)


def test_pmf_table_geometric_case():
    rows = pmf_table(RunSpec(1), 3)
    assert [r.mass for r in rows] == [
        Fraction(1, 2),
        Fraction(1, 4),
        Fraction(1, 8),
    ]
    assert [r.cumulative for r in rows] == [
        Fraction(1, 2),
        Fraction(3, 4),
        Fraction(7, 8),
    ]


def test_pmf_table_fibonacci_case():
    rows = pmf_table(RunSpec(2), 4)
    assert [r.mass for r in rows] == [
        Fraction(0),
        Fraction(1, 4),
        Fraction(1, 8),
        Fraction(1, 8),
    ]
    assert [r.cumulative for r in rows] == [
        Fraction(0),
        Fraction(1, 4),
        Fraction(3, 8),
        Fraction(1, 2),
    ]
    assert [r.count for r in rows] == [0, 1, 1, 2]


def test_pmf_table_all_zero_below_run_length():
    rows = pmf_table(RunSpec(5), 4)
    assert all(r.mass == 0 for r in rows)
    assert all(r.cumulative == 0 for r in rows)


@pytest.mark.parametrize("k", [1, 2, 3, 6])
def test_pmf_table_row_consistency(k):
    rows = pmf_table(RunSpec(k), 40)
    running = Fraction(0)
    for row in rows:
        assert row.mass == Fraction(row.count, 2**row.n)
        assert 0 <= row.mass <= 1
        running += row.mass
        assert row.cumulative == running
    assert rows[-1].cumulative < 1


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_pmf_denominators_are_dyadic(k):
    for n in range(1, 30):
        den = pmf(RunSpec(k), n).denominator
        assert den & (den - 1) == 0, f"denominator {den} is not a power of two"


@pytest.mark.parametrize("k", [1, 2, 3, 4, 5])
def test_pmf_matches_enumeration(k):
    for n in range(1, 15):
        assert pmf(RunSpec(k), n) == Fraction(enumerate_counts(k, n), 2**n)


def test_truncated_expectation_examples():
    assert truncated_expectation(RunSpec(1), 1) == Fraction(1, 2)
    assert truncated_expectation(RunSpec(1), 10) == Fraction(509, 256)


def test_truncated_expectation_k2_horizon_30():
    """Frozen via term-by-term summation; about 0.07 below the limit 6."""
    value = truncated_expectation(RunSpec(2), 30)
    assert value == Fraction(1591423975, 268435456)
    assert 6 - value < Fraction(8, 100)
    assert 6 - value > Fraction(7, 100)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_truncated_expectation_matches_naive_sum(k):
    naive = Fraction(0)
    for n in range(1, 41):
        naive += n * pmf(RunSpec(k), n)
        assert truncated_expectation(RunSpec(k), n) == naive


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_truncated_expectation_monotone_and_bounded(k):
    limit = Fraction(2 * (2**k - 1))
    previous = Fraction(0)
    for n in range(1, 60):
        current = truncated_expectation(RunSpec(k), n)
        assert previous <= current < limit
        previous = current


def test_tail_mass_examples():
    assert tail_mass(RunSpec(1), 4) == Fraction(1, 16)
    assert tail_mass(RunSpec(3), 2) == Fraction(1)
    assert tail_mass(RunSpec(2), 10) == Fraction(9, 64)


@pytest.mark.parametrize("k", [1, 2, 3, 5])
def test_tail_mass_positive_and_decreasing(k):
    previous = None
    for n in range(k, 6 * k + 20):
        tail = tail_mass(RunSpec(k), n)
        assert tail > 0
        if previous is not None:
            assert tail < previous
        previous = tail


def test_tail_complements_table_cumulative():
    for k in (1, 2, 4):
        rows = pmf_table(RunSpec(k), 25)
        assert tail_mass(RunSpec(k), 25) == 1 - rows[-1].cumulative


def test_tail_mass_matches_enumeration():
    """P(X > n) must equal the exhaustive count of run-free prefixes."""
    from streakcalc.oracle import enumerate_first_run_histogram

    for k in (2, 3):
        for n in (8, 12):
            _, no_run = enumerate_first_run_histogram(k, n)
            assert tail_mass(RunSpec(k), n) == Fraction(no_run, 2**n)
