"""Exact first-passage distribution for a fair coin.

Let ``X`` be the trial on which the first run of ``k`` consecutive
heads is completed.  With a fair coin every length-``n`` outcome
sequence has probability ``2**-n``, so

    P(X = n) = c(n) / 2**n

with ``c(n)`` the first-completion count from :mod:`streakcalc.counts`.
Everything in this module is exact rational arithmetic; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .counts import RunSpec, build_count_table
from .errors import DomainError

# CLI default truncation horizon, as a multiple of the run length.
DEFAULT_HORIZON_FACTOR = 64


@dataclass(frozen=True)
class PmfRow:
    """One row of the tabulated distribution: exact mass and CDF at n."""

    n: int
    count: int
    mass: Fraction
    cumulative: Fraction


def pmf(spec: RunSpec, n: int) -> Fraction:
    """P(X = n), reduced. Zero for n below the run length."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return Fraction(build_count_table(spec, n).values[n], 1 << n)


def pmf_table(spec: RunSpec, n_max: int) -> list[PmfRow]:
    """Rows for n = 1..n_max with exact running cumulative probability.

    The cumulative column is built from an integer accumulator at scale
    ``2**n`` (cum(n) = 2 cum(n-1) + c(n)), one bigint op per row rather
    than repeated re-summation.  The final cumulative is always < 1:
    total mass 1 is reached only in the limit.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    values = build_count_table(spec, n_max).values
    rows = []
    cum_scaled = 0  # cumulative numerator at denominator 2**n
    for n in range(1, n_max + 1):
        cum_scaled = 2 * cum_scaled + values[n]
        rows.append(
            PmfRow(
                n=n,
                count=values[n],
                mass=Fraction(values[n], 1 << n),
                cumulative=Fraction(cum_scaled, 1 << n),
            )
        )
    return rows


def truncated_expectation(spec: RunSpec, n_max: int) -> Fraction:
    """Exact partial sum of n * P(X = n) for n = 1..n_max.

    Monotone non-decreasing in n_max and strictly below the full
    expectation 2 (2**k - 1) for every finite horizon.
    """
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    values = build_count_table(spec, n_max).values
    acc = 0  # sum of i * c(i) * 2**(n-i), built by doubling
    for n in range(1, n_max + 1):
        acc = 2 * acc + n * values[n]
    return Fraction(acc, 1 << n_max)


def tail_mass(spec: RunSpec, n_max: int) -> Fraction:
    """Exact P(X > n_max); strictly positive, strictly decreasing for n_max >= k."""
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    values = build_count_table(spec, n_max).values
    cum_scaled = 0
    for n in range(1, n_max + 1):
        cum_scaled = 2 * cum_scaled + values[n]
    return Fraction((1 << n_max) - cum_scaled, 1 << n_max)
