"""Closed-form evaluation of the count generating function.

The counting series is ``y(r) = sum_{i>=k} c(i) r**i`` with ``c(i)``
the first-completion counts.  Multiplying the series by successive
powers of r and subtracting telescopes the k-step recurrence away,
leaving the closed form

    y(r) = r**k (1 - r) / (1 - 2 r + r**(k+1))

valid wherever the series converges (it does on (0, 1/2], and
``y(1/2) = 1`` exactly, which is the statement that the first-passage
distribution has total mass one).  Differentiating term by term links
the series to the expected waiting time:

    E(X) = (1/2) y'(1/2) = 2 (2**k - 1)

Two independent routes to the derivative are provided.  All arithmetic
is exact rational; comparisons between routes are exact equality.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .counts import RunSpec, build_count_table
from .errors import DomainError, SingularityError

Rational = Fraction | int | str


def _as_fraction(r: Rational) -> Fraction:
    try:
        return Fraction(r)
    except (ValueError, TypeError, ZeroDivisionError):
        raise DomainError(f"not an exact rational: {r!r}")


def _check_open_unit_interval(r: Fraction) -> None:
    if not 0 < r < 1:
        raise DomainError(f"r must lie strictly inside (0, 1), got {r}")


def denominator_core(spec: RunSpec, r: Rational) -> Fraction:
    """The shared denominator 1 - 2r + r**(k+1), exactly."""
    r = _as_fraction(r)
    return 1 - 2 * r + r ** (spec.k + 1)


@dataclass(frozen=True)
class GenFuncEval:
    """Bundle of y, y' and the denominator at one evaluation point."""

    k: int
    r: Fraction
    y: Fraction
    y_prime: Fraction
    denominator_core: Fraction

    def __post_init__(self) -> None:
        if self.denominator_core == 0:
            raise SingularityError(
                f"denominator 1 - 2r + r**{self.k + 1} is zero at r = {self.r}"
            )
        expected = self.r**self.k * (1 - self.r) / self.denominator_core
        if self.y != expected:
            raise DomainError(
                f"inconsistent record: y = {self.y} but closed form gives {expected}"
            )


def eval_y(spec: RunSpec, r: Rational) -> Fraction:
    """Closed form of the counting series at r in (0, 1)."""
    r = _as_fraction(r)
    _check_open_unit_interval(r)
    denom = denominator_core(spec, r)
    if denom == 0:
        raise SingularityError(
            f"denominator 1 - 2r + r**{spec.k + 1} is zero at r = {r}"
        )
    return r**spec.k * (1 - r) / denom


def eval_y_prime(spec: RunSpec, r: Rational) -> Fraction:
    """Derivative of the closed form, as a single simplified fraction:

        y'(r) = r**(k-1) (-r**(k+1) + 2k r**2 - 3k r + k + r)
                / (1 - 2r + r**(k+1))**2
    """
    r = _as_fraction(r)
    _check_open_unit_interval(r)
    k = spec.k
    denom = denominator_core(spec, r)
    if denom == 0:
        raise SingularityError(
            f"denominator 1 - 2r + r**{k + 1} is zero at r = {r}"
        )
    poly = -(r ** (k + 1)) + 2 * k * r**2 - 3 * k * r + k + r
    return r ** (k - 1) * poly / denom**2


def eval_y_prime_quotient_rule(spec: RunSpec, r: Rational) -> Fraction:
    """Derivative rederived via the quotient rule on y = N/D.

    Independent cross-check for :func:`eval_y_prime`: with
    N = r**k (1-r) and D = 1 - 2r + r**(k+1),

        y' = (N' D - N D') / D**2,
        N' = k r**(k-1) (1-r) - r**k,   D' = -2 + (k+1) r**k.
    """
    r = _as_fraction(r)
    _check_open_unit_interval(r)
    k = spec.k
    d = denominator_core(spec, r)
    if d == 0:
        raise SingularityError(
            f"denominator 1 - 2r + r**{k + 1} is zero at r = {r}"
        )
    n = r**k * (1 - r)
    n_prime = k * r ** (k - 1) * (1 - r) - r**k
    d_prime = -2 + (k + 1) * r**k
    return (n_prime * d - n * d_prime) / d**2


def evaluate(spec: RunSpec, r: Rational) -> GenFuncEval:
    """Evaluate y, y' and the denominator at one point, self-checked."""
    r = _as_fraction(r)
    return GenFuncEval(
        k=spec.k,
        r=r,
        y=eval_y(spec, r),
        y_prime=eval_y_prime(spec, r),
        denominator_core=denominator_core(spec, r),
    )


def expectation(spec: RunSpec) -> Fraction:
    """Expected number of trials until the first k-run: (1/2) y'(1/2).

    Only r = 1/2 carries the probabilistic meaning (fair coin); for
    other r use :func:`eval_y_prime` directly as an analytic function.
    The denominator at r = 1/2 is 2**-(k+1), never zero.
    """
    return eval_y_prime(spec, Fraction(1, 2)) / 2


def expectation_closed_form(spec: RunSpec) -> Fraction:
    """The simplified expectation 2 (2**k - 1), as an exact rational."""
    return Fraction(2 * (2**spec.k - 1))


def series_matches_closed_form(
    spec: RunSpec, r: Rational, n_max: int
) -> Fraction:
    """Exact gap |sum_{i=k..n_max} c(i) r**i  -  y(r)|.

    Valid for r in (0, 1/2], where the series provably converges.  The
    gap is the series tail, so it decreases in n_max; callers assert it
    below whatever bound suits their horizon.
    """
    r = _as_fraction(r)
    if not 0 < r <= Fraction(1, 2):
        raise DomainError(f"r must lie in (0, 1/2], got {r}")
    if n_max < spec.k:
        raise DomainError(
            f"n_max must be >= the run length, got n_max={n_max} with k={spec.k}"
        )
    values = build_count_table(spec, n_max).values
    partial = Fraction(0)
    for i in range(n_max, spec.k - 1, -1):  # Horner, highest power first
        partial = partial * r + values[i]
    partial *= r**spec.k
    return abs(partial - eval_y(spec, r))
