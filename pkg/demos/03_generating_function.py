"""Closed form of the count generating function
================================================

y(r) = sum c(i) r**i collapses to r**k (1-r) / (1 - 2r + r**(k+1)).
Three independent confirmations below: the truncated series approaches
the closed form, two algebraic routes to y' agree exactly, and a
central finite difference (in exact rational arithmetic) approaches y'.
"""

from fractions import Fraction

from streakcalc import (
    RunSpec,
    eval_y,
    eval_y_prime,
    eval_y_prime_quotient_rule,
    expectation,
    series_matches_closed_form,
)

HALF = Fraction(1, 2)
spec = RunSpec(3)

# Normalization: at r = 1/2 the series sums all probabilities, so y = 1.
print("y(1/2) for k=3:", eval_y(spec, HALF))

# The truncated series closes in on the closed form as the horizon grows.
r = Fraction(2, 5)
print(f"\ny({r}) = {eval_y(spec, r)}; gap to the truncated series:")
for n_max in (5, 10, 20, 40, 80):
    gap = series_matches_closed_form(spec, r, n_max)
    print(f"  {n_max:>2} terms: {float(gap):.3e}")

# Two routes to the derivative, one simplified fraction and one raw
# quotient rule, must agree exactly at every rational point.
for j in (1, 10, 20, 25):
    point = Fraction(j, 50)
    a = eval_y_prime(spec, point)
    b = eval_y_prime_quotient_rule(spec, point)
    assert a == b
    print(f"y'({point}) = {a}  (both routes)")

# Central differences with exact rational steps converge quadratically.
exact = eval_y_prime(spec, HALF)
print(f"\ny'(1/2) = {exact}; central-difference error vs step:")
for exp in (6, 10, 14, 18):
    h = Fraction(1, 2**exp)
    fd = (eval_y(spec, HALF + h) - eval_y(spec, HALF - h)) / (2 * h)
    print(f"  h = 2^-{exp:<2}: {float(abs(fd - exact)):.3e}")

# Half the derivative at 1/2 is the expected waiting time.
print("\nE(X) = y'(1/2)/2 =", expectation(spec), "= 2(2^3 - 1)")
