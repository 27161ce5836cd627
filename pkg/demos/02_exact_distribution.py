"""Exact first-passage distribution
====================================

With a fair coin, P(X = n) = c(n) / 2**n exactly.  Everything below is
rational arithmetic: masses, cumulative probabilities, tails and
truncated expectations are fractions, not floats.
"""

from streakcalc import RunSpec, pmf_table, tail_mass, truncated_expectation

spec = RunSpec(3)

print("First rows of the k=3 distribution:")
print(f"{'n':>3} {'count':>6} {'mass':>10} {'cdf':>12}")
for row in pmf_table(spec, 12):
    print(f"{row.n:>3} {row.count:>6} {str(row.mass):>10} {str(row.cumulative):>12}")

# The tail is the exact probability that no k-run happened yet.
for n in (10, 50, 200):
    t = tail_mass(spec, n)
    print(f"P(X > {n}) = {float(t):.3e}  (exact fraction has "
          f"{t.denominator.bit_length()} denominator bits)")

# The truncated expectation climbs monotonically toward 2(2^k - 1) = 14.
print("\ntruncated expectation for k=3 (limit is 14):")
for n in (10, 25, 50, 100, 200, 400):
    value = truncated_expectation(spec, n)
    print(f"  horizon {n:>3}: {float(value):.9f}")
