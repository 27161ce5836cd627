"""Exact run-count tables
=========================

c(n) counts the length-n coin sequences whose first run of k
consecutive heads is completed exactly at trial n.  The table obeys a
k-step Fibonacci recurrence and is built with exact big integers.
"""

from streakcalc import RunSpec, build_count_table, count_at, ratio_diagnostic

# The k = 2 table is the Fibonacci numbers in disguise.
table = build_count_table(RunSpec(2), 12)
print("k=2 counts, n=0..12:", table.values)

# k = 1 collapses to the constant sequence 1: the only qualifying
# sequence is n-1 tails followed by a single head.
print("k=1 counts, n=0..8: ", build_count_table(RunSpec(1), 8).values)

# Counts explode geometrically; exact integers are not optional.
big = count_at(RunSpec(4), 300)
print(f"c(300) for k=4 has {big.bit_length()} bits: {str(big)[:40]}...")

# Successive ratios c(i+1) / (2 c(i)): 1/2 first, a plateau at exactly 1
# while the window still covers only zeros, then strictly below 1 from
# i = 2k on.  Their limit staying below 1 is what makes the half-weighted
# series converge.
for k in (2, 3, 4):
    ratios = ratio_diagnostic(RunSpec(k), 4 * k)
    print(f"k={k} ratios from i={k}:", [str(q) for q in ratios])
