#!/usr/bin/env python3
"""
How often does a random 3-bit group match one of a component's windows?

Only bit positions 2..6 matter, so 32 patterns x 8 groups can be enumerated
exactly and compared against a Monte Carlo run of the codec's match rule.
"""

from fractions import Fraction

import numpy as np

from groupstego.groupmatch import try_match_byte

hits = [0, 0, 0, 0]
for pattern in range(32):
    byte = pattern << 2  # place the pattern at positions 2..6
    for group in range(8):
        hits[try_match_byte(byte, group)] += 1

total = Fraction(sum(hits[1:]), 256)
print(f"exact match probability: {total} = {float(total):.5f}")
for k in (1, 2, 3):
    print(f"  first match in window {k}: {hits[k]}/256")

rng = np.random.default_rng(0)
n = 200_000
b = rng.integers(0, 256, size=n)
g = rng.integers(0, 8, size=n)
codes = np.array([try_match_byte(int(x), int(y)) for x, y in zip(b, g)])
print(f"simulated ({n} trials): {np.count_nonzero(codes) / n:.5f}")

# Expected components per group is 1/p, so expected payload rate is 3p bits/component
print(f"expected bits per component on random data: {3 * float(total):.3f}")
