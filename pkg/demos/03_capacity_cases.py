#!/usr/bin/env python3
"""
Best, average and worst case capacity of the group-match codec.

Best case: every component matches on the first try, 3 bits per component,
three times plain LSB. Worst case: no window ever matches and nothing can
be embedded. Natural images sit in between.
"""

import numpy as np

from groupstego import BitSeq, CapacityExhausted, RgbRaster, groupmatch, lsb, pairmatch
from groupstego.bitplane import windows_of_byte
from sample_cover import photo_like

# --- best case: constant cover, secret made of its own first window
value = 0b01010100
g1 = windows_of_byte(value)[0]
cover = RgbRaster(np.full((64, 64, 3), value, dtype=np.uint8))
secret = BitSeq([int(c) for c in format(g1, "03b")] * 1000)

_, best = groupmatch.embed(cover, secret)
_, plain = lsb.embed(cover, secret)
print(f"best case : group3 used {best.components_visited} components "
      f"({best.bits_per_component:.1f} bits each), lsb1 used {plain.components_visited}")

# --- worst case: all-zero cover, all-ones secret
zero = RgbRaster(np.zeros((64, 64, 3), dtype=np.uint8))
try:
    groupmatch.embed(zero, BitSeq([1] * 30))
except CapacityExhausted as exc:
    print(f"worst case: {exc}")

# --- average case: photo-like cover, random secret
rng = np.random.default_rng(3)
photo = photo_like(64, 64)
long_secret = BitSeq(rng.integers(0, 2, size=3 * len(photo)))
fits = groupmatch.capacity(photo, long_secret)
_, avg = groupmatch.embed(photo, long_secret[:fits])
print(f"average   : {fits} bits fit in {len(photo) - 28} payload components "
      f"({fits / (len(photo) - 28):.3f} bits/component overall, "
      f"{avg.bits_per_component:.3f} over visited ones)")
print(f"            upper bound {groupmatch.capacity_best_case(photo)} bits, "
      f"lsb1 {lsb.capacity(photo)} bits, pair2 {2 * pairmatch.max_pairs(photo)} bits")
