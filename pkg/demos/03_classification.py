#!/usr/bin/env python3
"""Trivial, degenerate, MDS, perfect, and constant-weight codes."""

import groupcodes as gc
from groupcodes.catalog import (binary_repetition, even_weight_code,
                                hamming_7_4_code, z4_example_code)

# The repetition code {000, 111}: the smallest interesting perfect code.
rep = binary_repetition(3)
print("repetition code:", rep.words)
print("MDS (|C| = q^(n-d+1)):", gc.is_mds(rep))
print("perfect (2 * |B_1| = 2 * 4 = 8 = 2^3):", gc.is_perfect(rep))

# The [7,4,3] Hamming code tiles (Z/2)^7 with radius-1 balls.
ham = hamming_7_4_code()
print("\nHamming(7,4): |C| =", ham.size, " d =", gc.min_distance(ham))
print("sphere packing: 16 *", gc.ball_size(2, 7, 1), "=", 16 * gc.ball_size(2, 7, 1), "= 2^7")
print("arithmetic check:", gc.is_perfect(ham),
      " covering enumeration:", gc.perfect_by_enumeration(ham))

# The even-weight code is MDS but not perfect, and constant weight 2.
D = even_weight_code(3)
print("\neven-weight code: MDS", gc.is_mds(D), " perfect", gc.is_perfect(D),
      " constant weight", gc.constant_weight_group(D))

# Plain (non-group) codes get a brute-force center search instead.
pair = gc.Code.from_words(gc.cyclic_group(2), 2, [(0, 1), (1, 0)])
print("\n{01, 10} lies on a sphere:", gc.constant_weight_general(pair))
print("the full plane does not:",
      gc.constant_weight_general(gc.full_space(gc.cyclic_group(2), 2)))

# Everything at once, including degenerate-coordinate detection.
lopsided = gc.Code.from_words(gc.cyclic_group(4), 3, [(2, 0, 0), (2, 1, 1), (2, 3, 3)])
c = gc.classify(lopsided)
print("\na code constant in coordinate 0:")
print("  degenerate:", c.is_degenerate, "at", c.degenerate_coordinates)
print("  MDS:", c.is_mds, " perfect:", c.is_perfect)

c4 = gc.classify(z4_example_code())
print("\nthe Z/4 example classifies as: trivial", c4.is_trivial,
      " degenerate", c4.is_degenerate, " MDS", c4.is_mds,
      " perfect", c4.is_perfect, " constant weight", c4.constant_weight)
