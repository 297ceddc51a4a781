#!/usr/bin/env python3
"""Finite groups as tables, words, and the basic code parameters."""

import groupcodes as gc
from groupcodes.catalog import even_weight_code, z4_example_code

# A finite group is just its Cayley table over 0..q-1. Constructors
# validate every axiom eagerly and name the broken one on failure.
z4 = gc.cyclic_group(4)
print("Z/4 table:")
for row in z4.table:
    print("   ", row)
print("identity:", z4.identity, " inverses:", z4.inverse)

v4 = gc.klein_four_group()
print("\nKlein four-group: every non-identity element squares to e:",
      all(v4.mul(a, a) == v4.identity for a in range(1, 4)))

try:
    gc.group_from_table([[0, 1], [1, 1]])
except gc.NotAGroupError as err:
    print("\nrejected table:", err)

# Automorphisms are found by backtracking on generator images.
print("\n|Aut(Z/m)| for m = 1..8:",
      [len(gc.automorphisms(gc.cyclic_group(m))) for m in range(1, 9)])
print("|Aut(V4)| =", len(gc.automorphisms(v4)), "(the symmetric group on the 3 involutions)")

# Codes are word sets over such an alphabet; group codes are subgroups of G^n.
C = z4_example_code()
print("\nthe 8-word code over Z/4:")
for w in C.words:
    print("   ", w)
p = gc.parameters(C)
print(f"n = {p.length}, |C| = {p.size}, k = {p.dimension} (log_4 8), "
      f"d = {p.min_distance}, corrects {p.correction_capacity} errors")

# For a group code the minimum distance is a weight scan, and the two
# routes agree.
D = even_weight_code(3)
print("\neven-weight code D:", D.words)
print("min distance (pair scan):", gc.min_distance(D),
      " min weight (shift scan):", gc.min_weight_nonidentity(D))

# Projections and direct sums are the basic constructions.
print("\nprojection sizes of the Z/4 code:",
      [gc.projection(C, [i]).size for i in range(3)])
S = gc.direct_sum(D, D)
print("D + D has length", S.length, "and", S.size, "words")
