#!/usr/bin/env python3
"""Group-code isomorphism witnesses and automorphism group structure."""

import math

import groupcodes as gc
from groupcodes.catalog import binary_repetition, even_weight_code, repetition_code

# Isomorphism of group codes = ambient isometry + group isomorphism on the
# code. Witnesses are explicit (sigma, per-coordinate maps) pairs.
D = even_weight_code(3)
R = binary_repetition(3)
left, right = gc.direct_sum(D, R), gc.direct_sum(R, D)
w = gc.gc_isomorphic(left, right)
print("D+R vs R+D isomorphic:", w is not None)
print("witness sigma:", w.iso.equiv.perm, " verifies:", w.verify())
print("D vs R isomorphic:", gc.gc_isomorphic(D, R) is not None,
      " (weight distributions already differ)")

# Aut of the full space G^n factors as Aut(G)^n with coordinate permutations.
for G in (gc.cyclic_group(2), gc.cyclic_group(3), gc.klein_four_group()):
    auts = len(gc.automorphisms(G))
    for n in (2, 3):
        got = gc.aut_group(gc.full_space(G, n)).order
        print(f"|Aut_GC({G.label}^{n})| = {got} = {auts}^{n} * {n}!",
              got == auts**n * math.factorial(n))

# For a direct sum of isotypes the order multiplies, with a factor alpha!
# for permuting the isomorphic copies.
square = gc.direct_sum(D, D)
base = gc.aut_group(D).order
report = gc.aut_group(square, gc.decompose(square))
print(f"\n|Aut_GC(D)| = {base}; |Aut_GC(D+D)| = {report.order} = {base}^2 * 2!")
print("structure rows (isotype, component order, alpha):", report.structure)

# Every automorphism of a sum of non-isomorphic components fixes the
# embedded blocks setwise.
mixed = gc.direct_sum(D, R)
rep = gc.aut_group(mixed)
ok = all(gc.verify_block_preservation([D, R], el) for el in rep.elements)
print(f"\nall {rep.order} automorphisms of D+R preserve the blocks:", ok)

# Over Z/3 the repetition code picks up configuration automorphisms too.
r3 = repetition_code(gc.cyclic_group(3), 2)
print("automorphisms of the Z/3 diagonal in two coordinates:", gc.aut_group(r3).order)
