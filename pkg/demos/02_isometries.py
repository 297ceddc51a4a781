#!/usr/bin/env python3
"""Isometries of A^n: the f∘σ̄ factorization, pull vs push, enumeration."""

import itertools

import groupcodes as gc

# Every distance-preserving bijection of A^n is a configuration (one
# alphabet permutation per coordinate) after a coordinate permutation.
# Verify that from scratch for (Z/2)^2: filter all 24 bijections.
words = list(itertools.product(range(2), repeat=2))
brute = []
for perm in itertools.permutations(range(4)):
    image = [words[i] for i in perm]
    if all(gc.hamming_distance(image[i], image[j]) == gc.hamming_distance(words[i], words[j])
           for i in range(4) for j in range(i + 1, 4)):
        brute.append(tuple(image))
normal = {iso.as_map(2) for iso in gc.enumerate_isometries(2, 2)}
print("distance-preserving bijections of (Z/2)^2:", len(brute))
print("normal forms f∘σ̄:", len(normal), " identical sets:", set(brute) == normal)
print("predicted (q!)^n * n! =", gc.isometry_group_order(2, 2))

# The two application conventions. Pull reads coordinates through sigma;
# push sends position t to position sigma(t). They differ by inversion.
sigma = gc.Equivalence((0, 2, 4, 1, 3, 5))   # 1-based (1,3,5,2,4,6)
x = (0, 0, 0, 1, 1, 0)
print("\npush of", x, "is", gc.apply_push(sigma, x))
print("pull of", x, "is", sigma.pull(x))
print("push equals pull with the inverse permutation:",
      gc.apply_push(sigma, x) == sigma.inverse().pull(x))

# Composition renormalizes to f∘σ̄ using the conjugation rule
# σ̄⁻¹∘f∘σ̄ = f_{σ⁻¹}, so equality of isometries is equality of data.
flip = gc.Isometry(gc.Configuration(((1, 0), (0, 1))), gc.Equivalence((0, 1)))
swap = gc.from_permutation((1, 0), 2)
conj = gc.compose(gc.inverse(swap), gc.compose(flip, swap))
print("\nconjugating a coordinate flip by the swap moves it:",
      conj.config.maps, "residual permutation", conj.equiv.perm)

# Isometries act on codes without changing size or minimum distance.
D = gc.generate_group_code(gc.cyclic_group(2), 3, [(1, 1, 0), (0, 1, 1)])
image = gc.apply_to_code(gc.identity_isometry(2, 3), D)
print("\nidentity image equals D:", image.words == D.words)
moved = gc.apply_to_code(gc.from_permutation((2, 0, 1), 2), D)
print("rotated D has the same parameters:",
      gc.min_distance(moved) == gc.min_distance(D) == 2)
