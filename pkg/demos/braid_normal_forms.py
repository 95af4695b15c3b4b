"""Compute canonical normal forms of braid words and cross-check them.

An Artin word is a sequence of signed integers, +k for sigma_k and -k
for sigma_k^-1.  braid_nf rewrites it over the pure-braid/inverse-Artin
letter scheme into the unique irreducible word, which represents the
group element.  Because the relation system is a verified basis, the
normal form does not depend on the rewriting schedule, and two words are
equal in B_n exactly when their normal forms coincide; both facts are
demonstrated below against independent oracles.
"""

from __future__ import annotations

import random

from gsbraid.braid import artin_markov, artin_to_s, braid_nf, braid_scheme, s_to_artin
from gsbraid.gsb import enumerate_irr
from gsbraid.oracles import burau, perm_image, relator_perturb
from gsbraid.reduction import word_nf

N = 4
rng = random.Random(0)
gens = [s * k for k in range(1, N) for s in (1, -1)]

print("some normal forms in B_4 (sigma_k written as +k, sigma_k^-1 as -k):")
for w in ([1, 1], [1, 2, 1], [2, 1, 2], [3, -3], [1, -2, 1, -2, 1, -2]):
    print(f"  {w}  ->  {braid_nf(w, N)}")

braid = [rng.choice(gens) for _ in range(25)]
nf = braid_nf(braid, N)
print(f"\na random 25-crossing braid:\n  {braid}\nnormal form ({len(nf)} letters):\n  {nf}")

# the same element spelled differently: rewrite by a defining relation
moved = relator_perturb(braid, N, seed=7)
print(f"\nafter a relator move it reads differently:\n  {list(moved)}")
print(f"same normal form: {braid_nf(moved, N) == nf}")

# schedules only change the route, never the destination
scheme = braid_scheme(N)
system = artin_markov(N)
letters = artin_to_s(braid, scheme)
agree = (word_nf(letters, system, strategy="leftmost")
         == word_nf(letters, system, strategy="rightmost") == nf)
print(f"leftmost and rightmost schedules agree: {agree}")

# permutation and Burau images are invariants of the element, so the
# normal form must preserve both
back = s_to_artin(nf, scheme)
print(f"permutation image preserved: "
      f"{perm_image(back, N).image == perm_image(braid, N).image}")
print(f"Burau image preserved: {burau(back, N) == burau(braid, N)}")

words = enumerate_irr(system, 1)
print(f"\nirreducible words of length <= 1 over the B_4 scheme "
      f"({len(words)} of them):")
print("  " + ", ".join(str(w) for w in words))
