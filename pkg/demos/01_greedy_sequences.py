# Greedy 3-free sequences: generation, the base-3 closed form for S(0),
# and a first look at a sequence that does not settle into a pattern.

import numpy as np

from stanley import generate, obstruction_set, s0_terms

s0 = generate((0,), 32)
print("S(0):", s0.tolist())

# binary digits of n read in base 3
print("matches closed form:", np.array_equal(s0.terms, s0_terms(32)))
print("a_(2^k):", [s0[1 << k] for k in range(5)])

# seeds other than {0}
for seed in [(0, 1, 7), (0, 1, 4), (0, 4)]:
    print(f"S{seed}:", generate(seed, 16).tolist())

# integers below max(A) that nobody will ever cover
rep = obstruction_set((0, 4))
print("O(0,4) =", list(rep.members), " omega =", rep.omega)

# a long run of S(0,4); the ratio a_n / n^2 drifts instead of oscillating
big = generate((0, 4), 1 << 13)
n = np.array([256, 1024, 4096, 8191])
print("a_n / n^2 at", n.tolist(), "->", np.round(big.terms[n] / n.astype(float) ** 2, 4).tolist())
