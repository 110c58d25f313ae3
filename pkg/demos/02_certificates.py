# Independence certificates. A finite check at one level k, plus the
# inequality a_(2^k - 1) >= lambda + omega, pins down the whole sequence.

from stanley import certify, generate, repeat_structure_check, scaling_decomposition

for seed in [(0,), (0, 9), (0, 1, 7), (0, 1, 4), (0, 2, 7, 9, 13), (0, 4)]:
    seq = generate(seed, 4096)
    cert = certify(seq)
    if cert is None:
        print(f"S{seed}: no certificate within {len(seq)} terms")
        continue
    print(f"S{seed}: kappa={cert.kappa} lambda={cert.lam} rho={cert.rho} alpha={cert.alpha} proven={cert.proven}")

# alpha * s_n plus a residue that depends only on n mod 2^kappa
seq = generate((0, 1, 7), 4096)
cert = certify(seq)
dec = scaling_decomposition(seq, cert)
print("residues b for S(0,1,7):", [str(b) for b in dec.b])
print("a_1000 =", seq[1000], " alpha*s_1000 + b =", dec.term(1000))

# rho-scaled copies of S(0) shifted by the first 2^kappa terms
print("repeat structure holds:", repeat_structure_check(seq, cert))
