# Growth heuristics. Nothing here is a theorem: structured sequences sit
# near n^log2(3), the others look more like n^2 / log n.

from stanley import classify_growth, generate, moy_violations

for seed, count in [((0,), 4096), ((0, 1, 7), 4096), ((0, 4), 5000), ((0, 1, 5), 5000)]:
    seq = generate(seed, count)
    rep = classify_growth(seq)
    print(
        f"S{seed}: {rep.classification:8s} slope={rep.fitted_exponent:.3f} "
        f"log-corrected={rep.log_corrected_exponent:.3f} "
        f"res(n^log2 3)={rep.type1_residual:.3f} res(n^2/log n)={rep.type2_residual:.3f}"
    )
    bad = moy_violations(seq)
    print("   a_n > n^2/2 at:", bad[:5] if bad else "nowhere past n=100")
