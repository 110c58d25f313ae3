# Products and interpolated seeds: building sequences with a chosen
# scaling factor or repeat factor, and checking every prediction.

from stanley import Triadic, adk, certify, generate, product, repeat_interval, target_repeat, target_scaling
from stanley.construct import certify_seed

base = certify_seed((0,), 64)

# one interpolation step from {0} at k=2
for d in (0, 2, 6):
    res = adk(base.seq, base.cert, 2, d)
    got = certify(generate(res.seed, 512))
    print(f"d={d}: predicted rho={res.rho} alpha={res.alpha}; measured rho={got.rho} alpha={got.alpha}")

print("repeat factors from one step at k=2:", repeat_interval(base.seq, base.cert, 2))

# (10/9)^2 by iterating the product with {0,1,7}
a = certify_seed((0, 1, 7), 256)
sq = certify_seed(product(a.seq, a.cert, a.cert.kappa, (0, 1, 7)), 1024)
print("alpha of {0,1,7} squared:", sq.cert.alpha)

# whole chains
for target in ["28/27", "10/9", "50/27", "2"]:
    chain = target_scaling(Triadic.parse(target))
    kinds = " -> ".join(f"{s.kind}(k={s.k})" for s in chain.steps) or "(none)"
    cert = chain.final_certificate
    print(f"alpha {target}: {kinds}; final kappa={cert.kappa}, seed size {len(chain.final_seed)}")

chain = target_repeat(2300)
print("rho 2300 via", [(s.k, s.d) for s in chain.steps])
