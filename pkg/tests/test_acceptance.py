"""Acceptance criteria, one test each.

Every test prints a single ``CRITERION n: PASS|FAIL`` line. Under pytest the
lines are also collected and repeated in the terminal summary; run this file
directly with ``python tests/test_acceptance.py`` to get just the lines.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from math import gcd

import pytest

from stanley.analysis import TYPE2, certify, classify_growth, moy_violations
from stanley.construct import adk, admissible_d_range, certify_seed, repeat_interval, target_scaling
from stanley.oracle import (
    PARTS,
    CoverClaim,
    check_cover_claim,
    check_main_prefix,
    naive_generate,
    random_three_free_seed,
)
from stanley.sequence import generate, s0_term
from stanley.triadic import Triadic

RESULTS: list[str] = []


def report(number: int, passed: bool, detail: str) -> None:
    line = f"CRITERION {number}: {'PASS' if passed else 'FAIL'} - {detail}"
    RESULTS.append(line)
    print(line)
    assert passed, line


# 1 ---------------------------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    seq = generate((0,), 1 << 14)
    terms = seq.tolist()
    closed = all(terms[n] == s0_term(n) for n in range(len(terms)))
    powers = all(terms[1 << k] == 3**k for k in range(14))
    elapsed = time.perf_counter() - t0
    ok = closed and powers and elapsed < 5
    return ok, f"closed form {closed}, a_(2^k)=3^k for k<=13 {powers}, {elapsed:.2f}s (limit 5s)"


# 2 ---------------------------------------------------------------------------


def criterion_2():
    t0 = time.perf_counter()
    s014 = generate((0, 1, 4), (1 << 10) + 1)
    bad014 = [k for k in range(2, 11) if s014[1 << k] != 3**k + 2 ** (k - 1)]
    s017 = generate((0, 1, 7), 1 << 12)
    bad017 = [k for k in range(2, 11) if Fraction(s017[1 << k]) != Fraction(10, 9) * 3**k]
    cert = certify(s017)
    alpha_ok = cert is not None and cert.alpha == Triadic(10, 2)
    elapsed = time.perf_counter() - t0
    ok = not bad014 and not bad017 and alpha_ok and elapsed < 30
    return ok, (
        f"S(0,1,4) mismatches at k={bad014}, S(0,1,7) mismatches at k={bad017}, "
        f"alpha(0,1,7)={cert.alpha if cert else None}, {elapsed:.2f}s (limit 30s)"
    )


# 3 ---------------------------------------------------------------------------


def criterion_3():
    cases = [((0,), 1)]
    for k in range(1, 5):
        cases.append(((0, 3**k), 3 ** (k + 1)))
        cases.append(((0, 2 * 3 ** (k - 1)), 3 ** (k + 1)))
    wrong = []
    for seed, expected in cases:
        cert = certify(generate(seed, 1 << 12))
        got = cert.rho if cert else None
        if got != expected:
            wrong.append(f"rho({set(seed)})={got}, expected {expected}")
    detail = f"{len(cases) - len(wrong)}/{len(cases)} exact"
    if wrong:
        detail += "; " + "; ".join(wrong)
    return not wrong, detail


# 4 ---------------------------------------------------------------------------


def criterion_4():
    t0 = time.perf_counter()
    base = certify_seed((0,), 1 << 6)
    checked = 0
    wrong = []
    for k in (2, 3, 4):
        low, high = admissible_d_range(base.seq, base.cert, k)
        c = base.seq[1 << k]
        for d in range(low, high + 1):
            res = adk(base.seq, base.cert, k, d)
            seq = generate(res.seed, max(1 << (k + 5), len(res.seed) + 1))
            cert = certify(seq)
            want_rho = 10 * c - d
            want_alpha = Triadic(10, 2) - Triadic(d, k + 2)
            checked += 1
            if cert is None or cert.rho != want_rho or cert.alpha != want_alpha:
                wrong.append((k, d, cert.rho if cert else None))
    elapsed = time.perf_counter() - t0
    ok = not wrong and elapsed < 600
    return ok, f"{checked - len(wrong)}/{checked} seeds exact, mismatches {wrong[:5]}, {elapsed:.1f}s (limit 600s)"


# 5 ---------------------------------------------------------------------------


def criterion_5():
    base = certify_seed((0,), 1 << 6)
    missing = []
    for k, lo, hi in ((2, 81, 90), (3, 243, 270)):
        interval = repeat_interval(base.seq, base.cert, k)
        c = base.seq[1 << k]
        for rho in range(lo, hi + 1):
            if rho not in interval:
                missing.append(rho)
                continue
            res = adk(base.seq, base.cert, k, 10 * c - rho)
            cert = certify(generate(res.seed, 1 << (k + 5)))
            if cert is None or cert.rho != rho:
                missing.append(rho)
    return not missing, f"{10 + 28 - len(missing)}/38 repeat factors certified, missing {missing}"


# 6 ---------------------------------------------------------------------------


def scaling_targets():
    out = set()
    for e in range(4):
        for p in range(1, 82):
            if gcd(p, 3) == 1 and 1 <= Fraction(p, 3**e) <= 3:
                out.add(Fraction(p, 3**e))
    return sorted(out)


def criterion_6():
    t0 = time.perf_counter()
    targets = scaling_targets()
    failed = []
    deepest = 0
    for t in targets:
        try:
            chain = target_scaling(Triadic.from_fraction(t))
        except Exception as exc:  # any failure counts against the criterion
            failed.append(f"{t} ({type(exc).__name__})")
            continue
        deepest = max(deepest, chain.depth)
        if chain.final_certificate.alpha != t or chain.depth > 8:
            failed.append(f"{t} (alpha {chain.final_certificate.alpha}, depth {chain.depth})")
    elapsed = time.perf_counter() - t0
    ok = not failed and elapsed < 1800
    detail = f"{len(targets) - len(failed)}/{len(targets)} targets exact, max depth {deepest}, {elapsed:.0f}s (limit 1800s)"
    if failed:
        detail += "; unreached: " + ", ".join(failed)
    return ok, detail


# 7 ---------------------------------------------------------------------------


def criterion_7():
    rng = random.Random(2024)
    mismatches = []
    for i in range(100):
        seed = random_three_free_seed(rng, 50)
        count = max(500, len(seed))
        if generate(seed, count).tolist() != naive_generate(seed, count):
            mismatches.append(seed.elements)
    return not mismatches, f"{100 - len(mismatches)}/100 seeds agree on 500 terms (rng seed 2024)"


# 8 ---------------------------------------------------------------------------


def criterion_8():
    failures = []
    claims = 0
    for seed in ((0,), (0, 1, 7), (0, 9)):
        a = certify_seed(seed, 1 << 10)
        kap = a.cert.kappa
        for k in (kap + 1, kap + 2):
            c = a.seq[1 << k]
            for part in PARTS:
                for x in (0, 3):
                    claims += 1
                    if not check_cover_claim(a.seq, a.cert, k, CoverClaim.build(part, c, x)):
                        failures.append((seed, k, part, x))
    base = certify_seed((0,), 1 << 6)
    prefixes = 0
    for k in (2, 3):
        low, high = admissible_d_range(base.seq, base.cert, k)
        for d in range(low, high + 1):
            prefixes += 1
            if not check_main_prefix(base.seq, base.cert, k, d):
                failures.append(("J", k, d))
    return not failures, f"{claims} cover claims and {prefixes} J prefixes checked, failures {failures}"


# 9 ---------------------------------------------------------------------------


def corpus():
    seeds = [(0,), (0, 4), (0, 1, 4), (0, 1, 7), (0, 2, 7, 9, 13), (0, 3, 4, 7, 25, 28)]
    seeds += [(0, 3**k) for k in range(1, 5)] + [(0, 2 * 3 ** (k - 1)) for k in range(1, 5)]
    base = certify_seed((0,), 1 << 6)
    seeds += [adk(base.seq, base.cert, 3, d).seed.elements for d in (0, 13, 27)]
    rng = random.Random(2024)
    seeds += [random_three_free_seed(rng, 50).elements for _ in range(20)]
    return seeds


def criterion_9():
    rep = classify_growth(generate((0, 4), 5000))
    growth_ok = rep.classification == TYPE2 and rep.type2_residual < rep.type1_residual
    over = {}
    for seed in corpus():
        bad = moy_violations(generate(seed, 5000))
        if bad:
            over[seed] = bad[:3]
    detail = (
        f"S(0,4) classified {rep.classification} (log-corrected exponent {rep.log_corrected_exponent:.3f}, "
        f"n^2/log n residual {rep.type2_residual:.4f} vs n^log2(3) residual {rep.type1_residual:.4f}); "
        f"a_n <= n^2/2 on 100<=n<5000 for {len(corpus()) - len(over)}/{len(corpus())} corpus sequences"
    )
    if over:
        detail += f"; empirical bound not met at horizon 5000 for {over} (diagnostic only)"
    return growth_ok and not over, detail


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8, criterion_9]


@pytest.mark.parametrize("number", range(1, 10))
def test_criterion(number):
    ok, detail = CRITERIA[number - 1]()
    report(number, ok, detail)


if __name__ == "__main__":
    status = 0
    for i, fn in enumerate(CRITERIA, 1):
        ok, detail = fn()
        print(f"CRITERION {i}: {'PASS' if ok else 'FAIL'} - {detail}", flush=True)
        status |= not ok
    sys.exit(status)
