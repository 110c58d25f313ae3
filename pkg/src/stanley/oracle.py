"""Brute-force validators for the fast paths.

Nothing here touches the sieve. Terms are produced by testing each candidate
against the current prefix, and coverage claims are checked element by
element. These routines are meant for sequences of at most a few thousand
terms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .analysis import IndependenceCertificate, certify
from .construct import adk
from .errors import InputError, NeedMoreTerms, PreconditionError
from .sequence import GeneratedSequence, SeedSet, generate, is_three_free, obstruction_set
from .triadic import Triadic

PARTS = ("a", "b", "c", "d", "e")


def _covered(x, terms, members):
    # some z in terms with x/2 <= z < x and 2z - x in members
    for z in reversed(terms):
        if z >= x:
            continue
        if 2 * z < x:
            return False
        if 2 * z - x in members:
            return True
    return False


def naive_generate(seed, count: int) -> list:
    """First ``count`` terms of S(seed), candidate by candidate."""
    seed = seed if isinstance(seed, SeedSet) else SeedSet(tuple(seed))
    if count < len(seed):
        raise InputError(f"count {count} is smaller than the seed ({len(seed)} elements)")
    terms = list(seed.elements)
    members = set(terms)
    x = terms[-1]
    while len(terms) < count:
        x += 1
        if not _covered(x, terms, members):
            terms.append(x)
            members.add(x)
    return terms


def _jointly(x, lows, highs_sorted):
    for z in reversed(highs_sorted):
        if z >= x:
            continue
        if 2 * z < x:
            return False
        if 2 * z - x in lows:
            return True
    return False


# --------------------------------------------------------------------------
# the cover lemma


@dataclass(frozen=True)
class ExpectedSet:
    """``[lo, hi)`` minus translated copies, plus translated copies of O(A).

    Translates are ``(name, offset)`` pairs with name ``"A_k"`` or ``"O"``.
    """

    lo: int
    hi: int
    excluded: tuple
    included: tuple

    def materialize(self, head, obstruction) -> list:
        sets = {"A_k": head, "O": obstruction}
        drop = {v + off for name, off in self.excluded for v in sets[name]}
        out = {z for z in range(self.lo, self.hi) if z not in drop}
        out.update(v + off for name, off in self.included for v in sets[name])
        return sorted(out)


@dataclass(frozen=True)
class CoverClaim:
    """One instance of the cover lemma.

    ``cover`` lists the offsets of the copies of A_k doing the covering; for
    the joint parts ``joint`` gives the offsets of the second family, whose
    elements play the middle term of each progression.
    """

    part: str
    x: int
    y: Optional[int]
    c: int
    cover: tuple
    joint: Optional[tuple]
    expected: ExpectedSet

    @classmethod
    def build(cls, part: str, c: int, x: int = 0, y: Optional[int] = None) -> CoverClaim:
        if part not in PARTS:
            raise InputError(f"unknown cover-lemma part {part!r}")
        if part in ("b", "d"):
            if y is None:
                y = x + c
            if y <= x:
                raise InputError(f"part {part} needs x < y (got x={x}, y={y})")
            w = 2 * y - x
            span = c if part == "b" else 3 * c
            copies = (0,) if part == "b" else (0, c)
            exp = ExpectedSet(w, w + span, (("O", w),), (("O", span + w),))
            return cls(part, x, y, c, tuple(o + x for o in copies), tuple(o + y for o in copies), exp)
        copies = {"a": (0,), "c": (0, c), "e": (0, c, 3 * c, 4 * c)}[part]
        span = {"a": c, "c": 3 * c, "e": 9 * c}[part]
        excluded = tuple(("A_k", o + x) for o in copies) + (("O", x),)
        exp = ExpectedSet(x, x + span, excluded, (("O", span + x),))
        return cls(part, x, None, c, tuple(o + x for o in copies), None, exp)


def check_cover_claim(seq: GeneratedSequence, cert: IndependenceCertificate, k: int, claim: CoverClaim) -> bool:
    """Confirm every element of the claimed set is covered as the lemma states."""
    if k < cert.kappa:
        raise PreconditionError(f"k={k} is below kappa={cert.kappa}")
    p = 1 << k
    if len(seq) < p + 1:
        raise NeedMoreTerms(p + 1, len(seq))
    head = seq.tolist()[:p]
    if head[-1] < cert.lam + cert.omega:
        raise PreconditionError(f"a_(2^{k}-1) = {head[-1]} < lam + omega = {cert.lam + cert.omega}")
    if seq[p] != claim.c:
        raise InputError(f"claim built for c={claim.c}, but a_(2^{k}) = {seq[p]}")
    obstruction = list(obstruction_set(seq.seed).members)
    region = claim.expected.materialize(head, obstruction)

    first = sorted({a + off for off in claim.cover for a in head})
    if claim.joint is None:
        members = set(first)
        return all(_covered(z, first, members) for z in region)
    second = sorted({a + off for off in claim.joint for a in head})
    lows = set(first)
    return all(_jointly(z, lows, second) for z in region)


# --------------------------------------------------------------------------
# the prefix J of the interpolated sequence


def main_prefix_offsets(c: int, d: int) -> tuple:
    return (
        0, c,
        7 * c - d, 8 * c - d,
        10 * c - d, 11 * c - d,
        17 * c - 2 * d, 18 * c - 2 * d,
        30 * c - 3 * d, 31 * c - 3 * d,
        37 * c - 4 * d, 38 * c - 4 * d,
        40 * c - 4 * d, 41 * c - 4 * d,
        47 * c - 5 * d, 48 * c - 5 * d,
    )  # fmt: skip


def check_main_prefix(seqA: GeneratedSequence, certA: IndependenceCertificate, k: int, d: int) -> bool:
    """J (sixteen translates of the first 2^k terms) is 3-free and starts S(A^d_k)."""
    res = adk(seqA, certA, k, d)
    p = 1 << k
    head = seqA.tolist()[:p]
    c = seqA[p]
    J = sorted({a + off for off in main_prefix_offsets(c, d) for a in head})
    if len(J) != 16 * p:
        return False
    if not is_three_free(J):
        return False
    return naive_generate(res.seed, len(J)) == J


# --------------------------------------------------------------------------
# predictions against measurements


@dataclass(frozen=True)
class ValidationReport:
    passed: bool
    predicted_rho: int
    predicted_alpha: Triadic
    measured_rho: Optional[int]
    measured_alpha: Optional[Triadic]
    certificate: Optional[IndependenceCertificate]
    message: str

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "predicted": {"rho": self.predicted_rho, "alpha": self.predicted_alpha.to_dict()},
            "measured": None
            if self.certificate is None
            else {"rho": self.measured_rho, "alpha": self.measured_alpha.to_dict()},
            "message": self.message,
        }


def validate_construction(seed, predicted_rho: int, predicted_alpha, horizon: int) -> ValidationReport:
    seed = seed if isinstance(seed, SeedSet) else SeedSet(tuple(seed))
    predicted_alpha = Triadic.from_fraction(predicted_alpha)
    seq = generate(seed, max(horizon, len(seed) + 1))
    cert = certify(seq, kmax=horizon.bit_length())
    if cert is None:
        return ValidationReport(
            False, predicted_rho, predicted_alpha, None, None, None, f"not certified within {len(seq)} terms"
        )
    ok = cert.rho == predicted_rho and cert.alpha == predicted_alpha
    msg = (
        f"rho {cert.rho} (predicted {predicted_rho}), alpha {cert.alpha} (predicted {predicted_alpha})"
    )
    return ValidationReport(ok, predicted_rho, predicted_alpha, cert.rho, cert.alpha, cert, msg)


# --------------------------------------------------------------------------
# randomized equivalence


def random_three_free_seed(rng: random.Random, max_value: int, density: float = 0.3) -> SeedSet:
    """A random 3-free subset of ``[0, max_value]`` containing 0."""
    chosen = [0]
    members = {0}
    for v in range(1, max_value + 1):
        if rng.random() >= density:
            continue
        # v is the largest so far: it can only close a progression as its top
        if any(2 * z - v in members for z in chosen if 2 * z >= v):
            continue
        chosen.append(v)
        members.add(v)
    return SeedSet(tuple(chosen))


@dataclass(frozen=True)
class EquivalenceResult:
    seed: SeedSet
    agree: bool
    first_mismatch: Optional[int]


def oracle_equivalence(trials: int, max_seed_value: int, terms: int, rng_seed: int = 0) -> list:
    """Compare the sieve generator with naive_generate on random seeds."""
    rng = random.Random(rng_seed)
    out = []
    for _ in range(trials):
        seed = random_three_free_seed(rng, max_seed_value)
        count = max(terms, len(seed))
        fast = generate(seed, count).tolist()
        slow = naive_generate(seed, count)
        mismatch = next((i for i, (u, v) in enumerate(zip(fast, slow)) if u != v), None)
        out.append(EquivalenceResult(seed, mismatch is None, mismatch))
    return out
