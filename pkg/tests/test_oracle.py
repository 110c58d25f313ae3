import random

import pytest

from stanley.construct import certify_seed
from stanley.errors import InputError, PreconditionError
from stanley.oracle import (
    CoverClaim,
    ExpectedSet,
    check_cover_claim,
    check_main_prefix,
    main_prefix_offsets,
    naive_generate,
    oracle_equivalence,
    random_three_free_seed,
    validate_construction,
)
from stanley.sequence import is_three_free
from stanley.triadic import Triadic


def test_naive_generate():
    assert naive_generate((0,), 9) == [0, 1, 3, 4, 9, 10, 12, 13, 27]
    assert naive_generate((0, 4), 6) == [0, 4, 5, 7, 11, 12]


def test_random_seeds_are_three_free():
    rng = random.Random(5)
    for _ in range(50):
        seed = random_three_free_seed(rng, 50)
        assert is_three_free(seed.elements) and seed.max <= 50


def test_equivalence_small_run():
    results = oracle_equivalence(10, 50, 300, rng_seed=11)
    assert all(r.agree for r in results)
    again = oracle_equivalence(10, 50, 300, rng_seed=11)
    assert [r.seed for r in results] == [r.seed for r in again]


@pytest.mark.parametrize("part,y,lo,hi", [("a", None, 0, 9), ("b", 9, 18, 27), ("c", None, 0, 27)])
def test_cover_examples(s0, part, y, lo, hi):
    claim = CoverClaim.build(part, 9, 0, y)
    assert (claim.expected.lo, claim.expected.hi) == (lo, hi)
    assert check_cover_claim(s0.seq, s0.cert, 2, claim)


def test_cover_part_a_region(s0):
    claim = CoverClaim.build("a", 9)
    assert claim.expected.materialize([0, 1, 3, 4], []) == [2, 5, 6, 7, 8]


@pytest.mark.parametrize("part", "abcde")
@pytest.mark.parametrize("x", [0, 5])
def test_cover_parts_s017(s017, part, x):
    k = s017.cert.kappa + 1
    claim = CoverClaim.build(part, s017.seq[1 << k], x)
    assert check_cover_claim(s017.seq, s017.cert, k, claim)


def test_cover_negative_control(s0):
    claim = CoverClaim.build("a", 9)
    # A_k itself is not covered; claiming it is must fail
    wrong = ExpectedSet(0, 9, (), ())
    bad = CoverClaim(claim.part, claim.x, claim.y, claim.c, claim.cover, claim.joint, wrong)
    assert not check_cover_claim(s0.seq, s0.cert, 2, bad)


def test_cover_rejects_bad_input(s0):
    with pytest.raises(InputError):
        CoverClaim.build("f", 9)
    with pytest.raises(InputError):
        CoverClaim.build("b", 9, 5, 3)
    with pytest.raises(InputError):
        check_cover_claim(s0.seq, s0.cert, 2, CoverClaim.build("a", 10))


def test_cover_requires_standing_condition(s017):
    claim = CoverClaim.build("a", s017.seq[1])
    with pytest.raises(PreconditionError):
        check_cover_claim(s017.seq, s017.cert, 0, claim)


def test_main_prefix_offsets():
    offs = main_prefix_offsets(9, 2)
    assert len(offs) == 16 and offs[:4] == (0, 9, 61, 70)


@pytest.mark.parametrize("k,d", [(2, 2), (2, 0), (3, 5)])
def test_main_prefix(s0, k, d):
    assert check_main_prefix(s0.seq, s0.cert, k, d)


def test_validate_construction():
    adk_seed = (0, 1, 3, 4, 9, 10, 12, 13, 61, 62, 64, 65, 70, 71, 73, 74)
    assert validate_construction(adk_seed, 88, Triadic(88, 4), 256).passed
    assert validate_construction((0, 1), 1, Triadic(1), 64).passed
    rep = validate_construction(adk_seed, 87, Triadic(88, 4), 256)
    assert not rep.passed and rep.measured_rho == 88
