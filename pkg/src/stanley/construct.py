"""Building independent seeds with prescribed scaling and repeat factors.

Two constructions are available for an independent seed A with
``c = a[2^k]`` and ``A_k`` the first ``2^k`` terms of S(A):

* the product ``A (x)_k B = {c*b + a : a in A_k, b in B}``, whose scaling
  factor is ``alpha(A) * alpha(B)``;
* the interpolated seed ``A_k u (A_k + c) u (A_k + 7c - d) u (A_k + 8c - d)``
  for ``omega(A) < d <= c - lam(A)`` and ``k > kappa(A)``, whose sequence is
  independent with repeat factor ``10c - d`` and scaling factor
  ``10 alpha / 9 - d / 3^(k+2)``.

Chains of these steps reach any triadic scaling factor >= 1 and every large
enough repeat factor. The searches below do so within desk-scale caps and
check every intermediate seed with a fresh certificate.
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .analysis import IndependenceCertificate, certify
from .errors import (
    DomainError,
    InconsistencyError,
    InputError,
    OutOfRangeError,
    PreconditionError,
)
from .sequence import GeneratedSequence, SeedSet, generate, obstruction_set
from .triadic import Triadic

log = logging.getLogger(__name__)

PRODUCT = "product"
ADK = "adk"

# Independent seeds used as right-hand product factors when climbing
# towards large scaling factors: (seed, alpha, kappa).
PRODUCT_OPERANDS = (
    (SeedSet.of(0, 1, 7), Triadic(10, 2), 2),
    (SeedSet.of(0, 2, 7, 9, 13), Triadic(32, 3), 3),
    (SeedSet.of(0, 3, 4, 7, 25, 28), Triadic(34, 3), 3),
)


@dataclass(frozen=True)
class Caps:
    max_depth: int = 8
    max_k: int = 14
    max_seed_size: int = 2**16
    # terms generated to certify one seed
    max_horizon: int = 2**18
    # seeds certified during a repeat-factor search
    max_nodes: int = 400


DEFAULT_CAPS = Caps()


class AdkResult(NamedTuple):
    seed: SeedSet
    rho: int
    alpha: Triadic


@dataclass(frozen=True)
class ConstructionStep:
    kind: str
    k: int
    predicted_rho: int
    predicted_alpha: Triadic
    d: Optional[int] = None
    operand: Optional[SeedSet] = None

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "k": self.k}
        if self.kind == ADK:
            out["d"] = self.d
        else:
            out["operand"] = list(self.operand.elements)
        out["predicted_rho"] = self.predicted_rho
        out["predicted_alpha"] = self.predicted_alpha.to_dict()
        return out


@dataclass
class ConstructionChain:
    start: SeedSet
    steps: list = field(default_factory=list)
    final_seed: Optional[SeedSet] = None
    # certificate of the start seed and of every step's output
    certificates: list = field(default_factory=list)

    @property
    def depth(self) -> int:
        return len(self.steps)

    @property
    def final_certificate(self) -> IndependenceCertificate:
        return self.certificates[-1]

    def to_dict(self) -> dict:
        return {
            "start": list(self.start.elements),
            "steps": [s.to_dict() for s in self.steps],
            "final_seed": list(self.final_seed.elements),
            "final_certificate": self.final_certificate.to_dict(),
        }


# --------------------------------------------------------------------------
# certified building blocks


class Certified(NamedTuple):
    seq: GeneratedSequence
    cert: IndependenceCertificate


def certify_seed(seed, horizon: int, kmax: Optional[int] = None) -> Certified:
    """Generate ``horizon`` terms of S(seed) and certify them; raise if not independent."""
    seed = seed if isinstance(seed, SeedSet) else SeedSet(tuple(seed))
    horizon = max(horizon, len(seed) + 1)
    seq = generate(seed, horizon)
    cert = certify(seq, kmax=kmax if kmax is not None else horizon.bit_length())
    if cert is None:
        raise PreconditionError(f"S({_short(seed)}) is not certified independent within {horizon} terms")
    return Certified(seq, cert)


def _short(seed: SeedSet) -> str:
    e = seed.elements
    return ",".join(map(str, e)) if len(e) <= 8 else f"{e[0]},{e[1]},...,{e[-1]} ({len(e)} elements)"


def _need_terms(seqA: GeneratedSequence, count: int) -> None:
    if len(seqA) < count:
        seqA.extend(count - len(seqA))


def _standing(seqA: GeneratedSequence, certA: IndependenceCertificate, k: int):
    """Common preconditions of the interpolated construction at level k."""
    if k <= certA.kappa:
        raise PreconditionError(f"k={k} must exceed kappa(A)={certA.kappa}")
    _need_terms(seqA, (1 << k) + 1)
    c = seqA[1 << k]
    b = seqA[(1 << k) - 1]
    if b < certA.lam + certA.omega:
        raise PreconditionError(
            f"a_(2^{k}-1) = {b} < lam + omega = {certA.lam + certA.omega}; pick a larger k"
        )
    return c, b


# --------------------------------------------------------------------------
# the two constructions


def product(seqA: GeneratedSequence, certA: IndependenceCertificate, k: int, seedB) -> SeedSet:
    """``{a[2^k] * b + a : a in first 2^k terms of S(A), b in B}``."""
    if k < certA.kappa:
        raise PreconditionError(f"k={k} is below kappa(A)={certA.kappa}")
    seedB = seedB if isinstance(seedB, SeedSet) else SeedSet(tuple(seedB))
    _need_terms(seqA, (1 << k) + 1)
    c = seqA[1 << k]
    head = seqA.tolist()[: 1 << k]
    return SeedSet(tuple(sorted(c * b + a for b in seedB for a in head)))


def admissible_d_range(seqA: GeneratedSequence, certA: IndependenceCertificate, k: int):
    """Inclusive ``(low, high)`` bounds on d; ``low > high`` means no admissible d."""
    if k <= certA.kappa:
        raise PreconditionError(f"k={k} must exceed kappa(A)={certA.kappa}")
    _need_terms(seqA, (1 << k) + 1)
    return certA.omega + 1, seqA[1 << k] - certA.lam


def predicted_alpha(alphaA: Triadic, k: int, d: int) -> Triadic:
    return alphaA * Triadic(10, 2) - Triadic(d, k + 2)


def adk(seqA: GeneratedSequence, certA: IndependenceCertificate, k: int, d: int) -> AdkResult:
    """The interpolated seed and its predicted repeat and scaling factors."""
    c, _ = _standing(seqA, certA, k)
    low, high = admissible_d_range(seqA, certA, k)
    if not low <= d <= high:
        raise PreconditionError(f"d={d} outside admissible range [{low}, {high}]")
    head = seqA.tolist()[: 1 << k]
    elems = set()
    for offset in (0, c, 7 * c - d, 8 * c - d):
        elems.update(a + offset for a in head)
    try:
        seed = SeedSet(tuple(sorted(elems)))
    except InputError as exc:
        raise InconsistencyError(f"interpolated seed is not 3-free: {exc}") from exc
    return AdkResult(seed, 10 * c - d, predicted_alpha(certA.alpha, k, d))


def repeat_interval(seqA: GeneratedSequence, certA: IndependenceCertificate, k: int) -> list:
    """Every repeat factor ``10c - d`` reachable by one interpolation step at level k."""
    c, _ = _standing(seqA, certA, k)
    low, high = admissible_d_range(seqA, certA, k)
    if low > high:
        return []
    return list(range(10 * c - high, 10 * c - low + 1))


# --------------------------------------------------------------------------
# chains


def _horizon_for(kappa: int) -> int:
    # two levels above kappa: the interpolated seeds meet the sufficient
    # condition only at kappa + 1
    return 1 << (kappa + 2)


def _certify_within(seed: SeedSet, kappa_hint: int, caps: Caps) -> Certified:
    if len(seed) > caps.max_seed_size:
        raise OutOfRangeError(f"seed has {len(seed)} elements, cap is {caps.max_seed_size}")
    horizon = max(_horizon_for(kappa_hint), 2 * len(seed))
    if horizon > caps.max_horizon:
        raise OutOfRangeError(f"certifying needs {horizon} terms, cap is {caps.max_horizon}")
    return certify_seed(seed, horizon)


def _apply_product(cur: Certified, operand: SeedSet, kappaB: int, alphaB: Triadic, caps: Caps):
    k = cur.cert.kappa
    seed = product(cur.seq, cur.cert, k, operand)
    # S(A (x)_k B) = {c*b + a}, so its repeat factor is c * rho(B)
    rhoB = int(alphaB.scale3(kappaB))
    step = ConstructionStep(PRODUCT, k, cur.seq[1 << k] * rhoB, cur.cert.alpha * alphaB, operand=operand)
    nxt = _certify_within(seed, k + kappaB, caps)
    return step, nxt


def _apply_adk(cur: Certified, k: int, d: int, caps: Caps):
    res = adk(cur.seq, cur.cert, k, d)
    step = ConstructionStep(ADK, k, res.rho, res.alpha, d=d)
    nxt = _certify_within(res.seed, k + 2, caps)
    return step, nxt


def _check_step(step: ConstructionStep, nxt: Certified) -> None:
    if nxt.cert.alpha != step.predicted_alpha or nxt.cert.rho != step.predicted_rho:
        raise InconsistencyError(
            f"{step.kind} step predicted rho={step.predicted_rho}, alpha={step.predicted_alpha}; "
            f"measured rho={nxt.cert.rho}, alpha={nxt.cert.alpha}"
        )


def _find_adk_level(cur: Certified, target: Triadic, caps: Caps) -> Optional[tuple]:
    """Smallest k (and its d) taking alpha(cur) to ``target`` in one interpolation step."""
    alpha = cur.cert.alpha
    for k in range(cur.cert.kappa + 1, caps.max_k + 1):
        d = (alpha * Triadic(10, 2) - target).scale3(k + 2)
        if not d.is_integer():
            continue
        d = int(d)
        # a[2^k] = rho * 3^(k - kappa) for k >= kappa
        c = cur.cert.rho * 3 ** (k - cur.cert.kappa)
        b = (c + cur.cert.lam - 1) // 2
        if cur.cert.omega < d <= c - cur.cert.lam and b >= cur.cert.lam + cur.cert.omega:
            return k, d
    return None


def _operand_ladder(target: Triadic, caps: Caps):
    """Product plans ``(counts, alpha, kappa)`` with alpha <= target, best first.

    A plan's cost is the kappa of the final seed: the product kappa when it
    already equals the target, else that plus three for the closing
    interpolation step.
    """
    plans = []
    n = len(PRODUCT_OPERANDS)

    def rec(i, counts, alpha, kappa, depth):
        if i == n:
            if alpha <= target < alpha * Triadic(10, 2):
                cost = kappa if alpha == target else kappa + 3
                plans.append((cost, tuple(counts), alpha, kappa))
            return
        _, a_op, k_op = PRODUCT_OPERANDS[i]
        m = 0
        a, kap = alpha, kappa
        while a <= target and depth + m <= caps.max_depth:
            rec(i + 1, counts + [m], a, kap, depth + m)
            m += 1
            a = a * a_op
            kap += k_op

    rec(0, [], Triadic(1), 0, 0)
    plans.sort(key=lambda p: (p[0], -sum(p[1]), p[1]))
    return plans


def target_scaling(alpha_target, caps: Caps = DEFAULT_CAPS) -> ConstructionChain:
    """A certified chain from {0} to a seed whose scaling factor is exactly ``alpha_target``.

    Products with the fixed operands climb to the largest reachable factor at
    or below the target; one interpolation step then closes the remaining gap,
    which is always below a factor 10/9.
    """
    target = alpha_target if isinstance(alpha_target, Triadic) else Triadic.from_fraction(alpha_target)
    if target < 1:
        raise DomainError(f"scaling factors are at least 1; got {target}")
    start = SeedSet.of(0)
    root = certify_seed(start, 4)
    if target == 1:
        return ConstructionChain(start, [], start, [root.cert])

    last_error = None
    for cost, counts, _, _ in _operand_ladder(target, caps):
        if cost + 2 > caps.max_horizon.bit_length() - 1:
            last_error = OutOfRangeError(
                f"reaching {target} needs kappa {cost}; certifying that exceeds {caps.max_horizon} terms"
            )
            break
        try:
            return _run_scaling_plan(start, root, counts, target, caps)
        except OutOfRangeError as exc:
            last_error = exc
            log.debug("plan %s for %s failed: %s", counts, target, exc)
    if last_error is None:
        last_error = OutOfRangeError(f"no plan reaches {target} within depth {caps.max_depth}")
    raise last_error


def _run_scaling_plan(start, root, counts, target, caps):
    chain = ConstructionChain(start, [], None, [root.cert])
    cur = root
    for (operand, a_op, k_op), m in zip(PRODUCT_OPERANDS, counts):
        for _ in range(m):
            step, cur = _apply_product(cur, operand, k_op, a_op, caps)
            _check_step(step, cur)
            chain.steps.append(step)
            chain.certificates.append(cur.cert)
    if cur.cert.alpha != target:
        found = _find_adk_level(cur, target, caps)
        if found is None:
            raise OutOfRangeError(f"no level k <= {caps.max_k} admits an interpolation step to {target}")
        k, d = found
        step, cur = _apply_adk(cur, k, d, caps)
        _check_step(step, cur)
        chain.steps.append(step)
        chain.certificates.append(cur.cert)
    if chain.depth > caps.max_depth:
        raise OutOfRangeError(f"chain depth {chain.depth} exceeds {caps.max_depth}")
    chain.final_seed = cur.cert.seed
    return chain


def target_repeat(rho_target: int, caps: Caps = DEFAULT_CAPS) -> ConstructionChain:
    """Breadth-first search over interpolation chains from {0} for repeat factor ``rho_target``.

    Failure only means the target was not reached within the caps.
    """
    if rho_target < 1:
        raise DomainError(f"repeat factors are positive; got {rho_target}")
    start = SeedSet.of(0)
    root = certify_seed(start, 4)
    if root.cert.rho == rho_target:
        return ConstructionChain(start, [], start, [root.cert])

    queue = deque([(root, [], [root.cert])])
    certified = 1
    while queue:
        cur, steps, certs = queue.popleft()
        if len(steps) >= caps.max_depth:
            continue
        children = []
        for k in range(cur.cert.kappa + 1, caps.max_k + 1):
            try:
                c, _ = _standing(cur.seq, cur.cert, k)
            except PreconditionError:
                continue
            low, high = admissible_d_range(cur.seq, cur.cert, k)
            if low > high or 9 * c + cur.cert.lam > rho_target:
                break
            if 10 * c - high <= rho_target <= 10 * c - low:
                step, nxt = _apply_adk(cur, k, 10 * c - rho_target, caps)
                _check_step(step, nxt)
                return ConstructionChain(start, steps + [step], nxt.cert.seed, certs + [nxt.cert])
            # children whose own first interval could still contain the target:
            # their next level starts at 27 * rho' + lam'
            for d in range(low, high + 1):
                if 27 * (10 * c - d) <= rho_target:
                    children.append((k, d))
        for k, d in children:
            if certified >= caps.max_nodes:
                raise OutOfRangeError(f"repeat factor {rho_target} not reached after {certified} certified seeds")
            try:
                step, nxt = _apply_adk(cur, k, d, caps)
            except OutOfRangeError:
                continue
            certified += 1
            _check_step(step, nxt)
            queue.append((nxt, steps + [step], certs + [nxt.cert]))
    raise OutOfRangeError(f"repeat factor {rho_target} not reached within depth {caps.max_depth}")


def replay(chain: ConstructionChain, caps: Caps = DEFAULT_CAPS) -> SeedSet:
    """Rebuild the final seed from the chain's start and steps."""
    cur = certify_seed(chain.start, max(4, 2 * len(chain.start)))
    for step in chain.steps:
        if step.kind == PRODUCT:
            cert_b = certify_seed(step.operand, 64).cert
            step2, cur = _apply_product(cur, step.operand, cert_b.kappa, cert_b.alpha, caps)
        else:
            step2, cur = _apply_adk(cur, step.k, step.d, caps)
        if step2.k != step.k:
            raise InconsistencyError(f"replayed {step.kind} step at k={step2.k}, recorded k={step.k}")
    return cur.cert.seed
