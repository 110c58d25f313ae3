"""Independence certificates and growth diagnostics for generated sequences.

A sequence is independent when, for every k from some threshold kappa on,

    a[2^k + i] = a[2^k] + a[i]        (0 <= i < 2^k)
    a[2^k]     = 2 a[2^k - 1] + 1 - lam

with a single constant ``lam``. Checking both conditions at one level k where
additionally ``a[2^k - 1] >= lam + omega(A)`` settles every larger level, which
is what makes a finite certificate a proof rather than an observation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional

import numpy as np

from .errors import InconsistencyError, NeedMoreTerms
from .sequence import GeneratedSequence, SeedSet, obstruction_set, s0_terms
from .triadic import Triadic

DEFAULT_KMAX = 12
LOG2_3 = math.log2(3)

TYPE1 = "type1"
TYPE2 = "type2"
UNKNOWN = "unknown"


class LevelCheck(NamedTuple):
    lam: int
    proven: bool


@dataclass(frozen=True)
class IndependenceCertificate:
    seed: SeedSet
    horizon: int
    kappa: int
    lam: int
    rho: int
    alpha: Triadic
    proven: bool
    # level at which the sufficient condition was witnessed, if any
    proven_at: Optional[int] = None
    omega: int = -1

    def to_dict(self) -> dict:
        return {
            "seed": list(self.seed.elements),
            "horizon": self.horizon,
            "kappa": self.kappa,
            "lambda": self.lam,
            "rho": self.rho,
            "alpha": self.alpha.to_dict(),
            "proven": self.proven,
        }


@dataclass(frozen=True)
class ScalingDecomposition:
    """``a_n = alpha * s_n + b[n mod period]`` with exact rational residues."""

    alpha: Triadic
    b: tuple
    period: int

    def term(self, n: int) -> Fraction:
        from .sequence import s0_term

        return self.alpha.to_fraction() * s0_term(n) + self.b[n % self.period]

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha.to_dict(),
            "period": self.period,
            "b": [str(v) for v in self.b],
        }


@dataclass(frozen=True)
class GrowthReport:
    """Heuristic growth classification. Not a proof of anything."""

    classification: str
    fitted_exponent: float
    fit_residual: float
    window: tuple
    log_corrected_exponent: float
    type1_residual: float
    type2_residual: float
    certified: bool

    def to_dict(self) -> dict:
        return {
            "classification": self.classification,
            "fitted_exponent": self.fitted_exponent,
            "fit_residual": self.fit_residual,
            "window": list(self.window),
            "log_corrected_exponent": self.log_corrected_exponent,
            "type1_residual": self.type1_residual,
            "type2_residual": self.type2_residual,
            "certified": self.certified,
            "heuristic": True,
        }


def _terms(seq) -> np.ndarray:
    if isinstance(seq, GeneratedSequence):
        return seq.terms
    return np.asarray(seq, dtype=np.int64)


def check_independence_at(seq, k: int, omega: int) -> Optional[LevelCheck]:
    """Test both independence conditions at level k.

    Returns ``None`` when either fails, otherwise ``lam`` and whether the
    sufficient condition ``a[2^k - 1] >= lam + omega`` holds there.
    """
    t = _terms(seq)
    p = 1 << k
    if len(t) < 2 * p:
        raise NeedMoreTerms(2 * p, len(t))
    if not np.array_equal(t[p : 2 * p], t[p] + t[:p]):
        return None
    lam = 2 * int(t[p - 1]) + 1 - int(t[p])
    return LevelCheck(lam, int(t[p - 1]) >= lam + omega)


def certify(seq: GeneratedSequence, kmax: int = DEFAULT_KMAX, omega: Optional[int] = None):
    """Find the least kappa <= kmax at which independence holds through the horizon.

    Every level from kappa up to the largest one the horizon allows must pass
    with the same ``lam``. A certificate that never met the sufficient
    condition must be backed by at least two levels. Returns ``None`` when no
    kappa qualifies.
    """
    t = seq.terms
    n = len(t)
    if n < 2:
        raise NeedMoreTerms(2, n)
    top = n.bit_length() - 2  # largest k with 2^(k+1) <= n
    if omega is None:
        omega = obstruction_set(seq.seed).omega
    levels = [check_independence_at(t, k, omega) for k in range(top + 1)]

    # scan down from the top: the passing, lam-consistent suffix of levels
    kappa = None
    lam = None
    for k in range(top, -1, -1):
        res = levels[k]
        if res is None or (lam is not None and res.lam != lam):
            break
        lam = res.lam
        kappa = k
    if kappa is None or kappa > kmax:
        return None
    proven_at = next((k for k in range(kappa, top + 1) if levels[k].proven), None)
    if proven_at is None and kappa == top:
        return None
    rho = int(t[1 << kappa])
    return IndependenceCertificate(
        seed=seq.seed,
        horizon=n,
        kappa=kappa,
        lam=lam,
        rho=rho,
        alpha=Triadic(rho, kappa),
        proven=proven_at is not None,
        proven_at=proven_at,
        omega=omega,
    )


def _scaled_residues(t: np.ndarray, cert: IndependenceCertificate):
    # 3^kappa * b_n = 3^kappa * a_n - rho * s_n, exact in integers
    scale = 3**cert.kappa
    s = s0_terms(len(t))
    if scale * int(t[-1]) < 2**62 and cert.rho * int(s[-1]) < 2**62:
        return scale * t - cert.rho * s
    return np.array([scale * int(a) - cert.rho * int(x) for a, x in zip(t, s)], dtype=object)


def scaling_decomposition(seq, cert: IndependenceCertificate) -> ScalingDecomposition:
    """Split the terms into ``alpha * s_n`` plus a residue periodic in n."""
    t = _terms(seq)
    period = 1 << cert.kappa
    if len(t) < period:
        raise NeedMoreTerms(period, len(t))
    scaled = _scaled_residues(t, cert)
    base = scaled[:period]
    reps = -(-len(t) // period)
    expected = np.tile(base, reps)[: len(t)]
    bad = np.flatnonzero(scaled != expected)
    if bad.size:
        n = int(bad[0])
        raise InconsistencyError(
            f"a_{n} = {int(t[n])} does not match alpha*s_n + b_(n mod {period}) for alpha = {cert.alpha}"
        )
    if period > 1 and np.array_equal(base[: period // 2], base[period // 2 :]):
        raise InconsistencyError(f"residues repeat with period {period // 2}, so kappa is not minimal")
    scale = 3**cert.kappa
    b = tuple(Fraction(int(v), scale) for v in base)
    return ScalingDecomposition(cert.alpha, b, period)


def repeat_structure_check(seq, cert: IndependenceCertificate) -> bool:
    """Do the terms equal ``{rho*x + y : x in S(0), y in first 2^kappa terms}`` up to the last term?"""
    t = _terms(seq)
    period = 1 << cert.kappa
    if len(t) < period:
        return False
    top = int(t[-1])
    base = t[:period]
    limit = top // cert.rho
    bits = 0
    while 3**bits <= limit:
        bits += 1
    xs = s0_terms(1 << bits)
    xs = xs[xs <= limit]
    vals = (cert.rho * xs[:, None] + base[None, :]).ravel()
    vals = np.unique(vals[vals <= top])
    return np.array_equal(vals, t)


def triple_growth_check(seq, cert: IndependenceCertificate) -> bool:
    """``a[2^(k+1)] == 3 a[2^k]`` for every testable k >= kappa."""
    t = _terms(seq)
    k = cert.kappa
    if len(t) <= 1 << (k + 1):
        raise NeedMoreTerms((1 << (k + 1)) + 1, len(t))
    while (1 << (k + 1)) < len(t):
        if int(t[1 << (k + 1)]) != 3 * int(t[1 << k]):
            return False
        k += 1
    return True


def moy_violations(seq, start: int = 100) -> list:
    """Indices n >= start with a_n > n^2 / 2."""
    t = _terms(seq)
    if len(t) <= start:
        return []
    n = np.arange(start, len(t), dtype=np.float64)
    bad = np.flatnonzero(t[start:].astype(np.float64) > n * n / 2)
    return [int(i) + start for i in bad]


def _rms(r):
    return float(np.sqrt(np.mean(r * r)))


def classify_growth(seq: GeneratedSequence, cert=None, min_terms: int = 512, samples: int = 400) -> GrowthReport:
    """Compare Type 1 (``n^log2(3)``) and Type 2 (``n^2/log n``) growth.

    The fit uses log-spaced indices over ``[sqrt(N), N)``: Type 1 sequences
    jump by a factor near 2 inside every octave, so only windows spanning many
    octaves see the asymptotic slope.
    """
    t = seq.terms
    N = len(t)
    if N < min_terms:
        raise NeedMoreTerms(min_terms, N)
    if cert is None:
        cert = certify(seq)
    lo = max(2, math.isqrt(N))
    idx = np.unique(np.geomspace(lo, N - 1, samples).astype(np.int64))
    x = np.log(idx.astype(np.float64))
    y = np.log(t[idx].astype(np.float64))

    slope, icpt = np.polyfit(x, y, 1)
    fit_residual = _rms(y - (icpt + slope * x))
    corrected, _ = np.polyfit(x, y + np.log(x), 1)

    m1 = LOG2_3 * x
    type1_residual = _rms(y - m1 - np.mean(y - m1))
    m2 = 2 * x - np.log(x)
    type2_residual = _rms(y - m2 - np.mean(y - m2))

    if cert is not None or abs(slope - LOG2_3) <= 0.1:
        label = TYPE1
    elif abs(corrected - 2) <= 0.2 and type2_residual < type1_residual:
        label = TYPE2
    else:
        label = UNKNOWN
    return GrowthReport(
        classification=label,
        fitted_exponent=float(slope),
        fit_residual=fit_residual,
        window=(int(idx[0]), int(idx[-1])),
        log_corrected_exponent=float(corrected),
        type1_residual=type1_residual,
        type2_residual=type2_residual,
        certified=cert is not None,
    )
