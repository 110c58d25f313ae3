"""Greedy 3-free (Stanley) sequences and the coverage predicates behind them.

A sequence ``S(A)`` starts from a finite 3-free seed ``A`` containing 0 and
repeatedly appends the least integer above the current maximum that does not
complete a three-term arithmetic progression with two earlier terms.

Generation keeps a boolean sieve indexed by integer value: ``sieve[x]`` is set
once some pair of earlier terms ``y < z`` has ``2z - y == x``. The next term is
then simply the first unset position past the last term.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import InputError, ResourceLimitError

MEM_CAP_ENV = "STANLEY_MEM_CAP_MB"
DEFAULT_MEM_CAP_MB = 2048
# 2a - a_i must fit in int64
MAX_TERM = 2**62
_MIN_SIEVE = 1024
_FAST_SCAN_THRESHOLD = 256


def _validated(values: Iterable[int], name: str = "set") -> list[int]:
    out = []
    prev = None
    for v in values:
        if isinstance(v, (bool, float)) or not isinstance(v, (int, np.integer)):
            raise InputError(f"{name} must contain integers, got {v!r}")
        v = int(v)
        if v < 0:
            raise InputError(f"{name} contains negative value {v}")
        if prev is not None and v <= prev:
            raise InputError(f"{name} must be strictly increasing ({prev} then {v})")
        out.append(v)
        prev = v
    return out


def is_three_free(values: Sequence[int]) -> bool:
    """True iff no ``i < j < l`` has ``values[i] + values[l] == 2 * values[j]``.

    Plain middle-element scan over a sorted list.
    """
    s = _validated(values)
    members = set(s)
    for j, mid in enumerate(s):
        for lo in s[:j]:
            if 2 * mid - lo in members:
                return False
    return True


def _three_free_fast(arr: np.ndarray) -> bool:
    # Same scan, vectorised over the lower element; used for large seeds.
    if len(arr) < 3:
        return True
    top = int(arr[-1])
    lookup = np.zeros(top + 1, dtype=bool)
    lookup[arr] = True
    for j in range(1, len(arr) - 1):
        mid = int(arr[j])
        hi = 2 * mid - arr[:j]
        hi = hi[hi <= top]
        if hi.size and lookup[hi].any():
            return False
    return True


def covered_by(x: int, values: Sequence[int]) -> bool:
    """True iff some ``y < z < x`` in ``values`` satisfies ``2z - y == x``."""
    s = _validated(values)
    members = set(s)
    for z in s:
        if z >= x:
            break
        if 2 * z - x >= 0 and 2 * z - x in members:
            return True
    return False


def jointly_covered(x: int, s: Sequence[int], t: Sequence[int]) -> bool:
    """True iff some ``y`` in ``s`` and ``z`` in ``t`` with ``y < z < x`` have ``2z - y == x``."""
    lows = set(_validated(s, "s"))
    for z in _validated(t, "t"):
        if z >= x:
            break
        # z < x forces y = 2z - x < z
        if 2 * z - x in lows:
            return True
    return False


def s0_term(n: int) -> int:
    """n-th term of S(0): the binary digits of n read in base 3."""
    if n < 0:
        raise InputError(f"index must be nonnegative, got {n}")
    return int(format(n, "b"), 3)


def s0_terms(count: int) -> np.ndarray:
    """First ``count`` terms of S(0) as an int64 array."""
    n = np.arange(count, dtype=np.int64)
    out = np.zeros(count, dtype=np.int64)
    power = 1
    bit = 0
    while count > 1 and (1 << bit) < count:
        out += ((n >> bit) & 1) * power
        power *= 3
        bit += 1
    return out


@dataclass(frozen=True)
class SeedSet:
    """A finite 3-free set of nonnegative integers whose least element is 0."""

    elements: tuple

    def __post_init__(self):
        elems = tuple(_validated(self.elements, "seed"))
        if not elems:
            raise InputError("seed must not be empty")
        if elems[0] != 0:
            raise InputError(f"seed must start at 0, got {elems[0]}")
        if elems[-1] >= MAX_TERM:
            raise InputError(f"seed element {elems[-1]} exceeds 2^62")
        if len(elems) > _FAST_SCAN_THRESHOLD:
            ok = _three_free_fast(np.asarray(elems, dtype=np.int64))
        else:
            ok = is_three_free(elems)
        if not ok:
            raise InputError(f"seed is not 3-free: {_preview(elems)}")
        object.__setattr__(self, "elements", elems)

    @classmethod
    def of(cls, *values: int) -> SeedSet:
        return cls(tuple(values))

    @classmethod
    def parse(cls, text: str) -> SeedSet:
        try:
            values = sorted(int(tok) for tok in text.replace(" ", "").split(",") if tok)
        except ValueError:
            raise InputError(f"cannot parse seed {text!r}") from None
        return cls(tuple(values))

    @property
    def max(self) -> int:
        return self.elements[-1]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements

    def __str__(self):
        return ",".join(map(str, self.elements))


def _preview(elems, limit=12):
    if len(elems) <= limit:
        return "{" + ",".join(map(str, elems)) + "}"
    return "{" + ",".join(map(str, elems[:limit])) + f",... ({len(elems)} elements)}}"


def _as_seed(seed) -> SeedSet:
    if isinstance(seed, SeedSet):
        return seed
    if isinstance(seed, str):
        return SeedSet.parse(seed)
    return SeedSet(tuple(seed))


def mem_cap_bytes(mem_cap_mb=None) -> int:
    if mem_cap_mb is None:
        mem_cap_mb = float(os.environ.get(MEM_CAP_ENV, DEFAULT_MEM_CAP_MB))
    return int(mem_cap_mb * 2**20)


class GeneratedSequence:
    """A prefix of S(A) together with the sieve needed to continue it.

    Not safe to extend from several threads at once; reading is fine.
    """

    def __init__(self, seed, mem_cap_mb=None):
        self.seed = _as_seed(seed)
        self.seed_len = len(self.seed)
        elems = np.asarray(self.seed.elements, dtype=np.int64)
        self._buf = elems.copy()
        self.n = len(elems)
        self._cap = mem_cap_bytes(mem_cap_mb)
        size = max(_MIN_SIEVE, 2 * self.seed.max + 2)
        if size + self._buf.nbytes > self._cap:
            raise ResourceLimitError(f"seed needs a {size}-byte sieve, over the memory cap", completed=0)
        self.sieve = np.zeros(size, dtype=bool)
        for j in range(1, len(elems)):
            self.sieve[2 * elems[j] - elems[:j]] = True

    # read access -------------------------------------------------------------

    @property
    def terms(self) -> np.ndarray:
        view = self._buf[: self.n]
        view.flags.writeable = False
        return view

    def tolist(self) -> list[int]:
        return [int(v) for v in self._buf[: self.n]]

    def __len__(self):
        return self.n

    def __getitem__(self, idx):
        if isinstance(idx, slice):
            return self.terms[idx]
        if idx < 0:
            idx += self.n
        if not 0 <= idx < self.n:
            raise IndexError(f"term {idx} not generated (have {self.n})")
        return int(self._buf[idx])

    def __repr__(self):
        return f"GeneratedSequence(seed={_preview(self.seed.elements)}, n={self.n})"

    def copy(self) -> GeneratedSequence:
        other = object.__new__(GeneratedSequence)
        other.seed = self.seed
        other.seed_len = self.seed_len
        other._buf = self._buf[: self.n].copy()
        other.n = self.n
        other._cap = self._cap
        other.sieve = self.sieve.copy()
        return other

    # generation --------------------------------------------------------------

    def _grow(self, min_len: int, required: bool) -> None:
        old = len(self.sieve)
        budget = self._cap - self._buf.nbytes
        new = max(2 * old, min_len)
        if new > budget:
            new = budget
        if new < min_len and required:
            raise ResourceLimitError(
                f"sieve would need {min_len} bytes; memory cap is {self._cap} bytes", completed=self.n
            )
        if new <= old:
            return
        sieve = np.zeros(new, dtype=bool)
        sieve[:old] = self.sieve
        self.sieve = sieve
        # replay pairs whose marks fell past the old allocation
        terms = self._buf[: self.n]
        start = int(np.searchsorted(terms, (old + 1) // 2))
        for j in range(max(start, 1), self.n):
            marks = 2 * terms[j] - terms[:j]
            marks = marks[(marks >= old) & (marks < new)]
            sieve[marks] = True

    def _next_candidate(self, x: int) -> int:
        chunk = 4096
        while True:
            if x >= len(self.sieve):
                self._grow(x + 1, required=True)
            seg = self.sieve[x : x + chunk]
            j = int(np.argmin(seg))
            if not seg[j]:
                return x + j
            x += len(seg)
            chunk *= 2

    def extend(self, additional: int) -> GeneratedSequence:
        """Append ``additional`` greedy terms in place and return self."""
        if additional < 0:
            raise InputError(f"cannot extend by a negative count ({additional})")
        if additional == 0:
            return self
        target = self.n + additional
        if target * 8 + len(self.sieve) > self._cap:
            raise ResourceLimitError(f"{target} terms exceed the memory cap", completed=self.n)
        if len(self._buf) < target:
            buf = np.zeros(target, dtype=np.int64)
            buf[: self.n] = self._buf[: self.n]
            self._buf = buf
        buf = self._buf
        last = int(buf[self.n - 1])
        while self.n < target:
            x = self._next_candidate(last + 1)
            if x >= MAX_TERM:
                raise ResourceLimitError(f"term {x} would overflow 2a - a_i in 64 bits", completed=self.n)
            if 2 * x >= len(self.sieve):
                self._grow(2 * x + 1, required=False)
            size = len(self.sieve)
            # marks 2x - a_i are decreasing in i; keep the ones inside the sieve
            i0 = int(np.searchsorted(buf[: self.n], 2 * x - size, side="right"))
            self.sieve[2 * x - buf[i0 : self.n]] = True
            buf[self.n] = x
            self.n += 1
            last = x
        return self


def generate(seed, count: int, mem_cap_mb=None) -> GeneratedSequence:
    """First ``count`` terms of S(seed)."""
    seq = GeneratedSequence(seed, mem_cap_mb=mem_cap_mb)
    if count < seq.seed_len:
        raise InputError(f"count {count} is smaller than the seed ({seq.seed_len} elements)")
    return seq.extend(count - seq.seed_len)


def extend(seq: GeneratedSequence, additional: int) -> GeneratedSequence:
    return seq.extend(additional)


@dataclass(frozen=True)
class ObstructionReport:
    """O(A): integers neither in S(A) nor covered by it; omega is its max or -1."""

    members: tuple
    omega: int

    def to_dict(self) -> dict:
        return {"members": list(self.members), "omega": self.omega}


def obstruction_set(seed) -> ObstructionReport:
    """Compute O(A) exactly.

    The greedy rule only skips integers above max(A) that are already
    covered, so O(A) lies inside [0, max(A)). Below max(A) the terms of S(A)
    are exactly the seed, and coverage of x depends only on terms below x.
    """
    seed = _as_seed(seed)
    top = seed.max
    if top == 0:
        return ObstructionReport((), -1)
    elems = np.asarray(seed.elements, dtype=np.int64)
    blocked = np.zeros(top, dtype=bool)
    blocked[elems[:-1]] = True
    for j in range(1, len(elems)):
        marks = 2 * elems[j] - elems[:j]
        marks = marks[marks < top]
        if marks.size == 0:
            continue
        blocked[marks] = True
    members = tuple(int(v) for v in np.flatnonzero(~blocked))
    return ObstructionReport(members, members[-1] if members else -1)
