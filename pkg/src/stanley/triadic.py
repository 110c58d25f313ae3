"""Exact rationals whose denominator is a power of three."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from numbers import Rational

from .errors import InputError

_SLASH_POW = re.compile(r"^\s*(-?\d+)\s*/\s*3\s*\^\s*(\d+)\s*$")
_SLASH = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*$")
_INT = re.compile(r"^\s*(-?\d+)\s*$")


def _pow3_exponent(q):
    """Return e with q == 3**e, or None."""
    if q < 1:
        return None
    e = 0
    while q % 3 == 0:
        q //= 3
        e += 1
    return e if q == 1 else None


@total_ordering
@dataclass(frozen=True, init=False)
class Triadic:
    """The number ``p / 3**e`` kept in lowest terms.

    Normal form: ``e == 0`` or ``p`` is not divisible by 3.
    """

    p: int
    e: int

    def __init__(self, p, e=0):
        p, e = int(p), int(e)
        if e < 0:
            p, e = p * 3 ** (-e), 0
        while e > 0 and p % 3 == 0:
            p //= 3
            e -= 1
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "e", e)

    @classmethod
    def from_fraction(cls, value) -> Triadic:
        if isinstance(value, Triadic):
            return value
        frac = Fraction(value)
        e = _pow3_exponent(frac.denominator)
        if e is None:
            raise InputError(f"{frac} is not triadic: denominator {frac.denominator} is not a power of 3")
        return cls(frac.numerator, e)

    @classmethod
    def parse(cls, text: str) -> Triadic:
        """Accept ``p/3^e``, ``p/q`` with q a power of 3, or a bare integer."""
        m = _SLASH_POW.match(text)
        if m:
            return cls(int(m.group(1)), int(m.group(2)))
        m = _SLASH.match(text)
        if m:
            q = int(m.group(2))
            if q == 0:
                raise InputError(f"zero denominator in {text!r}")
            e = _pow3_exponent(q)
            if e is None:
                raise InputError(f"denominator {q} in {text!r} is not a power of 3")
            return cls(int(m.group(1)), e)
        m = _INT.match(text)
        if m:
            return cls(int(m.group(1)), 0)
        raise InputError(f"cannot parse triadic number from {text!r}")

    @property
    def denominator(self) -> int:
        return 3**self.e

    def to_fraction(self) -> Fraction:
        return Fraction(self.p, 3**self.e)

    def to_dict(self) -> dict:
        return {"num": self.p, "den_pow3": self.e}

    def scale3(self, j: int) -> Triadic:
        """Multiply by ``3**j``; ``j`` may be negative."""
        return Triadic(self.p, self.e - j)

    def is_integer(self) -> bool:
        return self.e == 0

    def __int__(self):
        if self.e:
            raise ValueError(f"{self} is not an integer")
        return self.p

    def __float__(self):
        return self.p / 3**self.e

    def __str__(self):
        return str(self.p) if self.e == 0 else f"{self.p}/{3**self.e}"

    def __repr__(self):
        return f"Triadic({self.p}, {self.e})"

    def __hash__(self):
        return hash(self.to_fraction())

    # arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Triadic):
            return other
        if isinstance(other, int):
            return Triadic(other)
        if isinstance(other, Rational):
            return Triadic.from_fraction(other)
        return None

    def _common(self, other):
        e = max(self.e, other.e)
        return self.p * 3 ** (e - self.e), other.p * 3 ** (e - other.e), e

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, e = self._common(other)
        return Triadic(a + b, e)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b, e = self._common(other)
        return Triadic(a - b, e)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Triadic(-self.p, self.e)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return Triadic(self.p * other.p, self.e + other.e)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, Triadic):
            return self.p == other.p and self.e == other.e
        if isinstance(other, (int, Rational)):
            return self.to_fraction() == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, Triadic):
            a, b, _ = self._common(other)
            return a < b
        if isinstance(other, (int, Rational)):
            return self.to_fraction() < other
        return NotImplemented
