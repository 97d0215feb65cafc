"""Negative continued fractions of -p/q and the tridiagonal determinant d().

Lens spaces follow the contact convention: L(p,q) is -p/q surgery on the
unknot, normalized so that 1 <= q < p.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import InvalidCoefficient, InvalidLensSpace, NotCoprime


@dataclass(frozen=True, order=True)
class LensSpace:
    p: int
    q: int

    def __post_init__(self):
        p, q = int(self.p), int(self.q)
        if p < 2:
            raise InvalidLensSpace(f"need p >= 2, got p={p}")
        q %= p
        if q == 0:
            raise InvalidLensSpace(f"q is 0 mod p for L({self.p},{self.q})")
        if math.gcd(p, q) != 1:
            raise NotCoprime(f"gcd({p},{q}) != 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __str__(self):
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class ContinuedFraction:
    coeffs: Tuple[int, ...]
    p: int
    q: int

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coeffs)
        _check_coeffs(coeffs)
        if not coeffs:
            raise InvalidCoefficient("a continued fraction needs at least one coefficient")
        if det_d(coeffs) != self.p or det_d(coeffs[1:]) != self.q:
            raise InvalidCoefficient(f"{list(coeffs)} does not expand -{self.p}/{self.q}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int]) -> "ContinuedFraction":
        coeffs = tuple(coeffs)
        _check_coeffs(coeffs)
        return cls(coeffs, det_d(coeffs), det_d(coeffs[1:]))

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @property
    def space(self) -> LensSpace:
        return LensSpace(self.p, self.q)

    def __len__(self):
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)


def _check_coeffs(coeffs):
    for a in coeffs:
        if a > -2:
            raise InvalidCoefficient(f"coefficient {a} is not <= -2")


def expand(space: LensSpace) -> ContinuedFraction:
    """Expand -p/q as [a1, ..., an] with every ai <= -2.

    Ceiling-division recursion: a1 = -ceil(p/q), then continue with
    (q, ceil(p/q)*q - p) until the remainder vanishes.
    """
    p, q = space.p, space.q
    coeffs = []
    while q:
        c = -(-p // q)
        coeffs.append(-c)
        p, q = q, c * q - p
    return ContinuedFraction(tuple(coeffs), space.p, space.q)


def evaluate(coeffs: Sequence[int]) -> Fraction:
    """Exact value of a1 - 1/(a2 - 1/(... - 1/an))."""
    _check_coeffs(coeffs)
    if not coeffs:
        raise InvalidCoefficient("cannot evaluate an empty continued fraction")
    value = Fraction(coeffs[-1])
    for a in reversed(coeffs[:-1]):
        value = a - 1 / value
    return value


def det_d(coeffs: Sequence[int]) -> int:
    """|det| of the tridiagonal matrix with diagonal `coeffs` and unit off-diagonals.

    d() = 1, d(b1) = |b1|, d(b1..bk) = |b1| d(b2..bk) - d(b3..bk).
    """
    _check_coeffs(coeffs)
    prev, cur = 0, 1
    for b in reversed(coeffs):
        prev, cur = cur, -b * cur - prev
    return cur


def reverse(cf: ContinuedFraction) -> ContinuedFraction:
    """The same chain read from the other end: L(p,q') with q q' = 1 mod p."""
    coeffs = cf.coeffs[::-1]
    return ContinuedFraction(coeffs, cf.p, det_d(coeffs[1:]))


def suffix_dets(coeffs: Sequence[int]) -> list:
    """Entry k is d(coeffs[k:]); the final entry is d() = 1."""
    out = [1] * (len(coeffs) + 1)
    prev = 0
    for i in range(len(coeffs) - 1, -1, -1):
        out[i] = -coeffs[i] * out[i + 1] - prev
        prev = out[i + 1]
    return out


def prefix_dets(coeffs: Sequence[int]) -> list:
    """Entry k is d(coeffs[:k]); the first entry is d() = 1."""
    return suffix_dets(coeffs[::-1])[::-1]


def coprime_pairs(pmax: int, pmin: int = 2):
    """All normalized (p, q) with pmin <= p <= pmax, in canonical order."""
    for p in range(pmin, pmax + 1):
        for q in range(1, p):
            if math.gcd(p, q) == 1:
                yield p, q
