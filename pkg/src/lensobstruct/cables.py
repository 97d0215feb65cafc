"""Thurston-Bennequin bounds for cables, by front-diagram bookkeeping.

A front is tracked only through its writhe and cusp count; tb = w - c/2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Tuple

from .errors import OutOfScope


@dataclass(frozen=True)
class FrontStats:
    writhe: int
    cusps: int

    def __post_init__(self):
        if self.cusps < 2 or self.cusps % 2:
            raise ValueError(f"cusp count must be even and >= 2, got {self.cusps}")

    @property
    def tb(self) -> int:
        return self.writhe - self.cusps // 2


@dataclass(frozen=True)
class CableParams:
    """(p, q) cable parameters, normalized so that p >= 2 (C_{p,q} = C_{-p,-q})."""

    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p < 0:
            p, q = -p, -q
        if p < 2:
            raise ValueError(f"cable needs |p| >= 2, got p={self.p}")
        if math.gcd(p, q) != 1:
            raise ValueError(f"gcd({p},{q}) != 1")
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)


def cable_tb_bounds(cp: CableParams, tb_bar_companion: int) -> Tuple[int, int]:
    """(lower, upper) bounds on the max tb of C_{p,q}(K) given max tb of K."""
    p, q = cp.p, cp.q
    if q == -1:
        raise OutOfScope("the upper bound pq fails for q = -1 (C_{p,-1}(unknot) is the unknot)")
    threshold = p * tb_bar_companion
    if q < threshold:
        return p * q, p * q
    if q > threshold:
        return p * q - (q - threshold), p * q
    raise AssertionError("q = p*tb is impossible when gcd(p,q) = 1 and p >= 2")


def p_copy_front(front: FrontStats, p: int) -> FrontStats:
    """p parallel copies of a front, shifted in z: the (p, p*tb) cable."""
    if p < 2:
        raise ValueError("p must be >= 2")
    return FrontStats(p * p * front.writhe - p * (p - 1) * front.cusps // 2, p * front.cusps)


def twist_adjust(front: FrontStats, p: int, delta_twists: int) -> FrontStats:
    """Insert |delta| 1/p-twists into a p-copy; negative twists add cusps, positive ones don't."""
    if p < 2:
        raise ValueError("p must be >= 2")
    if delta_twists < 0:
        k = -delta_twists
        return FrontStats(front.writhe - k * (p - 1), front.cusps + 2 * k)
    return FrontStats(front.writhe + delta_twists * (p - 1), front.cusps)


def cable_genus(cp: CableParams, g_companion: int) -> int:
    """Seifert genus of C_{p,q}(K) for fibered K: p g + (p-1)(q-1)/2."""
    p, q = cp.p, cp.q
    if q <= 0:
        raise OutOfScope("genus formula needs p, q > 0")
    if g_companion < 0:
        raise ValueError("genus must be nonnegative")
    twice = (p - 1) * (q - 1)
    assert twice % 2 == 0
    return p * g_companion + twice // 2


def cable_identity_check(cp: CableParams, g_companion: int) -> bool:
    """2 g(C) - 1 == pq - (q - p(2g - 1)), valid whenever q/p >= 2g - 1."""
    p, q = cp.p, cp.q
    if q < p * (2 * g_companion - 1):
        raise OutOfScope(f"need q/p >= 2g-1, got q/p = {q}/{p}, g = {g_companion}")
    return 2 * cable_genus(cp, g_companion) - 1 == p * q - (q - p * (2 * g_companion - 1))
