"""Tight contact structures on L(p,q) and their d3 invariants.

A tight structure is labelled by its rotation vector <r1..rn>, one entry per
unknot of the surgery chain, with ri in {ai+2, ai+4, ..., |ai|-2}.  All d3
values are exact `Fraction`s.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple

from .contfrac import ContinuedFraction, LensSpace, expand, prefix_dets, suffix_dets
from .errors import CapacityExceeded, InternalConsistencyError, InvalidRotation
from .tridiag import apq_closed_form, quadratic_form

Rational = Fraction

DEFAULT_CAP = 10**6
CAP_ENV = "LENSOBSTRUCT_CAP"


def default_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_CAP


@dataclass(frozen=True, order=True)
class TightStructure:
    rvec: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rvec", tuple(int(r) for r in self.rvec))

    def validate(self, cf: ContinuedFraction) -> "TightStructure":
        if len(self.rvec) != cf.n:
            raise InvalidRotation(f"rotation vector has length {len(self.rvec)}, chain has {cf.n}")
        for r, a in zip(self.rvec, cf.coeffs):
            if not (a + 2 <= r <= -a - 2) or (r - a) % 2:
                raise InvalidRotation(f"rotation {r} not allowed for coefficient {a}")
        return self


def _as_cf(x) -> ContinuedFraction:
    if isinstance(x, ContinuedFraction):
        return x
    if isinstance(x, LensSpace):
        return expand(x)
    return expand(LensSpace(*x))


def count(cf) -> int:
    cf = _as_cf(cf)
    total = 1
    for a in cf.coeffs:
        total *= -a - 1
    return total


def rotation_ranges(cf: ContinuedFraction) -> List[range]:
    return [range(a + 2, -a - 1, 2) for a in cf.coeffs]


def enumerate_structures(cf, cap: int = None) -> List[TightStructure]:
    """Every tight structure, rotation vectors in lexicographic order."""
    cf = _as_cf(cf)
    cap = default_cap() if cap is None else cap
    total = count(cf)
    if total > cap:
        raise CapacityExceeded(total, cap)
    return [TightStructure(r) for r in itertools.product(*rotation_ranges(cf))]


def xi_can(cf) -> TightStructure:
    cf = _as_cf(cf)
    return TightStructure(tuple(-a - 2 for a in cf.coeffs))


def conjugate(ts: TightStructure) -> TightStructure:
    return TightStructure(tuple(-r for r in ts.rvec))


def d3_from_form(cf: ContinuedFraction, form: int) -> Fraction:
    """d3 given the value of r^T A r."""
    return (Fraction(-form, cf.p) + cf.n - 2) / 4


def d3(cf, ts: TightStructure, apq=None) -> Fraction:
    """(-(1/p) r^T A r + n - 2) / 4."""
    cf = _as_cf(cf)
    ts.validate(cf)
    if apq is None:
        apq = apq_closed_form(cf)
    return d3_from_form(cf, quadratic_form(apq, ts.rvec))


def d3_can(cf) -> Fraction:
    cf = _as_cf(cf)
    return d3_from_form(cf, f_direct(cf))


def f_direct(cf) -> int:
    """r^T A r for the canonical rotation vector, using closed-form entries of A."""
    cf = _as_cf(cf)
    pre, suf = prefix_dets(cf.coeffs), suffix_dets(cf.coeffs)
    support = [(i, r) for i, r in enumerate(xi_can(cf).rvec) if r]
    total = 0
    for x, (i, ri) in enumerate(support):
        total += ri * ri * pre[i] * suf[i + 1]
        for j, rj in support[x + 1:]:
            total += 2 * ri * rj * pre[i] * suf[j + 1]
    return total


def f_recursive(p: int, q: int) -> int:
    """f(p/q) by the continued-fraction recurrence, unrolled from the tail.

    f(p/1) = (p-2)^2 and f(p/q) = (p-q-1)^2/q + (p/q) f(q/(ceil(p/q)q - p)).
    """
    p0, q0 = p, q
    chain = []
    while q != 1:
        chain.append((p, q))
        p, q = q, -(-p // q) * q - p
    value = Fraction((p - 2) ** 2)
    for p, q in reversed(chain):
        value = Fraction((p - q - 1) ** 2, q) + Fraction(p, q) * value
    if value.denominator != 1:
        raise InternalConsistencyError(f"f({p0}/{q0}) came out non-integral: {value}")
    return int(value)


def count_upper_bound(cf) -> Fraction:
    """(m-1)/m * (p - (n-1)(m-1)^(n-1)) with m the smallest |ai|."""
    cf = _as_cf(cf)
    m = min(-a for a in cf.coeffs)
    n = cf.n
    return Fraction(m - 1, m) * (cf.p - (n - 1) * (m - 1) ** (n - 1))


def d3_lower_bound(cf) -> Fraction:
    cf = _as_cf(cf)
    return Fraction(-cf.p + 2 * cf.n - 1, 4)


def d3_table(cf, cap: int = None) -> List[Tuple[TightStructure, Fraction]]:
    """(structure, d3) for every tight structure, in enumeration order."""
    cf = _as_cf(cf)
    structures = enumerate_structures(cf, cap)
    apq = apq_closed_form(cf)
    return [(ts, d3_from_form(cf, quadratic_form(apq, ts.rvec))) for ts in structures]


def fold_conjugates(structures: Sequence[TightStructure]) -> List[TightStructure]:
    """Keep one representative per conjugate pair (the lexicographically larger)."""
    seen = set()
    out = []
    for ts in structures:
        rep = max(ts, conjugate(ts))
        if rep not in seen:
            seen.add(rep)
            out.append(rep)
    return out
