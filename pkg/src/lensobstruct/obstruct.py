"""Can L(p,q) be the lens space summand of a reducible Legendrian surgery?

The checks here are necessary conditions only.  A Legendrian representative
with (tb, r) = (1-p, r) whose surgery is S^3_{-p}(K) = L(p,q) # Y induces a
tight structure on L(p,q) with d3 = -(r^2 + p)/(4p), so the set of such r is
bounded by the d3 spectrum of L(p,q).  Stabilizing a tb-maximizing
representative yields a whole arithmetic progression of rotation numbers at
tb = 1-p, and every member has to land in that set.

RULED_OUT is a proof of impossibility (modulo the opt-in literature facts);
NOT_RULED_OUT only means these arithmetic checks do not obstruct.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, FrozenSet, List, Tuple

from .contfrac import LensSpace, expand
from .errors import CapacityExceeded, InvalidRotation, OutOfScope
from .tight import count, d3_can, default_cap, enumerate_structures
from .tridiag import apq_closed_form, quadratic_form

MINUS_QUARTER = Fraction(-1, 4)


@dataclass(frozen=True)
class LegendrianClass:
    tb: int
    r: int

    def __post_init__(self):
        if (self.tb + self.r) % 2 == 0:
            raise InvalidRotation(f"tb + r must be odd, got tb={self.tb}, r={self.r}")


class Verdict(str, enum.Enum):
    RULED_OUT = "RULED_OUT"
    NOT_RULED_OUT = "NOT_RULED_OUT"


@dataclass
class Reason:
    rule: str
    witness: Dict = field(default_factory=dict)
    literature: bool = False

    def to_dict(self):
        return {"rule": self.rule, "witness": self.witness, "literature": self.literature}


@dataclass
class FeasibilityReport:
    space: LensSpace
    tb_bar: int
    verdict: Verdict
    reasons: List[Reason]
    literature_facts_used: bool = False

    def to_dict(self):
        return {
            "p": self.space.p,
            "q": self.space.q,
            "tb_bar": self.tb_bar,
            "verdict": self.verdict.value,
            "reasons": [r.to_dict() for r in self.reasons],
            "literature_facts_used": self.literature_facts_used,
        }


# Filling classifications the arithmetic cannot reproduce.  Each entry says
# which L(p,q) (up to orientation-preserving homeomorphism) admit no Stein
# filling with intersection form <-p>, and where that comes from.
LITERATURE_FACTS = (
    {
        "rule": "LIT_L92_LISCA",
        "citation": "Lisca, fillings of (L(9,2), xi_can): b2 is 0 or 2",
        "match": lambda p, q: p == 9 and _homeomorphic_to(p, q, 2),
    },
    {
        "rule": "LIT_LP2_KALOTI",
        "citation": "Kaloti: unique Stein filling for tight L(p,2), p >= 15, with b2 = 2",
        "match": lambda p, q: p >= 15 and _homeomorphic_to(p, q, 2),
    },
    {
        "rule": "LIT_L83_LISCA",
        "citation": "Lisca, fillings of L(8,3): W(1,2,1) has b2 = 2, W(2,1,2) contains a -2 sphere",
        "match": lambda p, q: p == 8 and _homeomorphic_to(p, q, 3),
    },
)


def _homeomorphic_to(p, q, q0):
    """L(p,q) = L(p,q0) preserving orientation, i.e. q = q0^(+-1) mod p."""
    q0 %= p
    return q % p == q0 or (q * q0) % p == 1


def d3_from_surgery(p: int, r: int) -> Fraction:
    """d3 of the structure induced by surgery on a (tb, r) = (1-p, r) representative."""
    if p < 2:
        raise OutOfScope(f"need p >= 2, got {p}")
    if (r - p) % 2:
        raise InvalidRotation(f"r must have the parity of p (tb = 1-p, tb + r odd); got p={p}, r={r}")
    return Fraction(-(r * r + p), 4 * p)


def d3_connected_sum(d1: Fraction, d2: Fraction) -> Fraction:
    return Fraction(d1) + Fraction(d2) + Fraction(1, 2)


@functools.lru_cache(maxsize=4096)
def _rotation_numbers(p: int, q: int) -> Tuple[int, ...]:
    cf = expand(LensSpace(p, q))
    apq = apq_closed_form(cf)
    shift = p * (cf.n - 1)
    found = set()
    for ts in enumerate_structures(cf, cap=count(cf)):
        square = quadratic_form(apq, ts.rvec) - shift
        if square < 0:
            continue
        r = math.isqrt(square)
        if r * r == square and (r - p) % 2 == 0:
            found.update((r, -r))
    return tuple(sorted(found))


@functools.lru_cache(maxsize=4096)
def _d3_can(p: int, q: int) -> Fraction:
    return d3_can((p, q))


def rotation_numbers(space: LensSpace, cap: int = None) -> Tuple[int, ...]:
    """Sorted integers r of the parity of p with -(r^2+p)/(4p) a tight d3 value."""
    cap = default_cap() if cap is None else cap
    total = count(space)
    if total > cap:
        raise CapacityExceeded(total, cap)
    return _rotation_numbers(space.p, space.q)


def stabilization_set(start: LegendrianClass, target_tb: int) -> FrozenSet[int]:
    """Rotation numbers reachable by stabilizing `start` down to `target_tb`."""
    k = start.tb - target_tb
    if k < 0:
        raise OutOfScope(f"target tb {target_tb} is above the starting tb {start.tb}")
    return frozenset(range(start.r - k, start.r + k + 1, 2))


def t_normalized(tau: int) -> int:
    return tau if tau % 2 else tau - 1


def _required_rotations(p: int, tb_bar: int, r0: int) -> FrozenSet[int]:
    k = p - 1 + tb_bar
    needed = set(stabilization_set(LegendrianClass(tb_bar, r0), 1 - p))
    if tb_bar >= 0 or tb_bar % 2 == 0:
        # r0 >= 1 here, so the reversed orientation contributes a new value
        needed.add(-r0 - k)
    return frozenset(needed)


def find_progression_witness(p: int, tb_bar: int, rotations) -> int:
    """Smallest r0 >= 0 whose stabilization progression lies inside `rotations`, or None."""
    rset = set(rotations)
    if not rset:
        return None
    k = p - 1 + tb_bar
    reflect = tb_bar >= 0 or tb_bar % 2 == 0
    first = 0 if (tb_bar + 1) % 2 == 0 else 1
    for r0 in range(first, max(rset) + k + 1, 2):
        if reflect and -r0 - k not in rset:
            continue
        if all(r in rset for r in range(r0 - k, r0 + k + 1, 2)):
            return r0
    return None


def summand_feasible(space: LensSpace, tb_bar: int, use_literature: bool = False,
                     cap: int = None) -> FeasibilityReport:
    """Decide whether L(p,q) survives as a summand of S^3_{-p}(K) with max tb = tb_bar."""
    p = space.p
    if -p > tb_bar - 1:
        raise OutOfScope(f"slope -{p} is not below tb_bar = {tb_bar}")
    reasons = []

    dcan = _d3_can(space.p, space.q)
    if dcan > MINUS_QUARTER:
        reasons.append(Reason("D3_CAN_ABOVE_MINUS_QUARTER", {"d3_can": str(dcan)}))

    rotations = rotation_numbers(space, cap)
    witness = None
    if not rotations:
        reasons.append(Reason("NO_ROTATION_NUMBERS", {"d3_can": str(dcan)}))
    else:
        witness = find_progression_witness(p, tb_bar, rotations)
        if witness is None:
            reasons.append(Reason("STABILIZATION_NOT_COVERED", {
                "rotation_numbers": list(rotations),
                "stabilizations": p - 1 + tb_bar,
                "r0_searched_up_to": max(rotations) + p - 1 + tb_bar,
            }))

    lit_used = False
    if use_literature:
        for fact in LITERATURE_FACTS:
            if fact["match"](space.p, space.q):
                reasons.append(Reason(fact["rule"], {"citation": fact["citation"]}, literature=True))
                lit_used = True

    if reasons:
        return FeasibilityReport(space, tb_bar, Verdict.RULED_OUT, reasons, lit_used)
    progression = sorted(_required_rotations(p, tb_bar, witness))
    return FeasibilityReport(space, tb_bar, Verdict.NOT_RULED_OUT, [
        Reason("PROGRESSION_COVERED", {"r0": witness, "required": progression,
                                       "rotation_numbers": list(rotations)})
    ])


CASE_LP1 = "LP1"
CASE_L74 = "L74_SPECIAL"
CASE_GENERAL = "GENERAL_BOUND"


def classify_negative_tb(tb_bar: int, n: int) -> FrozenSet[str]:
    """Which alternatives for a reducible n-surgery with n < tb_bar < 0 remain arithmetically open."""
    if not n < tb_bar < 0:
        raise OutOfScope(f"need n < tb_bar < 0, got tb_bar={tb_bar}, n={n}")
    cases = {CASE_LP1}
    if (tb_bar, n) == (-6, -7):
        cases.add(CASE_L74)
    if n >= 4 * (tb_bar // 2) + 6:
        cases.add(CASE_GENERAL)
    return frozenset(cases)
