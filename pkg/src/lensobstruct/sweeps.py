"""Exhaustive finite checks, each producing one certificate row per case.

Work is split into one job per p.  Jobs may run in a process pool, but rows
are always returned in canonical (p, q, tau) order, so certificates do not
depend on the worker count.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List

from .contfrac import ContinuedFraction, LensSpace, expand
from .errors import InternalConsistencyError
from .obstruct import Verdict, rotation_numbers, summand_feasible, t_normalized
from .tight import (count, count_upper_bound, d3_can, d3_lower_bound, d3_table, f_direct,
                    f_recursive, xi_can, conjugate)
from .tridiag import apq_closed_form, apq_oracle

Row = Dict[str, object]


def _q_values(p: int) -> List[int]:
    return [q for q in range(1, p) if math.gcd(p, q) == 1]


def _spaces(p: int):
    for q in _q_values(p):
        yield q, expand(LensSpace(p, q))


def _apq_oracle(p: int) -> List[Row]:
    rows = []
    for q, cf in _spaces(p):
        try:
            ok = apq_closed_form(cf) == apq_oracle(cf)
        except InternalConsistencyError:
            ok = False
        rows.append({"p": p, "q": q, "n": cf.n, "pass": ok})
    return rows


def _f_recurrence(p: int) -> List[Row]:
    rows = []
    for q, cf in _spaces(p):
        fd, fr = f_direct(cf), f_recursive(p, q)
        rows.append({"p": p, "q": q, "f_direct": fd, "f_recursive": fr, "pass": fd == fr})
    return rows


def _d3_bound(p: int) -> List[Row]:
    rows = []
    for q, cf in _spaces(p):
        low = min(d for _, d in d3_table(cf))
        bound = d3_lower_bound(cf)
        rows.append({"p": p, "q": q, "n": cf.n, "min_d3": str(low), "bound": str(bound),
                     "pass": low >= bound})
    return rows


XICAN_MIN_COUNT_CAP = 10**5


def _xican_min(p: int) -> List[Row]:
    rows = []
    for q, cf in _spaces(p):
        total = count(cf)
        if total > XICAN_MIN_COUNT_CAP:
            continue
        table = d3_table(cf, cap=total)
        low = min(d for _, d in table)
        minimizers = {ts for ts, d in table if d == low}
        can = xi_can(cf)
        rows.append({"p": p, "q": q, "count": total, "min_d3": str(low),
                     "minimizers": len(minimizers), "pass": minimizers == {can, conjugate(can)}})
    return rows


def _count_bound(p: int) -> List[Row]:
    rows = []
    for q, cf in _spaces(p):
        total, bound = count(cf), count_upper_bound(cf)
        equal = total == bound
        expect_equal = cf.n <= 2 or p == q + 1
        rows.append({"p": p, "q": q, "count": total, "bound": str(bound), "equal": equal,
                     "pass": total <= bound and equal == expect_equal})
    return rows


def _lp2_diophantine(p: int) -> List[Row]:
    if p % 2 == 0 or p < 3:
        return []
    rots = rotation_numbers(LensSpace(p, 2))
    witnesses = []
    ok = True
    for r in rots:
        twice = r * r + p
        s = math.isqrt(twice // 2)
        if twice % 2 or s * s * 2 != twice or s > (p - 3) // 2 or (s - (p - 3) // 2) % 2:
            ok = False
        witnesses.append(s)
    if rots and p % 8 not in (1, 7):
        ok = False
    return [{"p": p, "q": 2, "rotation_numbers": list(rots), "s": witnesses, "pass": ok}]


def _p_bound(p: int, large: bool) -> List[Row]:
    rows = []
    for q, cf in _spaces(p):
        n = cf.n
        if n < 3 or large != all(a <= -3 for a in cf.coeffs):
            continue
        space = LensSpace(p, q)
        open_taus = [tau for tau in range(1, p)
                     if summand_feasible(space, -tau).verdict is Verdict.NOT_RULED_OUT]
        row = {"p": p, "q": q, "n": n, "not_ruled_out": open_taus}
        if large:
            ok = all(p <= 2 * t_normalized(tau) - 4 for tau in open_taus)
            rmax = max((abs(r) for r in rotation_numbers(space)), default=None)
            r_ok = rmax is None or 2 * rmax <= p - 6
            row.update({"max_abs_r": rmax, "r_bound_ok": r_ok, "pass": ok and r_ok})
        else:
            if n == 3:
                ok = all(p < 2 * t_normalized(tau) - n for tau in open_taus)
            else:
                ok = all(p <= 2 * t_normalized(tau) - n for tau in open_taus)
            row["pass"] = ok
        rows.append(row)
    return rows


def _p_bound_ai_2(p: int) -> List[Row]:
    return _p_bound(p, large=False)


def _p_bound_ai_large(p: int) -> List[Row]:
    return _p_bound(p, large=True)


def triples_35() -> List[ContinuedFraction]:
    """Chains [a1,a2,a3] with -7 <= ai <= -3, some |ai| = 3, and |a1| <= |a3|."""
    out = []
    for a in itertools.product(range(-3, -8, -1), repeat=3):
        if max(a) == -3 and -a[0] <= -a[2]:
            out.append(ContinuedFraction.from_coeffs(a))
    return out


def _triples(_: int) -> List[Row]:
    rows = []
    for cf in triples_35():
        dcan = d3_can(cf)
        lhs = -(4 * dcan + 1)
        rhs = Fraction(cf.p, 4) - Fraction(5, 2)
        rows.append({"coeffs": list(cf.coeffs), "p": cf.p, "q": cf.q, "d3_can": str(dcan),
                     "lhs": str(lhs), "rhs": str(rhs), "pass": lhs < rhs})
    return rows


@dataclass(frozen=True)
class Check:
    name: str
    worker: Callable[[int], List[Row]]
    default_pmax: int
    per_p: bool = True

    def jobs(self, pmax: int) -> List[int]:
        return list(range(2, pmax + 1)) if self.per_p else [0]


CHECKS = {c.name: c for c in (
    Check("apq-oracle", _apq_oracle, 200),
    Check("f-recurrence", _f_recurrence, 500),
    Check("d3-bound", _d3_bound, 150),
    Check("xican-min", _xican_min, 100),
    Check("count-bound", _count_bound, 200),
    Check("lp2-diophantine", _lp2_diophantine, 201),
    Check("35-triples", _triples, 0, per_p=False),
    Check("p-bound-ai-2", _p_bound_ai_2, 150),
    Check("p-bound-ai-large", _p_bound_ai_large, 150),
)}


def run_check(name: str, pmax: int = None, workers: int = 1) -> List[Row]:
    """All certificate rows for `name`, in canonical order regardless of `workers`."""
    check = CHECKS[name]
    pmax = check.default_pmax if pmax is None else pmax
    jobs = check.jobs(pmax)
    if workers <= 1 or len(jobs) <= 1:
        chunks: Iterable[List[Row]] = map(check.worker, jobs)
        return [row for chunk in chunks for row in chunk]
    # map() yields in submission order, which is what keeps output stable
    with ProcessPoolExecutor(max_workers=workers) as pool:
        chunks = pool.map(check.worker, jobs, chunksize=max(1, len(jobs) // (4 * workers)))
        return [row for chunk in chunks for row in chunk]

