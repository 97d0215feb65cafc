"""Linking matrix M_{p/q} of the surgery chain and its scaled inverse A = -p M^{-1}.

Matrices are tuples of row tuples of Python ints.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence, Tuple

from .contfrac import ContinuedFraction, prefix_dets, suffix_dets
from .errors import InternalConsistencyError

IntMatrix = Tuple[Tuple[int, ...], ...]


def linking_matrix(cf: ContinuedFraction) -> IntMatrix:
    a = cf.coeffs
    n = len(a)
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = a[i]
        if i > 0:
            row[i - 1] = 1
        if i < n - 1:
            row[i + 1] = 1
        rows.append(tuple(row))
    return tuple(rows)


def apq_closed_form(cf: ContinuedFraction) -> IntMatrix:
    """Entry (i, j), i <= j, is d(a_1..a_{i-1}) * d(a_{j+1}..a_n)."""
    a = cf.coeffs
    n = len(a)
    pre = prefix_dets(a)
    suf = suffix_dets(a)
    rows = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = pre[i] * suf[j + 1]
    return tuple(tuple(r) for r in rows)


def _scaled_inverse_rows(m: Sequence[Sequence[int]]):
    """Fraction-free elimination of the augmented system [M | I].

    Rows may be rescaled freely, so each is kept as a sparse integer vector
    with its content divided out.  On return row i reads c_i * [e_i | row i
    of M^{-1}]; the pairs (c_i, right half) are returned.  Zero entries are
    skipped, so banded inputs cost O(n^2) row entries rather than O(n^3).
    """
    n = len(m)
    aug = []
    for i, row in enumerate(m):
        r = {k: int(x) for k, x in enumerate(row) if x}
        r[n + i] = 1
        aug.append(r)

    def eliminate(r, src, col):
        target = aug[r]
        t = target.get(col)
        if not t:
            return
        s = src[col]
        g = math.gcd(t, s)
        ts, ss = s // g, t // g
        out = {k: v * ts for k, v in target.items()}
        for k, v in src.items():
            w = out.get(k, 0) - ss * v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        content = math.gcd(*out.values())
        if content > 1:
            out = {k: v // content for k, v in out.items()}
        aug[r] = out

    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r].get(col)), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        if piv != col:
            aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(col + 1, n):
            eliminate(r, aug[col], col)
    for col in range(n - 1, -1, -1):
        for r in range(col - 1, -1, -1):
            eliminate(r, aug[col], col)
    return [(row[i], [row.get(n + k, 0) for k in range(n)]) for i, row in enumerate(aug)]


def exact_inverse(m: Sequence[Sequence[int]]) -> list:
    """M^{-1} as a list of rows of Fractions."""
    return [[Fraction(x, c) for x in right] for c, right in _scaled_inverse_rows(m)]


def apq_oracle(cf: ContinuedFraction) -> IntMatrix:
    """-p * M^{-1} by exact elimination; every entry must come out integral."""
    rows = []
    for c, right in _scaled_inverse_rows(linking_matrix(cf)):
        out = []
        for x in right:
            y, rem = divmod(-cf.p * x, c)
            if rem:
                raise InternalConsistencyError(
                    f"non-integral entry {Fraction(-cf.p * x, c)} in A for {list(cf.coeffs)}")
            out.append(y)
        rows.append(tuple(out))
    return tuple(rows)


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Integer determinant by Bareiss fraction-free elimination."""
    return leading_minors(m)[-1] if len(m) else 1


def leading_minors(m: Sequence[Sequence[int]]) -> list:
    """All leading principal minors via Bareiss; the k-th pivot is the k-th minor.

    Assumes every leading minor is nonzero (true for definite matrices); a
    zero pivot is reported as a zero minor and elimination stops there.
    """
    a = [list(r) for r in m]
    n = len(a)
    minors = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            minors.extend([0] * (n - k - 1))
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def is_positive_definite(m: Sequence[Sequence[int]]) -> bool:
    return all(x > 0 for x in leading_minors(m))


def quadratic_form(m: Sequence[Sequence[int]], v: Sequence[int]) -> int:
    total = 0
    for i, vi in enumerate(v):
        if not vi:
            continue
        row = m[i]
        s = 0
        for j, vj in enumerate(v):
            if vj:
                s += row[j] * vj
        total += vi * s
    return total
