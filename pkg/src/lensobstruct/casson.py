"""Alexander polynomial second derivative and the Casson-Walker parity obstruction.

For a symmetric Alexander polynomial normalized with Delta(1) = 1,
Delta''(1)/2 equals the Conway coefficient a2.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from typing import Dict, Mapping

from .errors import InvalidAlexander


class LaurentPoly:
    """Sparse integer Laurent polynomial in t; zero coefficients are never stored."""

    def __init__(self, coeffs: Mapping[int, int] = None):
        self.coeffs: Dict[int, int] = {}
        for e, c in (coeffs or {}).items():
            e, c = int(e), int(c)
            if c:
                self.coeffs[e] = self.coeffs.get(e, 0) + c
        self.coeffs = {e: c for e, c in sorted(self.coeffs.items()) if c}

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"LaurentPoly({self.coeffs})"

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def at_one(self) -> int:
        return sum(self.coeffs.values())

    def is_symmetric(self) -> bool:
        return all(self.coeffs.get(-e) == c for e, c in self.coeffs.items())

    def to_json(self) -> Dict[str, int]:
        return {str(e): c for e, c in self.coeffs.items()}

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e, c in sorted(self.coeffs.items(), reverse=True):
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if e == 1 else f"t^{e}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


_TERM = re.compile(
    r"""(?P<sign>[+-]?)\s*
        (?:
          (?P<coef>\d+)?\s*\*?\s*t\s*(?:\^\s*(?:\{\s*(?P<e1>[+-]?\d+)\s*\}|\(\s*(?P<e2>[+-]?\d+)\s*\)|(?P<e3>[+-]?\d+)))?
        | (?P<const>\d+)
        )\s*""",
    re.VERBOSE,
)


def parse_poly(text: str) -> LaurentPoly:
    """Parse a Laurent polynomial.

    Accepts a JSON object {"exponent": coefficient, ...} or a sum of terms
    such as "t^-1 - 1 + t", "2t^3", "3*t^{-2}".  Exponents follow a caret,
    optionally wrapped in braces or parentheses.
    """
    text = text.strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidAlexander(f"bad JSON polynomial: {exc}") from None
        return LaurentPoly({int(k): int(v) for k, v in data.items()})
    coeffs: Dict[int, int] = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise InvalidAlexander(f"cannot parse polynomial at {text[pos:]!r}")
        if not m.group("sign") and not first:
            raise InvalidAlexander(f"missing operator before {text[pos:]!r}")
        sign = -1 if m.group("sign") == "-" else 1
        if m.group("const") is not None:
            e, c = 0, int(m.group("const"))
        else:
            c = int(m.group("coef")) if m.group("coef") else 1
            exp = m.group("e1") or m.group("e2") or m.group("e3")
            e = int(exp) if exp is not None else 1
        coeffs[e] = coeffs.get(e, 0) + sign * c
        pos = m.end()
        first = False
    if first:
        raise InvalidAlexander("empty polynomial")
    return LaurentPoly(coeffs)


def half_second_derivative(poly: LaurentPoly, normalize_sign: bool = False) -> int:
    """Delta''(1)/2 = sum_j c_j j(j-1) / 2 for a symmetric Delta with Delta(1) = 1."""
    if not poly.is_symmetric():
        raise InvalidAlexander(f"{poly} is not symmetric under t -> 1/t")
    value = poly.at_one()
    if value == -1 and normalize_sign:
        poly = -poly
        value = 1
    if value != 1:
        raise InvalidAlexander(f"{poly} evaluates to {value} at t = 1, expected 1")
    total = sum(c * e * (e - 1) for e, c in poly.coeffs.items())
    if total % 2:
        raise InvalidAlexander(f"odd second derivative {total} on symmetric input")
    return total // 2


def casson_surgery_delta(half_dd: int, n: int) -> Fraction:
    """lambda(S^3_n(K)) - lambda(S^3_n(U)) = (1/n) Delta''(1)/2."""
    if n == 0:
        raise ValueError("surgery coefficient must be nonzero")
    return Fraction(half_dd, n)


def parity_obstruction(half_dd: int, n: int) -> bool:
    """True when S^3_n(K) = S^3_n(U) # Y with Y bounding a contractible manifold is impossible."""
    if n >= 0:
        raise ValueError(f"need n < 0, got {n}")
    return half_dd % (2 * n) != 0
