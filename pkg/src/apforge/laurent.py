"""Integer Laurent polynomials in one variable t, with exact gcd."""

from __future__ import annotations

from math import gcd
from typing import Iterable, Mapping, Sequence


def _trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


class LaurentPoly:
    """sum_k coeffs[k] * t^(low + k), stored without leading or trailing zeros."""

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Sequence[int] = (), low: int = 0):
        c = list(coeffs)
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        c = _trim(c[start:])
        self.low = low + start if c else 0
        self.coeffs = tuple(c)

    @classmethod
    def from_dict(cls, terms: Mapping[int, int]) -> LaurentPoly:
        terms = {k: v for k, v in terms.items() if v}
        if not terms:
            return cls()
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> LaurentPoly:
        return cls([coeff], exp)

    @classmethod
    def parse(cls, text: str) -> LaurentPoly:
        """Parse strings such as ``"t^2-3t+1"`` or ``"-t^-1 + 2"``."""
        import re

        s = text.replace(" ", "")
        if not s:
            raise ValueError("empty polynomial")
        terms: dict[int, int] = {}
        for m in re.finditer(r"([+-]?)(\d*)(?:(\*?t)(?:\^\{?(-?\d+)\}?)?)?", s):
            if not m.group(0):
                continue
            sign = -1 if m.group(1) == "-" else 1
            if m.group(3):
                c = int(m.group(2)) if m.group(2) else 1
                e = int(m.group(4)) if m.group(4) else 1
            else:
                if not m.group(2):
                    raise ValueError(f"cannot parse polynomial {text!r}")
                c, e = int(m.group(2)), 0
            terms[e] = terms.get(e, 0) + sign * c
        return cls.from_dict(terms)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def terms(self) -> dict[int, int]:
        return {self.low + k: c for k, c in enumerate(self.coeffs) if c}

    def __add__(self, other: LaurentPoly) -> LaurentPoly:
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.low - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.low - lo + k] += c
        return LaurentPoly(out, lo)

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other: LaurentPoly) -> LaurentPoly:
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly([c * other for c in self.coeffs], self.low)
        if self.is_zero() or other.is_zero():
            return LaurentPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def shift(self, k: int) -> LaurentPoly:
        return LaurentPoly(self.coeffs, self.low + k)

    def substitute_inverse(self) -> LaurentPoly:
        """p(t) -> p(t^-1)."""
        return LaurentPoly(tuple(reversed(self.coeffs)), -self.high) if self.coeffs else LaurentPoly()

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def canonical(self) -> LaurentPoly:
        """Normalize the unit ±t^k away: lowest degree 0, lowest coefficient positive."""
        if self.is_zero():
            return self
        c = list(self.coeffs)
        if c[0] < 0:
            c = [-x for x in c]
        return LaurentPoly(c, 0)

    def symmetric_equal(self, other: LaurentPoly) -> bool:
        return self.canonical() == other.canonical()

    def evaluate(self, t: int | float) -> float:
        return sum(c * t ** (self.low + k) for k, c in enumerate(self.coeffs))

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = LaurentPoly([other])
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.low == other.low and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.low, self.coeffs))

    def to_json(self) -> dict:
        return {"low_degree": self.low, "coefficients": list(self.coeffs)}

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            e = self.low + k
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + ("t" if e == 1 else f"t^{e}")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"


# Polynomial helpers on coefficient lists (index = degree), used for gcd and
# determinants once units t^k have been factored out.


def _poly(p: LaurentPoly) -> list[int]:
    return list(p.coeffs)


def _pseudo_rem(a: list[int], b: list[int]) -> list[int]:
    a = a[:]
    db, lb = len(b) - 1, b[-1]
    while a and len(a) - 1 >= db:
        lead = a[-1]
        shift = len(a) - 1 - db
        a = [x * lb for x in a]
        for k, y in enumerate(b):
            a[k + shift] -= lead * y
        _trim(a)
    return a


def _primitive(a: list[int]) -> tuple[int, list[int]]:
    g = 0
    for c in a:
        g = gcd(g, c)
    if g == 0:
        return 0, []
    if a[-1] < 0:
        g = -g
    return g, [c // g for c in a]


def poly_gcd(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """gcd in Z[t, t^-1], canonical (content * primitive part, Euclid on pseudo-remainders)."""
    if p.is_zero():
        return q.canonical()
    if q.is_zero():
        return p.canonical()
    ca, a = _primitive(_poly(p))
    cb, b = _primitive(_poly(q))
    content = gcd(ca, cb)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _pseudo_rem(a, b)
        a = b
        b = _primitive(r)[1] if r else []
    _, a = _primitive(a)
    return (LaurentPoly(a) * content).canonical()


def gcd_all(polys: Iterable[LaurentPoly]) -> LaurentPoly:
    g = LaurentPoly()
    for p in polys:
        g = poly_gcd(g, p)
        if g == LaurentPoly([1]):
            break
    return g


def exact_div(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    """p / q when q divides p exactly in Z[t, t^-1]; raises ValueError otherwise."""
    if q.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if p.is_zero():
        return p
    a, b = _poly(p), _poly(q)
    db, lb = len(b) - 1, b[-1]
    quot = [0] * max(len(a) - db, 1)
    while a and len(a) - 1 >= db:
        lead = a[-1]
        if lead % lb:
            raise ValueError("inexact polynomial division")
        c = lead // lb
        shift = len(a) - 1 - db
        quot[shift] = c
        for k, y in enumerate(b):
            a[k + shift] -= c * y
        _trim(a)
    if a:
        raise ValueError("inexact polynomial division")
    return LaurentPoly(quot, p.low - q.low)


def determinant(m: Sequence[Sequence[LaurentPoly]]) -> LaurentPoly:
    """Fraction-free (Bareiss) determinant over Z[t, t^-1]."""
    n = len(m)
    if n == 0:
        return LaurentPoly([1])
    a = [list(row) for row in m]
    sign = 1
    prev = LaurentPoly([1])
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return LaurentPoly()
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev)
        prev = a[k][k]
    return a[n - 1][n - 1] * sign
