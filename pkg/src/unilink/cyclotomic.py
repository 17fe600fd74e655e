"""Exact arithmetic in cyclotomic fields Q(zeta_m) = Q[T]/Phi_m(T).

Elements are stored as coefficient tuples of length phi(m) in the power
basis 1, T, ..., T^(phi(m)-1).  Coefficients stay ints unless a division
forces fractions (the inverse of xi - xi^-1 in the ADO images).
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from typing import Any

from .laurent import LaurentPoly

__all__ = ["cyclotomic_coeffs", "cyclotomic_poly", "CycloElem", "simplify_coefficients"]


def _polydivmod(num: list, den: list) -> tuple[list, list]:
    """Dense division, ascending coefficient lists, ``den`` monic."""
    num = list(num)
    dn = len(den) - 1
    if len(num) - 1 < dn:
        return [0], num
    quot = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            quot[k - dn] = c
            for j in range(dn + 1):
                num[k - dn + j] -= c * den[j]
    return quot, num[:dn] or [0]


@lru_cache(maxsize=None)
def cyclotomic_coeffs(m: int) -> tuple[int, ...]:
    """Ascending integer coefficients of Phi_m, by iterated exact division of T^m - 1."""
    if m < 1:
        raise ValueError("m must be positive")
    num = [-1] + [0] * (m - 1) + [1]
    for k in range(1, m):
        if m % k == 0:
            q, r = _polydivmod(num, list(cyclotomic_coeffs(k)))
            if any(r):
                raise ArithmeticError("inexact cyclotomic division")
            num = q
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return tuple(num)


def cyclotomic_poly(m: int, name: str = "T") -> LaurentPoly:
    return LaurentPoly.from_dict({((name, k),): c for k, c in enumerate(cyclotomic_coeffs(m)) if c})


def _reduce(coeffs: list, m: int) -> tuple:
    phi = cyclotomic_coeffs(m)
    deg = len(phi) - 1
    if len(coeffs) <= deg:
        return tuple(coeffs) + (0,) * (deg - len(coeffs))
    _, r = _polydivmod(coeffs, list(phi))
    r = list(r) + [0] * (deg - len(r))
    return tuple(r[:deg])


class CycloElem:
    """Element of Q(zeta_m), zeta_m = T a primitive m-th root of unity."""

    __slots__ = ("m", "c")
    _cyclo_marker = True

    def __init__(self, m: int, coeffs: Any = (0,)):
        self.m = m
        self.c = _reduce(list(coeffs), m)

    @classmethod
    def power(cls, m: int, k: int, coeff: Any = 1) -> "CycloElem":
        k %= m
        return cls(m, [0] * k + [coeff])

    @classmethod
    def scalar(cls, m: int, a: Any) -> "CycloElem":
        return cls(m, [a])

    def _lift(self, other: Any) -> "CycloElem | None":
        if isinstance(other, CycloElem):
            if other.m != self.m:
                raise ValueError("mixing different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return CycloElem.scalar(self.m, other)
        return None

    def __add__(self, other: Any) -> "CycloElem":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        r = CycloElem.__new__(CycloElem)
        r.m = self.m
        r.c = tuple(a + b for a, b in zip(self.c, o.c))
        return r

    __radd__ = __add__

    def __neg__(self) -> "CycloElem":
        r = CycloElem.__new__(CycloElem)
        r.m = self.m
        r.c = tuple(-a for a in self.c)
        return r

    def __sub__(self, other: Any) -> "CycloElem":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "CycloElem":
        return (-self) + other

    def __mul__(self, other: Any) -> "CycloElem":
        if isinstance(other, (int, Fraction)):
            r = CycloElem.__new__(CycloElem)
            r.m = self.m
            r.c = tuple(a * other for a in self.c)
            return r
        o = self._lift(other)
        if o is None:
            return NotImplemented
        prod = [0] * (2 * len(self.c) - 1)
        for i, a in enumerate(self.c):
            if a:
                for j, b in enumerate(o.c):
                    if b:
                        prod[i + j] += a * b
        return CycloElem(self.m, prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "CycloElem":
        if k < 0:
            return self.inverse() ** (-k)
        result = CycloElem.scalar(self.m, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def inverse(self) -> "CycloElem":
        """Inverse via the extended Euclidean algorithm over Q."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        a = [Fraction(v) for v in self.c]
        b = [Fraction(v) for v in cyclotomic_coeffs(self.m)]

        def trim(p):
            while len(p) > 1 and p[-1] == 0:
                p.pop()
            return p

        def sub(p, q):
            n = max(len(p), len(q))
            return trim([(p[i] if i < len(p) else 0) - (q[i] if i < len(q) else 0) for i in range(n)])

        def mul(p, q):
            out = [Fraction(0)] * (len(p) + len(q) - 1)
            for i, x in enumerate(p):
                for j, y in enumerate(q):
                    out[i + j] += x * y
            return trim(out)

        def divmod_(p, q):
            p = list(p)
            quot = [Fraction(0)] * max(1, len(p) - len(q) + 1)
            while len(p) >= len(q) and any(p):
                c = p[-1] / q[-1]
                k = len(p) - len(q)
                quot[k] = c
                for j in range(len(q)):
                    p[k + j] -= c * q[j]
                p.pop()
                trim(p)
            return trim(quot), trim(p)

        r0, r1 = trim(b), trim(a)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while any(r1):
            q, r = divmod_(r0, r1)
            r0, r1 = r1, r
            s0, s1 = s1, sub(s0, mul(q, s1))
        # r0 is a nonzero constant, s0 * a == r0 mod Phi
        inv = [v / r0[0] for v in s0]
        return CycloElem(self.m, [_simplify(v) for v in inv])

    def __truediv__(self, other: Any) -> "CycloElem":
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "CycloElem":
        return self.inverse() * other

    def is_zero(self) -> bool:
        return not any(self.c)

    def __eq__(self, other: Any) -> bool:
        o = self._lift(other) if not isinstance(other, CycloElem) or other.m == self.m else None
        if o is None:
            return False
        return self.c == o.c

    def __hash__(self) -> int:
        return hash((self.m, self.c))

    def evaluate(self) -> complex:
        z = cmath.exp(2j * cmath.pi / self.m)
        return sum(complex(a) * z ** k for k, a in enumerate(self.c))

    def is_integral(self) -> bool:
        return all(isinstance(a, int) or a.denominator == 1 for a in self.c)

    def rational_value(self) -> Any:
        """The rational number this element equals, or None if it is not rational."""
        if any(self.c[1:]):
            return None
        return self.c[0]

    def __str__(self) -> str:
        terms = []
        for k, a in enumerate(self.c):
            if not a:
                continue
            mono = "" if k == 0 else ("T" if k == 1 else f"T^{k}")
            if mono and a == 1:
                s = mono
            elif mono and a == -1:
                s = "-" + mono
            else:
                s = f"{a}" + (f"*{mono}" if mono else "")
            terms.append(s)
        if not terms:
            return "0"
        return " + ".join(terms).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"CycloElem({self.m}, {self})"


def _simplify(v: Fraction) -> Any:
    return v.numerator if v.denominator == 1 else v


def simplify_coefficients(p: LaurentPoly) -> LaurentPoly:
    """Replace cyclotomic coefficients that are rational by plain numbers."""
    def fix(c: Any) -> Any:
        if isinstance(c, CycloElem):
            r = c.rational_value()
            return c if r is None else _simplify(Fraction(r))
        return c
    return p.map_coefficients(fix)
