"""Ring maps out of the universal ring: coloured Jones, ADO and the universal level-N image."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from typing import Any, Callable, Mapping, Sequence

from .cyclotomic import CycloElem, simplify_coefficients
from .braid import LinkData
from .laurent import LaurentPoly, balanced_quantum, const, exact_divide, monomial, var

_INDEXED = re.compile(r"^([ux])(\d+)$")


def _component(name: str) -> tuple[str, int] | None:
    m = _INDEXED.match(name)
    return (m.group(1), int(m.group(2))) if m else None


@dataclass(frozen=True)
class SpecMap:
    """A named ring homomorphism given by a rule producing the image of each variable."""

    name: str
    target: str
    image: Callable[[str], Any] = field(repr=False)

    def images_for(self, p: LaurentPoly) -> dict[str, Any]:
        out = {}
        for v in p.variables():
            im = self.image(v)
            if im is None:
                raise KeyError(f"{self.name}: no image for variable {v!r}")
            out[v] = im
        return out

    def __call__(self, p: LaurentPoly) -> LaurentPoly:
        return simplify_coefficients(p.substitute(self.images_for(p)))


def psi_jones(colours: Sequence[int]) -> SpecMap:
    """Generic-q map for the colour vector (one entry per component), q = S^2."""
    if any(n < 2 for n in colours):
        raise ValueError("colours must be at least 2")

    def image(v: str) -> Any:
        if v == "d":
            return var("S") ** -1
        if v == "y":
            return balanced_quantum(colours[0], "S")
        comp = _component(v)
        if comp is None:
            return None
        k = comp[1]
        if k > len(colours):
            raise ValueError(f"no colour for component {k}")
        return monomial(1, {"S": 2 * (colours[k - 1] - 1)})

    return SpecMap(f"jones{tuple(colours)}", "Z[S^+-1], q = S^2", image)


def total_linking(link: LinkData) -> int:
    return sum(link.lk[i][j] for i in range(link.components) for j in range(i + 1, link.components))


def jones_polynomial(j_value: LaurentPoly, link: LinkData) -> LaurentPoly:
    """Jones polynomial in A (unknot = 1) from the all-2 coloured state sum.

    The fixed normalization: V(A) [2] = (-1)^(l-1) A^(-8 lk) psi(J)|_{S = A^-1},
    where lk is the total linking number and l the number of components.
    """
    value = psi_jones([2] * link.components)(j_value).substitute({"S": var("A") ** -1}, strict=False)
    sign = -1 if link.components % 2 == 0 else 1
    value = value * monomial(sign, {"A": -8 * total_linking(link)})
    q = exact_divide(value, var("A") ** 2 + var("A") ** -2)
    if q is None:
        raise ArithmeticError("state sum is not divisible by the unknot value")
    return q


def root_generator(level: int, k: int = 1) -> CycloElem:
    """``T^k`` with ``T`` a primitive ``4*level``-th root of unity (so ``T^2`` is the ``2*level``-th)."""
    return CycloElem.power(4 * level, k)


def ado_y_image(level: int, component: int = 1) -> LaurentPoly:
    """(x - x^-1) / (xi - xi^-1) with xi = T^2."""
    x = f"x{component}"
    denom = (root_generator(level, 2) - root_generator(level, -2)).inverse()
    return (monomial(1, {x: 1}) - monomial(1, {x: -1})) * denom


def psi_ado(level: int, *, strip_y: bool = False) -> SpecMap:
    """Root-of-unity map with symbolic colours x_i; coefficients in Q(T), T^(4*level) = 1.

    With ``strip_y`` the open-strand factor y is sent to 1 instead.
    """
    if level < 2:
        raise ValueError("level must be at least 2")
    y_img = const(1) if strip_y else ado_y_image(level)

    def image(v: str) -> Any:
        if v == "d":
            return root_generator(level, -1)
        if v == "y":
            return y_img
        comp = _component(v)
        if comp is None:
            return None
        kind, k = comp
        return monomial(1, {f"x{k}": 1 if kind == "x" else 1 - level})

    return SpecMap(f"ado({level})", f"Q(zeta_{4 * level})[x^+-1]", image)


def identify_colours(p: LaurentPoly, name: str = "x") -> LaurentPoly:
    """Send every x_i to a single variable."""
    return p.substitute({v: var(name) for v in p.variables() if _component(v) and v.startswith("x")},
                        strict=False)


def ado_polynomial(p: LaurentPoly, level: int) -> LaurentPoly:
    """ADO image of ``p`` with the open-strand factor y removed and all colours identified."""
    return identify_colours(psi_ado(level, strip_y=True)(p))


# -- localized ring ------------------------------------------------------

def _denominator_poly(level: int, denom: Mapping[int, int]) -> LaurentPoly:
    out = const(1)
    for k, e in denom.items():
        x = f"x{k}"
        out = out * (monomial(1, {x: level}) - monomial(1, {x: -level})) ** e
    return out


@dataclass(frozen=True)
class LocalizedElem:
    """``numerator / prod_k (x_k^N - x_k^-N)^e_k`` over Q(T), T^(4N) = 1."""

    level: int
    numerator: LaurentPoly
    denom: tuple[tuple[int, int], ...] = ()

    def _d(self) -> dict[int, int]:
        return dict(self.denom)

    @staticmethod
    def _make(level: int, num: LaurentPoly, denom: Mapping[int, int]) -> "LocalizedElem":
        return LocalizedElem(level, num, tuple(sorted((k, e) for k, e in denom.items() if e)))

    def _common(self, other: "LocalizedElem") -> tuple[LaurentPoly, LaurentPoly, dict[int, int]]:
        if other.level != self.level:
            raise ValueError("different levels")
        a, b = self._d(), other._d()
        common = {k: max(a.get(k, 0), b.get(k, 0)) for k in set(a) | set(b)}
        na = self.numerator * _denominator_poly(self.level, {k: common[k] - a.get(k, 0) for k in common})
        nb = other.numerator * _denominator_poly(self.level, {k: common[k] - b.get(k, 0) for k in common})
        return na, nb, common

    def __add__(self, other: "LocalizedElem") -> "LocalizedElem":
        na, nb, common = self._common(other)
        return self._make(self.level, na + nb, common)

    def __neg__(self) -> "LocalizedElem":
        return LocalizedElem(self.level, -self.numerator, self.denom)

    def __sub__(self, other: "LocalizedElem") -> "LocalizedElem":
        return self + (-other)

    def __mul__(self, other: "LocalizedElem") -> "LocalizedElem":
        a, b = self._d(), other._d()
        return self._make(self.level, self.numerator * other.numerator,
                          {k: a.get(k, 0) + b.get(k, 0) for k in set(a) | set(b)})

    def is_zero(self) -> bool:
        return self.numerator.is_zero()

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, LocalizedElem):
            return NotImplemented
        na, nb, _ = self._common(other)
        return na == nb

    def __hash__(self) -> int:
        raise TypeError("LocalizedElem is unhashable (equality is up to clearing denominators)")

    def evaluate(self, values: Mapping[str, complex]) -> complex:
        num = self.numerator.evaluate(values)
        den = _denominator_poly(self.level, self._d()).evaluate(values)
        return num / den


def psi_universal(level: int) -> Callable[[LaurentPoly], LocalizedElem]:
    """Map into the localized ring of the level: y goes to (x - x^-1)/(x^N - x^-N)."""
    if level < 2:
        raise ValueError("level must be at least 2")

    def image(v: str) -> Any:
        if v == "d":
            return root_generator(level, -1)
        comp = _component(v)
        if comp is None:
            return None
        kind, k = comp
        return monomial(1, {f"x{k}": 1 if kind == "x" else 1 - level})

    def apply(p: LaurentPoly) -> LocalizedElem:
        total = LocalizedElem(level, LaurentPoly())
        for ydeg, part in p.split(["y"]).items():
            e = ydeg[0]
            if e < 0:
                raise ValueError("negative powers of y have no image in the localized ring")
            imgs = {}
            for v in part.variables():
                im = image(v)
                if im is None:
                    raise KeyError(f"universal({level}): no image for variable {v!r}")
                imgs[v] = im
            num = part.substitute(imgs) * (var("x1") - var("x1") ** -1) ** e
            total = total + LocalizedElem._make(level, num, {1: e})
        return total

    return apply


def compose(*maps: Callable[[LaurentPoly], LaurentPoly]) -> Callable[[LaurentPoly], LaurentPoly]:
    return lambda p: reduce(lambda acc, f: f(acc), maps, p)
