"""Equality in the level-N quotient rings, Habiro-type reduction and the universal sequence."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Sequence

from .braid import BraidWord, LinkData, link_data
from .laurent import LaurentPoly, monomial, quantum_factorial, var
from .specialize import psi_ado
from .verma import a_gamma


class CoherenceError(ArithmeticError):
    """Consecutive levels of the universal sequence disagree in the quotient."""


def eq_in_quotient(a: LaurentPoly, b: LaurentPoly, level: int) -> bool:
    """Equal after every root-of-unity specialization of level 2..``level``."""
    if level < 2:
        raise ValueError("level must be at least 2")
    diff = a - b
    return all(psi_ado(m)(diff).is_zero() for m in range(2, level + 1))


@dataclass(frozen=True)
class QuotientClass:
    representative: LaurentPoly
    level: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuotientClass):
            return NotImplemented
        if other.level != self.level:
            return False
        return eq_in_quotient(self.representative, other.representative, self.level)

    __hash__ = None  # type: ignore[assignment]

    def project(self, level: int) -> "QuotientClass":
        """Image under the projection to a lower level."""
        if level > self.level:
            raise ValueError("can only project to a lower level")
        return QuotientClass(self.representative, level)


# -- integer polynomials in d --------------------------------------------

def _dense(p: LaurentPoly) -> tuple[int, list[int]]:
    """``p = d^shift * sum(c[k] d^k)`` for a polynomial in d alone."""
    if p.is_zero():
        return 0, [0]
    low = p.min_degree("d")
    coeffs = [0] * (p.degree("d") - low + 1)
    for mono, c in p.items():
        coeffs[mono.get("d", 0) - low] = c
    return low, coeffs


def _sparse(shift: int, coeffs: Sequence[int]) -> LaurentPoly:
    return LaurentPoly.from_dict({(("d", shift + k),): c for k, c in enumerate(coeffs) if c})


def _poly_rem(num: list[int], gen: list[int]) -> list[int]:
    num = list(num)
    dg = len(gen) - 1
    for k in range(len(num) - 1, dg - 1, -1):
        c = num[k]
        if c:
            for j in range(dg + 1):
                num[k - dg + j] -= c * gen[j]
    out = num[:dg] + [0] * max(0, dg - len(num))
    return out


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def habiro_generator(level: int) -> LaurentPoly:
    return quantum_factorial(level, var("d") ** 4)


def _reduce_d(p: LaurentPoly, gen: list[int]) -> LaurentPoly:
    shift, coeffs = _dense(p)
    rem = _poly_rem(coeffs, gen)
    if shift < 0:
        # gen = 1 + d*h, so d^-1 = -h modulo gen
        inv_d = [-c for c in gen[1:]] or [0]
        for _ in range(-shift):
            rem = _poly_rem(_poly_mul(rem, inv_d), gen)
    elif shift > 0:
        rem = _poly_rem([0] * shift + rem, gen)
    return _sparse(0, rem)


def habiro_reduce(p: LaurentPoly, level: int) -> LaurentPoly:
    """Normal form modulo the principal ideal generated by (level)_{d^4}!."""
    if level < 2:
        raise ValueError("level must be at least 2")
    _, gen = _dense(habiro_generator(level))
    rest = [v for v in p.variables() if v != "d"]
    out = LaurentPoly()
    for exps, coeff in p.split(rest).items():
        reduced = _reduce_d(coeff, gen)
        out = out + reduced * monomial(1, dict(zip(rest, exps)))
    return out


def refined_reduce(p: LaurentPoly, level: int) -> LaurentPoly:
    """Send u_i to x_i^(1-level), then reduce modulo the Habiro generator.

    The y-relations of the refined ideal are left alone; combine with
    :func:`eq_in_quotient` to decide equality.
    """
    images = {v: monomial(1, {"x" + v[1:]: 1 - level}) for v in p.variables() if v.startswith("u")}
    return habiro_reduce(p.substitute(images, strict=False), level)


def relabel_components(p: LaurentPoly, perm: Sequence[int]) -> LaurentPoly:
    """Rename x_i, u_i to x_perm[i-1], u_perm[i-1]."""
    images = {}
    for v in p.variables():
        if v[0] in "xu" and v[1:].isdigit():
            images[v] = var(f"{v[0]}{perm[int(v[1:]) - 1]}")
    return p.substitute(images, strict=False)


def eq_up_to_relabeling(a: LaurentPoly, b: LaurentPoly, level: int, components: int) -> bool:
    """Quotient equality for some renumbering of the components of ``b``.

    Component 1 always contains strand 1, so only the others are permuted.
    """
    for rest in permutations(range(2, components + 1)):
        if eq_in_quotient(a, relabel_components(b, (1,) + rest), level):
            return True
    return False


@dataclass
class UniversalSequence:
    braid: BraidWord
    classes: list[QuotientClass]
    coherence: list[dict] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "braid": {"strands": self.braid.strands, "word": list(self.braid.letters)},
            "levels": [
                {"level": c.level, "representative": c.representative.to_json_obj(),
                 "text": c.representative.to_text()}
                for c in self.classes
            ],
            "coherence": self.coherence,
        }


def universal_sequence(b: BraidWord, link: LinkData | None = None, max_level: int = 3, *,
                       jobs: int = 1, check: bool = True) -> UniversalSequence:
    """Representatives for levels 2..max_level with consecutive-level coherence checks."""
    if max_level < 2:
        raise ValueError("max_level must be at least 2")
    link = link or link_data(b)
    classes = [QuotientClass(a_gamma(b, n, link, jobs=jobs), n) for n in range(2, max_level + 1)]
    seq = UniversalSequence(b, classes)
    for lower, upper in zip(classes, classes[1:]):
        ok = upper.project(lower.level) == lower
        seq.coherence.append({"from": upper.level, "to": lower.level, "coherent": ok})
        if check and not ok:
            raise CoherenceError(f"levels {upper.level} and {lower.level} disagree")
    return seq
