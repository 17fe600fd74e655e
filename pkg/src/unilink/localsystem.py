"""Abelianized local-system bookkeeping on formal loop classes.

Values are formal integer combinations of the generators ``x1..xn``,
``y`` and ``d'``, stored as ``{name: multiplicity}`` with zeros dropped.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Mapping, Sequence

D_PRIME = "d'"


def _clean(v: Mapping[str, int]) -> dict[str, int]:
    return {k: c for k, c in sorted(v.items()) if c}


@dataclass(frozen=True)
class LoopClass:
    """Integer combination of the loop generators.

    ``around`` and ``around_mirror`` map a puncture index i to the
    multiplicity of the loop around p-puncture i and around its
    symmetric puncture; ``s_loop`` counts the loop around the s-puncture,
    ``diagonal`` the loop where two particles swap, ``origin`` the loop
    around the 0-puncture.
    """

    around: Mapping[int, int] = field(default_factory=dict)
    around_mirror: Mapping[int, int] = field(default_factory=dict)
    s_loop: int = 0
    diagonal: int = 0
    origin: int = 0

    def __add__(self, other: "LoopClass") -> "LoopClass":
        return LoopClass(
            _sum(self.around, other.around),
            _sum(self.around_mirror, other.around_mirror),
            self.s_loop + other.s_loop,
            self.diagonal + other.diagonal,
            self.origin + other.origin,
        )

    def scale(self, k: int) -> "LoopClass":
        return LoopClass(
            {i: k * m for i, m in self.around.items()},
            {i: k * m for i, m in self.around_mirror.items()},
            k * self.s_loop, k * self.diagonal, k * self.origin,
        )


def _sum(a: Mapping[int, int], b: Mapping[int, int]) -> dict[int, int]:
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
    return out


def change_of_variables(value: Mapping[str, int], levels: Sequence[int]) -> dict[str, int]:
    """Apply xbar_i -> x_i + (N_i - 1) d' and delta -> 2 d'."""
    out: Counter = Counter()
    for name, c in value.items():
        if name.startswith("xbar"):
            i = int(name[4:])
            out[f"x{i}"] += c
            out[D_PRIME] += c * (levels[i - 1] - 1)
        elif name == "delta":
            out[D_PRIME] += 2 * c
        else:
            out[name] += c
    return _clean(out)


def _raw_evaluate(loop: LoopClass) -> dict[str, int]:
    out: Counter = Counter()
    for i, m in loop.around.items():
        out[f"x{i}"] += 2 * m
    for i, m in loop.around_mirror.items():
        out[f"xbar{i}"] += 2 * m
    out["y"] += loop.s_loop
    out["delta"] += loop.diagonal
    # the 0-puncture loop is augmented to zero
    return _clean(out)


def phi_evaluate(loop: LoopClass, levels: Sequence[int]) -> dict[str, int]:
    """Local-system value of a loop class at the multi-level ``levels``."""
    for i in list(loop.around) + list(loop.around_mirror):
        if not 1 <= i <= len(levels):
            raise ValueError(f"puncture index {i} outside 1..{len(levels)}")
    return change_of_variables(_raw_evaluate(loop), levels)


def oval_monodromy(m: int, i: int, levels: Sequence[int]) -> int:
    """Multiple of d' picked up by ``m`` particles travelling once around oval ``i``.

    Each particle contributes half a turn around the puncture and half a
    turn (reversed) around its mirror; each pair of particles contributes
    one diagonal loop.
    """
    if m < 0:
        raise ValueError("particle count must be nonnegative")
    if not 1 <= i <= len(levels):
        raise ValueError(f"oval index {i} outside 1..{len(levels)}")
    raw = {f"x{i}": m, f"xbar{i}": -m, "delta": m * (m - 1) // 2}
    value = change_of_variables(raw, levels)
    leftover = {k: c for k, c in value.items() if k != D_PRIME}
    if leftover:
        raise ArithmeticError(f"colour terms did not cancel: {leftover}")
    return value.get(D_PRIME, 0)


def oval_lift_defined(m: int, i: int, levels: Sequence[int]) -> bool:
    return oval_monodromy(m, i, levels) == 0
