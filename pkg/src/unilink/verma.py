"""Braid action on tensor powers of the generic Verma module and the state sums.

Basis vectors ``v_j`` (j >= 0) of the generic Verma module carry a formal
colour variable ``x_a``; the braiding acts on adjacent tensor factors and
preserves the total index.  The operators act on the full (untruncated)
module; a level only restricts which initial states enter the state sum.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Mapping, Sequence

from .braid import BraidWord, LinkData, link_data
from .laurent import LaurentPoly, const, monomial, quantum_factorial, var

State = tuple[int, ...]
StateVector = dict[State, LaurentPoly]

NORMALIZATIONS = ("factorial", "trace")


def colour_var(c: int) -> str:
    return f"x{c}"


def framing_var(c: int) -> str:
    return f"u{c}"


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> LaurentPoly:
    """Symmetric Gaussian binomial in q = d^2, by the q-Pascal rule."""
    if k < 0 or k > n:
        return LaurentPoly()
    if k == 0 or k == n:
        return const(1)
    d = var("d")
    return d ** (-2 * k) * gaussian_binomial(n - 1, k) + d ** (2 * (n - k)) * gaussian_binomial(n - 1, k - 1)


@lru_cache(maxsize=None)
def _lowering_product(i: int, n: int, colour: int) -> LaurentPoly:
    """prod_{k<n} (x^-1 d^(2(1+k-i)) - x d^(2(i-1-k)))."""
    out = const(1)
    x = colour_var(colour)
    for k in range(n):
        out = out * (monomial(1, {x: -1, "d": 2 * (1 + k - i)}) - monomial(1, {x: 1, "d": 2 * (i - 1 - k)}))
    return out


def _mono(coeff: int, *factors: tuple[str, int]) -> LaurentPoly:
    """Monomial from possibly repeated ``(variable, exponent)`` factors."""
    exps: dict[str, int] = {}
    for v, e in factors:
        exps[v] = exps.get(v, 0) + e
    return monomial(coeff, exps)


@lru_cache(maxsize=None)
def crossing_terms(sign: int, i: int, j: int, a: int, b: int) -> tuple[tuple[int, int, LaurentPoly], ...]:
    """Image of ``v_i (x) v_j`` (colours ``a``, ``b``) as ``((i', j', coeff), ...)``."""
    xa, xb = colour_var(a), colour_var(b)
    out = []
    if sign > 0:
        for n in range(i + 1):
            c = gaussian_binomial(i, n) * _lowering_product(i, n, a) * _mono(
                1, ("d", n * (n - 1) + 4 * (i - n) * (j + n)), (xb, i - n), (xa, j + n))
            if not c.is_zero():
                out.append((j + n, i - n, c))
    else:
        for n in range(j + 1):
            c = gaussian_binomial(j, n) * _lowering_product(j, n, b) * _mono(
                (-1) ** n, ("d", -n * (n - 1) - 4 * i * j), (xa, -j), (xb, -i))
            if not c.is_zero():
                out.append((j - n, i + n, c))
    return tuple(out)


@dataclass(frozen=True)
class CrossingOperator:
    """The braiding on two adjacent factors with colours ``(a, b)``."""

    colour_a: int
    colour_b: int
    sign: int = 1

    def act(self, i: int, j: int) -> tuple[tuple[int, int, LaurentPoly], ...]:
        return crossing_terms(self.sign, i, j, self.colour_a, self.colour_b)

    def inverse(self) -> "CrossingOperator":
        # after the crossing the colours have swapped positions
        return CrossingOperator(self.colour_b, self.colour_a, -self.sign)


def crossing_op(colour_a: int, colour_b: int, sign: int) -> CrossingOperator:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return CrossingOperator(colour_a, colour_b, sign)


def _add_into(acc: StateVector, key: State, c: LaurentPoly) -> None:
    cur = acc.get(key)
    acc[key] = c if cur is None else cur + c


def apply_letter(g: int, v: Mapping[State, LaurentPoly], colours: Sequence[int]) -> StateVector:
    """Apply one generator; ``colours`` are the colours at the positions before it."""
    p = abs(g) - 1
    a, b = colours[p], colours[p + 1]
    sign = 1 if g > 0 else -1
    out: StateVector = {}
    for s, c in v.items():
        for ni, nj, cc in crossing_terms(sign, s[p], s[p + 1], a, b):
            t = s[:p] + (ni, nj) + s[p + 2:]
            _add_into(out, t, c * cc)
    return {k: c for k, c in out.items() if not c.is_zero()}


def apply_braid(b: BraidWord, v: Mapping[State, LaurentPoly], colours: Sequence[int]) -> StateVector:
    """Braid action on a state vector; the first letter acts first."""
    cols = list(colours)
    if len(cols) != b.strands:
        raise ValueError("colour count must match strand count")
    out = dict(v)
    for k in out:
        if len(k) != b.strands:
            raise ValueError("state arity does not match braid")
    for g in b.letters:
        out = apply_letter(g, out, cols)
        p = abs(g) - 1
        cols[p], cols[p + 1] = cols[p + 1], cols[p]
    return out


def multi_indices(bounds: Sequence[int]) -> Iterator[State]:
    """All ``(i_1, ..., i_k)`` with ``0 <= i_m < bounds[m]``."""
    return product(*(range(n) for n in bounds))


def state_weight(index: State, normalization: str = "factorial") -> LaurentPoly:
    """Basis normalization carried by the state ``index``."""
    if normalization == "trace":
        return const(1)
    if normalization != "factorial":
        raise ValueError(f"unknown normalization {normalization!r}")
    out = const(1)
    d4 = var("d") ** 4
    for i in index:
        out = out * quantum_factorial(i, d4)
    return out


def diagonal_coefficient(b: BraidWord, index: State, link: LinkData) -> LaurentPoly:
    """Coefficient of the initial state ``(0, index)`` in the braid applied to it."""
    state = (0,) + tuple(index)
    image = apply_braid(b, {state: const(1)}, link.strand_to_component)
    return image.get(state, LaurentPoly())


def pairing(b: BraidWord, index: Sequence[int], level: int, link: LinkData | None = None,
            normalization: str = "factorial") -> LaurentPoly:
    """One summand of the level-``level`` state sum, before the global prefactor."""
    index = tuple(index)
    if len(index) != b.strands - 1:
        raise ValueError(f"multi-index must have length {b.strands - 1}")
    if any(i < 0 or i >= level for i in index):
        raise ValueError(f"multi-index {index} outside the level-{level} state set")
    link = link or link_data(b)
    core = diagonal_coefficient(b, index, link)
    return monomial(1, {"d": -4 * sum(index), "y": 1}) * state_weight(index, normalization) * core


def global_prefactor(link: LinkData, cap_kind: str) -> LaurentPoly:
    """Framing monomial times one cap factor per strand after the first (``u`` or ``x``)."""
    exps: dict[str, int] = {}
    for i in range(link.components):
        e = link.framings[i] - sum(link.lk[i][j] for j in range(link.components) if j != i)
        exps[framing_var(i + 1)] = exps.get(framing_var(i + 1), 0) + e
    name = framing_var if cap_kind == "u" else colour_var
    for c in link.strand_to_component[1:]:
        exps[name(c)] = exps.get(name(c), 0) - 1
    return monomial(1, exps)


def _pairing_job(args: tuple) -> LaurentPoly:
    b, index, level, link, normalization = args
    return pairing(b, index, level, link, normalization)


def _state_sum(b: BraidWord, indices: Iterable[State], level: int, link: LinkData,
               normalization: str, jobs: int) -> LaurentPoly:
    indices = list(indices)
    total = LaurentPoly()
    if jobs > 1 and len(indices) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_pairing_job, [(b, ix, level, link, normalization) for ix in indices])
            for p in parts:
                total = total + p
    else:
        for ix in indices:
            total = total + pairing(b, ix, level, link, normalization)
    return total


def check_shape(p: LaurentPoly, prefactor: LaurentPoly | None = None) -> None:
    """Integer coefficients, y-degree one in every term, u only in ``prefactor``."""
    for mono, c in p.items():
        if not isinstance(c, int):
            raise ArithmeticError(f"non-integral coefficient {c!r}")
        if mono.get("y", 0) != 1:
            raise ArithmeticError("a term does not have y-degree one")
    if prefactor is not None and not p.is_zero():
        core = p * prefactor ** -1
        if any(v.startswith("u") for v in core.variables()):
            raise ArithmeticError("u-variables outside the global prefactor")


def a_gamma(b: BraidWord, level: int, link: LinkData | None = None, *,
            normalization: str = "factorial", jobs: int = 1) -> LaurentPoly:
    """The level-``level`` universal state sum, an element of Z[u, x, y, d]^{+-}."""
    if level < 2:
        raise ValueError("level must be at least 2")
    link = link or link_data(b)
    pre = global_prefactor(link, "u")
    total = pre * _state_sum(b, multi_indices([level] * (b.strands - 1)), level, link, normalization, jobs)
    check_shape(total, pre)
    return total


def strand_levels(link: LinkData, colours: Sequence[int]) -> tuple[int, ...]:
    """Per-strand truncations from a per-component colour vector."""
    if len(colours) != link.components:
        raise ValueError(f"expected {link.components} colours, got {len(colours)}")
    if any(n < 2 for n in colours):
        raise ValueError("colours must be at least 2")
    return tuple(colours[c - 1] for c in link.strand_to_component)


def j_gamma(b: BraidWord, colours: Sequence[int], link: LinkData | None = None, *,
            jobs: int = 1) -> LaurentPoly:
    """State sum for the coloured Jones model: truncated initial states, no factorial weights."""
    link = link or link_data(b)
    levels = strand_levels(link, colours)
    pre = global_prefactor(link, "x")
    indices = multi_indices(levels[1:])
    top = max(levels)
    total = pre * _state_sum(b, indices, top, link, "trace", jobs)
    check_shape(total)
    return total
