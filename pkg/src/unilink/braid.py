"""Braid words and the closure data the state sums consume."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence


@dataclass(frozen=True)
class BraidWord:
    """A word in the Artin generators of B_n.

    Letter ``g`` is sigma_|g| (strands |g| and |g|+1, counted from 1) with
    the sign of ``g`` as crossing sign.
    """

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError("a braid needs at least one strand")
        object.__setattr__(self, "letters", tuple(int(g) for g in self.letters))
        for g in self.letters:
            if g == 0 or abs(g) > self.strands - 1:
                raise ValueError(f"letter {g} out of range for B_{self.strands}")

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise ValueError("strand counts differ")
        return BraidWord(self.strands, self.letters + other.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in self.letters))

    def writhe(self) -> int:
        return sum(1 if g > 0 else -1 for g in self.letters)

    def reduced(self) -> "BraidWord":
        """Free reduction (cancel adjacent g, -g)."""
        out: list[int] = []
        for g in self.letters:
            if out and out[-1] == -g:
                out.pop()
            else:
                out.append(g)
        return BraidWord(self.strands, tuple(out))

    def permutation(self) -> tuple[int, ...]:
        """``perm[p]`` is the starting position (0-based) of the strand ending at ``p``."""
        at = list(range(self.strands))
        for g in self.letters:
            p = abs(g) - 1
            at[p], at[p + 1] = at[p + 1], at[p]
        return tuple(at)

    def to_text(self) -> str:
        return " ".join(str(g) for g in self.letters)

    @classmethod
    def parse(cls, text: str, strands: int | None = None) -> "BraidWord":
        """Parse whitespace-separated signed integers; strands default to max|g|+1."""
        try:
            letters = tuple(int(tok) for tok in text.replace(",", " ").split())
        except ValueError as exc:
            raise ValueError(f"malformed braid word {text!r}") from exc
        need = max((abs(g) for g in letters), default=0) + 1
        n = need if strands is None else strands
        return cls(n, letters)


@dataclass(frozen=True)
class LinkData:
    """Closure data: components, colouring of strands, linking numbers, framings."""

    components: int
    strand_to_component: tuple[int, ...]  # 1-based component per strand
    lk: tuple[tuple[int, ...], ...]
    framings: tuple[int, ...] = field(default=())

    def colour(self, strand: int) -> int:
        """Component of 1-based ``strand``."""
        return self.strand_to_component[strand - 1]

    def puncture_colours(self) -> tuple[int, ...]:
        """Colours of the 2n punctures; puncture 2n+1-k mirrors strand k."""
        c = self.strand_to_component
        return c + tuple(reversed(c))

    def with_framings(self, framings: Sequence[int]) -> "LinkData":
        if len(framings) != self.components:
            raise ValueError(f"expected {self.components} framings, got {len(framings)}")
        return LinkData(self.components, self.strand_to_component, self.lk, tuple(framings))


def closure_components(b: BraidWord) -> tuple[int, tuple[int, ...]]:
    """Components of the closure as cycles, numbered by their smallest strand."""
    perm = b.permutation()
    # closure joins bottom position p to top position p; the strand ending at p
    # started at perm[p], so follow p -> perm^{-1}
    nxt = {perm[p]: p for p in range(b.strands)}
    comp = [0] * b.strands
    count = 0
    for s in range(b.strands):
        if comp[s]:
            continue
        count += 1
        t = s
        while not comp[t]:
            comp[t] = count
            t = nxt[t]
    return count, tuple(comp)


def _crossings(b: BraidWord) -> list[tuple[int, int, int]]:
    """``(strand_a, strand_b, sign)`` per letter, strands as 0-based starting positions."""
    at = list(range(b.strands))
    out = []
    for g in b.letters:
        p = abs(g) - 1
        out.append((at[p], at[p + 1], 1 if g > 0 else -1))
        at[p], at[p + 1] = at[p + 1], at[p]
    return out


def linking_matrix(b: BraidWord) -> tuple[tuple[int, ...], ...]:
    count, comp = closure_components(b)
    twice = [[0] * count for _ in range(count)]
    for a, c, s in _crossings(b):
        i, j = comp[a] - 1, comp[c] - 1
        if i != j:
            twice[i][j] += s
            twice[j][i] += s
    for row in twice:
        for v in row:
            if v % 2:
                raise ArithmeticError("odd inter-component crossing count")
    return tuple(tuple(v // 2 for v in row) for row in twice)


def blackboard_framings(b: BraidWord) -> tuple[int, ...]:
    count, comp = closure_components(b)
    f = [0] * count
    for a, c, s in _crossings(b):
        if comp[a] == comp[c]:
            f[comp[a] - 1] += s
    return tuple(f)


def link_data(b: BraidWord, framings: Sequence[int] | None = None) -> LinkData:
    count, comp = closure_components(b)
    data = LinkData(count, comp, linking_matrix(b), blackboard_framings(b))
    return data if framings is None else data.with_framings(framings)


def markov_moves(b: BraidWord) -> list[BraidWord]:
    """Conjugates by every generator and both stabilizations; all close to the same link."""
    out = []
    n = b.strands
    for k in range(1, n):
        for g in (k, -k):
            out.append(BraidWord(n, (g,) + b.letters + (-g,)).reduced())
    out.append(BraidWord(n + 1, b.letters + (n,)))
    out.append(BraidWord(n + 1, b.letters + (-n,)))
    return out


def stabilize(b: BraidWord, sign: int = 1) -> BraidWord:
    return BraidWord(b.strands + 1, b.letters + (sign * b.strands,))


def parse_descriptor(text: str) -> tuple[BraidWord, tuple[int, ...] | None, str | None]:
    """Parse the JSON link descriptor ``{strands, word, framings?, name?}``."""
    obj = json.loads(text)
    word = obj["word"]
    if isinstance(word, str):
        word = [int(t) for t in word.split()]
    b = BraidWord(int(obj["strands"]), tuple(word))
    fr = obj.get("framings")
    return b, (tuple(int(v) for v in fr) if fr is not None else None), obj.get("name")
