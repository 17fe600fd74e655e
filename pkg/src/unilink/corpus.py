"""Built-in test links and Markov-related braid pairs."""

from __future__ import annotations

from dataclasses import dataclass

from .braid import BraidWord


@dataclass(frozen=True)
class Entry:
    name: str
    braid: BraidWord


def _b(n: int, *word: int) -> BraidWord:
    return BraidWord(n, tuple(word))


CORPUS: tuple[Entry, ...] = (
    Entry("unknot", _b(1)),
    Entry("unknot-b2", _b(2, 1)),
    Entry("hopf", _b(2, 1, 1)),
    Entry("negative-hopf", _b(2, -1, -1)),
    Entry("trefoil", _b(2, 1, 1, 1)),
    Entry("mirror-trefoil", _b(2, -1, -1, -1)),
    Entry("figure-eight", _b(3, 1, -2, 1, -2)),
    Entry("cinquefoil", _b(2, 1, 1, 1, 1, 1)),
    Entry("torus-link-2-4", _b(2, 1, 1, 1, 1)),
    Entry("granny", _b(3, 1, 1, 1, 2, 2, 2)),
    Entry("square", _b(3, 1, 1, 1, -2, -2, -2)),
    Entry("hopf-chain", _b(3, 1, 1, 2, 2)),
    Entry("unlink-2", _b(2)),
)

# the desk-scale subset used where a quadratic number of levels is swept
SMALL = ("unknot", "unknot-b2", "hopf", "trefoil", "mirror-trefoil", "figure-eight", "hopf-chain")

MARKOV_PAIRS: tuple[tuple[str, BraidWord, BraidWord], ...] = (
    ("trefoil, positive stabilization", _b(2, 1, 1, 1), _b(3, 1, 1, 1, 2)),
    ("trefoil, negative stabilization", _b(2, 1, 1, 1), _b(3, 1, 1, 1, -2)),
    ("trefoil, braid relation and stabilization", _b(2, 1, 1, 1), _b(3, 1, 2, 1, 2)),
    ("figure-eight, conjugation", _b(3, 1, -2, 1, -2), _b(3, -2, 1, -2, 1)),
    ("hopf, positive stabilization", _b(2, 1, 1), _b(3, 1, 1, 2)),
    ("hopf, negative stabilization", _b(2, 1, 1), _b(3, 1, 1, -2)),
    ("unknot, stabilization", _b(1), _b(2, -1)),
    ("mirror trefoil, conjugation", _b(2, -1, -1, -1), _b(2, 1, -1, -1, -1, -1)),
)


def by_name(name: str) -> Entry:
    for e in CORPUS:
        if e.name == name:
            return e
    raise KeyError(name)


def small_corpus() -> list[Entry]:
    return [by_name(n) for n in SMALL]
