"""Classical reference invariants used to calibrate and accept the engine.

Everything here is independent of the Verma-module machinery: the
Alexander polynomial comes from the reduced Burau representation, the
Jones polynomial from the Temperley-Lieb algebra (with a brute-force
Kauffman state sum as a second route).
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Any

from .braid import BraidWord
from .laurent import LaurentPoly, const, exact_divide, monomial, var

PolyMatrix = list[list[LaurentPoly]]


def _t() -> LaurentPoly:
    return var("t")


def _identity(n: int) -> PolyMatrix:
    return [[const(1 if i == j else 0) for j in range(n)] for i in range(n)]


def _matmul(a: PolyMatrix, b: PolyMatrix) -> PolyMatrix:
    n = len(a)
    return [
        [sum((a[i][k] * b[k][j] for k in range(n)), LaurentPoly()) for j in range(n)]
        for i in range(n)
    ]


def burau_generator(n: int, g: int) -> PolyMatrix:
    """Reduced Burau image of sigma_|g|^{sign g} in B_n, size (n-1)x(n-1)."""
    t = _t()
    m = _identity(n - 1)
    i = abs(g) - 1  # 0-based row of the -t entry
    if g > 0:
        diag, left, below = -t, t, const(1)
    else:
        ti = t ** -1
        diag, left, below = -ti, const(1), ti
    m[i][i] = diag
    if i - 1 >= 0:
        m[i - 1][i] = left
    if i + 1 <= n - 2:
        m[i + 1][i] = below
    return m


def burau_reduced(b: BraidWord) -> PolyMatrix:
    if b.strands < 2:
        raise ValueError("reduced Burau needs n >= 2")
    m = _identity(b.strands - 1)
    for g in b.letters:
        m = _matmul(m, burau_generator(b.strands, g))
    return m


def determinant(m: PolyMatrix) -> LaurentPoly:
    """Laplace expansion; matrices here are at most 5x5."""
    n = len(m)
    if n == 0:
        return const(1)
    if n == 1:
        return m[0][0]
    total = LaurentPoly()
    for j in range(n):
        if m[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * determinant(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def normalize_univariate(p: LaurentPoly, name: str) -> LaurentPoly:
    """Canonical unit normalization: lowest exponent 0, positive leading coefficient."""
    if p.is_zero():
        return p
    low = p.min_degree(name)
    p = p * var(name) ** (-low)
    lead = max(p.items(), key=lambda it: it[0].get(name, 0))[1]
    return -p if lead < 0 else p


def alexander(b: BraidWord) -> LaurentPoly:
    """Single-variable Alexander polynomial of the closure, canonically normalized."""
    if b.strands == 1:
        return const(1)
    t = _t()
    m = burau_reduced(b)
    n = b.strands
    shifted = [[m[i][j] - (1 if i == j else 0) for j in range(n - 1)] for i in range(n - 1)]
    num = determinant(shifted) * (1 - t)
    den = 1 - t ** n
    q = exact_divide(num, den)
    if q is None:
        raise ArithmeticError("Alexander quotient is not exact")
    return normalize_univariate(q, "t")


# -- Temperley-Lieb ------------------------------------------------------
# A diagram on n strands is a perfect matching of 2n points: top points
# 0..n-1, bottom points n..2n-1, stored as a tuple of partners.

def _tl_identity(n: int) -> tuple[int, ...]:
    return tuple(list(range(n, 2 * n)) + list(range(n)))


def _tl_cup_cap(n: int, i: int) -> tuple[int, ...]:
    """The generator e_i joining strands i, i+1 (0-based) at top and at bottom."""
    p = list(_tl_identity(n))
    p[i], p[i + 1] = i + 1, i
    p[n + i], p[n + i + 1] = n + i + 1, n + i
    return tuple(p)


def _tl_compose(n: int, top: tuple[int, ...], bottom: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    """Stack ``top`` over ``bottom``; returns the diagram and the number of closed loops."""
    # node ids: ('t',k) top of result, ('m',k) middle, ('b',k) bottom of result
    def from_top(p: int):
        return ("t", p) if p < n else ("m", p - n)

    def from_bottom(p: int):
        return ("m", p) if p < n else ("b", p - n)

    adj: dict[Any, list] = {}
    for p in range(2 * n):
        a, c = from_top(p), from_top(top[p])
        adj.setdefault(a, []).append(c)
        a, c = from_bottom(p), from_bottom(bottom[p])
        adj.setdefault(a, []).append(c)
    result = [0] * (2 * n)
    seen = set()

    def index(node) -> int:
        return node[1] if node[0] == "t" else n + node[1]

    for start in [("t", k) for k in range(n)] + [("b", k) for k in range(n)]:
        if start in seen:
            continue
        prev, cur = None, start
        seen.add(cur)
        while True:
            nbrs = adj[cur]
            nxt = nbrs[0] if nbrs[0] != prev or len(nbrs) == 1 else nbrs[1]
            if len(nbrs) == 2 and nbrs[0] == nbrs[1]:
                nxt = nbrs[0]
            prev, cur = cur, nxt
            seen.add(cur)
            if cur[0] != "m":
                break
        result[index(start)] = index(cur)
        result[index(cur)] = index(start)
    loops = 0
    middle = [("m", k) for k in range(n)]
    for node in middle:
        if node in seen:
            continue
        loops += 1
        prev, cur = None, node
        while cur not in seen:
            seen.add(cur)
            a, c = adj[cur]
            nxt = a if a != prev else c
            if a == c:
                nxt = a
            prev, cur = cur, nxt
    return tuple(result), loops


def _tl_closure_loops(n: int, diagram: tuple[int, ...]) -> int:
    """Loops in the Markov closure (top k joined to bottom k)."""
    seen = [False] * (2 * n)
    loops = 0
    for s in range(2 * n):
        if seen[s]:
            continue
        loops += 1
        p = s
        while not seen[p]:
            seen[p] = True
            q = diagram[p]
            seen[q] = True
            p = q + n if q < n else q - n
    return loops


def kauffman_bracket_tl(b: BraidWord) -> LaurentPoly:
    """Bracket of the closure via the Temperley-Lieb representation."""
    n = b.strands
    A = var("A")
    delta = -(A ** 2) - A ** -2
    elem: dict[tuple[int, ...], LaurentPoly] = {_tl_identity(n): const(1)}
    for g in b.letters:
        i = abs(g) - 1
        a_id, a_e = (A, A ** -1) if g > 0 else (A ** -1, A)
        e = _tl_cup_cap(n, i)
        new: dict[tuple[int, ...], LaurentPoly] = {}
        for dgm, c in elem.items():
            new[dgm] = new.get(dgm, LaurentPoly()) + c * a_id
            comp, loops = _tl_compose(n, dgm, e)
            new[comp] = new.get(comp, LaurentPoly()) + c * a_e * delta ** loops
        elem = {k: v for k, v in new.items() if not v.is_zero()}
    total = LaurentPoly()
    for dgm, c in elem.items():
        total = total + c * delta ** (_tl_closure_loops(n, dgm) - 1)
    return total


def kauffman_bracket_states(b: BraidWord) -> LaurentPoly:
    """Bracket of the closure by brute force over all 2^c smoothings."""
    n = b.strands
    A = var("A")
    delta = -(A ** 2) - A ** -2
    c = len(b.letters)
    total = LaurentPoly()
    for choice in product((0, 1), repeat=c):
        # nodes (level, position); level 0..c, closure identifies level c with 0
        parent = list(range((c + 1) * n))

        def find(u: int) -> int:
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        def union(u: int, v: int) -> None:
            parent[find(u)] = find(v)

        weight = 0
        for lvl, (g, s) in enumerate(zip(b.letters, choice)):
            i = abs(g) - 1
            for p in range(n):
                if p not in (i, i + 1):
                    union(lvl * n + p, (lvl + 1) * n + p)
            # s == 0: vertical smoothing, s == 1: horizontal (cup-cap)
            if s == 0:
                union(lvl * n + i, (lvl + 1) * n + i)
                union(lvl * n + i + 1, (lvl + 1) * n + i + 1)
            else:
                union(lvl * n + i, lvl * n + i + 1)
                union((lvl + 1) * n + i, (lvl + 1) * n + i + 1)
            weight += (1 if s == 0 else -1) * (1 if g > 0 else -1)
        for p in range(n):
            union(c * n + p, p)
        loops = len({find(u) for u in range((c + 1) * n)})
        total = total + A ** weight * delta ** (loops - 1)
    return total


def _writhe_factor(w: int) -> LaurentPoly:
    """(-A^3)^(-w)."""
    A = var("A")
    return (-(A ** -3)) ** w if w >= 0 else (-(A ** 3)) ** (-w)


def jones_tl(b: BraidWord) -> LaurentPoly:
    """Jones polynomial in A: (-A^3)^(-writhe) times the bracket, unknot = 1."""
    return _writhe_factor(b.writhe()) * kauffman_bracket_tl(b)


def jones_states(b: BraidWord) -> LaurentPoly:
    return _writhe_factor(b.writhe()) * kauffman_bracket_states(b)


# -- units ----------------------------------------------------------------

def _is_root_of_unity(c: Any) -> bool:
    if isinstance(c, int):
        return c in (1, -1)
    if hasattr(c, "_cyclo_marker"):
        order = c.m if c.m % 2 == 0 else 2 * c.m
        return c ** order == 1
    return c in (1, -1)


def equal_up_to_unit(p: LaurentPoly, q: LaurentPoly) -> bool:
    """True iff ``p = u*m*q`` with ``m`` a monomial and ``u`` a root of unity in the coefficients.

    For integer coefficients the units are +-1.
    """
    if p.is_zero() or q.is_zero():
        return p.is_zero() and q.is_zero()
    if len(p.terms) != len(q.terms):
        return False
    names = sorted(set(p.variables()) | set(q.variables()))

    def lowest(r: LaurentPoly) -> tuple[dict[str, int], Any]:
        return min(r.items(), key=lambda it: tuple(it[0].get(v, 0) for v in names))

    (mp, cp), (mq, cq) = lowest(p), lowest(q)
    ratio = cp * Fraction(1, cq) if isinstance(cq, int) else cp * cq.inverse()
    if isinstance(ratio, Fraction) and ratio.denominator == 1:
        ratio = ratio.numerator
    if not _is_root_of_unity(ratio):
        return False
    shift = {v: mp.get(v, 0) - mq.get(v, 0) for v in set(mp) | set(mq)}
    return p == monomial(ratio, shift) * q
