"""Sparse multivariate Laurent polynomials with exact coefficients.

A polynomial stores a sorted tuple of generator names and a dict mapping
integer exponent tuples (aligned with the generators) to nonzero
coefficients.  Coefficients are Python ints by default; any exact ring
element supporting ``+``, ``*``, unary ``-`` and ``== 0`` works too (the
specialization maps use :class:`unilink.cyclotomic.CycloElem`).

Variable names follow a fixed vocabulary:

``d``, ``y``, ``x1 .. xl``, ``u1 .. ul``
    the universal ring.
``S``
    target variable with ``q = S**2``.
``T``
    root-of-unity generator.
anything else
    auxiliary names (``t``, ``A``, ...), ordered after the above.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable, Mapping

__all__ = [
    "LaurentPoly",
    "var_key",
    "var",
    "const",
    "monomial",
    "divides",
    "exact_divide",
    "quantum_int",
    "quantum_factorial",
    "balanced_quantum",
]

_VAR_RE = re.compile(r"^([A-Za-z_]+?)(\d*)$")
_KIND_RANK = {"d": 0, "y": 1, "x": 2, "u": 3, "S": 4, "T": 5}


@lru_cache(maxsize=None)
def var_key(name: str) -> tuple:
    """Sort key realizing the canonical variable order d < y < x_i < u_i < S < T < aux."""
    m = _VAR_RE.match(name)
    if m is None:
        raise ValueError(f"bad variable name {name!r}")
    kind, idx = m.group(1), m.group(2)
    if kind in ("x", "u") and idx:
        return (_KIND_RANK[kind], int(idx), "")
    if kind in ("d", "y", "S", "T") and not idx:
        return (_KIND_RANK[kind], 0, "")
    return (6, 0, name)


def _is_zero(c: Any) -> bool:
    return c == 0


class LaurentPoly:
    """Immutable sparse Laurent polynomial."""

    __slots__ = ("gens", "terms", "_hash")

    def __init__(self, terms: Mapping[tuple, Any] | None = None, gens: Iterable[str] = ()):
        gens = tuple(gens)
        clean: dict[tuple, Any] = {}
        if terms:
            for e, c in terms.items():
                if not _is_zero(c):
                    clean[e] = c
        self.gens = gens
        self.terms = clean
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def _raw(cls, gens: tuple, terms: dict) -> "LaurentPoly":
        obj = cls.__new__(cls)
        obj.gens = gens
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def from_dict(cls, mono_terms: Mapping[Any, Any]) -> "LaurentPoly":
        """Build from ``{ {var: exp} or ((var, exp), ...) : coeff }``."""
        names: set[str] = set()
        items = []
        for mono, c in mono_terms.items():
            md = dict(mono) if not isinstance(mono, dict) else mono
            names.update(v for v, e in md.items() if e)
            items.append((md, c))
        gens = tuple(sorted(names, key=var_key))
        pos = {g: i for i, g in enumerate(gens)}
        out: dict[tuple, Any] = {}
        for md, c in items:
            e = [0] * len(gens)
            for v, k in md.items():
                if k:
                    e[pos[v]] += k
            key = tuple(e)
            out[key] = out.get(key, 0) + c
        return cls(out, gens)

    # -- alignment ----------------------------------------------------
    def _embed(self, gens: tuple) -> dict:
        if gens == self.gens:
            return self.terms
        # generators missing from ``gens`` are allowed only with exponent zero
        idx = [gens.index(g) if g in gens else None for g in self.gens]
        n = len(gens)
        out = {}
        for e, c in self.terms.items():
            full = [0] * n
            for i, k in zip(idx, e):
                if i is not None:
                    full[i] = k
                elif k:
                    raise ValueError("cannot embed: a dropped generator has a nonzero exponent")
            out[tuple(full)] = c
        return out

    def _align(self, other: "LaurentPoly") -> tuple[tuple, dict, dict]:
        if self.gens == other.gens:
            return self.gens, self.terms, other.terms
        gens = tuple(sorted(set(self.gens) | set(other.gens), key=var_key))
        return gens, self._embed(gens), other._embed(gens)

    def with_gens(self, gens: Iterable[str]) -> "LaurentPoly":
        """Re-express over a superset of generators (useful for fast arithmetic)."""
        gens = tuple(sorted(set(gens) | set(self.gens), key=var_key))
        return LaurentPoly._raw(gens, dict(self._embed(gens)))

    def canonical(self) -> tuple[tuple, dict]:
        """Generators actually used and the matching terms."""
        if not self.terms:
            return (), {}
        used = [i for i in range(len(self.gens)) if any(e[i] for e in self.terms)]
        if len(used) == len(self.gens):
            return self.gens, self.terms
        gens = tuple(self.gens[i] for i in used)
        return gens, {tuple(e[i] for i in used): c for e, c in self.terms.items()}

    # -- coercion -----------------------------------------------------
    @staticmethod
    def _coerce(other: Any) -> "LaurentPoly | None":
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Fraction)) or hasattr(other, "_cyclo_marker"):
            return LaurentPoly._raw((), {(): other} if not _is_zero(other) else {})
        return None

    # -- arithmetic ---------------------------------------------------
    def __add__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        gens, a, b = self._align(o)
        out = dict(a)
        for e, c in b.items():
            if e in out:
                s = out[e] + c
                if _is_zero(s):
                    del out[e]
                else:
                    out[e] = s
            else:
                out[e] = c
        return LaurentPoly._raw(gens, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.gens, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "LaurentPoly":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.gens and len(o.terms) == 1:
            c0 = o.terms[()]
            if c0 == 1:
                return self
            return LaurentPoly(
                {e: c * c0 for e, c in self.terms.items()}, self.gens
            )
        gens, a, b = self._align(o)
        out: dict[tuple, Any] = {}
        if len(a) < len(b):
            a, b = b, a
        for eb, cb in b.items():
            for ea, ca in a.items():
                e = tuple(map(int.__add__, ea, eb))
                if e in out:
                    out[e] = out[e] + ca * cb
                else:
                    out[e] = ca * cb
        return LaurentPoly(out, gens)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            if not self.is_monomial():
                raise ValueError("negative power of a non-monomial")
            ((e, c),) = self.terms.items()
            if c in (1, -1):
                inv = c
            else:
                inv = Fraction(1, c) if isinstance(c, int) else c.inverse()
            return LaurentPoly._raw(self.gens, {tuple(x * k for x in e): inv ** (-k)})
        result = LaurentPoly._raw((), {(): 1})
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- predicates ---------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_unit(self) -> bool:
        """Single term with coefficient +-1."""
        return len(self.terms) == 1 and next(iter(self.terms.values())) in (1, -1)

    def is_constant(self) -> bool:
        gens, terms = self.canonical()
        return not gens

    def constant_value(self) -> Any:
        gens, terms = self.canonical()
        if gens:
            raise ValueError("not a constant")
        return terms.get((), 0)

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.canonical() == o.canonical()

    def __hash__(self) -> int:
        if self._hash is None:
            gens, terms = self.canonical()
            self._hash = hash((gens, frozenset(terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection ---------------------------------------------------
    def variables(self) -> tuple[str, ...]:
        return self.canonical()[0]

    def items(self) -> list[tuple[dict[str, int], Any]]:
        """Terms as ``({var: exp}, coeff)`` in canonical order."""
        gens, terms = self.canonical()
        out = []
        for e, c in terms.items():
            out.append(({g: k for g, k in zip(gens, e) if k}, c))
        out.sort(key=lambda t: _mono_sort_key(t[0]))
        return out

    def degree(self, v: str) -> int:
        if v not in self.gens or not self.terms:
            return 0
        i = self.gens.index(v)
        return max(e[i] for e in self.terms)

    def min_degree(self, v: str) -> int:
        if v not in self.gens or not self.terms:
            return 0
        i = self.gens.index(v)
        return min(e[i] for e in self.terms)

    def degrees(self, v: str) -> set[int]:
        if not self.terms:
            return set()
        if v not in self.gens:
            return {0}
        i = self.gens.index(v)
        return {e[i] for e in self.terms}

    def coefficients(self) -> list[Any]:
        return [c for _, c in self.items()]

    def split(self, vs: Iterable[str]) -> dict[tuple, "LaurentPoly"]:
        """Group terms by the exponents of ``vs``.

        Returns ``{exponents of vs: polynomial in the remaining variables}``.
        """
        vs = tuple(vs)
        idx = [self.gens.index(v) if v in self.gens else None for v in vs]
        rest = [i for i, g in enumerate(self.gens) if g not in vs]
        rest_gens = tuple(self.gens[i] for i in rest)
        out: dict[tuple, dict] = {}
        for e, c in self.terms.items():
            key = tuple(e[i] if i is not None else 0 for i in idx)
            out.setdefault(key, {})[tuple(e[i] for i in rest)] = c
        return {k: LaurentPoly._raw(rest_gens, t) for k, t in out.items()}

    def map_coefficients(self, fn: Callable[[Any], Any]) -> "LaurentPoly":
        return LaurentPoly({e: fn(c) for e, c in self.terms.items()}, self.gens)

    def shift(self, exps: Mapping[str, int]) -> "LaurentPoly":
        """Multiply by the monomial ``prod v**k``."""
        return self * monomial(1, exps)

    # -- substitution -------------------------------------------------
    def substitute(self, images: Mapping[str, Any], strict: bool = True) -> "LaurentPoly":
        """Ring homomorphism sending each variable to a polynomial or scalar.

        Variables absent from ``images`` are kept when ``strict`` is false.
        Negative exponents require images that are single terms with an
        invertible coefficient.
        """
        gens, terms = self.canonical()
        if strict:
            missing = [g for g in gens if g not in images]
            if missing:
                raise KeyError(f"no image for {missing}")
        imgs = []
        for g in gens:
            if g in images:
                im = images[g]
                imgs.append(im if isinstance(im, LaurentPoly) else LaurentPoly._coerce(im))
            else:
                imgs.append(var(g))
        cache: list[dict[int, LaurentPoly]] = [dict() for _ in gens]

        def power(i: int, k: int) -> LaurentPoly:
            c = cache[i]
            if k not in c:
                im = imgs[i]
                if k < 0 and not im.is_monomial():
                    raise ValueError(f"image of {gens[i]} is not invertible")
                c[k] = im ** k
            return c[k]

        acc = LaurentPoly()
        for e, c in terms.items():
            t = LaurentPoly._coerce(c)
            for i, k in enumerate(e):
                if k:
                    t = t * power(i, k)
            acc = acc + t
        return acc

    def evaluate(self, values: Mapping[str, Any]) -> Any:
        """Numeric evaluation (coefficients must support ``complex``-like arithmetic)."""
        gens, terms = self.canonical()
        total = 0
        for e, c in terms.items():
            t = c if not hasattr(c, "evaluate") else c.evaluate()
            for g, k in zip(gens, e):
                if k:
                    t = t * values[g] ** k
            total = total + t
        return total

    # -- serialization ------------------------------------------------
    def to_text(self) -> str:
        items = self.items()
        if not items:
            return "0"
        parts = []
        for n, (mono, c) in enumerate(items):
            factors = [f"{v}^{k}" if k != 1 else v for v, k in _sorted_mono(mono)]
            if isinstance(c, int) or isinstance(c, Fraction):
                neg = c < 0
                a = -c if neg else c
                cs = "" if (a == 1 and factors) else str(a)
            else:
                neg = False
                cs = f"({c})"
            body = " * ".join(([cs] if cs else []) + factors)
            if n == 0:
                parts.append(("-" if neg else "") + body)
            else:
                parts.append(("- " if neg else "+ ") + body)
        return " ".join(parts)

    __str__ = to_text

    def __repr__(self) -> str:
        return f"LaurentPoly('{self.to_text()}')"

    @classmethod
    def from_text(cls, text: str) -> "LaurentPoly":
        """Parse the canonical text form (integer coefficients)."""
        s = _NEG_EXP.sub(lambda m: f"^~{m.group(1)}", text).replace(" ", "")
        if s in ("", "0"):
            return cls()
        terms: dict = {}
        for sign_tok, body in re.findall(r"([+-]?)([^+-]+)", s):
            mono: dict[str, int] = {}
            coeff = -1 if sign_tok == "-" else 1
            for fac in body.split("*"):
                if re.fullmatch(r"\d+", fac):
                    coeff *= int(fac)
                elif "^" in fac:
                    name, k = fac.split("^", 1)
                    k = -int(k[1:]) if k.startswith("~") else int(k)
                    mono[name] = mono.get(name, 0) + k
                elif fac:
                    mono[fac] = mono.get(fac, 0) + 1
            key = tuple(sorted(mono.items()))
            terms[key] = terms.get(key, 0) + coeff
        return cls.from_dict(terms)

    def to_json_obj(self) -> list:
        return [[_encode_coeff(c), {v: k for v, k in _sorted_mono(mono)}] for mono, c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), separators=(",", ":"))

    @classmethod
    def from_json_obj(cls, obj: list) -> "LaurentPoly":
        terms: dict = {}
        for c, mono in obj:
            key = tuple(sorted(mono.items()))
            c = _decode_coeff(c)
            terms[key] = terms[key] + c if key in terms else c
        return cls.from_dict(terms)

    @classmethod
    def from_json(cls, text: str) -> "LaurentPoly":
        return cls.from_json_obj(json.loads(text))


def _encode_coeff(c: Any) -> Any:
    """ints stay ints; fractions become "p/q"; cyclotomic elements an object."""
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    if hasattr(c, "_cyclo_marker"):
        return {"cyclotomic": c.m, "coeffs": [_encode_coeff(a) for a in c.c]}
    raise TypeError(f"cannot serialize coefficient {c!r}")


def _decode_coeff(c: Any) -> Any:
    if isinstance(c, bool):
        raise TypeError("boolean is not a coefficient")
    if isinstance(c, int):
        return c
    if isinstance(c, str):
        f = Fraction(c)
        return f.numerator if f.denominator == 1 else f
    if isinstance(c, dict) and "cyclotomic" in c:
        from .cyclotomic import CycloElem
        return CycloElem(int(c["cyclotomic"]), [_decode_coeff(a) for a in c["coeffs"]])
    raise TypeError(f"cannot decode coefficient {c!r}")


def _sorted_mono(mono: Mapping[str, int]) -> list[tuple[str, int]]:
    return sorted(mono.items(), key=lambda t: var_key(t[0]))


def _mono_sort_key(mono: Mapping[str, int]) -> tuple:
    return tuple((var_key(v), k) for v, k in _sorted_mono(mono))


_NEG_EXP = re.compile(r"\^-(\d+)")


# -- constructors -------------------------------------------------------

def var(name: str) -> LaurentPoly:
    var_key(name)
    return LaurentPoly._raw((name,), {(1,): 1})


def const(c: Any) -> LaurentPoly:
    return LaurentPoly._coerce(c)


def monomial(coeff: Any, exps: Mapping[str, int]) -> LaurentPoly:
    gens = tuple(sorted((v for v, k in exps.items() if k), key=var_key))
    if _is_zero(coeff):
        return LaurentPoly()
    return LaurentPoly._raw(gens, {tuple(exps[g] for g in gens): coeff})


# -- divisibility -------------------------------------------------------

def _strip_content(p: LaurentPoly, gens: tuple) -> dict:
    """Embed into ``gens`` and shift so every variable has minimal exponent 0."""
    terms = p._embed(gens)
    mins = [min(e[i] for e in terms) for i in range(len(gens))]
    return {tuple(k - m for k, m in zip(e, mins)): c for e, c in terms.items()}


def exact_divide(f: LaurentPoly, g: LaurentPoly) -> LaurentPoly | None:
    """Return ``h`` with ``f = g*h`` in the Laurent ring, or None.

    Both are shifted to honest polynomials (monomials are units) and divided
    by the lex-order division algorithm; for a single divisor this is exact
    iff the remainder vanishes.
    """
    if g.is_zero():
        raise ZeroDivisionError("division by zero polynomial")
    if f.is_zero():
        return LaurentPoly()
    gens = tuple(sorted(set(f.variables()) | set(g.variables()), key=var_key))
    fg_gens, _ = f.canonical()
    gg, _ = g.canonical()
    if not set(gg) <= set(fg_gens) and not g.is_monomial():
        # g involves a variable f does not; only possible if g is a unit monomial
        return None
    F = _strip_content(f, gens)
    G = _strip_content(g, gens)
    # undo the content shifts at the end
    f_terms = f._embed(gens)
    g_terms = g._embed(gens)
    fmin = [min(e[i] for e in f_terms) for i in range(len(gens))]
    gmin = [min(e[i] for e in g_terms) for i in range(len(gens))]
    lead_g = max(G)
    cg = G[lead_g]
    rem = dict(F)
    quot: dict[tuple, Any] = {}
    while rem:
        lead = max(rem)
        if any(a < b for a, b in zip(lead, lead_g)):
            return None
        c = rem[lead]
        if isinstance(c, int) and isinstance(cg, int):
            if c % cg:
                return None
            qc = c // cg
        else:
            qc = c * (1 / cg) if not isinstance(cg, int) else Fraction(c, cg)
        qe = tuple(a - b for a, b in zip(lead, lead_g))
        quot[qe] = qc
        for e, cc in G.items():
            t = tuple(a + b for a, b in zip(qe, e))
            v = rem.get(t, 0) - qc * cc
            if _is_zero(v):
                rem.pop(t, None)
            else:
                rem[t] = v
    shift = tuple(a - b for a, b in zip(fmin, gmin))
    return LaurentPoly({tuple(a + s for a, s in zip(e, shift)): c for e, c in quot.items()}, gens)


def divides(g: LaurentPoly, f: LaurentPoly) -> bool:
    """True iff ``f = g*h`` for some Laurent polynomial ``h``.

    ``f`` is grouped by the monomials in variables absent from ``g`` and
    each coefficient polynomial is divided exactly.
    """
    if g.is_zero():
        raise ZeroDivisionError("g must be nonzero")
    gvars = g.variables()
    others = [v for v in f.variables() if v not in gvars]
    for _, coeff in f.split(others).items():
        if exact_divide(coeff, g) is None:
            return False
    return True


# -- quantum numbers ----------------------------------------------------

def _as_poly(base: str | LaurentPoly) -> LaurentPoly:
    return var(base) if isinstance(base, str) else base


def quantum_int(n: int, base: str | LaurentPoly) -> LaurentPoly:
    """``(n)_b = 1 + b + ... + b**(n-1)``."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    b = _as_poly(base)
    acc, p = LaurentPoly(), const(1)
    for _ in range(n):
        acc = acc + p
        p = p * b
    return acc


def quantum_factorial(n: int, base: str | LaurentPoly) -> LaurentPoly:
    """``(n)_b! = (1)_b (2)_b ... (n)_b``; ``(0)_b! = 1``."""
    acc = const(1)
    for k in range(1, n + 1):
        acc = acc * quantum_int(k, base)
    return acc


def balanced_quantum(m: int, name: str = "S") -> LaurentPoly:
    """``[m]_q = (q^m - q^-m)/(q - q^-1)`` in the variable ``name`` with ``q = name**2``."""
    if m == 0:
        return LaurentPoly()
    sgn = 1 if m > 0 else -1
    m = abs(m)
    return LaurentPoly.from_dict({((name, 2 * (m - 1 - 2 * k)),): sgn for k in range(m)})
