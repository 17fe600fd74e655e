import pytest
from hypothesis import given, settings

from conftest import polys
from unilink.braid import BraidWord
from unilink.laurent import LaurentPoly, const, divides, monomial, quantum_factorial, quantum_int, var
from unilink.unify import (CoherenceError, QuotientClass, eq_in_quotient, habiro_reduce,
                           refined_reduce, relabel_components, universal_sequence)
from unilink.verma import a_gamma

d, y, x1, u1 = var("d"), var("y"), var("x1"), var("u1")
ZERO = LaurentPoly()


def test_quotient_equality_examples():
    a = quantum_int(2, d ** 4) * x1
    assert eq_in_quotient(x1 + y, x1 + y, 3)
    assert eq_in_quotient(a, ZERO, 2)
    assert not eq_in_quotient(a, ZERO, 3)


def test_quotient_nesting():
    a = quantum_int(2, d ** 4) * quantum_int(3, d ** 4) * x1
    assert eq_in_quotient(a, ZERO, 3)
    assert eq_in_quotient(a, ZERO, 2)
    assert not eq_in_quotient(quantum_int(3, d ** 4), ZERO, 3)
    for n in (2, 3):
        p = quantum_factorial(n, d ** 4) * y
        assert eq_in_quotient(p, ZERO, n)


def test_quotient_class():
    a = QuotientClass(quantum_int(2, d ** 4) * x1, 2)
    assert a == QuotientClass(ZERO, 2)
    assert QuotientClass(x1, 3).project(2) == QuotientClass(x1, 2)
    with pytest.raises(ValueError):
        QuotientClass(x1, 2).project(3)


def test_habiro_examples():
    assert habiro_reduce(quantum_int(2, d ** 4), 2) == ZERO
    assert habiro_reduce(const(1), 2) == const(1)


def test_habiro_kills_level_difference(trefoil):
    assert habiro_reduce(a_gamma(trefoil, 3) - a_gamma(trefoil, 2), 2) == ZERO


@given(polys(("d", "x1", "y")))
@settings(max_examples=50, deadline=None)
def test_habiro_normal_form_properties(p):
    for n in (2, 3):
        r = habiro_reduce(p, n)
        assert habiro_reduce(r, n) == r
        assert divides(quantum_factorial(n, d ** 4), p - r)


@given(polys(("d", "x1")), polys(("d", "x1")))
@settings(max_examples=30, deadline=None)
def test_habiro_is_linear(a, b):
    assert habiro_reduce(a + b, 3) == habiro_reduce(a, 3) + habiro_reduce(b, 3)
    assert habiro_reduce(3 * a, 3) == 3 * habiro_reduce(a, 3)


@given(polys(("d", "x1", "u1")))
@settings(max_examples=30, deadline=None)
def test_soundness_ladder(p):
    n = 2
    q = p * quantum_factorial(n, d ** 4)
    assert habiro_reduce(q, n) == ZERO
    assert eq_in_quotient(refined_reduce(q, n), ZERO, n)
    assert eq_in_quotient(q, ZERO, n)


def test_refined_examples():
    for n in (2, 3):
        assert refined_reduce(u1 - monomial(1, {"x1": 1 - n}), n) == ZERO
        assert refined_reduce(u1 * monomial(1, {"x1": n - 1}), n) == const(1)
        assert refined_reduce(quantum_factorial(n, d ** 4) * y, n) == ZERO


def test_relabel():
    p = var("x2") * u1
    assert relabel_components(p, (2, 1)) == x1 * var("u2")


def test_universal_sequence_unknot():
    seq = universal_sequence(BraidWord(1), max_level=4)
    assert [c.representative for c in seq.classes] == [y, y, y]
    assert all(c["coherent"] for c in seq.coherence)


@pytest.mark.parametrize("word", [(1, 1, 1), (1, 1)])
def test_universal_sequence_coherent(word):
    seq = universal_sequence(BraidWord(2, word), max_level=3)
    assert [c.level for c in seq.classes] == [2, 3]
    assert seq.coherence == [{"from": 3, "to": 2, "coherent": True}]


def test_universal_sequence_level_check():
    with pytest.raises(ValueError):
        universal_sequence(BraidWord(1), max_level=1)
    assert issubclass(CoherenceError, ArithmeticError)
