import cmath
import random

import pytest
from hypothesis import given, settings

from conftest import polys
from unilink.laurent import LaurentPoly, const, monomial, quantum_int, var
from unilink.specialize import (LocalizedElem, ado_polynomial, psi_ado, psi_jones, psi_universal,
                                root_generator)
from unilink.verma import a_gamma

d, y, u1, x1 = var("d"), var("y"), var("u1"), var("x1")
S = var("S")


def test_jones_map_examples():
    assert psi_jones([2])(d) == S ** -1
    assert psi_jones([2])(y) == S ** 2 + S ** -2
    assert psi_jones([3])(u1 * x1 ** -1) == const(1)


def test_ado_map_examples():
    assert psi_ado(2)(u1) == x1 ** -1
    assert psi_ado(2)(d ** 4) == const(-1)
    assert psi_ado(2)(quantum_int(2, d ** 4)).is_zero()
    assert psi_ado(3)(u1) == x1 ** -2


@pytest.mark.parametrize("level", [2, 3, 4])
def test_ado_kills_its_own_quantum_integer(level):
    assert psi_ado(level)(quantum_int(level, d ** 4)).is_zero()
    assert not psi_ado(level + 1)(quantum_int(level, d ** 4)).is_zero()


def test_universal_map_examples():
    got = psi_universal(2)(y)
    assert got == LocalizedElem(2, LaurentPoly(), ()) + LocalizedElem(2, x1 - x1 ** -1, ((1, 1),))
    # (x - 1/x)/(x^2 - 1/x^2) = 1/(x + 1/x)
    assert got.numerator * (x1 + x1 ** -1) == monomial(1, {"x1": 2}) - monomial(1, {"x1": -2})
    assert psi_universal(3)(u1).numerator == x1 ** -2
    assert psi_universal(2)(d).numerator == const(root_generator(2, -1))


@given(polys(("d", "x1", "u1")), polys(("d", "x1", "u1")))
@settings(max_examples=40, deadline=None)
def test_maps_are_ring_homomorphisms(a, b):
    for f in (psi_ado(2), psi_ado(3), psi_jones([3])):
        assert f(a * b) == f(a) * f(b)
        assert f(a + b) == f(a) + f(b)


@given(polys(("d", "y", "x1", "u1"), max_terms=3), polys(("d", "y", "x1", "u1"), max_terms=3))
@settings(max_examples=25, deadline=None)
def test_universal_map_is_multiplicative(a, b):
    a, b = a * y ** 4, b * y ** 4  # keep y-powers nonnegative
    f = psi_universal(2)
    assert f(a * b) == f(a) * f(b)
    assert f(a + b) == f(a) + f(b)


@pytest.mark.parametrize("level", [2, 3])
def test_ado_and_universal_agree_numerically_on_y_free_elements(level):
    rng = random.Random(level)
    zeta = cmath.exp(2j * cmath.pi / (2 * level))
    for _ in range(5):
        p = sum((monomial(rng.randint(-3, 3), {"d": rng.randint(-4, 4), "x1": rng.randint(-2, 2),
                                               "u1": rng.randint(-2, 2)}) for _ in range(4)), LaurentPoly())
        lam = rng.uniform(0.1, 0.9)
        point = {"x1": zeta ** lam}
        exact = psi_ado(level)(p).evaluate(point)
        local = psi_universal(level)(p).evaluate(point)
        assert abs(complex(exact) - complex(local)) < 1e-9


def test_ado_polynomial_of_trefoil(trefoil):
    assert ado_polynomial(a_gamma(trefoil, 2), 2) == LaurentPoly.from_text("-1 + x^-2 + x^2")


def test_unknown_variable_rejected():
    with pytest.raises(KeyError):
        psi_ado(2)(var("t"))
