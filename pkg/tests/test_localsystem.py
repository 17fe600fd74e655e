import pytest

from unilink.localsystem import (D_PRIME, LoopClass, change_of_variables, oval_lift_defined,
                                 oval_monodromy, phi_evaluate)


def test_generator_values():
    assert phi_evaluate(LoopClass(origin=1), [2]) == {}
    assert phi_evaluate(LoopClass(s_loop=1), [2]) == {"y": 1}
    assert phi_evaluate(LoopClass(around={1: 1}), [3]) == {"x1": 2}
    assert phi_evaluate(LoopClass(diagonal=1), [3]) == {D_PRIME: 2}


def test_mirror_loop_shifts_by_level():
    assert phi_evaluate(LoopClass(around_mirror={2: 1}), [2, 4]) == {"x2": 2, D_PRIME: 6}


def test_linearity():
    a = LoopClass(around={1: 2}, s_loop=1, diagonal=3)
    b = LoopClass(around_mirror={1: -1}, diagonal=-1, origin=4)
    levels = [3]
    va, vb, vab = phi_evaluate(a, levels), phi_evaluate(b, levels), phi_evaluate(a + b.scale(2), levels)
    keys = set(va) | set(vb) | set(vab)
    assert all(vab.get(k, 0) == va.get(k, 0) + 2 * vb.get(k, 0) for k in keys)


def test_change_of_variables():
    assert change_of_variables({"xbar1": 1, "delta": 1}, [3]) == {"x1": 1, D_PRIME: 4}


@pytest.mark.parametrize("n", range(1, 9))
def test_oval_closed_form(n):
    for m in range(0, 9):
        assert oval_monodromy(m, 1, [n]) == m * (m - n)
        assert oval_lift_defined(m, 1, [n]) == (m in (0, n))


def test_oval_examples():
    assert oval_monodromy(3, 1, [3]) == 0
    assert oval_monodromy(0, 1, [5]) == 0
    assert oval_monodromy(1, 1, [3]) == -2
    assert oval_monodromy(2, 2, [5, 4]) == -4


def test_errors():
    with pytest.raises(ValueError):
        oval_monodromy(-1, 1, [2])
    with pytest.raises(ValueError):
        oval_monodromy(1, 2, [2])
    with pytest.raises(ValueError):
        phi_evaluate(LoopClass(around={3: 1}), [2])
