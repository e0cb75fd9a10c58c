from __future__ import annotations

import math

import pytest
from hypothesis import assume, given, strategies as st

from bergedual.errors import DegenerateModulus, InvalidParameters, ModulusMismatch, NotInvertible
from bergedual.modmath import (
    EisensteinRep,
    Residue,
    ext_gcd,
    fibonacci_step_bound,
    gamma_normalize,
    golden_form,
    mod_inverse,
    primitive_reps_eisenstein,
    roots_x2_x_1,
    sl_class,
)


def test_ext_gcd_example():
    assert ext_gcd(12, 18) == (6, -1, 1)
    with pytest.raises(InvalidParameters):
        ext_gcd(0, 0)


@given(st.integers(-10**12, 10**12), st.integers(-10**12, 10**12))
def test_ext_gcd_bezout(x, y):
    assume(x or y)
    g, u, v = ext_gcd(x, y)
    assert g == math.gcd(x, y)
    assert u * x + v * y == g


def test_mod_inverse_examples():
    assert mod_inverse(3, 7) == Residue(5, 7)
    assert mod_inverse(-5, 16).value == 3
    with pytest.raises(NotInvertible):
        mod_inverse(4, 16)


@given(st.integers(2, 10**30), st.integers())
def test_inverse_roundtrip(p, a):
    if math.gcd(a, p) != 1:
        with pytest.raises(NotInvertible):
            mod_inverse(a, p)
        return
    assert (mod_inverse(a, p) * a).value == 1 % p


def test_residue_arithmetic():
    a = Residue.of(-3, 7)
    assert a.value == 4
    assert (a + 5).value == 2
    assert (3 - a).value == 6
    assert (a * a).value == 2
    assert (-a).value == 3
    assert int(a**-1) == 2
    with pytest.raises(ModulusMismatch):
        a + Residue(1, 8)


def test_large_values_stay_exact():
    p = 2**127 - 1
    a = Residue.of(3**200, p)
    assert (a * a.inverse()).value == 1


def test_sl_class_examples():
    assert sl_class(Residue(3, 7)).value == 1
    assert sl_class(Residue(11, 16)).value == 7


@pytest.mark.parametrize("p", [5, 7, 16, 37, 101])
def test_sl_class_symmetry(p):
    for a in range(1, p):
        if math.gcd(a, p) != 1:
            continue
        r = Residue(a, p)
        assert sl_class(r) == sl_class(-(r.inverse()))


def test_eisenstein_p7():
    reps = primitive_reps_eisenstein(7)
    assert [(e.r, e.s) for e in reps] == [(1, 2), (2, 1)]
    assert [x.value for x in roots_x2_x_1(7)] == [2, 4]
    assert {e.root() for e in reps} == set(roots_x2_x_1(7))


def test_eisenstein_non_primitive_excluded():
    # 3^2 + 3*3 + 3^2 = 27 is imprimitive; 1, 5 gives 31
    assert primitive_reps_eisenstein(27) == []
    assert [(e.r, e.s) for e in primitive_reps_eisenstein(31)] == [(1, 5), (5, 1)]
    with pytest.raises(InvalidParameters):
        EisensteinRep(3, 3)


def test_roots_python_fallback_matches_numpy(monkeypatch):
    import bergedual.modmath as mm

    expected = roots_x2_x_1(1729)
    monkeypatch.setattr(mm, "_NUMPY_ROOT_LIMIT", 0)
    assert mm.roots_x2_x_1(1729) == expected


def test_golden_form():
    assert golden_form(3, 2) == 11
    assert golden_form(2, 1) == 5


@pytest.mark.parametrize(
    "pair, expected, steps",
    [((2, 5), (3, 2), 1), ((3, 2), (3, 2), 0), ((1, 3), (2, 1), 1), ((3, 4), (2, 1), 2)],
)
def test_gamma_normalize_examples(pair, expected, steps):
    c, d, trace = gamma_normalize(*pair)
    assert (c, d) == expected
    assert trace.steps == steps


def test_gamma_normalize_errors():
    with pytest.raises(DegenerateModulus):
        gamma_normalize(1, 2)
    with pytest.raises(InvalidParameters):
        gamma_normalize(2, 4)
    with pytest.raises(InvalidParameters):
        gamma_normalize(0, 3)


@given(st.integers(1, 5000), st.integers(1, 5000))
def test_gamma_normalize_properties(a, b):
    n = b * b - a * b - a * a
    if math.gcd(a, b) != 1 or abs(n) <= 1:
        return
    c, d, trace = gamma_normalize(a, b)
    assert c > d > 0
    assert golden_form(c, d) == abs(n)
    assert trace.steps <= fibonacci_step_bound(a, b)
    # the ratio is preserved up to the sign of the form
    p = abs(n)
    if math.gcd(b, p) == 1 and math.gcd(d, p) == 1:
        ratio = Residue.of(a, p) * mod_inverse(b, p)
        assert Residue.of(c, p) * mod_inverse(d, p) in (ratio, -ratio, ratio.inverse(), -(ratio.inverse()))
