from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from bergedual.errors import InvalidParameters
from bergedual.families import type_I
from bergedual.front import (
    FrontData,
    GridOneFront,
    gn1_front,
    gn1_strand_columns,
    rot,
    sl_push,
    sl_push_negative,
    tb,
    torus_dual_front,
    torus_gap_holds,
)


def test_invariant_formulas():
    fd = FrontData(w=0, c_u=2, c_d=0, a=3, b=2, p=7)
    assert tb(fd) == Fraction(-1) + Fraction(6, 7)
    assert rot(fd) == Fraction(-1) + Fraction(5, 7)
    assert sl_push(fd) == Fraction(1, 7)
    assert sl_push_negative(fd) == tb(fd) + rot(fd)


def test_front_data_validation():
    with pytest.raises(InvalidParameters):
        FrontData(0, 1, 0, 1, 1, 5)
    with pytest.raises(InvalidParameters):
        FrontData(0, -2, 0, 1, 1, 5)
    with pytest.raises(InvalidParameters):
        FrontData(0, 0, 0, 1, 1, 1)


fronts = st.builds(
    lambda w, cu, half, a, b, p: FrontData(w, cu, 2 * half + (cu % 2), a, b, p),
    st.integers(-50, 50),
    st.integers(0, 20),
    st.integers(0, 10),
    st.integers(-100, 100),
    st.integers(-100, 100),
    st.integers(2, 200),
)


@given(fronts)
def test_sl_is_tb_minus_rot(fd):
    assert sl_push(fd) == tb(fd) - rot(fd)


def test_strand_columns():
    gf = GridOneFront(p=16, q=7, wraps=5)
    assert gn1_strand_columns(gf) == [0, 7, 14, 5, 12]
    with pytest.raises(InvalidParameters):
        gn1_strand_columns(GridOneFront(p=5, q=2, wraps=6))


def test_torus_dual_trefoil():
    gf, fd = torus_dual_front(2, 3)
    assert (gf.p, gf.q) == (7, 3)
    assert fd.w == 0
    assert sl_push(fd) == Fraction(1, 7)


@pytest.mark.parametrize("i,k", [(2, 3), (3, 2), (3, 5), (5, 3), (4, 7), (2, 11)])
def test_torus_dual_sharp(i, k):
    _, fd = torus_dual_front(i, k)
    assert fd.w == 0
    assert fd.p * sl_push(fd) == type_I(i, k, 1).chi_neg
    assert torus_gap_holds(i, k)


def test_exception_front():
    # the (3,5) torus knot dual in class -k: p*sl = -9 while -chi = 7
    gf, fd = gn1_front(16, 11, 13)
    assert gf.q == 7
    assert (fd.w, fd.c_u, fd.c_d) == (-8, 2, 0)
    assert fd.p * sl_push(fd) == -9


def test_gn1_front_rejects_wrong_b():
    with pytest.raises(InvalidParameters):
        gn1_front(16, 11, 12)


@pytest.mark.parametrize("p", range(3, 24))
def test_complement_replacement_invariance(p):
    # the four fronts with (a, b), (a - p, b), ... are Legendrian isotopic
    for q in range(1, p):
        if math.gcd(p, q) != 1:
            continue
        for a in range(1, p):
            b = a * q % p
            if b == 0:
                continue
            values = set()
            for x, y in [(a, b), (a - p, b), (a, b - p), (a - p, b - p)]:
                _, fd = gn1_front(p, x, y, q=q)
                assert fd.homology_consistent(q)
                values.add((tb(fd), rot(fd)))
            assert len(values) == 1


def test_bennequin_bound_type_I():
    # p*sl <= -chi for every candidate front of every small torus knot dual
    for i in range(2, 12):
        for k in range(2, 12):
            if math.gcd(i, k) != 1:
                continue
            for sign in (1, -1):
                rec = type_I(i, k, sign)
                for a in rec.a_candidates:
                    q = (-(a * a).inverse()).value
                    _, fd = gn1_front(rec.p, a.value, a.value * q % rec.p, q=q)
                    assert fd.p * sl_push(fd) <= rec.chi_neg
