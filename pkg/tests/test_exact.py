from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st
from mpmath import mp, mpf

from hopfforge.exact import (SQRT5, CertifiedInterval, GF2Matrix, QSqrt5, certified_sign_det, enclose, gf2_matvec,
                             gf2_nullspace, gf2_rank, gf2_solve, interval_trig_point, qsqrt5_dot, qsqrt5_sign,
                             strict_separation_feasible)
from hopfforge.exact.interval import working_precision

bits = st.lists(st.lists(st.integers(0, 1), min_size=5, max_size=5), min_size=1, max_size=7)
fractions = st.fractions(min_value=-1000, max_value=1000, max_denominator=1000)


def _frac(x: mpf) -> Fraction:
    sign, man, exp, _ = x._mpf_
    return (-1) ** sign * Fraction(man) * Fraction(2) ** exp


def _rank_oracle(rows):
    """Plain Gaussian elimination on 0/1 lists."""
    m = [r[:] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is not None:
            m[rank], m[piv] = m[piv], m[rank]
            for i in range(len(m)):
                if i != rank and m[i][col]:
                    m[i] = [(a + b) % 2 for a, b in zip(m[i], m[rank])]
            rank += 1
        col += 1
    return rank


# -- GF(2) ------------------------------------------------------------------------


@given(bits)
def test_rank_matches_oracle_and_transpose(rows):
    m = GF2Matrix.from_dense(rows)
    assert gf2_rank(m) == _rank_oracle(rows)
    assert gf2_rank(m) == gf2_rank(m.transpose())


@given(bits)
def test_nullspace(rows):
    m = GF2Matrix.from_dense(rows)
    basis = gf2_nullspace(m)
    assert len(basis) == 5 - gf2_rank(m)
    assert all(gf2_matvec(m, x) == 0 for x in basis)


@given(bits, st.integers(0, 31))
def test_solve_consistent(rows, x):
    m = GF2Matrix.from_dense(rows)
    b = gf2_matvec(m, x)
    y = gf2_solve(m, b)
    assert y is not None and gf2_matvec(m, y) == b


def test_solve_inconsistent():
    assert gf2_solve([[1, 1], [1, 1]], [1, 0]) is None
    assert gf2_rank(GF2Matrix.identity(4)) == 4


# -- intervals --------------------------------------------------------------------


@given(fractions, fractions)
def test_interval_arithmetic_encloses(a, b):
    with working_precision(53):
        x, y = enclose(a, 53).to_iv(), enclose(b, 53).to_iv()
        boxes = [(a + b, x + y), (a - b, x - y), (a * b, x * y)]
        if b != 0:
            boxes.append((a / b, x / y))
        for value, box in boxes:
            ci = CertifiedInterval.from_iv(box, 53)
            assert _frac(ci.lower) <= value <= _frac(ci.upper)


def test_trig_point_cases():
    p = interval_trig_point(0, 7, (1, 2), 64)
    assert [(x.lower, x.upper) for x in p] == [(1, 1), (0, 0), (1, 1), (0, 0)]
    q = interval_trig_point(1, 4, (1,), 64)
    assert q[0].sign() == 0 and q[1].lower == q[1].upper == 1
    r = interval_trig_point(1, 7, (1,), 64)
    assert all(x.width < mpf(2) ** -60 for x in r)
    mp.prec = 200
    try:
        assert r[0].contains(mp.cos(2 * mp.pi / 7))
    finally:
        mp.prec = 53
    with pytest.raises(ValueError):
        interval_trig_point(0, 7, (1,), 16)


def test_certified_determinant_sign():
    assert certified_sign_det([[1, 0], [0, 1]])[0] == 1
    assert certified_sign_det([[0, 1], [1, 0]])[0] == -1
    sign, used, _ = certified_sign_det([[Fraction(1, 3), Fraction(2, 3)], [1, 2]])
    assert sign is None and used == 512


def test_interval_sign():
    assert CertifiedInterval(mpf(-1), mpf(1), 53).sign() is None
    assert CertifiedInterval(mpf(1), mpf(2), 53).sign() == 1


# -- exact LP ---------------------------------------------------------------------


def _cross(d=6):
    pts = {}
    for i in range(d):
        e = [0] * d
        e[i] = 1
        pts[i + 1] = tuple(e)
        pts[i + 1 + d] = tuple(-x for x in e)
    return pts


def test_separation_cross_polytope():
    pts = _cross()
    rest = [pts[v] for v in range(1, 13) if v not in (1, 7)]
    assert strict_separation_feasible([pts[1]], [pts[7]])
    assert not strict_separation_feasible([pts[1], pts[7]], rest)
    assert strict_separation_feasible([], list(pts.values()))
    ok, (a, c) = strict_separation_feasible([pts[1], pts[2]], [pts[v] for v in range(3, 13)], with_witness=True)
    assert ok
    assert all(sum(x * y for x, y in zip(a, pts[v])) > c for v in (1, 2))
    assert all(sum(x * y for x, y in zip(a, pts[v])) < c for v in range(3, 13))


points2 = st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=2, max_size=7, unique=True)


@given(points2, st.data())
def test_separation_monotone(pts, data):
    k = data.draw(st.integers(0, len(pts)))
    inside, outside = pts[:k], pts[k:]
    assume(strict_separation_feasible(inside, outside))
    keep_in = data.draw(st.lists(st.booleans(), min_size=len(inside), max_size=len(inside)))
    keep_out = data.draw(st.lists(st.booleans(), min_size=len(outside), max_size=len(outside)))
    assert strict_separation_feasible([p for p, b in zip(inside, keep_in) if b],
                                      [p for p, b in zip(outside, keep_out) if b])


# -- Q(sqrt5) ---------------------------------------------------------------------


@given(fractions, fractions)
def test_norm_identity(a, b):
    x = QSqrt5(a, b)
    assert x * x.conjugate() == QSqrt5(a * a - 5 * b * b)
    assert x.norm() == a * a - 5 * b * b


@given(fractions, fractions)
def test_sign_agrees_with_float(a, b):
    x = QSqrt5(a, b)
    value = float(a) + float(b) * math.sqrt(5)
    if abs(value) > 1e-6:
        assert qsqrt5_sign(x) == (1 if value > 0 else -1)


@given(fractions, fractions, fractions, fractions)
def test_field_operations(a, b, c, d):
    x, y = QSqrt5(a, b), QSqrt5(c, d)
    assert (x + y) - y == x
    if y != 0:
        assert (x / y) * y == x
    assert x * y == y * x


def test_explicit_values():
    one = QSqrt5(1)
    n1 = [one + one / SQRT5, SQRT5 - one, QSqrt5(0), QSqrt5(0), QSqrt5(0)]
    v1 = [QSqrt5(5) / SQRT5, -one / SQRT5, -one / SQRT5, -one / SQRT5, -one / SQRT5]
    assert qsqrt5_dot(n1, v1) == QSqrt5(6) / SQRT5
    assert qsqrt5_dot([QSqrt5(0)] * 5, v1) == 0
    assert QSqrt5(6) / SQRT5 > QSqrt5(2) and qsqrt5_sign(SQRT5 - QSqrt5(3)) == -1
