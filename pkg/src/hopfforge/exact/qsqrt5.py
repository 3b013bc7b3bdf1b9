"""Exact arithmetic in the quadratic field Q(sqrt 5)."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def _q(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


class QSqrt5:
    """The number ``a + b*sqrt(5)`` with rational ``a`` and ``b``."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = _q(a)
        self.b = _q(b)

    @classmethod
    def coerce(cls, x) -> "QSqrt5":
        return x if isinstance(x, QSqrt5) else cls(x, 0)

    def __add__(self, o):
        o = QSqrt5.coerce(o)
        return QSqrt5(self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt5(-self.a, -self.b)

    def __sub__(self, o):
        return self + (-QSqrt5.coerce(o))

    def __rsub__(self, o):
        return QSqrt5.coerce(o) - self

    def __mul__(self, o):
        o = QSqrt5.coerce(o)
        return QSqrt5(self.a * o.a + 5 * self.b * o.b, self.a * o.b + self.b * o.a)

    __rmul__ = __mul__

    def conjugate(self) -> "QSqrt5":
        return QSqrt5(self.a, -self.b)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - 5 b^2``."""
        return self.a * self.a - 5 * self.b * self.b

    def __truediv__(self, o):
        o = QSqrt5.coerce(o)
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt5)")
        num = self * o.conjugate()
        return QSqrt5(num.a / n, num.b / n)

    def __rtruediv__(self, o):
        return QSqrt5.coerce(o) / self

    def sign(self) -> int:
        return qsqrt5_sign(self)

    def __eq__(self, o):
        try:
            o = QSqrt5.coerce(o)
        except (TypeError, ValueError):
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __lt__(self, o):
        return (self - o).sign() < 0

    def __le__(self, o):
        return (self - o).sign() <= 0

    def __gt__(self, o):
        return (self - o).sign() > 0

    def __ge__(self, o):
        return (self - o).sign() >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * 5 ** 0.5

    def __repr__(self):
        return f"QSqrt5({self.a}, {self.b})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        return f"{self.a} + {self.b}*sqrt5"


SQRT5 = QSqrt5(0, 1)


def qsqrt5_sign(x: QSqrt5) -> int:
    """Exact sign of ``a + b sqrt5`` by comparing squares; no floating point."""
    a, b = x.a, x.b
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0:
        return sa
    if sa == 0:
        return sb
    if sa == sb:
        return sa
    # opposite signs: the term with the larger square wins
    lhs, rhs = a * a, 5 * b * b
    if lhs == rhs:
        return 0
    return sa if lhs > rhs else sb


def qsqrt5_dot(u: Sequence, v: Sequence) -> QSqrt5:
    if len(u) != len(v):
        raise ValueError("vectors of unequal length")
    acc = QSqrt5()
    for x, y in zip(u, v):
        acc = acc + QSqrt5.coerce(x) * QSqrt5.coerce(y)
    return acc
