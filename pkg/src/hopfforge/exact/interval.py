"""Certified interval enclosures backed by mpmath's interval context."""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from mpmath import iv, mp, mpf

PRECISION_SCHEDULE = (64, 128, 256, 512)


@contextmanager
def working_precision(bits: int):
    old = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = old


@dataclass(frozen=True)
class CertifiedInterval:
    """Closed interval ``[lower, upper]`` with dyadic endpoints."""

    lower: mpf
    upper: mpf
    precision: int

    @classmethod
    def from_iv(cls, x, precision: int) -> "CertifiedInterval":
        return cls(*_endpoints(x), precision)

    def to_iv(self):
        return iv.mpf([self.lower, self.upper])

    @property
    def width(self) -> mpf:
        return self.upper - self.lower

    def contains(self, x) -> bool:
        return self.lower <= x <= self.upper

    def sign(self) -> int | None:
        """Sign when zero is excluded, otherwise ``None``."""
        if self.lower > 0:
            return 1
        if self.upper < 0:
            return -1
        if self.lower == 0 and self.upper == 0:
            return 0
        return None


def _endpoints(x):
    # exact endpoints: building mpf(...) would round to the global mp precision
    lo, hi = x._mpi_
    return mp.make_mpf(lo), mp.make_mpf(hi)


def enclose(x, bits: int) -> CertifiedInterval:
    with working_precision(bits):
        y = iv.mpf(x) if not isinstance(x, Fraction) else iv.mpf(x.numerator) / x.denominator
        lo, hi = _endpoints(y)
    return CertifiedInterval(lo, hi, bits)


def trig_point_iv(j: int, n: int, frequencies: Sequence[int], bits: int) -> list:
    """Interval enclosures (as mpmath ``iv.mpf``) of cos/sin(2 pi f j / n)."""
    out = []
    with working_precision(bits):
        for f in frequencies:
            r = (f * j) % n
            if r == 0:
                out.extend([iv.mpf(1), iv.mpf(0)])
                continue
            if 4 * r % n == 0:
                q = 4 * r // n
                c, s = [(1, 0), (0, 1), (-1, 0), (0, -1)][q]
                out.extend([iv.mpf(c), iv.mpf(s)])
                continue
            theta = 2 * iv.pi * r / n
            out.extend([iv.cos(theta), iv.sin(theta)])
    return out


def interval_trig_point(j: int, n: int, frequencies: Sequence[int], bits: int = 64) -> list[CertifiedInterval]:
    if bits < 32:
        raise ValueError("precision must be at least 32 bits")
    if not 0 <= j < n:
        raise ValueError("j out of range")
    with working_precision(bits):
        vals = trig_point_iv(j, n, frequencies, bits)
        return [CertifiedInterval(*_endpoints(v), bits) for v in vals]


def _iv_det_sign(rows: list[list]) -> tuple[int | None, mpf]:
    """Sign of an interval determinant by Gaussian elimination with pivoting."""
    m = [list(r) for r in rows]
    n = len(m)
    sign = 1
    det = iv.mpf(1)
    for col in range(n):
        best, best_mag = None, mpf(0)
        for r in range(col, n):
            x = m[r][col]
            lo, hi = _endpoints(x)
            if lo <= 0 <= hi:
                continue
            mag = min(abs(lo), abs(hi))
            if best is None or mag > best_mag:
                best, best_mag = r, mag
        if best is None:
            lo, hi = _endpoints(det)
            return None, hi - lo
        if best != col:
            m[col], m[best] = m[best], m[col]
            sign = -sign
        piv = m[col][col]
        det = det * piv
        for r in range(col + 1, n):
            factor = m[r][col] / piv
            if factor == 0:
                continue
            row_r, row_c = m[r], m[col]
            for c in range(col + 1, n):
                row_r[c] = row_r[c] - factor * row_c[c]
    lo, hi = _endpoints(det)
    if lo > 0:
        return sign, hi - lo
    if hi < 0:
        return -sign, hi - lo
    return None, hi - lo


def certified_sign_det(matrix: Callable[[int], list[list]] | Sequence[Sequence],
                       schedule: Sequence[int] = PRECISION_SCHEDULE) -> tuple[int | None, int, mpf]:
    """Resolve the sign of a determinant, refining precision along ``schedule``.

    ``matrix`` is either a fixed matrix (numbers, Fractions or intervals) or a
    callable returning interval entries at a requested precision.  Returns
    ``(sign or None, bits used, achieved width)``.
    """
    width = mpf("inf")
    for bits in schedule:
        with working_precision(bits):
            rows = matrix(bits) if callable(matrix) else matrix
            conv = [[_to_iv(x) for x in r] for r in rows]
            s, width = _iv_det_sign(conv)
        if s is not None:
            return s, bits, width
    return None, schedule[-1], width


def _to_iv(x):
    if isinstance(x, CertifiedInterval):
        return x.to_iv()
    if isinstance(x, Fraction):
        return iv.mpf(x.numerator) / x.denominator
    return iv.mpf(x)
