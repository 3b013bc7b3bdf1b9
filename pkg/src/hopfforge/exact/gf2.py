"""Dense GF(2) linear algebra on Python-integer bit rows."""

from __future__ import annotations

from typing import Iterable, Sequence


class GF2Matrix:
    """Matrix over GF(2); row ``i`` is an int whose bit ``j`` is entry (i, j)."""

    __slots__ = ("rows", "ncols")

    def __init__(self, rows: Iterable[int], ncols: int):
        self.rows = [int(r) for r in rows]
        self.ncols = int(ncols)
        limit = 1 << self.ncols
        if any(r < 0 or r >= limit for r in self.rows):
            raise ValueError("row has bits beyond the column count")

    @classmethod
    def from_dense(cls, entries: Sequence[Sequence[int]]) -> "GF2Matrix":
        ncols = len(entries[0]) if entries else 0
        rows = []
        for r in entries:
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            rows.append(sum(1 << j for j, x in enumerate(r) if x % 2))
        return cls(rows, ncols)

    @classmethod
    def identity(cls, k: int) -> "GF2Matrix":
        return cls([1 << i for i in range(k)], k)

    @classmethod
    def zeros(cls, m: int, n: int) -> "GF2Matrix":
        return cls([0] * m, n)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), self.ncols

    def entry(self, i: int, j: int) -> int:
        return (self.rows[i] >> j) & 1

    def transpose(self) -> "GF2Matrix":
        cols = [0] * self.ncols
        for i, r in enumerate(self.rows):
            while r:
                low = r & -r
                cols[low.bit_length() - 1] |= 1 << i
                r ^= low
        return GF2Matrix(cols, len(self.rows))

    def to_dense(self) -> list[list[int]]:
        return [[(r >> j) & 1 for j in range(self.ncols)] for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, GF2Matrix) and self.ncols == other.ncols and self.rows == other.rows


def _as_matrix(m) -> GF2Matrix:
    if isinstance(m, GF2Matrix):
        return m
    return GF2Matrix.from_dense(m)


def gf2_rank(m) -> int:
    """Rank by XOR-basis insertion keyed on the leading bit."""
    basis: dict[int, int] = {}
    for r in _as_matrix(m).rows:
        while r:
            h = r.bit_length() - 1
            b = basis.get(h)
            if b is None:
                basis[h] = r
                break
            r ^= b
    return len(basis)


def _rref(rows: Sequence[int]) -> list[tuple[int, int]]:
    """Fully reduced echelon form as ``(pivot column, row)`` pairs."""
    piv: list[tuple[int, int]] = []
    for r in rows:
        for c, pr in piv:
            if (r >> c) & 1:
                r ^= pr
        if not r:
            continue
        c = (r & -r).bit_length() - 1
        piv = [(pc, pr ^ r if (pr >> c) & 1 else pr) for pc, pr in piv]
        piv.append((c, r))
    return piv


def gf2_solve(m, b: int | Sequence[int]) -> int | None:
    """A solution ``x`` (bit vector over columns) of ``M x = b``, or None."""
    m = _as_matrix(m)
    if not isinstance(b, int):
        b = sum(1 << i for i, x in enumerate(b) if x % 2)
    n = m.ncols
    aug = [r | (((b >> i) & 1) << n) for i, r in enumerate(m.rows)]
    x = 0
    for c, r in _rref(aug):
        if c == n:
            return None
        if (r >> n) & 1:
            x |= 1 << c
    return x


def gf2_nullspace(m) -> list[int]:
    """Basis of ``{x : M x = 0}`` as column bit vectors, ordered by free column."""
    m = _as_matrix(m)
    piv = _rref(m.rows)
    pivcols = {c for c, _ in piv}
    basis = []
    for f in range(m.ncols):
        if f in pivcols:
            continue
        x = 1 << f
        for c, r in piv:
            if (r >> f) & 1:
                x |= 1 << c
        basis.append(x)
    return basis


def gf2_matvec(m, x: int) -> int:
    m = _as_matrix(m)
    out = 0
    for i, r in enumerate(m.rows):
        if (r & x).bit_count() & 1:
            out |= 1 << i
    return out
