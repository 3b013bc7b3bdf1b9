"""Pure-Python twins of the compiled kernels; same inputs, same outputs."""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1


def gf2_reduce(columns, nrows, skip=None):
    lows = np.full(len(columns), -1, dtype=np.int32)
    pivot_of_row: dict[int, int] = {}
    reduced: dict[int, int] = {}
    for j, col in enumerate(columns):
        if skip is not None and skip[j]:
            continue
        v = 0
        for r in col:
            v ^= 1 << r
        while v:
            low = v.bit_length() - 1
            p = pivot_of_row.get(low)
            if p is None:
                pivot_of_row[low] = j
                reduced[j] = v
                lows[j] = low
                break
            v ^= reduced[p]
    return lows


class _SplitMix:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def __call__(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)


def morse_run(dims, face_ptr, face_idx, coface_ptr, coface_idx, protected, seed):
    dims = [int(x) for x in dims]
    face_ptr = [int(x) for x in face_ptr]
    face_idx = [int(x) for x in face_idx]
    coface_ptr = [int(x) for x in coface_ptr]
    coface_idx = [int(x) for x in coface_idx]
    protected = [bool(x) for x in protected]
    n = len(dims)
    rng = _SplitMix(int(seed))
    maxdim = max(dims, default=-1)
    alive = [True] * n
    cocount = [coface_ptr[i + 1] - coface_ptr[i] for i in range(n)]
    by_dim: list[list[int]] = [[] for _ in range(maxdim + 1)]
    where = [-1] * n
    free: list[int] = []
    remaining = 0
    for i in range(n):
        if not protected[i]:
            where[i] = len(by_dim[dims[i]])
            by_dim[dims[i]].append(i)
            remaining += 1
            if cocount[i] == 1:
                free.append(i)

    def kill(x):
        alive[x] = False
        lst = by_dim[dims[x]]
        w = where[x]
        last = lst[-1]
        lst[w] = last
        where[last] = w
        lst.pop()
        where[x] = -1
        for t in range(face_ptr[x], face_ptr[x + 1]):
            y = face_idx[t]
            cocount[y] -= 1
            if cocount[y] == 1 and alive[y] and not protected[y]:
                free.append(y)

    critical: list[int] = []
    pairs = 0
    while remaining > 0:
        s = partner = -1
        while free:
            pos = rng() % len(free)
            f = free[pos]
            free[pos] = free[-1]
            free.pop()
            if not alive[f] or cocount[f] != 1:
                continue
            partner = -1
            for t in range(coface_ptr[f], coface_ptr[f + 1]):
                if alive[coface_idx[t]]:
                    partner = coface_idx[t]
                    break
            if partner < 0 or protected[partner]:
                continue
            s = f
            break
        if s >= 0:
            kill(s)
            kill(partner)
            remaining -= 2
            pairs += 1
            continue
        d = maxdim
        while d >= 0 and not by_dim[d]:
            d -= 1
        c = by_dim[d][rng() % len(by_dim[d])]
        critical.append(c)
        kill(c)
        remaining -= 1
    return critical, pairs


def incoherence_counts(squares, ncubes):
    sq = np.asarray(squares, dtype=np.int64)
    masks = np.arange(1 << ncubes, dtype=np.int64)
    out = np.zeros(1 << ncubes, dtype=np.uint8)
    for row in sq:
        diag = []
        for k in range(3):
            c, d0, d1 = row[3 * k: 3 * k + 3]
            diag.append(np.where((masks >> c) & 1, d1, d0))
        out += ((diag[0] != diag[1]) | (diag[1] != diag[2])).astype(np.uint8)
    return out
