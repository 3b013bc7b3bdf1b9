# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot loops: GF(2) column reduction, random discrete Morse runs,
cube-assignment incoherence counting.  ``_kernels_py`` mirrors each routine."""

from libc.stdint cimport uint64_t, int32_t, uint8_t
from libcpp.vector cimport vector
from libcpp.utility cimport move

import numpy as np
cimport numpy as cnp

cnp.import_array()


cdef inline void _symdiff(vector[int32_t]& a, const vector[int32_t]& b, vector[int32_t]& out) noexcept nogil:
    cdef size_t i = 0, j = 0, na = a.size(), nb = b.size()
    out.clear()
    out.reserve(na + nb)
    while i < na and j < nb:
        if a[i] < b[j]:
            out.push_back(a[i]); i += 1
        elif a[i] > b[j]:
            out.push_back(b[j]); j += 1
        else:
            i += 1; j += 1
    while i < na:
        out.push_back(a[i]); i += 1
    while j < nb:
        out.push_back(b[j]); j += 1


def gf2_reduce(list columns, Py_ssize_t nrows, skip=None):
    """Left-to-right column reduction; returns the pivot row of each column (-1 if zero)."""
    cdef Py_ssize_t ncols = len(columns), j, k
    cdef vector[vector[int32_t]] cols
    cdef vector[int32_t] tmp
    cdef int32_t low, p
    cdef cnp.ndarray[cnp.int32_t, ndim=1] pivot_of_row = np.full(nrows, -1, dtype=np.int32)
    cdef cnp.ndarray[cnp.int32_t, ndim=1] lows = np.full(ncols, -1, dtype=np.int32)
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] skip_arr
    cdef bint has_skip = skip is not None
    if has_skip:
        skip_arr = np.asarray(skip, dtype=np.uint8)
    cols.resize(ncols)
    for j in range(ncols):
        if has_skip and skip_arr[j]:
            continue
        col = columns[j]
        cols[j].reserve(len(col))
        for k in range(len(col)):
            cols[j].push_back(<int32_t>col[k])
    with nogil:
        for j in range(ncols):
            if has_skip and skip_arr[j]:
                continue
            while cols[j].size() > 0:
                low = cols[j].back()
                p = pivot_of_row[low]
                if p < 0:
                    pivot_of_row[low] = <int32_t>j
                    lows[j] = low
                    break
                _symdiff(cols[j], cols[p], tmp)
                cols[j].swap(tmp)
    return lows


cdef inline uint64_t _splitmix(uint64_t* state) noexcept nogil:
    state[0] += <uint64_t>0x9E3779B97F4A7C15ULL
    cdef uint64_t z = state[0]
    z = (z ^ (z >> 30)) * <uint64_t>0xBF58476D1CE4E5B9ULL
    z = (z ^ (z >> 27)) * <uint64_t>0x94D049BB133111EBULL
    return z ^ (z >> 31)


def morse_run(int32_t[:] dims, int32_t[:] face_ptr, int32_t[:] face_idx,
              int32_t[:] coface_ptr, int32_t[:] coface_idx, uint8_t[:] protected,
              uint64_t seed):
    """One random collapse run; returns (critical face ids, number of collapse pairs)."""
    cdef Py_ssize_t n = dims.shape[0], i, t, pos
    cdef int32_t maxdim = -1, s, c, partner, f, d
    cdef uint64_t state = seed
    cdef vector[uint8_t] alive
    cdef vector[int32_t] cocount
    cdef vector[int32_t] free
    cdef vector[vector[int32_t]] by_dim
    cdef vector[int32_t] where
    cdef vector[int32_t] critical
    cdef Py_ssize_t remaining = 0, pairs = 0
    for i in range(n):
        if dims[i] > maxdim:
            maxdim = dims[i]
    by_dim.resize(maxdim + 1)
    alive.resize(n, 1)
    cocount.resize(n, 0)
    where.resize(n, -1)
    with nogil:
        for i in range(n):
            cocount[i] = coface_ptr[i + 1] - coface_ptr[i]
            if not protected[i]:
                where[i] = <int32_t>by_dim[dims[i]].size()
                by_dim[dims[i]].push_back(<int32_t>i)
                remaining += 1
                if cocount[i] == 1:
                    free.push_back(<int32_t>i)
        while remaining > 0:
            s = -1
            while free.size() > 0:
                pos = <Py_ssize_t>(_splitmix(&state) % free.size())
                f = free[pos]
                free[pos] = free.back()
                free.pop_back()
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
                _kill(s, dims, face_ptr, face_idx, protected, alive, cocount, free, by_dim, where)
                _kill(partner, dims, face_ptr, face_idx, protected, alive, cocount, free, by_dim, where)
                remaining -= 2
                pairs += 1
                continue
            d = maxdim
            while d >= 0 and by_dim[d].size() == 0:
                d -= 1
            pos = <Py_ssize_t>(_splitmix(&state) % by_dim[d].size())
            c = by_dim[d][pos]
            critical.push_back(c)
            _kill(c, dims, face_ptr, face_idx, protected, alive, cocount, free, by_dim, where)
            remaining -= 1
    return [critical[i] for i in range(critical.size())], pairs


cdef inline void _kill(int32_t x, int32_t[:] dims, int32_t[:] face_ptr, int32_t[:] face_idx,
                       uint8_t[:] protected, vector[uint8_t]& alive, vector[int32_t]& cocount,
                       vector[int32_t]& free, vector[vector[int32_t]]& by_dim,
                       vector[int32_t]& where) noexcept nogil:
    cdef Py_ssize_t t
    cdef int32_t y, d = dims[x], last, w
    alive[x] = 0
    w = where[x]
    last = by_dim[d].back()
    by_dim[d][w] = last
    where[last] = w
    by_dim[d].pop_back()
    where[x] = -1
    for t in range(face_ptr[x], face_ptr[x + 1]):
        y = face_idx[t]
        cocount[y] -= 1
        if cocount[y] == 1 and alive[y] and not protected[y]:
            free.push_back(y)


def incoherence_counts(int32_t[:, :] squares, int ncubes):
    """For every assignment mask, count squares whose three diagonals disagree.

    ``squares`` rows are ``(c0, d0_if0, d0_if1, c1, ..., c2, ..., ...)``.
    """
    cdef Py_ssize_t total = (<Py_ssize_t>1) << ncubes, m, q
    cdef Py_ssize_t nsq = squares.shape[0]
    cdef cnp.ndarray[cnp.uint8_t, ndim=1] out = np.zeros(total, dtype=np.uint8)
    cdef uint8_t[:] ov = out
    cdef int32_t a, b, c
    cdef int cnt
    with nogil:
        for m in range(total):
            cnt = 0
            for q in range(nsq):
                a = squares[q, 2] if (m >> squares[q, 0]) & 1 else squares[q, 1]
                b = squares[q, 5] if (m >> squares[q, 3]) & 1 else squares[q, 4]
                c = squares[q, 8] if (m >> squares[q, 6]) & 1 else squares[q, 7]
                if a != b or b != c:
                    cnt += 1
            ov[m] = <uint8_t>cnt
    return out
