# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled assignment kernel: O(k^3) shortest-augmenting-path Hungarian.

Mirrors ``teamcraft._kernel.pure.solve_square`` exactly, including tie
resolution, so the two backends are interchangeable.
"""

from libc.stdlib cimport calloc, free

BACKEND = "cython"

cdef long long _INF = <long long>1 << 60


def solve_square(long long[:, :] cost):
    """Minimum-cost perfect matching of a square int64 matrix.

    Returns ``(total_cost, cols)`` where ``cols[i]`` is the column matched
    to row ``i``.
    """
    cdef Py_ssize_t k = cost.shape[0]
    if cost.shape[1] != k:
        raise ValueError("cost matrix must be square")
    cdef long long *u = <long long *>calloc(k + 1, sizeof(long long))
    cdef long long *v = <long long *>calloc(k + 1, sizeof(long long))
    cdef long long *minv = <long long *>calloc(k + 1, sizeof(long long))
    cdef Py_ssize_t *match = <Py_ssize_t *>calloc(k + 1, sizeof(Py_ssize_t))
    cdef Py_ssize_t *way = <Py_ssize_t *>calloc(k + 1, sizeof(Py_ssize_t))
    cdef char *used = <char *>calloc(k + 1, sizeof(char))
    if u is NULL or v is NULL or minv is NULL or match is NULL or way is NULL or used is NULL:
        free(u); free(v); free(minv); free(match); free(way); free(used)
        raise MemoryError()

    cdef Py_ssize_t i, j, j0, j1, i0
    cdef long long delta, cur, total
    try:
        for i in range(1, k + 1):
            match[0] = i
            j0 = 0
            for j in range(k + 1):
                minv[j] = _INF
                used[j] = 0
            while True:
                used[j0] = 1
                i0 = match[j0]
                delta = _INF
                j1 = 0
                for j in range(1, k + 1):
                    if used[j]:
                        continue
                    cur = cost[i0 - 1, j - 1] - u[i0] - v[j]
                    if cur < minv[j]:
                        minv[j] = cur
                        way[j] = j0
                    if minv[j] < delta:
                        delta = minv[j]
                        j1 = j
                for j in range(k + 1):
                    if used[j]:
                        u[match[j]] += delta
                        v[j] -= delta
                    else:
                        minv[j] -= delta
                j0 = j1
                if match[j0] == 0:
                    break
            while j0:
                j1 = way[j0]
                match[j0] = match[j1]
                j0 = j1

        cols = [0] * k
        for j in range(1, k + 1):
            cols[match[j] - 1] = j - 1
        total = 0
        for i in range(k):
            total += cost[i, cols[i]]
        return total, cols
    finally:
        free(u); free(v); free(minv); free(match); free(way); free(used)
