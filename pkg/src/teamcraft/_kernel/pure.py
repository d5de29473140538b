"""Pure-Python assignment kernel: O(k^3) shortest-augmenting-path Hungarian.

Reference implementation for the compiled extension; both must produce the
same matching on the same input. Arithmetic is exact (Python ints), so there
is no tolerance anywhere.
"""

BACKEND = "pure"

_INF = 1 << 60


def solve_square(cost) -> tuple[int, list[int]]:
    """Minimum-cost perfect matching of a square non-negative int matrix.

    Returns ``(total_cost, cols)`` where ``cols[i]`` is the column matched to
    row ``i``. Deterministic: ties are resolved by scan order, identically to
    the compiled kernel.
    """
    k = len(cost)
    u = [0] * (k + 1)
    v = [0] * (k + 1)
    match = [0] * (k + 1)  # match[j] = 1-based row matched to column j
    way = [0] * (k + 1)
    for i in range(1, k + 1):
        match[0] = i
        j0 = 0
        minv = [_INF] * (k + 1)
        used = [False] * (k + 1)
        while True:
            used[j0] = True
            i0 = match[j0]
            delta = _INF
            j1 = 0
            row = cost[i0 - 1]
            for j in range(1, k + 1):
                if used[j]:
                    continue
                cur = row[j - 1] - u[i0] - v[j]
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
    total = sum(cost[i][cols[i]] for i in range(k))
    return total, cols
