# cython: language_level=3
# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled solver kernels.

Mirrors ``_core_py`` loop for loop (same iteration order, same strict
comparisons) so both lanes return bit-identical results; only the inner
loops run as C.  Built optionally; the package falls back to the pure
module when this extension is absent.
"""

from libc.stdlib cimport free, malloc

cdef double INF = float("inf")


cdef double* _copy_dist(object dist, Py_ssize_t size) except NULL:
    cdef double* d = <double*> malloc(size * sizeof(double))
    if d == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    try:
        for i in range(size):
            d[i] = dist[i]
    except BaseException:
        free(d)
        raise
    return d


def shortest_cycle(dist, int n):
    """Optimal closed tour over ``n`` points given a flat n*n distance matrix."""
    if n < 1:
        raise ValueError("need at least one point")
    if n > 24:
        raise ValueError("subset table would exceed the kernel's memory budget")
    if n == 1:
        return 0.0, [0]
    cdef Py_ssize_t full = 1 << n
    cdef double* d = _copy_dist(dist, <Py_ssize_t> n * n)
    cdef double* dp = <double*> malloc(full * n * sizeof(double))
    cdef int* parent = <int*> malloc(full * n * sizeof(int))
    if dp == NULL or parent == NULL:
        free(d); free(dp); free(parent)
        raise MemoryError()
    cdef Py_ssize_t mask, base, idx
    cdef int last, j
    cdef double cur, cand, best
    cdef int best_last
    try:
        for idx in range(full * n):
            dp[idx] = INF
            parent[idx] = -1
        dp[n] = 0.0
        for mask in range(1, full):
            if not mask & 1:
                continue
            base = mask * n
            for last in range(n):
                cur = dp[base + last]
                if cur == INF:
                    continue
                for j in range(1, n):
                    if mask & (<Py_ssize_t> 1 << j):
                        continue
                    idx = (mask | (<Py_ssize_t> 1 << j)) * n + j
                    cand = cur + d[last * n + j]
                    if cand < dp[idx]:
                        dp[idx] = cand
                        parent[idx] = last
        best = INF
        best_last = -1
        for j in range(1, n):
            cand = dp[(full - 1) * n + j] + d[j * n]
            if cand < best:
                best = cand
                best_last = j
        order = []
        mask = full - 1
        last = best_last
        while last != -1:
            order.append(last)
            j = parent[mask * n + last]
            mask ^= <Py_ssize_t> 1 << last
            last = j
        order.reverse()
        return best, order
    finally:
        free(d)
        free(dp)
        free(parent)


def cycle_lengths_by_subset(dist, int n):
    """Optimal tour length for every subset of the points, in one pass."""
    if n < 1:
        raise ValueError("need at least one point")
    if n > 24:
        raise ValueError("subset table would exceed the kernel's memory budget")
    cdef Py_ssize_t full = 1 << n
    cdef double* d = _copy_dist(dist, <Py_ssize_t> n * n)
    cdef double* dp = <double*> malloc(full * n * sizeof(double))
    cdef double* vals = <double*> malloc(full * sizeof(double))
    if dp == NULL or vals == NULL:
        free(d); free(dp); free(vals)
        raise MemoryError()
    cdef Py_ssize_t mask, base, pbase, idx
    cdef int anchor, last, prev, i, nm
    cdef int members[32]
    cdef double cur, cand, best, closed
    try:
        for idx in range(full * n):
            dp[idx] = INF
        vals[0] = 0.0
        for mask in range(1, full):
            anchor = 0
            while not (mask >> anchor) & 1:
                anchor += 1
            if mask == (<Py_ssize_t> 1 << anchor):
                dp[mask * n + anchor] = 0.0
                vals[mask] = 0.0
                continue
            nm = 0
            for i in range(n):
                if (mask >> i) & 1:
                    members[nm] = i
                    nm += 1
            base = mask * n
            best = INF
            for i in range(nm):
                last = members[i]
                if last == anchor:
                    continue
                pbase = (mask ^ (<Py_ssize_t> 1 << last)) * n
                cur = INF
                for j in range(nm):
                    prev = members[j]
                    if prev == last:
                        continue
                    cand = dp[pbase + prev] + d[prev * n + last]
                    if cand < cur:
                        cur = cand
                dp[base + last] = cur
                closed = cur + d[last * n + anchor]
                if closed < best:
                    best = closed
            vals[mask] = best
        return [vals[idx] for idx in range(full)]
    finally:
        free(d)
        free(dp)
        free(vals)


cdef struct _PartitionSearch:
    double* values
    int* labels
    Py_ssize_t* block_masks
    int* best_labels
    double best_value
    int n
    int k


cdef void _descend(_PartitionSearch* s, int i, int used, double cur_max) noexcept:
    cdef int lab, limit, j
    cdef Py_ssize_t new_mask, old
    cdef double v, new_max
    if i == s.n:
        if cur_max < s.best_value:
            s.best_value = cur_max
            for j in range(s.n):
                s.best_labels[j] = s.labels[j]
        return
    limit = used + 1 if used < s.k else s.k
    for lab in range(limit):
        new_mask = s.block_masks[lab] | (<Py_ssize_t> 1 << i)
        v = s.values[new_mask]
        new_max = cur_max if cur_max >= v else v
        if new_max >= s.best_value:
            continue
        old = s.block_masks[lab]
        s.block_masks[lab] = new_mask
        s.labels[i] = lab
        _descend(s, i + 1, used + 1 if lab == used else used, new_max)
        s.block_masks[lab] = old


def min_max_partition(values, int n, int k):
    """Minimize the maximum subset value over partitions into <= k blocks."""
    if n < 1:
        raise ValueError("need at least one point")
    if k < 1:
        raise ValueError("need at least one block")
    if k > n:
        k = n
    cdef Py_ssize_t full = 1 << n
    cdef _PartitionSearch s
    s.values = _copy_dist(values, full)
    s.labels = <int*> malloc(n * sizeof(int))
    s.block_masks = <Py_ssize_t*> malloc(k * sizeof(Py_ssize_t))
    s.best_labels = <int*> malloc(n * sizeof(int))
    if s.labels == NULL or s.block_masks == NULL or s.best_labels == NULL:
        free(s.values); free(s.labels); free(s.block_masks); free(s.best_labels)
        raise MemoryError()
    s.best_value = INF
    s.n = n
    s.k = k
    cdef int i
    try:
        for i in range(k):
            s.block_masks[i] = 0
        for i in range(n):
            s.best_labels[i] = -1
        _descend(&s, 0, 0, 0.0)
        if s.best_labels[0] < 0:
            raise RuntimeError("partition search found no assignment")
        return s.best_value, [s.best_labels[i] for i in range(n)]
    finally:
        free(s.values)
        free(s.labels)
        free(s.block_masks)
        free(s.best_labels)
