# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled degree-index kernels over a CSR adjacency (int64 arrays).

Accumulation is in signed 64-bit with explicit overflow checks; any
overflow raises ``OverflowError`` instead of wrapping.
"""

from libc.limits cimport LLONG_MAX

# largest x with x*x <= LLONG_MAX, and with x*x*x <= LLONG_MAX
cdef long long SQ_MAX = 3037000499
cdef long long CUBE_MAX = 2097151


cdef inline long long _add(long long acc, long long term) except? -1:
    if term > LLONG_MAX - acc:
        raise OverflowError("index exceeds signed 64-bit range")
    return acc + term


def index_sums(const long long[:] indptr, const long long[:] indices):
    """Return ``(m1_vertex, m1_edge, m2, f, hm)`` for the graph."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t u, j
    cdef long long v, du, dv, s, p
    cdef long long m1v = 0, m1e = 0, m2 = 0, f = 0, hm = 0
    for u in range(n):
        du = indptr[u + 1] - indptr[u]
        if du > CUBE_MAX:
            raise OverflowError("index exceeds signed 64-bit range")
        m1v = _add(m1v, du * du)
        f = _add(f, du * du * du)
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if v <= u:
                continue
            dv = indptr[v + 1] - indptr[v]
            s = du + dv
            if s > SQ_MAX:
                raise OverflowError("index exceeds signed 64-bit range")
            m1e = _add(m1e, s)
            hm = _add(hm, s * s)
            if dv != 0 and du > LLONG_MAX // dv:
                raise OverflowError("index exceeds signed 64-bit range")
            p = du * dv
            m2 = _add(m2, p)
    return m1v, m1e, m2, f, hm


def neighbor_degree_sums(const long long[:] indptr, const long long[:] indices):
    """Per-vertex sum of neighbour degrees, as a list."""
    cdef Py_ssize_t n = indptr.shape[0] - 1
    cdef Py_ssize_t u, j
    cdef long long acc, v
    out = [0] * n
    for u in range(n):
        acc = 0
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            acc = _add(acc, indptr[v + 1] - indptr[v])
        out[u] = acc
    return out
