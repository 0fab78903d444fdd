"""Pure-Python twin of ``_ckernels``; same inputs, same results, same errors."""

INT64_MAX = 2**63 - 1


def _check(*values: int) -> None:
    for value in values:
        if value > INT64_MAX:
            raise OverflowError("index exceeds signed 64-bit range")


def index_sums(indptr, indices):
    """Return ``(m1_vertex, m1_edge, m2, f, hm)`` for the graph."""
    n = len(indptr) - 1
    deg = [indptr[u + 1] - indptr[u] for u in range(n)]
    m1v = sum(d * d for d in deg)
    f = sum(d * d * d for d in deg)
    m1e = m2 = hm = 0
    for u in range(n):
        du = deg[u]
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if v <= u:
                continue
            dv = deg[v]
            s = du + dv
            m1e += s
            hm += s * s
            m2 += du * dv
    # all terms are nonnegative, so checking the totals is enough
    _check(m1v, m1e, m2, f, hm)
    return m1v, m1e, m2, f, hm


def neighbor_degree_sums(indptr, indices):
    n = len(indptr) - 1
    deg = [indptr[u + 1] - indptr[u] for u in range(n)]
    out = [sum(deg[indices[j]] for j in range(indptr[u], indptr[u + 1])) for u in range(n)]
    _check(*out)
    return out
