# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_pykernels``."""

BACKEND = "cython"


def convex_count(const signed char[::1] table, Py_ssize_t n, weights=None):
    cdef Py_ssize_t a, b, c, d, ab, ac, bc
    cdef signed char s
    cdef long long wab, wabc, acc, total = 0
    cdef long long[::1] w
    cdef object wl
    if table.shape[0] < n * n * n:
        raise ValueError("orientation table too small")
    import array
    if weights is None:
        wl = array.array("q", [1] * n)
    else:
        wl = array.array("q", weights)
        if len(wl) != n:
            raise ValueError("weights length mismatch")
    w = wl
    for a in range(n - 3):
        for b in range(a + 1, n - 2):
            wab = w[a] * w[b]
            ab = (a * n + b) * n
            for c in range(b + 1, n - 1):
                s = table[ab + c]
                ac = (a * n + c) * n
                bc = (b * n + c) * n
                acc = 0
                for d in range(c + 1, n):
                    if table[ab + d] * table[ac + d] * table[bc + d] == s:
                        acc += w[d]
                if acc:
                    wabc = wab * w[c]
                    total += wabc * acc
    return total


def nonconvex_by_inner(const signed char[::1] table, Py_ssize_t n):
    cdef Py_ssize_t a, b, c, d, ab, ac, bc
    cdef signed char s1, s2, s3, s4
    cdef long long[::1] inner
    import array
    out = array.array("q", [0] * n)
    inner = out
    for a in range(n - 3):
        for b in range(a + 1, n - 2):
            ab = (a * n + b) * n
            for c in range(b + 1, n - 1):
                s1 = table[ab + c]
                ac = (a * n + c) * n
                bc = (b * n + c) * n
                for d in range(c + 1, n):
                    s2 = table[ab + d]
                    s3 = table[ac + d]
                    s4 = table[bc + d]
                    if s1 * s2 * s3 * s4 == 1:
                        continue
                    if s2 == s1 and s4 == s1:
                        inner[d] += 1
                    elif s3 == s1 and s4 == s1:
                        inner[a] += 1
                    elif s2 == s3 and s3 == s4:
                        inner[b] += 1
                    else:
                        inner[c] += 1
    return list(out)
