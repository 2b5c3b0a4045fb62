# cython: language_level=3
"""Compiled kernel for the hot polynomial loops.

Mirrors ``fibtype._kernel._pure`` exactly.  Coefficients are Python
ints (they grow without bound), so the win over the pure module is the
loop and call overhead, not the arithmetic itself; the benchmark in
``benchmarks/bench_kernel.py`` reports the honest ratio.
"""


def mul(list a, list b):
    """Exact product of two integer coefficient lists."""
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    if na == 0 or nb == 0:
        return []
    cdef list out = [0] * (na + nb - 1)
    cdef object ai
    for i in range(na):
        ai = a[i]
        if ai:
            for j in range(nb):
                out[i + j] = out[i + j] + ai * b[j]
    return out


def eval_scaled(list c, p, q):
    """Return sum(c[i] * p**i * q**(n-i)) for n = len(c)-1."""
    cdef Py_ssize_t n = len(c), i
    if n == 0:
        return 0
    acc = c[n - 1]
    qp = 1
    for i in range(n - 2, -1, -1):
        qp = qp * q
        acc = acc * p + c[i] * qp
    return acc


def chain_variations(list chain, p, q):
    """Sign variations of a polynomial chain evaluated at p/q (q > 0)."""
    cdef int prev = 0, s, var = 0
    for c in chain:
        v = eval_scaled(c, p, q)
        s = 1 if v > 0 else (-1 if v < 0 else 0)
        if s != 0:
            if prev != 0 and s != prev:
                var += 1
            prev = s
    return var
