"""Pure-Python kernel for the hot polynomial loops.

The compiled extension ``fibtype._kernel._core`` implements exactly the
same three functions; this module is the fallback used when the
extension has not been built.  Both operate on little-endian coefficient
lists of Python ints (index i = coefficient of x**i) with no trailing
zeros.
"""


def mul(a, b):
    """Exact product of two integer coefficient lists."""
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def eval_scaled(c, p, q):
    """Return sum(c[i] * p**i * q**(n-i)) for n = len(c)-1.

    For q > 0 this has the same sign as the polynomial evaluated at the
    rational p/q, without ever leaving integer arithmetic.
    """
    if not c:
        return 0
    acc = c[-1]
    qp = 1
    for i in range(len(c) - 2, -1, -1):
        qp *= q
        acc = acc * p + c[i] * qp
    return acc


def chain_variations(chain, p, q):
    """Sign variations of a polynomial chain evaluated at p/q (q > 0).

    Zero values are skipped, per the usual Sturm convention.
    """
    prev = 0
    var = 0
    for c in chain:
        v = eval_scaled(c, p, q)
        s = 1 if v > 0 else (-1 if v < 0 else 0)
        if s:
            if prev and s != prev:
                var += 1
            prev = s
    return var
