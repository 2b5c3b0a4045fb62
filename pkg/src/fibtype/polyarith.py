"""Exact polynomial arithmetic over arbitrary-precision integers.

Univariate polynomials are dense integer coefficient lists; bivariate
ones are sparse maps from (i, j) exponent pairs to integers.  Rational
values use :class:`fractions.Fraction`; configurable-precision floats
and complexes are mpmath ``mpf``/``mpc`` values with the precision
always passed explicitly by the caller (see :func:`workprec`).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

import mpmath

from fibtype import _kernel


class NotDivisible(ArithmeticError):
    """Exact polynomial division left a nonzero remainder."""


class DivisionByZeroPoly(ZeroDivisionError):
    """Division by the zero polynomial."""


def workprec(bits):
    """mpmath context manager fixing the working mantissa to `bits`."""
    return mpmath.workprec(bits)


def mpf_at(value, bits):
    """Convert int/Fraction/float/str to an mpf rounded at `bits` bits."""
    with mpmath.workprec(bits):
        if isinstance(value, Fraction):
            return mpmath.mpf(value.numerator) / value.denominator
        return mpmath.mpf(value)


class Polynomial:
    """Dense univariate polynomial with exact integer coefficients.

    ``coeffs[i]`` is the coefficient of x**i; trailing zeros are
    stripped so the zero polynomial has an empty tuple.  Instances are
    immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- basic structure ------------------------------------------------

    @property
    def degree(self):
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return not self.coeffs

    @property
    def is_one(self):
        return self.coeffs == (1,)

    @property
    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(("Polynomial", self.coeffs))

    def __repr__(self):
        if self.is_zero:
            return "Polynomial(0)"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(str(c))
            elif i == 1:
                parts.append(f"{c}*x" if c not in (1, -1) else ("x" if c == 1 else "-x"))
            else:
                parts.append(f"{c}*x^{i}" if c not in (1, -1) else (f"x^{i}" if c == 1 else f"-x^{i}"))
        return "Polynomial(" + " + ".join(parts).replace("+ -", "- ") + ")"

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial((other,))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(tuple(other * c for c in self.coeffs))
        if not isinstance(other, Polynomial):
            return NotImplemented
        return Polynomial(_kernel.mul(list(self.coeffs), list(other.coeffs)))

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k):
        """Multiply by x**k."""
        if self.is_zero:
            return self
        return Polynomial((0,) * k + self.coeffs)

    # -- calculus / substitution ---------------------------------------

    def derivative(self):
        """Formal derivative."""
        return Polynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i))

    def substitute_power(self, k):
        """x -> x**k: moves the coefficient of x**i to x**(i*k)."""
        if k < 1:
            raise ValueError("substitution power must be >= 1")
        if k == 1 or self.is_zero:
            return self
        out = [0] * (self.degree * k + 1)
        for i, c in enumerate(self.coeffs):
            out[i * k] = c
        return Polynomial(out)

    # -- evaluation -----------------------------------------------------

    def __call__(self, v):
        """Horner evaluation; exact for int/Fraction, float for mpf/mpc."""
        if not self.coeffs:
            return 0 * v if not isinstance(v, (int, Fraction)) else 0
        acc = self.coeffs[-1] + 0 * v  # promote to the value's type
        for c in reversed(self.coeffs[:-1]):
            acc = acc * v + c
        return acc

    def sign_at(self, r):
        """Sign of the polynomial at a Fraction or int, in pure integers."""
        if isinstance(r, int):
            r = Fraction(r)
        v = _kernel.eval_scaled(list(self.coeffs), r.numerator, r.denominator)
        return 1 if v > 0 else (-1 if v < 0 else 0)

    # -- integer-content helpers ---------------------------------------

    def content(self):
        """GCD of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = gcd(g, abs(c))
            if g == 1:
                break
        return g

    def primitive(self):
        """Divide out the content, preserving the sign."""
        g = self.content()
        if g in (0, 1):
            return self
        return Polynomial(tuple(c // g for c in self.coeffs))


ZERO = Polynomial()
ONE = Polynomial((1,))
X = Polynomial((0, 1))


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def poly_eval(p: Polynomial, v):
    return p(v)


def poly_derivative(p: Polynomial) -> Polynomial:
    return p.derivative()


def poly_substitute_power(p: Polynomial, k: int) -> Polynomial:
    return p.substitute_power(k)


def poly_divmod(a: Polynomial, b: Polynomial):
    """Quotient and remainder over the rationals, as Fraction lists."""
    if b.is_zero:
        raise DivisionByZeroPoly("division by zero polynomial")
    r = [Fraction(c) for c in a.coeffs]
    bl = [Fraction(c) for c in b.coeffs]
    db = len(bl) - 1
    lead = bl[-1]
    q = [Fraction(0)] * max(len(r) - db, 1)
    while len(r) > db and any(r):
        while r and r[-1] == 0:
            r.pop()
        if len(r) - 1 < db:
            break
        shift = len(r) - 1 - db
        coef = r[-1] / lead
        q[shift] = coef
        for i, bc in enumerate(bl):
            r[shift + i] -= coef * bc
        r.pop()
    return q, r


def poly_divide_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Return q with a = q*b, failing loudly when b does not divide a."""
    q, r = poly_divmod(a, b)
    if any(r):
        raise NotDivisible(f"{b!r} does not divide {a!r}")
    if any(c.denominator != 1 for c in q):
        raise NotDivisible(f"quotient of {a!r} by {b!r} is not integral")
    return Polynomial(tuple(int(c) for c in q))


class BiPolynomial:
    """Sparse bivariate polynomial: {(i, j): c} for c * x**i * y**j.

    Zero-valued entries are never stored.  Immutable and hashable.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        d = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (i, j), c in items:
            if c:
                key = (i, j)
                d[key] = d.get(key, 0) + c
                if not d[key]:
                    del d[key]
        object.__setattr__(self, "terms", dict(d))

    def __setattr__(self, name, value):
        raise AttributeError("BiPolynomial is immutable")

    @property
    def is_zero(self):
        return not self.terms

    @property
    def is_one(self):
        return self.terms == {(0, 0): 1}

    def __eq__(self, other):
        if isinstance(other, int):
            other = BiPolynomial({(0, 0): other})
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(("BiPolynomial", tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "BiPolynomial(0)"
        bits = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            t = str(c)
            if i:
                t += f"*x^{i}" if i > 1 else "*x"
            if j:
                t += f"*y^{j}" if j > 1 else "*y"
            bits.append(t)
        return "BiPolynomial(" + " + ".join(bits) + ")"

    def __add__(self, other):
        if isinstance(other, int):
            other = BiPolynomial({(0, 0): other})
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d.get(k, 0) + c
        return BiPolynomial(d)

    __radd__ = __add__

    def __neg__(self):
        return BiPolynomial({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = BiPolynomial({(0, 0): other})
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BiPolynomial({k: other * c for k, c in self.terms.items()})
        if not isinstance(other, BiPolynomial):
            return NotImplemented
        d = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                d[k] = d.get(k, 0) + c1 * c2
        return BiPolynomial(d)

    __rmul__ = __mul__

    def map_exponents(self, f):
        """Rewrite each exponent pair via f(i, j) -> (i', j')."""
        return BiPolynomial({f(i, j): c for (i, j), c in self.terms.items()})

    def square_y(self):
        """Substitute y -> y**2."""
        return self.map_exponents(lambda i, j: (i, 2 * j))

    def eval(self, xv, yv):
        """Evaluate at a pair of values (exact for int/Fraction)."""
        total = None
        for (i, j), c in sorted(self.terms.items()):
            t = c * xv**i * yv**j
            total = t if total is None else total + t
        return 0 if total is None else total

    def specialize_x(self, xv: int) -> Polynomial:
        """Integer substitution for x, leaving a polynomial in y."""
        out = {}
        for (i, j), c in self.terms.items():
            out[j] = out.get(j, 0) + c * xv**i
        if not out:
            return ZERO
        cs = [0] * (max(out) + 1)
        for j, c in out.items():
            cs[j] = c
        return Polynomial(cs)

    def specialize_y(self, yv: int) -> Polynomial:
        """Integer substitution for y, leaving a polynomial in x."""
        out = {}
        for (i, j), c in self.terms.items():
            out[i] = out.get(i, 0) + c * yv**j
        if not out:
            return ZERO
        cs = [0] * (max(out) + 1)
        for i, c in out.items():
            cs[i] = c
        return Polynomial(cs)


BI_ZERO = BiPolynomial()
BI_ONE = BiPolynomial({(0, 0): 1})
BI_X = BiPolynomial({(1, 0): 1})
BI_Y = BiPolynomial({(0, 1): 1})
