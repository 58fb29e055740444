"""Exact univariate polynomial and rational-function arithmetic over the integers.

Everything here is integer-exact: dense coefficient lists of Python ints,
fraction-free elimination for linear solving, and series extraction through
the linear recurrence of the denominator.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as int_gcd


class SingularMatrixError(ValueError):
    """The coefficient matrix has no unique solution."""


def _trim(coeffs):
    """Drop trailing zeros so the list length determines the degree."""
    n = len(coeffs)
    while n > 0 and coeffs[n - 1] == 0:
        n -= 1
    return coeffs[:n]


class Poly:
    """Dense polynomial with arbitrary-precision integer coefficients.

    coeffs[i] is the coefficient of z^i; trailing zeros are trimmed so the
    zero polynomial has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        self.coeffs = tuple(_trim(list(coeffs)))

    @staticmethod
    def zero():
        return Poly(())

    @staticmethod
    def one():
        return Poly((1,))

    @staticmethod
    def const(c):
        return Poly((c,))

    @staticmethod
    def z_power(k, c=1):
        """c * z^k"""
        return Poly((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def constant_term(self):
        return self.coeffs[0] if self.coeffs else 0

    def leading(self):
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def content(self):
        """gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.coeffs:
            g = int_gcd(g, c)
            if g == 1:
                break
        return g

    def primitive(self):
        """Divide out the content; sign of the leading coefficient is kept."""
        g = self.content()
        if g in (0, 1):
            return self
        return Poly(c // g for c in self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __neg__(self):
        return Poly(-c for c in self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly(())
            return Poly(c * other for c in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly(())
        if min(len(a), len(b)) <= 16:
            return Poly(_mul_schoolbook(a, b))
        return Poly(_mul_packed(a, b))

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by z^k."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs)

    def eval_int(self, x):
        """Evaluate at an integer point (Horner)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_exact(self, other):
        """Long division returning (q, r); coefficient divisions must be exact.

        Raises ValueError if at any step the leading coefficient of `other`
        does not divide the current remainder's leading coefficient.  Used
        where exactness is guaranteed (Bareiss pivots, gcd cofactors).
        """
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.leading()
        q = [0] * max(len(rem) - db, 0)
        for i in range(len(rem) - 1, db - 1, -1):
            c = rem[i]
            if c == 0:
                continue
            if c % lb != 0:
                raise ValueError("inexact polynomial division")
            f = c // lb
            q[i - db] = f
            for j, bc in enumerate(other.coeffs):
                rem[i - db + j] -= f * bc
        return Poly(q), Poly(rem)

    def div_exact(self, other):
        q, r = self.divmod_exact(other)
        if not r.is_zero():
            raise ValueError("inexact polynomial division (nonzero remainder)")
        return q

    def pretty(self, var="z"):
        """Human-readable rendering, lowest degree first."""
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                term = str(c)
            else:
                mag = "" if abs(c) == 1 else str(abs(c)) + "*"
                pow_ = var if i == 1 else f"{var}^{i}"
                term = ("-" if c < 0 else "") + mag + pow_
            if parts and not term.startswith("-"):
                parts.append("+ " + term)
            elif parts:
                parts.append("- " + term[1:])
            else:
                parts.append(term)
        return " ".join(parts)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"


def _mul_schoolbook(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return out


def _mul_packed(a, b):
    """Kronecker substitution: pack both factors into single big integers,
    multiply once, and read the product coefficients back out of the digits.

    Digits are kept balanced (each true coefficient sits strictly inside
    (-2^(B-1), 2^(B-1))), so adding a half-base bias to every digit position
    makes the packed product nonnegative with independent digits.
    """
    max_a = max(abs(c) for c in a)
    max_b = max(abs(c) for c in b)
    bound = max_a * max_b * min(len(a), len(b))
    bits = max(bound.bit_length() + 2, 8)
    bits = (bits + 7) & ~7  # byte aligned for to_bytes extraction
    width = bits // 8
    pa = 0
    for c in reversed(a):
        pa = (pa << bits) + c
    pb = 0
    for c in reversed(b):
        pb = (pb << bits) + c
    n_out = len(a) + len(b) - 1
    half = 1 << (bits - 1)
    bias = 0
    for _ in range(n_out):
        bias = (bias << bits) + half
    prod = pa * pb + bias
    raw = prod.to_bytes(n_out * width + width, "little")
    out = [0] * n_out
    for i in range(n_out):
        chunk = int.from_bytes(raw[i * width : (i + 1) * width], "little")
        out[i] = chunk - half
    return out


def poly_gcd(a, b):
    """Greatest common divisor in Z[z] via the primitive remainder sequence.

    The result is primitive with a positive leading coefficient, scaled by
    the gcd of the two contents; poly_gcd(0, 0) is 0.
    """
    if a.is_zero() and b.is_zero():
        return Poly.zero()
    if a.is_zero():
        return _canonical_gcd_of_one(b)
    if b.is_zero():
        return _canonical_gcd_of_one(a)
    cont = int_gcd(a.content(), b.content())
    p, q = a.primitive(), b.primitive()
    if p.degree < q.degree:
        p, q = q, p
    while not q.is_zero():
        p, q = q, _pseudo_rem(p, q).primitive()
        if p.degree < q.degree:
            p, q = q, p
    return _positive_leading(p) * cont


def _canonical_gcd_of_one(a):
    g = abs(a.content())
    return _positive_leading(a.primitive()) * g


def _positive_leading(p):
    if not p.is_zero() and p.leading() < 0:
        return -p
    return p


def _pseudo_rem(a, b):
    """Pseudo-remainder: remainder of lc(b)^(da-db+1) * a divided by b."""
    da, db = a.degree, b.degree
    lb = b.leading()
    rem = list(a.coeffs)
    for i in range(da, db - 1, -1):
        c = rem[i]
        # scale the rest of the remainder so the division is integral
        if c != 0:
            for j in range(len(rem)):
                rem[j] *= lb
            for j, bc in enumerate(b.coeffs):
                rem[i - db + j] -= c * bc
        else:
            for j in range(len(rem)):
                rem[j] *= lb
        rem[i] = 0
    return Poly(rem[:db])


def poly_lcm(a, b):
    if a.is_zero() or b.is_zero():
        return Poly.zero()
    return (a * b).div_exact(poly_gcd(a, b))


class RatFn:
    """Rational function num/den over Z[z], kept in lowest terms.

    Canonical form: the primitive parts of num and den are coprime, the
    integer contents are coprime, and den's leading coefficient is positive.
    Zero is 0/1.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=Poly((1,))):
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num = Poly.zero()
            self.den = Poly.one()
            return
        g = poly_gcd(num, den)
        if g.degree > 0 or g.leading() != 1:
            num = num.div_exact(g)
            den = den.div_exact(g)
        if den.leading() < 0:
            num, den = -num, -den
        self.num = num
        self.den = den

    @staticmethod
    def zero():
        return RatFn(Poly.zero())

    @staticmethod
    def from_poly(p):
        return RatFn(p)

    def is_zero(self):
        return self.num.is_zero()

    def __eq__(self, other):
        """Equality by cross-multiplication, so it never depends on
        normalization conventions."""
        if not isinstance(other, RatFn):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __add__(self, other):
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        return RatFn(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        return RatFn(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFn(self.num * other.den, self.den * other.num)

    def __neg__(self):
        out = RatFn.__new__(RatFn)
        out.num = -self.num
        out.den = self.den
        return out

    def series(self, L):
        """Coefficients of z^0 .. z^L of the Maclaurin expansion, exact.

        Requires den(0) != 0.  Raises ValueError if the expansion is not
        integral (cannot happen for counting generating functions).
        """
        d0 = self.den.constant_term()
        if d0 == 0:
            raise ValueError("denominator vanishes at z = 0; no power series")
        num, den = self.num.coeffs, self.den.coeffs
        out = []
        for k in range(L + 1):
            acc = Fraction(num[k] if k < len(num) else 0)
            for i in range(1, min(k, len(den) - 1) + 1):
                acc -= den[i] * out[k - i]
            c = acc / d0
            out.append(c)
        ints = []
        for c in out:
            if c.denominator != 1:
                raise ValueError("series has non-integer coefficients")
            ints.append(int(c))
        return ints

    def pretty(self, var="z"):
        if self.den == Poly.one():
            return self.num.pretty(var)
        return f"({self.num.pretty(var)}) / ({self.den.pretty(var)})"

    def __repr__(self):
        return f"RatFn({list(self.num.coeffs)}, {list(self.den.coeffs)})"


def ratfn_normalize(num, den):
    """Lowest-terms constructor; the class constructor already normalizes."""
    return RatFn(num, den)


def ratfn_series(f, L):
    return f.series(L)


def solve_linear_system(matrix, rhs, deadline=None):
    """Solve M x = b exactly over the rational-function field.

    `matrix` is a square list of lists and `rhs` a list; entries may be Poly
    or RatFn.  Denominators are cleared row by row, then fraction-free
    (Bareiss) elimination keeps every intermediate entry in Z[z] with exact
    divisions, and back-substitution uses the Cramer property that the
    running determinant clears each quotient.

    Raises SingularMatrixError if no unique solution exists, ValueError on a
    shape mismatch.  `deadline` (a time.monotonic value) aborts long solves
    with TimeoutError so callers can budget the computation.
    """
    import time

    n = len(matrix)
    if any(len(row) != n for row in matrix) or len(rhs) != n:
        raise ValueError("solve_linear_system needs a square matrix and matching rhs")
    if n == 0:
        return []

    def as_ratfn(e):
        return e if isinstance(e, RatFn) else RatFn(e)

    # clear denominators: each row scaled by the lcm of its denominators
    a = []
    b = []
    for i in range(n):
        row = [as_ratfn(e) for e in matrix[i]]
        r = as_ratfn(rhs[i])
        scale = Poly.one()
        for e in row + [r]:
            scale = poly_lcm(scale, e.den)
        a.append([e.num * scale.div_exact(e.den) for e in row])
        b.append(r.num * scale.div_exact(r.den))

    prev = Poly.one()
    for k in range(n):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError("linear solve exceeded its time budget")
        piv = next((i for i in range(k, n) if not a[i][k].is_zero()), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            b[k], b[piv] = b[piv], b[k]
        pkk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            if aik.is_zero():
                # still must keep the fraction-free scaling consistent
                row = a[i]
                for j in range(k + 1, n):
                    row[j] = (row[j] * pkk).div_exact(prev)
                b[i] = (b[i] * pkk).div_exact(prev)
                continue
            row = a[i]
            for j in range(k + 1, n):
                row[j] = (row[j] * pkk - aik * a[k][j]).div_exact(prev)
            b[i] = (b[i] * pkk - aik * b[k]).div_exact(prev)
            row[k] = Poly.zero()
        prev = pkk

    det = a[n - 1][n - 1]
    # back substitution: num[i] = x_i * det stays in Z[z] (Cramer)
    nums = [None] * n
    for i in range(n - 1, -1, -1):
        if deadline is not None and time.monotonic() > deadline:
            raise TimeoutError("linear solve exceeded its time budget")
        acc = b[i] * det
        for j in range(i + 1, n):
            acc = acc - a[i][j] * nums[j]
        nums[i] = acc.div_exact(a[i][i])
    return [RatFn(nm, det) for nm in nums]
