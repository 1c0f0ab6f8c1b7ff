"""Exact arithmetic in cyclotomic fields Q(zeta_N) and q-combinatorics.

A Scalar is an element of Q(zeta_N), stored as a vector of rational
coordinates in the power basis 1, z, ..., z^(phi(N)-1) of a primitive
N-th root of unity z, reduced modulo the N-th cyclotomic polynomial.
Reduction modulo the cyclotomic polynomial (not x^N - 1) makes the
representation canonical, so zero-testing is decisive.

There is no floating point anywhere: coefficients are fractions.Fraction
values and every operation is exact.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "CyclotomicContext",
    "Scalar",
    "cyclotomic_context",
    "cyclotomic_polynomial",
    "root_of_unity",
    "order",
    "q_int",
    "q_factorial",
    "gauss_binom",
    "gauss_binom_row",
    "binom_vanishes",
    "parse_scalar",
]


def _divisors(n):
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _totient(n):
    count = 0
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            count += 1
    return count


def _poly_div_exact(num, den):
    """Divide integer polynomials (ascending coefficients), den monic.

    The division must be exact; used only to peel cyclotomic factors
    off x^n - 1.
    """
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(num) - dd - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for t, dc in enumerate(den):
                num[k + t] -= c * dc
    if any(num[:dd]):
        raise ArithmeticError("polynomial division was not exact")
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n):
    """Coefficients of the n-th cyclotomic polynomial, ascending degree."""
    if n < 1:
        raise ValueError("conductor must be a positive integer")
    poly = [-1] + [0] * (n - 1) + [1]  # x^n - 1
    for d in _divisors(n):
        if d < n:
            poly = _poly_div_exact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


class CyclotomicContext:
    """Shared, immutable arithmetic context for Q(zeta_N).

    Prefer the cached factory ``cyclotomic_context(N)``; contexts with
    equal conductor are interchangeable.
    """

    def __init__(self, conductor):
        if not isinstance(conductor, int) or conductor < 1:
            raise ValueError("conductor must be a positive integer")
        self.N = conductor
        self.minpoly = cyclotomic_polynomial(conductor)
        self.degree = len(self.minpoly) - 1
        assert self.degree == _totient(conductor)
        # Coordinates of z^(degree + t) for t = 0 .. degree - 2, used to
        # fold products back into the power basis.
        self._tails = self._tail_rows()
        self._zero = Scalar(self, (Fraction(0),) * self.degree)
        self._one = self.from_rational(1)

    def _tail_rows(self):
        d = self.degree
        rows = []
        # z^d = -(minpoly without leading coefficient)
        prev = [Fraction(-c) for c in self.minpoly[:d]]
        rows.append(tuple(prev))
        for _ in range(d - 2):
            shifted = [Fraction(0)] + prev[: d - 1]
            top = prev[d - 1]
            if top:
                for t in range(d):
                    shifted[t] += top * rows[0][t]
            prev = shifted
            rows.append(tuple(prev))
        return rows

    def __eq__(self, other):
        return isinstance(other, CyclotomicContext) and self.N == other.N

    def __hash__(self):
        return hash(("CyclotomicContext", self.N))

    def __repr__(self):
        return f"CyclotomicContext(N={self.N}, degree={self.degree})"

    # -- construction -----------------------------------------------------

    def zero(self):
        return self._zero

    def one(self):
        return self._one

    def from_rational(self, value):
        v = Fraction(value)
        return Scalar(self, (v,) + (Fraction(0),) * (self.degree - 1))

    def zeta(self):
        """The distinguished primitive N-th root of unity."""
        if self.degree == 1:
            # z is congruent to a rational modulo a degree-1 minimal
            # polynomial (N = 1 or 2).
            return self.from_rational(-self.minpoly[0])
        coeffs = [Fraction(0)] * self.degree
        coeffs[1] = Fraction(1)
        return Scalar(self, tuple(coeffs))

    def scalar(self, value):
        """Coerce an int, Fraction, Scalar or text rendering to a Scalar."""
        if isinstance(value, Scalar):
            if value.ctx != self:
                raise ValueError("scalar belongs to a different context")
            return value
        if isinstance(value, str):
            return parse_scalar(self, value)
        return self.from_rational(value)

    def _reduce(self, conv):
        """Fold a raw product (length <= 2*degree-1) into the power basis."""
        d = self.degree
        out = list(conv[:d]) + [Fraction(0)] * (d - len(conv))
        for e in range(d, len(conv)):
            c = conv[e]
            if c:
                row = self._tails[e - d]
                for t in range(d):
                    out[t] += c * row[t]
        return tuple(out)


@lru_cache(maxsize=None)
def cyclotomic_context(conductor):
    return CyclotomicContext(conductor)


class Scalar:
    """An element of Q(zeta_N), exact and immutable."""

    __slots__ = ("ctx", "coeffs", "_hash")

    def __init__(self, ctx, coeffs):
        self.ctx = ctx
        self.coeffs = coeffs
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.ctx != self.ctx:
                raise ValueError("scalars from different cyclotomic contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return self.ctx.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.ctx, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return Scalar(self.ctx, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __neg__(self):
        return Scalar(self.ctx, tuple(-a for a in self.coeffs))

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        d = self.ctx.degree
        if d == 1:
            return Scalar(self.ctx, (a[0] * b[0],))
        # rational factors scale coordinates directly
        if not any(a[1:]):
            r = a[0]
            if not r:
                return self.ctx.zero()
            if r == 1:
                return o
            return Scalar(self.ctx, tuple(r * c for c in b))
        if not any(b[1:]):
            r = b[0]
            if not r:
                return self.ctx.zero()
            if r == 1:
                return self
            return Scalar(self.ctx, tuple(r * c for c in a))
        conv = [Fraction(0)] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return Scalar(self.ctx, self.ctx._reduce(conv))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.ctx.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self):
        """Exact inverse; raises ZeroDivisionError on zero."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in Q(zeta_N)")
        # Extended Euclid in Q[x] against the (irreducible) minimal
        # polynomial: s*self + t*minpoly = 1, so s is the inverse.
        r0 = [Fraction(c) for c in self.ctx.minpoly]
        r1 = list(self.coeffs)
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while True:
            while r1 and not r1[-1]:
                r1.pop()
            if len(r1) == 1:
                inv = r1[0]
                coeffs = [c / inv for c in s1]
                coeffs += [Fraction(0)] * (self.ctx.degree - len(coeffs))
                return Scalar(self.ctx, self.ctx._reduce(coeffs[: 2 * self.ctx.degree - 1]))
            q, r = _poly_divmod(r0, r1)
            s = _poly_sub(s0, _poly_mul(q, s1))
            r0, r1 = r1, r
            s0, s1 = s1, s

    def is_zero(self):
        return not any(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self):
        if not self.is_rational():
            raise ValueError("scalar is not rational")
        return self.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, Scalar):
            return self.ctx.N == other.ctx.N and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.N, self.coeffs))
        return self._hash

    def __str__(self):
        return scalar_to_str(self)

    def __repr__(self):
        return f"Scalar({scalar_to_str(self)!r}, N={self.ctx.N})"


def _poly_divmod(num, den):
    num = list(num)
    den = list(den)
    while den and not den[-1]:
        den.pop()
    dd = len(den) - 1
    lead = den[-1]
    q = [Fraction(0)] * max(len(num) - dd, 1)
    for k in range(len(num) - dd - 1, -1, -1):
        c = num[k + dd] / lead
        q[k] = c
        if c:
            for t, dc in enumerate(den):
                num[k + t] -= c * dc
    return q, num[:dd] if dd else [Fraction(0)]


def _poly_mul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# -- rendering and parsing -------------------------------------------------

def scalar_to_str(x):
    """Render as a polynomial in z with rational coefficients."""
    parts = []
    for e, c in enumerate(x.coeffs):
        if not c:
            continue
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            zpart = "z" if e == 1 else f"z^{e}"
            body = zpart if mag == 1 else f"{mag}*{zpart}"
        parts.append(("-" if c < 0 else "+", body))
    if not parts:
        return "0"
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


_TERM_RE = re.compile(
    r"^(?P<coeff>[+-]?(?:\d+(?:/\d+)?)?)(?:(?<=\d)\*)?(?P<z>z(?:\^(?P<exp>-?\d+))?)?$"
)


def parse_scalar(ctx, text):
    """Parse the grammar produced by scalar_to_str (signs, rationals, z^k)."""
    compact = text.replace(" ", "")
    if not compact:
        raise ValueError("empty scalar text")
    compact = compact.replace("-", "+-")
    total = ctx.zero()
    seen = False
    for chunk in compact.split("+"):
        if not chunk:
            continue
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coeff") is None and m.group("z") is None):
            raise ValueError(f"cannot parse scalar term {chunk!r}")
        coeff = m.group("coeff")
        if coeff in (None, "", "-", "+"):
            value = Fraction(-1 if coeff == "-" else 1)
        else:
            value = Fraction(coeff)
        term = ctx.from_rational(value)
        if m.group("z"):
            exp = int(m.group("exp") or 1)
            term = term * ctx.zeta() ** exp
        total = total + term
        seen = True
    if not seen:
        raise ValueError(f"cannot parse scalar {text!r}")
    return total


# -- roots of unity ----------------------------------------------------------

def root_of_unity(ctx, m):
    """A primitive m-th root of unity in Q(zeta_N); requires m | N."""
    if m < 1:
        raise ValueError("order must be a positive integer")
    if ctx.N % m != 0:
        raise ValueError("order not representable in this context")
    if m == 1:
        return ctx.one()
    return ctx.zeta() ** (ctx.N // m)


def order(x):
    """Multiplicative order of x, or None when no power returns to 1.

    Every root of unity in Q(zeta_N) has order dividing lcm(2, N), so
    only those exponents are searched.
    """
    if x.is_zero():
        raise ValueError("order of zero undefined")
    one = x.ctx.one()
    for t in _divisors(math.lcm(2, x.ctx.N)):
        if x ** t == one:
            return t
    return None


# -- Gaussian binomials ------------------------------------------------------

def q_int(l, q):
    """1 + q + ... + q^(l-1); zero for l = 0."""
    total = q.ctx.zero()
    power = q.ctx.one()
    for _ in range(l):
        total = total + power
        power = power * q
    return total


def q_factorial(l, q):
    """Product of the q-integers 1..l; the empty product for l = 0."""
    total = q.ctx.one()
    for t in range(1, l + 1):
        total = total * q_int(t, q)
    return total


def gauss_binom_row(n, q):
    """Row n of the q-Pascal triangle for q, as a list of Scalars."""
    ctx = q.ctx
    row = [ctx.one()]
    qpow = [ctx.one()]
    for m in range(1, n + 1):
        qpow.append(qpow[-1] * q)
        new = [ctx.one()]
        for k in range(1, m):
            new.append(row[k - 1] + qpow[k] * row[k])
        new.append(ctx.one())
        row = new
    return row


def gauss_binom(n, k, q):
    """Gaussian binomial coefficient via the division-free Pascal recurrence.

    The recurrence binom(n,k) = binom(n-1,k-1) + q^k * binom(n-1,k)
    avoids the factorial quotient, which degenerates to 0/0 at roots of
    unity.  Where the quotient is defined the two agree.
    """
    if k < 0 or k > n:
        raise ValueError("binomial index out of range")
    return gauss_binom_row(n, q)[k]


def binom_vanishes(l, m, d):
    """Vanishing test for binom(l+m, l) at a root of unity of order d.

    True iff floor((l+m)/d) - floor(m/d) - floor(l/d) > 0.
    """
    if d < 2:
        raise ValueError("criterion requires nontrivial root of unity")
    return (l + m) // d - m // d - l // d > 0
