"""Exact scalars: arbitrary-precision rationals and the cyclotomic field Q(zeta_n).

Every coefficient in this package lives in Q(zeta_n) for a session-fixed order n.
Elements are residue polynomials in zeta reduced modulo the n-th cyclotomic
polynomial, with Fraction coefficients.  All arithmetic is exact; there is no
floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = [
    "Rational",
    "CyclotomicNumber",
    "cyclotomic_polynomial",
    "field_degree",
    "primitive_root",
]

# The rational layer.  Fraction is always stored gcd-reduced with a positive
# denominator, which is exactly the invariant the scalar stack needs.
Rational = Fraction


def _int_poly_mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def _int_poly_divexact(num, den):
    # Long division by a monic divisor; the remainder must vanish.
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j in range(len(den)):
                num[i - dd + j] -= c * den[j]
    if any(num[:dd]):
        raise ValueError("polynomial division was not exact")
    return quot


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients of the n-th cyclotomic polynomial, constant first.

    Computed by exact division of x^n - 1 by the product of the d-th
    polynomials over the proper divisors d of n, and memoized per order.
    """
    if n < 1:
        raise ValueError(f"cyclotomic order must be >= 1, got {n}")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0] = -1
    num[n] = 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _int_poly_mul(den, cyclotomic_polynomial(d))
    return tuple(_int_poly_divexact(num, den))


def field_degree(n: int) -> int:
    """Degree of Q(zeta_n) over Q (Euler's totient of n)."""
    return len(cyclotomic_polynomial(n)) - 1


def _reduced(order, coeffs):
    """Reduce an arbitrary-length coefficient list modulo Phi_order."""
    phi = cyclotomic_polynomial(order)
    deg = len(phi) - 1
    work = [Fraction(c) for c in coeffs]
    for i in range(len(work) - 1, deg - 1, -1):
        c = work[i]
        if c:
            work[i] = Fraction(0)
            for j in range(deg):
                work[i - deg + j] -= c * phi[j]
    work = work[:deg]
    work.extend([Fraction(0)] * (deg - len(work)))
    return tuple(work)


def _frac_poly_trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _frac_poly_divmod(a, b):
    a = list(a)
    db = len(b) - 1
    inv_lead = 1 / b[-1]
    quot = [Fraction(0)] * max(len(a) - db, 0)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i] * inv_lead
        if c:
            quot[i - db] = c
            for j in range(len(b)):
                a[i - db + j] -= c * b[j]
    return quot, _frac_poly_trim(a[:db])


class CyclotomicNumber:
    """An exact element of Q(zeta_order).

    coeffs is a tuple of Fractions of length field_degree(order); the value is
    sum(coeffs[k] * zeta**k).  Instances are immutable in use and hashable.
    Mixing orders in arithmetic is an error; promote explicitly instead.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order, coeffs):
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in coeffs)
        if len(self.coeffs) != field_degree(order):
            raise ValueError(
                f"need {field_degree(order)} coefficients for order {order}, "
                f"got {len(self.coeffs)}"
            )

    @classmethod
    def from_poly(cls, order, coeffs):
        return cls(order, _reduced(order, coeffs))

    @classmethod
    def from_rational(cls, order, value):
        deg = field_degree(order)
        return cls(order, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    @classmethod
    def zero(cls, order):
        return cls.from_rational(order, 0)

    @classmethod
    def one(cls, order):
        return cls.from_rational(order, 1)

    @classmethod
    def zeta(cls, order):
        return cls.from_poly(order, (0, 1))

    def _coerce(self, other):
        if isinstance(other, CyclotomicNumber):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return CyclotomicNumber.from_rational(self.order, other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CyclotomicNumber(
            self.order, tuple(a + b for a, b in zip(self.coeffs, o.coeffs))
        )

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.order, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = len(self.coeffs)
        out = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        out[i + j] += a * b
        return CyclotomicNumber.from_poly(self.order, out)

    __rmul__ = __mul__

    def inverse(self):
        """Multiplicative inverse via the extended Euclidean algorithm mod Phi."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        phi = [Fraction(c) for c in cyclotomic_polynomial(self.order)]
        r0, r1 = phi, _frac_poly_trim(list(self.coeffs))
        t0, t1 = [], [Fraction(1)]
        while r1:
            q, r = _frac_poly_divmod(r0, r1)
            prod = [Fraction(0)] * (len(q) + len(t1) - 1) if q and t1 else []
            for i, a in enumerate(q):
                for j, b in enumerate(t1):
                    prod[i + j] += a * b
            new_t = [Fraction(0)] * max(len(t0), len(prod))
            for i, a in enumerate(t0):
                new_t[i] += a
            for i, a in enumerate(prod):
                new_t[i] -= a
            t0, t1 = t1, _frac_poly_trim(new_t)
            r0, r1 = r1, r
        # r0 is a nonzero constant: Phi is irreducible over Q
        lead = r0[0]
        return CyclotomicNumber.from_poly(
            self.order, [c / lead for c in t0]
        )

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

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = CyclotomicNumber.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self):
        return not any(self.coeffs)

    def is_one(self):
        return self.coeffs[0] == 1 and not any(self.coeffs[1:])

    def is_rational(self):
        return not any(self.coeffs[1:])

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CyclotomicNumber.from_rational(self.order, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                body = str(c)
            else:
                zp = "z" if k == 1 else f"z^{k}"
                if c == 1:
                    body = zp
                elif c == -1:
                    body = f"-{zp}"
                else:
                    body = f"{c}*{zp}"
            parts.append(body)
        if not parts:
            return "0"
        out = parts[0]
        for p in parts[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return f"CyclotomicNumber(order={self.order}, {self})"


def primitive_root(order: int) -> CyclotomicNumber:
    """The canonical primitive order-th root of unity zeta in Q(zeta_order)."""
    return CyclotomicNumber.zeta(order)
