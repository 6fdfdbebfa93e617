"""Sparse commutative polynomials over a cyclotomic field.

These carry everything that commutes in the bigger picture: the structure
parameters of a comodule algebra (a, c, c_i, d_ij, each optionally primed so
two objects can be compared symbolically at once) and the coinvariant
indeterminates t[i,h] indexed by a copy number and a Hopf-basis element.
Monomials are sorted tuples of (variable, exponent) pairs; coefficients are
CyclotomicNumber values of one fixed order per polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .cyclotomic import CyclotomicNumber

__all__ = ["ParamVar", "TVar", "CommPoly"]

_PARAM_RANK = {"a": 0, "c": 1, "d": 2}


@dataclass(frozen=True)
class ParamVar:
    """A structure parameter: a, c, c[i], or d[i,j] with i <= j.

    prime counts trailing apostrophes, so c and c' are distinct variables.
    """

    tag: str
    indices: tuple[int, ...] = ()
    prime: int = 0

    def __post_init__(self):
        if self.tag not in _PARAM_RANK:
            raise ValueError(f"unknown parameter tag {self.tag!r}")
        if self.tag == "a" and self.indices:
            raise ValueError("parameter a takes no indices")
        if self.tag == "c" and len(self.indices) not in (0, 1):
            raise ValueError("parameter c takes zero or one index")
        if self.tag == "d":
            if len(self.indices) != 2:
                raise ValueError("parameter d takes exactly two indices")
            i, j = self.indices
            if not 1 <= i <= j:
                raise ValueError("d indices must satisfy 1 <= i <= j")
        if any(i < 1 for i in self.indices):
            raise ValueError("parameter indices start at 1")
        if self.prime < 0:
            raise ValueError("prime count must be >= 0")

    def sort_key(self):
        return (0, _PARAM_RANK[self.tag], self.indices, self.prime)

    def render(self) -> str:
        if not self.indices:
            body = self.tag
        else:
            body = f"{self.tag}[{','.join(str(i) for i in self.indices)}]"
        return body + "'" * self.prime


@dataclass(frozen=True)
class TVar:
    """Coinvariant indeterminate t[copy, h] for a Hopf-basis element h.

    basis_index is the position of h in the fixed basis enumeration; label is
    its rendered word, carried for display only and excluded from identity.
    """

    copy: int
    basis_index: int
    label: str = field(compare=False)

    def __post_init__(self):
        if self.copy < 1:
            raise ValueError("copy index starts at 1")
        if self.basis_index < 0:
            raise ValueError("basis index must be >= 0")

    def sort_key(self):
        return (1, self.copy, (self.basis_index,), 0)

    def render(self) -> str:
        return f"t[{self.copy},{self.label}]"


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    merged = {}
    for v, e in m1:
        merged[v] = merged.get(v, 0) + e
    for v, e in m2:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items(), key=lambda p: p[0].sort_key()))


def _mono_key(m):
    return tuple((v.sort_key(), e) for v, e in m)


def _mono_render(m):
    parts = []
    for v, e in m:
        parts.append(v.render() if e == 1 else f"{v.render()}^{e}")
    return "*".join(parts)


class CommPoly:
    """A polynomial in ParamVar/TVar variables with cyclotomic coefficients."""

    __slots__ = ("order", "terms")

    def __init__(self, order, terms):
        self.order = order
        self.terms = {m: c for m, c in terms.items() if not c.is_zero()}

    @classmethod
    def zero(cls, order):
        return cls(order, {})

    @classmethod
    def constant(cls, value: CyclotomicNumber):
        return cls(value.order, {(): value})

    @classmethod
    def scalar(cls, order, value):
        return cls.constant(CyclotomicNumber.from_rational(order, value))

    @classmethod
    def one(cls, order):
        return cls.scalar(order, 1)

    @classmethod
    def variable(cls, order, var, exp: int = 1):
        if exp < 0:
            raise ValueError("variable exponents must be >= 0")
        if exp == 0:
            return cls.one(order)
        return cls(order, {((var, exp),): CyclotomicNumber.one(order)})

    def _coerce(self, other):
        if isinstance(other, CommPoly):
            if other.order != self.order:
                raise ValueError(
                    f"mixed cyclotomic orders {self.order} and {other.order}"
                )
            return other
        if isinstance(other, CyclotomicNumber):
            return CommPoly.constant(self._coerce_scalar(other))
        if isinstance(other, (int, Fraction)):
            return CommPoly.scalar(self.order, other)
        return None

    def _coerce_scalar(self, value: CyclotomicNumber):
        if value.order != self.order:
            raise ValueError(
                f"mixed cyclotomic orders {self.order} and {value.order}"
            )
        return value

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m)
            out[m] = c if s is None else s + c
        return CommPoly(self.order, out)

    __radd__ = __add__

    def __neg__(self):
        return CommPoly(self.order, {m: -c for m, c in self.terms.items()})

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
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                c = c1 * c2
                if c.is_zero():
                    continue
                m = _mono_mul(m1, m2)
                s = out.get(m)
                out[m] = c if s is None else s + c
        return CommPoly(self.order, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            raise ValueError("polynomials only take nonnegative powers")
        result = CommPoly.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def specialize(self, assignment) -> CommPoly:
        """Substitute parameter variables; keys must be ParamVar instances.

        Values may be CyclotomicNumber, CommPoly, int, or Fraction.
        Substitution commutes with the ring operations.
        """
        for var in assignment:
            if not isinstance(var, ParamVar):
                raise ValueError(f"can only specialize parameters, got {var!r}")
        values = {}
        for var, val in assignment.items():
            p = self._coerce(val)
            if p is None:
                raise ValueError(f"cannot interpret substitution value {val!r}")
            values[var] = p
        result = CommPoly.zero(self.order)
        for m, c in self.terms.items():
            term = CommPoly.constant(c)
            kept = []
            for v, e in m:
                if isinstance(v, ParamVar) and v in values:
                    term = term * values[v] ** e
                else:
                    kept.append((v, e))
            if kept:
                term = term * CommPoly(
                    self.order, {tuple(kept): CyclotomicNumber.one(self.order)}
                )
            result = result + term
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_value(self) -> CyclotomicNumber:
        if not self.terms:
            return CyclotomicNumber.zero(self.order)
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self.terms[()]

    def total_degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in m) for m in self.terms)

    def variables(self):
        seen = set()
        for m in self.terms:
            for v, _ in m:
                seen.add(v)
        return seen

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda p: _mono_key(p[0]))

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, CyclotomicNumber)):
            o = self._coerce(other)
            return self.terms == o.terms
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.order == other.order and self.terms == other.terms

    def __hash__(self):
        return hash((self.order, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        rendered = []
        for m, c in self.sorted_terms():
            mono = _mono_render(m)
            if not mono:
                body = str(c) if c.is_rational() else f"({c})"
            elif c.is_one():
                body = mono
            elif c == -1:
                body = f"-{mono}"
            elif c.is_rational():
                body = f"{c}*{mono}"
            else:
                body = f"({c})*{mono}"
            rendered.append(body)
        out = rendered[0]
        for p in rendered[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return f"CommPoly({self})"
