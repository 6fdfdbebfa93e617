"""Noncommutative algebras presented by confluent rewriting rules.

A PresentedAlgebra owns a generator list, a cyclotomic order for its
coefficient polynomials, and a set of oriented rewrite rules.  Words are
tuples of generator indices; the term order is degree-then-lexicographic in
the generator order, and every rule must strictly decrease it, which makes
reduction terminate.  Confluence is *checked*, not completed: the rule sets
shipped here are supplied in already-confluent form and check_confluence
verifies all overlap ambiguities by double reduction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .commpoly import CommPoly
from .cyclotomic import CyclotomicNumber

__all__ = [
    "RewriteRule",
    "PresentedAlgebra",
    "AlgElement",
    "tensor_product",
    "check_confluence",
    "ConfluenceReport",
]

Word = tuple  # tuple of generator indices


def deglex_key(word):
    return (len(word), word)


class RewriteRule:
    """An oriented rule lhs -> sum of coeff*word, decreasing in deglex order."""

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs, rhs):
        self.lhs = tuple(lhs)
        self.rhs = tuple((tuple(w), c) for w, c in rhs)
        if not self.lhs:
            raise ValueError("rule left side must be a nonempty word")
        for w, _ in self.rhs:
            if deglex_key(w) >= deglex_key(self.lhs):
                raise ValueError(
                    f"rule does not decrease the term order: {self.lhs} -> {w}"
                )


class PresentedAlgebra:
    """An associative algebra over Q(zeta_order) given by generators and rules."""

    def __init__(self, name, generators, order, rules=(), tensor_factors=None):
        self.name = name
        self.generators = tuple(generators)
        self.order = order
        self.rules = tuple(rules)
        self.tensor_factors = tensor_factors
        self.factor_offsets = None
        if tensor_factors is not None:
            offsets = []
            base = 0
            for f in tensor_factors:
                offsets.append(base)
                base += len(f.generators)
            self.factor_offsets = tuple(offsets)
        self._gen_index = {g: i for i, g in enumerate(self.generators)}
        if len(self._gen_index) != len(self.generators):
            raise ValueError("generator names must be distinct")
        self._rules_by_first = {}
        for r in self.rules:
            self._rules_by_first.setdefault(r.lhs[0], []).append(r)
        self._max_lhs = max((len(r.lhs) for r in self.rules), default=0)
        self._nf_cache = {}
        self._one_poly = CommPoly.one(order)

    # -- construction helpers ------------------------------------------------

    def gen_index(self, name) -> int:
        try:
            return self._gen_index[name]
        except KeyError:
            raise ValueError(f"{self.name} has no generator {name!r}") from None

    def word(self, *names) -> Word:
        return tuple(self.gen_index(n) for n in names)

    def coerce_poly(self, value) -> CommPoly:
        if isinstance(value, CommPoly):
            if value.order != self.order:
                raise ValueError("coefficient has the wrong cyclotomic order")
            return value
        if isinstance(value, CyclotomicNumber):
            return CommPoly.constant(value)
        if isinstance(value, (int, Fraction)):
            return CommPoly.scalar(self.order, value)
        raise ValueError(f"cannot use {value!r} as a coefficient")

    def zero(self) -> AlgElement:
        return AlgElement(self, {})

    def one(self) -> AlgElement:
        return AlgElement(self, {(): self._one_poly})

    def gen(self, name) -> AlgElement:
        return AlgElement(self, {(self.gen_index(name),): self._one_poly})

    def element(self, pairs) -> AlgElement:
        """Build an element from (word, coefficient) pairs, reducing each word."""
        if isinstance(pairs, dict):
            pairs = pairs.items()
        acc = {}
        for w, c in pairs:
            poly = self.coerce_poly(c)
            if poly.is_zero():
                continue
            w = tuple(self.gen_index(g) if isinstance(g, str) else g for g in w)
            for nw, nc in self.normal_form_word(w).terms.items():
                prod = nc * poly
                s = acc.get(nw)
                acc[nw] = prod if s is None else s + prod
        return AlgElement(self, acc)

    # -- rewriting -----------------------------------------------------------

    def find_redex(self, word):
        limit = len(word)
        for pos in range(limit):
            cands = self._rules_by_first.get(word[pos])
            if not cands:
                continue
            for rule in cands:
                L = rule.lhs
                if word[pos : pos + len(L)] == L:
                    return pos, rule
        return None

    def is_normal(self, word) -> bool:
        return self.find_redex(word) is None

    def normal_form_word(self, word) -> AlgElement:
        """The normal form of a single word, with coefficient one.  Cached."""
        word = tuple(word)
        hit = self._nf_cache.get(word)
        if hit is not None:
            return hit
        acc = {}
        stack = [(word, self._one_poly)]
        while stack:
            w, c = stack.pop()
            if w != word:
                cached = self._nf_cache.get(w)
                if cached is not None:
                    for nw, nc in cached.terms.items():
                        prod = nc * c
                        s = acc.get(nw)
                        acc[nw] = prod if s is None else s + prod
                    continue
            red = self.find_redex(w)
            if red is None:
                s = acc.get(w)
                acc[w] = c if s is None else s + c
            else:
                pos, rule = red
                tail = pos + len(rule.lhs)
                for rw, rc in rule.rhs:
                    stack.append((w[:pos] + rw + w[tail:], rc * c))
        result = AlgElement(self, acc)
        self._nf_cache[word] = result
        return result

    def normal_form(self, value) -> AlgElement:
        if isinstance(value, AlgElement):
            if value.algebra is not self:
                raise ValueError("element belongs to a different algebra")
            return value
        return self.normal_form_word(value)

    # -- basis enumeration ---------------------------------------------------

    def basis(self, limit: int = 100000):
        """All normal words in deglex order; errors out past limit words."""
        if getattr(self, "_basis_cache", None) is not None:
            return self._basis_cache
        out = [()]
        level = [()]
        ngens = len(self.generators)
        while level:
            nxt = []
            for w in level:
                for g in range(ngens):
                    cand = w + (g,)
                    # w is already normal, so a redex can only end at the tail
                    lo = max(0, len(cand) - self._max_lhs)
                    ok = True
                    for pos in range(lo, len(cand)):
                        for rule in self._rules_by_first.get(cand[pos], ()):
                            if cand[pos:] == rule.lhs:
                                ok = False
                                break
                        if not ok:
                            break
                    if ok:
                        nxt.append(cand)
            out.extend(nxt)
            if len(out) > limit:
                raise ValueError(
                    f"{self.name}: more than {limit} normal words; "
                    "is this algebra finite dimensional?"
                )
            level = nxt
        self._basis_cache = tuple(out)
        return self._basis_cache

    # -- rendering -----------------------------------------------------------

    def render_word(self, word) -> str:
        if self.tensor_factors is not None:
            parts = []
            for sub, factor in zip(self.split_word(word), self.tensor_factors):
                parts.append(factor.render_word(sub))
            return "⊗".join(parts)
        if not word:
            return "1"
        runs = []
        for g in word:
            if runs and runs[-1][0] == g:
                runs[-1][1] += 1
            else:
                runs.append([g, 1])
        return "*".join(
            self.generators[g] if e == 1 else f"{self.generators[g]}^{e}"
            for g, e in runs
        )

    def split_word(self, word):
        """Partition a tensor-product word into per-factor subwords."""
        offsets = self.factor_offsets
        if offsets is None:
            raise ValueError(f"{self.name} is not a tensor product")
        bounds = list(offsets[1:]) + [len(self.generators)]
        parts = [[] for _ in offsets]
        for g in word:
            for k in range(len(offsets) - 1, -1, -1):
                if g >= offsets[k]:
                    parts[k].append(g - offsets[k])
                    break
        return tuple(tuple(p) for p in parts)

    def __repr__(self):
        return f"PresentedAlgebra({self.name})"


class AlgElement:
    """A linear combination of normal words with CommPoly coefficients."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms):
        self.algebra = algebra
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def _check(self, other):
        if other.algebra is not self.algebra:
            raise ValueError(
                f"elements of different algebras: "
                f"{self.algebra.name} vs {other.algebra.name}"
            )

    def __add__(self, other):
        if isinstance(other, AlgElement):
            self._check(other)
            out = dict(self.terms)
            for w, c in other.terms.items():
                s = out.get(w)
                out[w] = c if s is None else s + c
            return AlgElement(self.algebra, out)
        try:
            poly = self.algebra.coerce_poly(other)
        except ValueError:
            return NotImplemented
        return self + AlgElement(self.algebra, {(): poly})

    __radd__ = __add__

    def __neg__(self):
        return AlgElement(self.algebra, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, AlgElement):
            self._check(other)
            return self + (-other)
        try:
            poly = self.algebra.coerce_poly(other)
        except ValueError:
            return NotImplemented
        return self - AlgElement(self.algebra, {(): poly})

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        alg = self.algebra
        if isinstance(other, AlgElement):
            self._check(other)
            acc = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    c = c1 * c2
                    if c.is_zero():
                        continue
                    for nw, nc in alg.normal_form_word(w1 + w2).terms.items():
                        prod = nc * c
                        s = acc.get(nw)
                        acc[nw] = prod if s is None else s + prod
            return AlgElement(alg, acc)
        try:
            poly = alg.coerce_poly(other)
        except ValueError:
            return NotImplemented
        return AlgElement(alg, {w: c * poly for w, c in self.terms.items()})

    def __rmul__(self, other):
        # scalars commute with everything here
        try:
            poly = self.algebra.coerce_poly(other)
        except ValueError:
            return NotImplemented
        return self * poly

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = self.algebra.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(len(w) for w in self.terms)

    def coefficient(self, word) -> CommPoly:
        word = tuple(
            self.algebra.gen_index(g) if isinstance(g, str) else g for g in word
        )
        return self.terms.get(word, CommPoly.zero(self.algebra.order))

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda p: deglex_key(p[0]))

    def __eq__(self, other):
        if isinstance(other, AlgElement):
            return self.algebra is other.algebra and self.terms == other.terms
        if isinstance(other, (int, Fraction, CyclotomicNumber, CommPoly)):
            try:
                poly = self.algebra.coerce_poly(other)
            except ValueError:
                return NotImplemented
            return self.terms == AlgElement(self.algebra, {(): poly}).terms
        return NotImplemented

    def __str__(self):
        if not self.terms:
            return "0"
        rendered = []
        for w, c in self.sorted_terms():
            word = self.algebra.render_word(w)
            single = len(c.terms) == 1
            if not w:
                body = str(c) if (single or not c.terms) else f"({c})"
            elif single:
                cs = str(c)
                if cs == "1":
                    body = word
                elif cs == "-1":
                    body = f"-{word}"
                elif cs.startswith("(") or "(" not in cs:
                    body = f"{cs}*{word}"
                else:
                    body = f"({cs})*{word}"
            else:
                body = f"({c})*{word}"
            rendered.append(body)
        out = rendered[0]
        for p in rendered[1:]:
            if p.startswith("-"):
                out += " - " + p[1:]
            else:
                out += " + " + p
        return out

    def __repr__(self):
        return f"AlgElement({self.algebra.name}: {self})"


# -- tensor products ----------------------------------------------------------

_tensor_cache: dict = {}


def tensor_product(*factors) -> PresentedAlgebra:
    """The tensor product algebra with factor-wise rules and cross commutation.

    Generators are the factors' generators laid out block by block, left
    factors first; normal words therefore sort every left-factor letter in
    front of every right-factor letter, and the cross rule (1 x g)(h x 1) ->
    (h x 1)(1 x g) is strictly decreasing.
    """
    key = tuple(factors)
    hit = _tensor_cache.get(key)
    if hit is not None:
        return hit
    if not factors:
        raise ValueError("tensor product needs at least one factor")
    order = factors[0].order
    for f in factors:
        if f.order != order:
            raise ValueError("tensor factors must share a cyclotomic order")
    gens = []
    offsets = []
    for k, f in enumerate(factors):
        offsets.append(len(gens))
        gens.extend(f"{g}@{k}" for g in f.generators)
    rules = []
    for k, f in enumerate(factors):
        off = offsets[k]
        for r in f.rules:
            rules.append(
                RewriteRule(
                    tuple(g + off for g in r.lhs),
                    [(tuple(g + off for g in w), c) for w, c in r.rhs],
                )
            )
    one = CommPoly.one(order)
    for k2 in range(len(factors)):
        for k1 in range(k2):
            for g2 in range(len(factors[k2].generators)):
                for g1 in range(len(factors[k1].generators)):
                    hi = offsets[k2] + g2
                    lo = offsets[k1] + g1
                    rules.append(RewriteRule((hi, lo), [((lo, hi), one)]))
    name = " ⊗ ".join(f.name for f in factors)
    alg = PresentedAlgebra(name, gens, order, rules, tensor_factors=tuple(factors))
    _tensor_cache[key] = alg
    return alg


def embed(elem: AlgElement, product: PresentedAlgebra, factor: int) -> AlgElement:
    """Include an element of one tensor factor into the product algebra."""
    factors = product.tensor_factors
    if factors is None or elem.algebra is not factors[factor]:
        raise ValueError("element is not from the requested tensor factor")
    off = product.factor_offsets[factor]
    return AlgElement(
        product, {tuple(g + off for g in w): c for w, c in elem.terms.items()}
    )


# -- confluence ---------------------------------------------------------------


@dataclass(frozen=True)
class ConfluenceFailure:
    word: tuple
    first: tuple
    second: tuple
    difference: str


@dataclass(frozen=True)
class ConfluenceReport:
    algebra: str
    failures: tuple
    ambiguities_checked: int = 0

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self):
        if self.ok:
            return (
                f"{self.algebra}: confluent "
                f"({self.ambiguities_checked} ambiguities resolve)"
            )
        lines = [f"{self.algebra}: {len(self.failures)} unresolved ambiguities"]
        for f in self.failures:
            lines.append(
                f"  word {f.word}: reductions disagree by {f.difference}"
            )
        return "\n".join(lines)


def _one_step(alg, word, pos, rule):
    tail = pos + len(rule.lhs)
    return [(word[:pos] + rw + word[tail:], rc) for rw, rc in rule.rhs]


def check_confluence(alg: PresentedAlgebra) -> ConfluenceReport:
    """Resolve every overlap and inclusion ambiguity by double reduction."""
    failures = []
    seen = set()

    def probe(word, apply1, apply2):
        if (word, apply1, apply2) in seen:
            return
        seen.add((word, apply1, apply2))
        nf = []
        for pos, rule in (apply1, apply2):
            acc = alg.zero()
            for w, c in _one_step(alg, word, pos, rule):
                acc = acc + alg.normal_form_word(w) * c
            nf.append(acc)
        if nf[0] != nf[1]:
            failures.append(
                ConfluenceFailure(
                    word,
                    (apply1[0], apply1[1].lhs),
                    (apply2[0], apply2[1].lhs),
                    str(nf[0] - nf[1]),
                )
            )

    rules = alg.rules
    for r1 in rules:
        for r2 in rules:
            l1, l2 = r1.lhs, r2.lhs
            # proper overlaps: a suffix of l1 is a prefix of l2
            for k in range(1, min(len(l1), len(l2))):
                if l1[len(l1) - k :] == l2[:k]:
                    word = l1 + l2[k:]
                    probe(word, (0, r1), (len(l1) - k, r2))
            # inclusions: l2 occurs inside l1
            if len(l2) < len(l1):
                for pos in range(len(l1) - len(l2) + 1):
                    if l1[pos : pos + len(l2)] == l2:
                        probe(l1, (0, r1), (pos, r2))
            # distinct rules with identical left sides
            if r1 is not r2 and l1 == l2:
                probe(l1, (0, r1), (0, r2))
    return ConfluenceReport(alg.name, tuple(failures), len(seen))
