"""Pointed Hopf algebra presentations: the Taft family and the E(n) family.

A HopfPresentation couples a finite dimensional PresentedAlgebra with the
three structure maps given on generators: the coproduct (valued in the tensor
square), the counit (a scalar), and the antipode (valued in the algebra).
Words extend multiplicatively (anti-multiplicatively for the antipode), and
check_hopf_axioms verifies the axioms exhaustively on the basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .commpoly import CommPoly
from .cyclotomic import CyclotomicNumber, primitive_root
from .ncalg import AlgElement, PresentedAlgebra, RewriteRule, embed, tensor_product

__all__ = [
    "HopfPresentation",
    "taft",
    "en",
    "trivial_hopf",
    "coproduct",
    "counit",
    "antipode",
    "qbinom",
    "check_hopf_axioms",
    "HopfAxiomReport",
]


class HopfPresentation:
    """A Hopf algebra given by a presentation and structure maps on generators."""

    def __init__(self, name, family, n, algebra, coproduct_on_generators,
                 counit_on_generators, antipode_on_generators, q):
        self.name = name
        self.family = family
        self.n = n
        self.algebra = algebra
        self.q = q
        self.square = tensor_product(algebra, algebra)
        self.coproduct_on_generators = tuple(coproduct_on_generators)
        self.counit_on_generators = tuple(counit_on_generators)
        self.antipode_on_generators = tuple(antipode_on_generators)
        self._coprod_cache = {(): self.square.one()}
        self._antipode_cache = {(): algebra.one()}
        self._basis_index = None
        algebra.hopf = self

    def basis(self):
        return self.algebra.basis()

    def basis_index(self, word):
        if self._basis_index is None:
            self._basis_index = {w: r for r, w in enumerate(self.basis())}
        try:
            return self._basis_index[tuple(word)]
        except KeyError:
            raise ValueError(
                f"{self.algebra.render_word(word)} is not a basis word of {self.name}"
            ) from None

    def coproduct_word(self, word) -> AlgElement:
        word = tuple(word)
        hit = self._coprod_cache.get(word)
        if hit is None:
            hit = self.coproduct_word(word[:-1]) * self.coproduct_on_generators[word[-1]]
            self._coprod_cache[word] = hit
        return hit

    def counit_word(self, word) -> CyclotomicNumber:
        out = CyclotomicNumber.one(self.algebra.order)
        for g in word:
            out = out * self.counit_on_generators[g]
        return out

    def antipode_word(self, word) -> AlgElement:
        # the antipode reverses products: S(gh) = S(h)S(g)
        word = tuple(word)
        hit = self._antipode_cache.get(word)
        if hit is None:
            hit = self.antipode_word(word[1:]) * self.antipode_on_generators[word[0]]
            self._antipode_cache[word] = hit
        return hit

    def __repr__(self):
        return f"HopfPresentation({self.name})"


def coproduct(H: HopfPresentation, e: AlgElement) -> AlgElement:
    """The coproduct, extended multiplicatively to any element."""
    if e.algebra is not H.algebra:
        raise ValueError("element does not belong to this Hopf algebra")
    out = H.square.zero()
    for w, c in e.terms.items():
        out = out + H.coproduct_word(w) * c
    return out


def counit(H: HopfPresentation, e: AlgElement) -> CyclotomicNumber:
    if e.algebra is not H.algebra:
        raise ValueError("element does not belong to this Hopf algebra")
    out = CyclotomicNumber.zero(H.algebra.order)
    for w, c in e.terms.items():
        out = out + c.constant_value() * H.counit_word(w)
    return out


def antipode(H: HopfPresentation, e: AlgElement) -> AlgElement:
    if e.algebra is not H.algebra:
        raise ValueError("element does not belong to this Hopf algebra")
    out = H.algebra.zero()
    for w, c in e.terms.items():
        out = out + H.antipode_word(w) * c
    return out


@lru_cache(maxsize=None)
def taft(n: int) -> HopfPresentation:
    """The n^2-dimensional Taft algebra over Q(zeta_n); n = 2 is Sweedler's.

    Generators x (grouplike) and y (skew primitive) with x^n = 1, yx = q xy,
    y^n = 0, where q is the canonical primitive n-th root of unity.
    """
    if n < 2:
        raise ValueError("the Taft family starts at n = 2")
    q = primitive_root(n)
    one = CommPoly.one(n)
    qp = CommPoly.constant(q)
    X, Y = 0, 1
    rules = (
        RewriteRule((X,) * n, [((), one)]),
        RewriteRule((Y, X), [((X, Y), qp)]),
        RewriteRule((Y,) * n, []),
    )
    alg = PresentedAlgebra(f"taft:{n}", ("x", "y"), n, rules)
    sq = tensor_product(alg, alg)
    x0, x1 = embed(alg.gen("x"), sq, 0), embed(alg.gen("x"), sq, 1)
    y0, y1 = embed(alg.gen("y"), sq, 0), embed(alg.gen("y"), sq, 1)
    cop = (x0 * x1, y1 + y0 * x1)
    eps = (CyclotomicNumber.one(n), CyclotomicNumber.zero(n))
    xinv = alg.element({("x",) * (n - 1): 1})
    s_y = alg.element({("x",) * (n - 1) + ("y",): -(q.inverse())})
    return HopfPresentation(f"taft:{n}", "taft", n, alg, cop, eps, (xinv, s_y), q)


@lru_cache(maxsize=None)
def en(n: int) -> HopfPresentation:
    """The 2^(n+1)-dimensional Hopf algebra E(n) over Q; E(1) is Sweedler's.

    Generators x, y1..yn with x^2 = 1, yi^2 = 0, yi x = -x yi and
    yi yj = -yj yi; each yi is skew primitive over the grouplike x.
    """
    if n < 1:
        raise ValueError("the E(n) family starts at n = 1")
    order = 2
    q = primitive_root(order)  # -1
    one = CommPoly.one(order)
    minus = CommPoly.scalar(order, -1)
    names = ["x"] + [f"y{i}" for i in range(1, n + 1)]
    rules = [RewriteRule((0, 0), [((), one)])]
    for i in range(1, n + 1):
        rules.append(RewriteRule((i, 0), [((0, i), minus)]))
        rules.append(RewriteRule((i, i), []))
        for j in range(1, i):
            rules.append(RewriteRule((i, j), [((j, i), minus)]))
    alg = PresentedAlgebra(f"en:{n}", names, order, rules)
    sq = tensor_product(alg, alg)
    x0, x1 = embed(alg.gen("x"), sq, 0), embed(alg.gen("x"), sq, 1)
    cop = [x0 * x1]
    eps = [CyclotomicNumber.one(order)]
    anti = [alg.gen("x")]
    for i in range(1, n + 1):
        yi0 = embed(alg.element({(i,): 1}), sq, 0)
        yi1 = embed(alg.element({(i,): 1}), sq, 1)
        cop.append(yi1 + yi0 * x1)
        eps.append(CyclotomicNumber.zero(order))
        anti.append(alg.element({(i, 0): -1}))
    return HopfPresentation(f"en:{n}", "en", n, alg, cop, eps, anti, q)


@lru_cache(maxsize=None)
def trivial_hopf() -> HopfPresentation:
    """The ground field Q viewed as a Hopf algebra (no generators)."""
    alg = PresentedAlgebra("k", (), 1, ())
    return HopfPresentation(
        "k", "trivial", 0, alg, (), (), (), CyclotomicNumber.one(1)
    )


_qbinom_cache: dict = {}


def qbinom(m: int, k: int, q: CyclotomicNumber) -> CyclotomicNumber:
    """Gaussian binomial coefficient by the q-Pascal recurrence.

    [m, k]_q = [m-1, k-1]_q + q^k [m-1, k]_q with [0, 0]_q = 1.
    """
    if k < 0 or k > m:
        return CyclotomicNumber.zero(q.order)
    if k == 0 or k == m:
        return CyclotomicNumber.one(q.order)
    key = (m, k, q)
    hit = _qbinom_cache.get(key)
    if hit is None:
        hit = qbinom(m - 1, k - 1, q) + q**k * qbinom(m - 1, k, q)
        _qbinom_cache[key] = hit
    return hit


@dataclass(frozen=True)
class HopfAxiomReport:
    hopf: str
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self):
        if self.ok:
            return f"{self.hopf}: all Hopf axioms verified on the basis"
        lines = [f"{self.hopf}: {len(self.failures)} axiom failures"]
        lines.extend(f"  {f}" for f in self.failures)
        return "\n".join(lines)


def check_hopf_axioms(H: HopfPresentation) -> HopfAxiomReport:
    """Exhaustive axiom check on every basis element plus every relation.

    Verifies coassociativity, both counit laws, both antipode laws, and the
    compatibility of all three structure maps with the defining relations.
    """
    alg = H.algebra
    ng = len(alg.generators)
    failures = []
    triple = tensor_product(alg, alg, alg) if ng else None

    for b in H.basis():
        name = alg.render_word(b)
        delta = H.coproduct_word(b)
        if ng:
            lhs_acc: dict = {}
            rhs_acc: dict = {}
            for w, c in delta.terms.items():
                u, v = H.square.split_word(w)
                for w2, c2 in H.coproduct_word(u).terms.items():
                    key = w2 + tuple(g + 2 * ng for g in v)
                    cc = c * c2
                    lhs_acc[key] = lhs_acc.get(key, 0) + cc
                for w2, c2 in H.coproduct_word(v).terms.items():
                    key = u + tuple(g + ng for g in w2)
                    cc = c * c2
                    rhs_acc[key] = rhs_acc.get(key, 0) + cc
            if AlgElement(triple, lhs_acc) != AlgElement(triple, rhs_acc):
                failures.append(f"coassociativity fails on {name}")

        left = alg.zero()
        right = alg.zero()
        s_left = alg.zero()
        s_right = alg.zero()
        for w, c in delta.terms.items():
            u, v = H.square.split_word(w)
            left = left + alg.element({v: c * H.counit_word(u)})
            right = right + alg.element({u: c * H.counit_word(v)})
            s_left = s_left + (H.antipode_word(u) * alg.element({v: 1})) * c
            s_right = s_right + (alg.element({u: 1}) * H.antipode_word(v)) * c
        target = alg.element({b: 1})
        if left != target:
            failures.append(f"left counit law fails on {name}")
        if right != target:
            failures.append(f"right counit law fails on {name}")
        eps_b = alg.one() * H.counit_word(b)
        if s_left != eps_b:
            failures.append(f"antipode law m(S x id)Delta fails on {name}")
        if s_right != eps_b:
            failures.append(f"antipode law m(id x S)Delta fails on {name}")

    for rule in alg.rules:
        lhs_name = alg.render_word(rule.lhs)
        rhs_elem = alg.element({w: c for w, c in rule.rhs}) if rule.rhs else alg.zero()
        d_lhs = H.coproduct_word(rule.lhs)
        d_rhs = H.square.zero()
        e_rhs = CyclotomicNumber.zero(alg.order)
        s_rhs = alg.zero()
        for w, c in rhs_elem.terms.items():
            d_rhs = d_rhs + H.coproduct_word(w) * c
            e_rhs = e_rhs + c.constant_value() * H.counit_word(w)
            s_rhs = s_rhs + H.antipode_word(w) * c
        if d_lhs != d_rhs:
            failures.append(f"coproduct incompatible with relation {lhs_name}")
        if H.counit_word(rule.lhs) != e_rhs:
            failures.append(f"counit incompatible with relation {lhs_name}")
        if H.antipode_word(rule.lhs) != s_rhs:
            failures.append(f"antipode incompatible with relation {lhs_name}")

    return HopfAxiomReport(H.name, tuple(failures))
