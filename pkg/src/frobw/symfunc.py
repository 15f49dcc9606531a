"""Sym(A): the free supercommutative algebra on generators ``h_r(beta)``, r >= 1.

A generator is the pair ``(r, beta)`` with ``beta`` a cocenter basis index.
Monomials are tuples of generators sorted by ``r`` descending, then
``beta`` ascending; sorting accumulates the Koszul sign and odd generators
square to zero.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Dict, Optional, Sequence, Tuple

from .algebra import FrobeniusAlgebra
from .linalg import fstr, to_fraction

Generator = Tuple[int, int]
Monomial = Tuple[Generator, ...]


def _gen_key(g: Generator) -> tuple:
    return (-g[0], g[1])


def canonical(A: FrobeniusAlgebra, gens: Sequence[Generator]) -> tuple:
    """``(sign, sorted monomial)``; sign 0 when an odd generator repeats."""
    par = A.cocenter.parities
    word = list(gens)
    s = 1
    # insertion sort, counting odd-odd transpositions
    for i in range(1, len(word)):
        j = i
        while j > 0 and _gen_key(word[j - 1]) > _gen_key(word[j]):
            if par[word[j - 1][1]] and par[word[j][1]]:
                s = -s
            word[j - 1], word[j] = word[j], word[j - 1]
            j -= 1
    for a, b in zip(word, word[1:]):
        if a == b and par[a[1]]:
            return 0, ()
    return s, tuple(word)


class SymElement:
    """Linear combination of canonical monomials."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: FrobeniusAlgebra, terms: Optional[dict] = None):
        self.algebra = algebra
        self.terms: Dict[Monomial, Fraction] = {m: to_fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def scalar(cls, A: FrobeniusAlgebra, c) -> "SymElement":
        return cls(A, {(): c})

    @classmethod
    def generator(cls, A: FrobeniusAlgebra, r: int, beta: int) -> "SymElement":
        if r < 1:
            raise ValueError("generators have r >= 1")
        return cls(A, {((r, beta),): 1})

    def __add__(self, other: "SymElement") -> "SymElement":
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return SymElement(self.algebra, terms)

    def scale(self, c) -> "SymElement":
        c = to_fraction(c)
        return SymElement(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __neg__(self) -> "SymElement":
        return self.scale(-1)

    def __sub__(self, other: "SymElement") -> "SymElement":
        return self + (-other)

    def __mul__(self, other) -> "SymElement":
        if not isinstance(other, SymElement):
            return self.scale(other)
        A = self.algebra
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                s, m = canonical(A, m1 + m2)
                if s:
                    out[m] = out.get(m, Fraction(0)) + s * c1 * c2
        return SymElement(A, out)

    def __rmul__(self, c) -> "SymElement":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SymElement.scalar(self.algebra, other)
        if not isinstance(other, SymElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def homogeneity(self) -> Optional[tuple]:
        """``(degree, parity)`` if homogeneous and nonzero, else None."""
        keys = {monomial_degree(self.algebra, m) for m in self.terms}
        return keys.pop() if len(keys) == 1 else None

    def render(self) -> str:
        labels = self.algebra.cocenter.labels
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=lambda m: (len(m), [_gen_key(g) for g in m])):
            c = self.terms[mono]
            body = "*".join(f"h{r}({labels[b]})" for r, b in mono)
            if not body:
                body = fstr(c)
            elif c != 1:
                body = f"{fstr(c)}*{body}"
            parts.append(body)
        return " + ".join(parts)

    def __repr__(self):
        return f"SymElement({self.render()})"


def monomial_degree(A: FrobeniusAlgebra, mono: Monomial) -> tuple:
    deg = par = 0
    for r, b in mono:
        deg += 2 * A.d * (r - 1) + A.cocenter.degrees[b]
        par ^= A.cocenter.parities[b]
    return deg, par


def h(A: FrobeniusAlgebra, n: int, cls: Sequence) -> SymElement:
    """``h_n`` of a cocenter class given by its coordinates."""
    if n < 0:
        return SymElement(A)
    if n == 0:
        return SymElement.scalar(A, A.coc_tr(cls))
    return SymElement(A, {((n, b),): c for b, c in enumerate(cls) if c})


def h_elem(A: FrobeniusAlgebra, n: int, x: Sequence) -> SymElement:
    """``h_n`` of an element of A."""
    if n < 0:
        return SymElement(A)
    if n == 0:
        return SymElement.scalar(A, A.tr(x))
    return h(A, n, A.project(x))


class SymFunctions:
    """The e, p and ell_0 families for one algebra, memoized on basis elements."""

    def __init__(self, A: FrobeniusAlgebra):
        self.A = A
        self._e: Dict[Tuple[int, int], SymElement] = {}
        self._h_dual: Dict[Tuple[int, int], SymElement] = {}

    def _h_of_dual(self, t: int, c: int) -> SymElement:
        key = (t, c)
        if key not in self._h_dual:
            self._h_dual[key] = h_elem(self.A, t, self.A.dual(c))
        return self._h_dual[key]

    def e_basis(self, n: int, i: int) -> SymElement:
        """``e_n(b_i)``."""
        A = self.A
        if n < 0:
            return SymElement(A)
        key = (n, i)
        hit = self._e.get(key)
        if hit is not None:
            return hit
        if n == 0:
            out = SymElement.scalar(A, A.trace_values[i])
        else:
            acc: dict = {}
            for s in range(n):
                for c in range(A.dim):
                    hd = self._h_of_dual(n - s, c)
                    if not hd.terms:
                        continue
                    es = self.e_elem(s, A.mul_basis_vec(i, c))
                    if not es.terms:
                        continue
                    term = es * hd
                    sg = -1 if s % 2 else 1
                    for m, v in term.terms.items():
                        acc[m] = acc.get(m, Fraction(0)) + sg * v
            sgn = 1 if (n + 1) % 2 == 0 else -1
            out = SymElement(A, {m: sgn * v for m, v in acc.items()})
        self._e[key] = out
        return out

    def e_elem(self, n: int, x: Sequence) -> SymElement:
        """``e_n`` of an element of A (linear extension)."""
        acc: dict = {}
        for i, a in enumerate(x):
            if a:
                for m, v in self.e_basis(n, i).terms.items():
                    acc[m] = acc.get(m, Fraction(0)) + a * v
        return SymElement(self.A, acc)

    def e(self, n: int, cls: Sequence) -> SymElement:
        """``e_n`` of a cocenter class (evaluated on its representative)."""
        return self.e_elem(n, self.A.lift(cls))

    def p_elem(self, r: int, x: Sequence) -> SymElement:
        A = self.A
        out = SymElement(A)
        if r <= 0:
            return out
        for s in range(1, r + 1):
            coeff = s if s % 2 else -s
            for b in range(A.dim):
                hb = h_elem(A, r - s, A.basis(b))
                if not hb.terms:
                    continue
                es = self.e_elem(s, A.mul(A.dual(b), x))
                if es.terms:
                    out = out + (hb * es).scale(coeff)
        return out

    def p(self, r: int, cls: Sequence) -> SymElement:
        return self.p_elem(r, self.A.lift(cls))

    def ell0(self, r: int, cls: Sequence, k=0, kappa_action=None) -> SymElement:
        """The recursively defined image of ``L_{0,r}(a)`` in Sym(A).

        ``k`` does not enter the Sym(A) model and is accepted for symmetry with
        the diagrammatic side. ``kappa_action(i, cls)`` overrides the action
        of ``kappa^i`` on classes (default: the algebra's own kappa).
        """
        A = self.A
        if r < 0:
            raise ValueError("r must be non-negative")
        if kappa_action is None:
            def kappa_action(i, v):
                return A.kappa_power_action(i).apply(v) if i else tuple(v)
        out = self.p(r + 1, cls).scale(Fraction(-1, r + 1))
        for i in range(1, r // 2 + 1):
            shifted = tuple(Fraction(x) / 4**i for x in kappa_action(i, cls))
            if any(shifted):
                inner = self.ell0(r - 2 * i, shifted, k, kappa_action)
                out = out - inner.scale(Fraction(comb(r + 1, 2 * i + 1), r + 1))
        return out

    def duality_defect(self, N: int, a: Sequence, b: Sequence) -> SymElement:
        """Order ``u^-N`` coefficient of ``sum_c e(ac;-u) h(c^vee b;u) - tr(ab)``."""
        A = self.A
        out = SymElement(A)
        for s in range(N + 1):
            sg = -1 if s % 2 else 1
            for c in range(A.dim):
                hv = h_elem(A, N - s, A.mul(A.dual(c), b))
                if not hv.terms:
                    continue
                es = self.e_elem(s, A.mul(a, A.basis(c)))
                if es.terms:
                    out = out + (es * hv).scale(sg)
        if N == 0:
            out = out - SymElement.scalar(A, A.tr(A.mul(a, b)))
        return out


def sym_functions(A: FrobeniusAlgebra) -> SymFunctions:
    """Shared per-algebra instance (its memo tables only grow)."""
    hit = A.__dict__.get("_symfunctions")
    if hit is None:
        hit = A.__dict__["_symfunctions"] = SymFunctions(A)
    return hit
