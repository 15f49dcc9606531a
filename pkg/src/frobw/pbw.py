"""Normal ordering in U(W(A))/(C - k).

A monomial is a tuple of triples ``(m, r, beta)`` read left to right. It is
normal when every adjacent pair ``x, y`` has ``x`` strictly above ``y`` in
the PBW order, or ``x == y`` with ``beta`` even.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .algebra import FrobeniusAlgebra
from .linalg import fstr, to_fraction
from .walgebra import bracket_basis, term_degree

Triple = Tuple[int, int, int]
Monomial = Tuple[Triple, ...]

MAX_STEPS = 2_000_000


class RewriteLimitError(RuntimeError):
    pass


def _z_key(n: int) -> tuple:
    # negatives sit above non-negatives; among negatives, more negative is higher
    return (1, -n) if n < 0 else (0, n)


def order_key(t: Triple) -> tuple:
    """Sort key realizing the PBW order: a larger key is higher."""
    m, r, b = t
    return (_z_key(m), r, b)


def compare(t1: Triple, t2: Triple) -> int:
    """1 if ``t1`` is above ``t2``, -1 if below, 0 if equal."""
    k1, k2 = order_key(t1), order_key(t2)
    return (k1 > k2) - (k1 < k2)


def _allowed(A: FrobeniusAlgebra, x: Triple, y: Triple) -> bool:
    c = compare(x, y)
    return c > 0 or (c == 0 and A.cocenter.parities[x[2]] == 0)


def is_normal(A: FrobeniusAlgebra, word: Sequence[Triple]) -> bool:
    return all(_allowed(A, word[i], word[i + 1]) for i in range(len(word) - 1))


class UElement:
    """Linear combination of normal monomials at a fixed central charge."""

    __slots__ = ("algebra", "k", "terms")

    def __init__(self, algebra: FrobeniusAlgebra, k, terms: Optional[dict] = None):
        self.algebra = algebra
        self.k = to_fraction(k)
        self.terms: Dict[Monomial, Fraction] = {m: to_fraction(c) for m, c in (terms or {}).items() if c}

    @classmethod
    def one(cls, A: FrobeniusAlgebra, k) -> "UElement":
        return cls(A, k, {(): 1})

    @classmethod
    def from_word(cls, A: FrobeniusAlgebra, word: Sequence[Triple], k) -> "UElement":
        return normal_order(A, word, k)

    def _check(self, other: "UElement") -> None:
        if other.algebra is not self.algebra or other.k != self.k:
            raise ValueError("mismatched algebra or central charge")

    def __add__(self, other: "UElement") -> "UElement":
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return UElement(self.algebra, self.k, terms)

    def scale(self, c) -> "UElement":
        c = to_fraction(c)
        return UElement(self.algebra, self.k, {m: c * v for m, v in self.terms.items()})

    def __sub__(self, other: "UElement") -> "UElement":
        return self + other.scale(-1)

    def __mul__(self, other: "UElement") -> "UElement":
        return u_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, UElement):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def is_normal(self) -> bool:
        return all(is_normal(self.algebra, m) for m in self.terms)

    def render(self) -> str:
        return render(self)

    def __repr__(self):
        return f"UElement(k={fstr(self.k)}: {render(self)})"


class _Orderer:
    """Memoized leftmost-first rewriting for one algebra and central charge."""

    def __init__(self, A: FrobeniusAlgebra, k: Fraction):
        self.A = A
        self.k = k
        self.memo: Dict[Monomial, dict] = {}
        self.steps = 0

    def _tick(self) -> None:
        self.steps += 1
        if self.steps > MAX_STEPS:
            raise RewriteLimitError("normal ordering exceeded its step bound")

    def _add(self, out: dict, word: Monomial, coeff: Fraction) -> None:
        for m, c in self.normal(word).items():
            v = out.get(m, Fraction(0)) + coeff * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)

    def _bracket_into(self, out: dict, prefix: Monomial, x: Triple, y: Triple, suffix: Monomial, scale: Fraction):
        terms, central = bracket_basis(self.A, x, y)
        for t, c in terms:
            self._add(out, prefix + (t,) + suffix, scale * c)
        if central and self.k:
            self._add(out, prefix + suffix, scale * central * self.k)

    def normal(self, word: Monomial) -> dict:
        hit = self.memo.get(word)
        if hit is not None:
            return hit
        self._tick()
        A = self.A
        par = A.cocenter.parities
        out: dict = {}
        for i in range(len(word) - 1):
            x, y = word[i], word[i + 1]
            c = compare(x, y)
            if c > 0 or (c == 0 and par[x[2]] == 0):
                continue
            prefix, suffix = word[:i], word[i + 2:]
            if c == 0:
                # odd x: x x = 1/2 [x, x]
                self._bracket_into(out, prefix, x, y, suffix, Fraction(1, 2))
            else:
                s = -1 if par[x[2]] and par[y[2]] else 1
                self._add(out, prefix + (y, x) + suffix, Fraction(s))
                self._bracket_into(out, prefix, x, y, suffix, Fraction(1))
            break
        else:
            out = {word: Fraction(1)}
        self.memo[word] = out
        return out


def _orderer(A: FrobeniusAlgebra, k: Fraction) -> _Orderer:
    cache = A.__dict__.setdefault("_pbw_orderers", {})
    o = cache.get(k)
    if o is None:
        o = cache[k] = _Orderer(A, k)
    return o


def normal_order(A: FrobeniusAlgebra, word: Sequence[Triple], k) -> UElement:
    """Normal form of the product of the generators in ``word``."""
    k = to_fraction(k)
    word = tuple(tuple(int(v) for v in t) for t in word)
    for m, r, b in word:
        if r < 0 or not 0 <= b < A.ncoc:
            raise ValueError(f"invalid generator {(m, r, b)}")
    return UElement(A, k, dict(_orderer(A, k).normal(word)))


def u_mul(x: UElement, y: UElement) -> UElement:
    """Product of two normal forms, renormalized."""
    x._check(y)
    o = _orderer(x.algebra, x.k)
    out: dict = {}
    for m1, c1 in x.terms.items():
        for m2, c2 in y.terms.items():
            for m, c in o.normal(m1 + m2).items():
                out[m] = out.get(m, Fraction(0)) + c1 * c2 * c
    return UElement(x.algebra, x.k, out)


def monomial_degree(A: FrobeniusAlgebra, mono: Monomial) -> tuple:
    """``(degree, parity)`` of a monomial."""
    deg = par = 0
    for t in mono:
        d, p = term_degree(A, t)
        deg += d
        par ^= p
    return deg, par


def monomial_rank(mono: Monomial) -> int:
    return sum(t[0] for t in mono)


def render(x: UElement) -> str:
    """Terms with longer monomials first, then by PBW order, descending."""
    A = x.algebra
    labels = A.cocenter.labels

    def mono_str(mono: Monomial) -> str:
        return "".join(f"L({m},{r},{labels[b]})" for m, r, b in mono)

    def key(mono: Monomial):
        return (-len(mono), [tuple(-v for v in _flat(order_key(t))) for t in mono])

    items = sorted(x.terms.items(), key=lambda kv: key(kv[0]))
    if not items:
        return "0"
    out = ""
    for i, (mono, c) in enumerate(items):
        if not mono:
            body = fstr(abs(c))
        elif abs(c) == 1:
            body = mono_str(mono)
        else:
            body = f"{fstr(abs(c))}·{mono_str(mono)}"
        if i == 0:
            out = body if c > 0 else f"-{body}"
        else:
            out += f" + {body}" if c > 0 else f" - {body}"
    return out


def _flat(key: tuple) -> tuple:
    (a, b), r, beta = key
    return (a, b, r, beta)
