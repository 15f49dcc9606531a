"""The affine wreath product algebra AWA_n(A).

An element is a finite sum of terms ``coeff * a x^e pi`` keyed by
``(e, pi, idx)``:

* ``e`` is the exponent vector of ``x_1 .. x_n``;
* ``pi`` is a permutation in one-line form, ``pi[p] = pi(p+1) - 1``;
* ``idx`` lists the A-basis index at tensor position 1, 2, ..., n, i.e.
  the rightmost tensor factor comes first.

Permutations compose right to left and act on ``A^{(x)n}`` by
superpermutations.
"""

from __future__ import annotations

import itertools
import os
from fractions import Fraction
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .algebra import FrobeniusAlgebra
from .linalg import Echelon, fstr, to_fraction

Key = Tuple[tuple, tuple, tuple]

DEFAULT_MAX_DEGREE = 8


class DegreeCapError(RuntimeError):
    """Raised when a polynomial degree exceeds the configured cap."""


def max_degree() -> int:
    raw = os.environ.get("FROBW_MAX_DEGREE")
    if raw is None or raw == "":
        return DEFAULT_MAX_DEGREE
    value = int(raw)
    if value < 0:
        raise ValueError("FROBW_MAX_DEGREE must be non-negative")
    return value


# -- permutations -------------------------------------------------------------

def identity_perm(n: int) -> tuple:
    return tuple(range(n))


def compose(p: tuple, q: tuple) -> tuple:
    """``(p q)(i) = p(q(i))``."""
    return tuple(p[q[i]] for i in range(len(q)))


def transposition(n: int, i: int, j: Optional[int] = None) -> tuple:
    """``s_{i,j}`` (1-based); ``s_i = s_{i,i+1}``."""
    j = i + 1 if j is None else j
    perm = list(range(n))
    perm[i - 1], perm[j - 1] = perm[j - 1], perm[i - 1]
    return tuple(perm)


def cycle_perm(n: int) -> tuple:
    """``rho_n``: i -> i+1 mod n."""
    return tuple((i + 1) % n for i in range(n))


def reduced_word(perm: tuple) -> list:
    """Indices ``j`` with ``perm = s_{j_1} ... s_{j_k}``, listed right to left."""
    word = []
    p = list(perm)
    while True:
        for j in range(len(p) - 1):
            if p[j] > p[j + 1]:
                p[j], p[j + 1] = p[j + 1], p[j]
                word.append(j + 1)
                break
        else:
            return word


# -- the algebra --------------------------------------------------------------

class WreathAlgebra:
    """``AWA_n(A)`` for a fixed algebra and number of strands."""

    def __init__(self, A: FrobeniusAlgebra, n: int, cap: Optional[int] = None):
        if n < 1:
            raise ValueError("need at least one strand")
        self.A = A
        self.n = n
        self.cap = max_degree() if cap is None else cap
        self.ident = identity_perm(n)
        self._table = [[A.mul_basis(i, j) for j in range(A.dim)] for i in range(A.dim)]
        self._unit = [(i, c) for i, c in enumerate(A.unit) if c]
        self._tau_cache: Dict[tuple, dict] = {}
        self._push_cache: Dict[tuple, dict] = {}
        self._mul_cache: Dict[tuple, dict] = {}

    # tensors: sparse dicts idx -> coeff ---------------------------------------
    def tensor_mul(self, s: tuple, t: tuple) -> dict:
        """Product of two basis tensors of ``A^{(x)n}`` with Koszul signs."""
        key = (s, t)
        hit = self._mul_cache.get(key)
        if hit is not None:
            return hit
        par = self.A.parities
        n = self.n
        odd = 0
        for p in range(n):
            if par[s[p]]:
                for q in range(p + 1, n):
                    if par[t[q]]:
                        odd ^= 1
        out: dict = {(): Fraction(-1 if odd else 1)}
        for p in range(n):
            terms = self._table[s[p]][t[p]]
            if not terms:
                out = {}
                break
            nxt: dict = {}
            for idx, c in out.items():
                for k, v in terms:
                    nxt[idx + (k,)] = c * v
            out = nxt
        self._mul_cache[key] = out
        return out

    def tensor_product(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for s, a in x.items():
            for t, b in y.items():
                for idx, c in self.tensor_mul(s, t).items():
                    v = out.get(idx, Fraction(0)) + a * b * c
                    if v:
                        out[idx] = v
                    else:
                        out.pop(idx, None)
        return out

    def act_tensor(self, perm: tuple, idx: tuple) -> tuple:
        """Superpermutation: the factor at position p moves to position perm(p)."""
        par = self.A.parities
        n = self.n
        odd = 0
        for p in range(n):
            if not par[idx[p]]:
                continue
            for q in range(p + 1, n):
                if par[idx[q]] and perm[p] > perm[q]:
                    odd ^= 1
        new = [0] * n
        for p in range(n):
            new[perm[p]] = idx[p]
        return (-1 if odd else 1), tuple(new)

    def act_exps(self, perm: tuple, e: tuple) -> tuple:
        new = [0] * self.n
        for p in range(self.n):
            new[perm[p]] = e[p]
        return tuple(new)

    def embed_tensor(self, position: int, coeffs: Sequence) -> dict:
        """``a^{(position)}`` (1-based) as a sparse tensor."""
        out: dict = {}
        others = [self._unit] * self.n
        for k, a in enumerate(coeffs):
            if not a:
                continue
            factors = list(others)
            factors[position - 1] = [(k, to_fraction(a))]
            for combo in itertools.product(*factors):
                c = Fraction(1)
                for _, v in combo:
                    c *= v
                idx = tuple(i for i, _ in combo)
                out[idx] = out.get(idx, Fraction(0)) + c
        return {k: v for k, v in out.items() if v}

    def unit_tensor(self) -> dict:
        out: dict = {}
        for combo in itertools.product(self._unit, repeat=self.n):
            c = Fraction(1)
            for _, v in combo:
                c *= v
            out[tuple(i for i, _ in combo)] = c
        return out

    def tau_tensor(self, i: int, j: int) -> dict:
        """``sum_b b^{(j)} (b^vee)^{(i)}``."""
        key = (i, j)
        if key not in self._tau_cache:
            A = self.A
            out: dict = {}
            for b in range(A.dim):
                left = self.embed_tensor(j, A.basis(b))
                right = self.embed_tensor(i, A.dual(b))
                for idx, c in self.tensor_product(left, right).items():
                    out[idx] = out.get(idx, Fraction(0)) + c
            self._tau_cache[key] = {k: v for k, v in out.items() if v}
        return self._tau_cache[key]

    # polynomial part -----------------------------------------------------------
    def _check_degree(self, e: tuple) -> None:
        if sum(e) > self.cap:
            raise DegreeCapError(f"polynomial degree {sum(e)} exceeds cap {self.cap}")

    def _divided_difference(self, j: int, e: tuple) -> dict:
        """``(x^e - s_j x^e) / (x_{j+1} - x_j)`` as ``{exps: coeff}``."""
        a, b = e[j - 1], e[j]
        out: dict = {}
        if a == b:
            return out
        base = list(e)
        lo = min(a, b)
        if a > b:
            g, sgn = a - b, -1
            for k in range(g):
                base[j - 1], base[j] = lo + g - 1 - k, lo + k
                out[tuple(base)] = Fraction(sgn)
        else:
            g, sgn = b - a, 1
            for k in range(g):
                base[j], base[j - 1] = lo + g - 1 - k, lo + k
                out[tuple(base)] = Fraction(sgn)
        return out

    def demazure_term(self, j: int, e: tuple, idx: tuple) -> dict:
        """``d_j(a x^e)`` as ``{(exps, idx): coeff}``."""
        dd = self._divided_difference(j, e)
        if not dd:
            return {}
        s = transposition(self.n, j)
        sg, sidx = self.act_tensor(s, idx)
        coeff_tensor = self.tensor_product({sidx: Fraction(sg)}, self.tau_tensor(j, j + 1))
        out: dict = {}
        for ex, c in dd.items():
            for t, v in coeff_tensor.items():
                key = (ex, t)
                out[key] = out.get(key, Fraction(0)) + c * v
        return {k: v for k, v in out.items() if v}

    def _left_s(self, j: int, terms: dict) -> dict:
        """``s_j * sum c (a x^e) tau`` for terms keyed ``(e, tau, idx)``."""
        s = transposition(self.n, j)
        out: dict = {}

        def add(key, v):
            w = out.get(key, Fraction(0)) + v
            if w:
                out[key] = w
            else:
                out.pop(key, None)

        for (e, tau, idx), c in terms.items():
            sg, sidx = self.act_tensor(s, idx)
            add((self.act_exps(s, e), compose(s, tau), sidx), sg * c)
            for (ex, t), v in self.demazure_term(j, e, idx).items():
                add((ex, tau, t), c * v)
        return out

    def push(self, perm: tuple, e: tuple, idx: tuple) -> dict:
        """``perm * (a x^e)`` written as ``sum c (a' x^e') tau``."""
        key = (perm, e, idx)
        hit = self._push_cache.get(key)
        if hit is not None:
            return hit
        terms = {(e, self.ident, idx): Fraction(1)}
        for j in reduced_word(perm):
            terms = self._left_s(j, terms)
        self._push_cache[key] = terms
        return terms

    def mul_terms(self, k1: Key, k2: Key) -> dict:
        e1, p1, i1 = k1
        e2, p2, i2 = k2
        out: dict = {}
        for (e, tau, idx), c in self.push(p1, e2, i2).items():
            ex = tuple(a + b for a, b in zip(e1, e))
            self._check_degree(ex)
            perm = compose(tau, p2)
            for t, v in self.tensor_mul(i1, idx).items():
                key = (ex, perm, t)
                out[key] = out.get(key, Fraction(0)) + c * v
        return out

    # constructors --------------------------------------------------------------
    def element(self, terms: Optional[dict] = None) -> "WreathElement":
        return WreathElement(self, terms or {})

    def one(self) -> "WreathElement":
        z = (0,) * self.n
        return WreathElement(self, {(z, self.ident, idx): c for idx, c in self.unit_tensor().items()})

    def perm(self, perm: tuple) -> "WreathElement":
        z = (0,) * self.n
        return WreathElement(self, {(z, tuple(perm), idx): c for idx, c in self.unit_tensor().items()})

    def s(self, i: int) -> "WreathElement":
        if not 1 <= i < self.n:
            raise ValueError("s_i needs 1 <= i < n")
        return self.perm(transposition(self.n, i))

    def x(self, i: int, power: int = 1) -> "WreathElement":
        e = [0] * self.n
        e[i - 1] = power
        return WreathElement(self, {(tuple(e), self.ident, idx): c for idx, c in self.unit_tensor().items()})

    def token(self, a: Sequence, i: int) -> "WreathElement":
        """``a^{(i)}``."""
        z = (0,) * self.n
        return WreathElement(self, {(z, self.ident, idx): c for idx, c in self.embed_tensor(i, a).items()})

    def tensor(self, coeffs: dict) -> "WreathElement":
        z = (0,) * self.n
        return WreathElement(self, {(z, self.ident, tuple(idx)): c for idx, c in coeffs.items()})

    def tau(self, i: int, j: Optional[int] = None) -> "WreathElement":
        j = i + 1 if j is None else j
        if not 1 <= i < j <= self.n:
            raise ValueError("tau_{i,j} needs 1 <= i < j <= n")
        return self.tensor(self.tau_tensor(i, j))

    def rho(self) -> "WreathElement":
        return self.perm(cycle_perm(self.n))

    def polynomial(self, poly: dict) -> "WreathElement":
        """Scalar polynomial ``{exps: coeff}`` times the unit tensor."""
        out = {}
        for e, c in poly.items():
            for idx, v in self.unit_tensor().items():
                out[(tuple(e), self.ident, idx)] = to_fraction(c) * v
        return WreathElement(self, out)

    def basis_keys(self, max_deg: int) -> list:
        """All basis keys with polynomial degree <= max_deg, lowest degree first."""
        keys = []
        perms = list(itertools.permutations(range(self.n)))
        idxs = list(itertools.product(range(self.A.dim), repeat=self.n))
        for deg in range(max_deg + 1):
            for e in compositions(deg, self.n):
                for p in perms:
                    for idx in idxs:
                        keys.append((e, p, idx))
        return keys

    def key_parity(self, key: Key) -> int:
        return sum(self.A.parities[i] for i in key[2]) % 2

    def key_degree(self, key: Key) -> int:
        e, _, idx = key
        return 2 * self.A.d * sum(e) + sum(self.A.degrees[i] for i in idx)


def compositions(total: int, parts: int) -> Iterable[tuple]:
    """Exponent vectors of length ``parts`` summing to ``total``."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


class WreathElement:
    """Element of AWA_n(A) as a sparse map ``(e, pi, idx) -> coeff``."""

    __slots__ = ("parent", "terms")

    def __init__(self, parent: WreathAlgebra, terms: dict):
        self.parent = parent
        self.terms = {k: to_fraction(v) for k, v in terms.items() if v}

    @property
    def n(self) -> int:
        return self.parent.n

    def _same(self, other: "WreathElement") -> None:
        if other.parent.n != self.parent.n:
            raise ValueError("mismatched number of strands")
        if other.parent.A is not self.parent.A:
            raise ValueError("mismatched algebras")

    def __add__(self, other: "WreathElement") -> "WreathElement":
        self._same(other)
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return WreathElement(self.parent, terms)

    def scale(self, c) -> "WreathElement":
        c = to_fraction(c)
        return WreathElement(self.parent, {k: c * v for k, v in self.terms.items()})

    def __neg__(self) -> "WreathElement":
        return self.scale(-1)

    def __sub__(self, other: "WreathElement") -> "WreathElement":
        return self + (-other)

    def __rmul__(self, c) -> "WreathElement":
        return self.scale(c)

    def __mul__(self, other) -> "WreathElement":
        if not isinstance(other, WreathElement):
            return self.scale(other)
        return awa_mul(self, other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WreathElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def poly_degree(self) -> int:
        return max((sum(e) for e, _, _ in self.terms), default=-1)

    def parity_components(self) -> dict:
        out: dict = {}
        for k, v in self.terms.items():
            out.setdefault(self.parent.key_parity(k), {})[k] = v
        return {p: WreathElement(self.parent, t) for p, t in out.items()}

    def homogeneity(self) -> Optional[tuple]:
        keys = {(self.parent.key_degree(k), self.parent.key_parity(k)) for k in self.terms}
        return keys.pop() if len(keys) == 1 else None

    def render(self) -> str:
        labels = self.parent.A.labels
        parts = []
        for (e, p, idx) in sorted(self.terms):
            c = self.terms[(e, p, idx)]
            tensor = "(x)".join(labels[i] for i in reversed(idx))
            poly = "".join(f"x{i + 1}^{k}" if k > 1 else f"x{i + 1}" for i, k in enumerate(e) if k)
            perm = "" if p == tuple(range(len(p))) else "[" + "".join(str(v + 1) for v in p) + "]"
            parts.append(f"{fstr(c)}*{tensor}{'*' + poly if poly else ''}{'*' + perm if perm else ''}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"WreathElement(n={self.n}: {self.render()})"


def awa_mul(x: WreathElement, y: WreathElement) -> WreathElement:
    x._same(y)
    W = x.parent
    out: dict = {}
    for k1, a in x.terms.items():
        for k2, b in y.terms.items():
            ab = a * b
            for k, v in W.mul_terms(k1, k2).items():
                w = out.get(k, Fraction(0)) + ab * v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
    return WreathElement(W, out)


def supercommutator(x: WreathElement, y: WreathElement) -> WreathElement:
    out = WreathElement(x.parent, {})
    for px, xc in x.parity_components().items():
        for py, yc in y.parity_components().items():
            s = -1 if px and py else 1
            out = out + awa_mul(xc, yc) - awa_mul(yc, xc).scale(s)
    return out


def act_perm(perm: tuple, f: WreathElement) -> WreathElement:
    """The action of ``perm`` on the polynomial part ``f`` (no straightening)."""
    W = f.parent
    out: dict = {}
    for (e, p, idx), c in f.terms.items():
        if p != W.ident:
            raise ValueError("expected a polynomial (trivial permutation part)")
        sg, new = W.act_tensor(perm, idx)
        key = (W.act_exps(perm, e), p, new)
        out[key] = out.get(key, Fraction(0)) + sg * c
    return WreathElement(W, out)


def demazure(i: int, f: WreathElement) -> WreathElement:
    """``d_i`` on an element of ``P_n(A)``."""
    W = f.parent
    if not 1 <= i < W.n:
        raise ValueError("d_i needs 1 <= i < n")
    out: dict = {}
    for (e, p, idx), c in f.terms.items():
        if p != W.ident:
            raise ValueError("expected a polynomial (trivial permutation part)")
        for (ex, t), v in W.demazure_term(i, e, idx).items():
            key = (ex, p, t)
            out[key] = out.get(key, Fraction(0)) + c * v
    return WreathElement(W, out)


def tau(W: WreathAlgebra, i: int, j: int) -> WreathElement:
    return W.tau(i, j)


def _multinomial_power(n: int, r: int) -> dict:
    """``((x_1 + ... + x_n)/n)^r`` as ``{exps: coeff}``."""
    out = {}
    for e in compositions(r, n):
        c = Fraction(factorial(r))
        for k in e:
            c /= factorial(k)
        out[e] = c / Fraction(n) ** r
    return out


def cycle_element(W: WreathAlgebra, r: int, a: Sequence, averaged: bool = True) -> WreathElement:
    """``a^{(1)} p rho_n`` with ``p = ((x_1+..+x_n)/n)^r`` or ``x_1^r``."""
    n = W.n
    if averaged:
        poly = _multinomial_power(n, r)
    else:
        e = [0] * n
        e[0] = r
        poly = {tuple(e): Fraction(1)}
    tok = W.embed_tensor(1, a)
    rho = cycle_perm(n)
    out = {}
    for e, c in poly.items():
        for idx, v in tok.items():
            out[(e, rho, idx)] = c * v
    return WreathElement(W, out)


def juxtapose(W: WreathAlgebra, left: WreathElement, right: WreathElement) -> WreathElement:
    """``left (x) right`` in AWA_{m+k}: ``left`` on the highest strands."""
    m, k = left.n, right.n
    if m + k != W.n:
        raise ValueError("strand counts do not add up")
    return awa_mul(embed(W, left, k), embed(W, right, 0))


def embed(W: WreathAlgebra, f: WreathElement, offset: int) -> WreathElement:
    """Place ``f`` on strands ``offset+1 .. offset+f.n`` of ``W``; unit elsewhere."""
    n, m = W.n, f.n
    if offset < 0 or offset + m > n:
        raise ValueError("embedding out of range")
    unit = W._unit
    out: dict = {}
    pad_lo, pad_hi = offset, n - offset - m
    for (e, p, idx), c in f.terms.items():
        ex = (0,) * pad_lo + tuple(e) + (0,) * pad_hi
        perm = tuple(range(pad_lo)) + tuple(v + offset for v in p) + tuple(range(offset + m, n))
        for lo in itertools.product(unit, repeat=pad_lo):
            for hi in itertools.product(unit, repeat=pad_hi):
                v = c
                for _, u in lo + hi:
                    v *= u
                key = (ex, perm, tuple(i for i, _ in lo) + tuple(idx) + tuple(i for i, _ in hi))
                out[key] = out.get(key, Fraction(0)) + v
    return WreathElement(W, out)


# -- truncated cocenter --------------------------------------------------------

class TruncatedCocenter:
    """Quotient of the degree <= D part by commutators of total degree <= Dcomm."""

    def __init__(self, W: WreathAlgebra, D: int, Dcomm: int, mode: str = "generators"):
        if Dcomm < D:
            raise ValueError("Dcomm must be at least D")
        if Dcomm > W.cap:
            raise DegreeCapError(f"Dcomm={Dcomm} exceeds the degree cap {W.cap}")
        self.W, self.D, self.Dcomm, self.mode = W, D, Dcomm, mode
        keys = W.basis_keys(Dcomm)
        self.low = [k for k in keys if sum(k[0]) <= D]
        high = [k for k in keys if sum(k[0]) > D]
        # high-degree coordinates first, so low-block pivots cut out W meet V_{<=D}
        self.keys = high + self.low
        self.index = {k: i for i, k in enumerate(self.keys)}
        self.nhigh = len(high)
        self.echelon = Echelon(len(self.keys))
        self.ncommutators = 0
        if mode == "generators":
            self._fill_generators()
        elif mode == "brute":
            self._fill_brute()
        else:
            raise ValueError(f"unknown mode {mode!r}")

    def vector(self, f: WreathElement) -> list:
        v = [Fraction(0)] * len(self.keys)
        for k, c in f.terms.items():
            i = self.index.get(k)
            if i is None:
                raise ValueError("element lies outside the truncation window")
            v[i] = c
        return v

    def _add(self, f: WreathElement) -> None:
        self.ncommutators += 1
        if f.terms:
            self.echelon.add(self.vector(f))

    def _basis_element(self, key: Key) -> WreathElement:
        return WreathElement(self.W, {key: 1})

    def _generators(self) -> list:
        W = self.W
        gens = [(0, W.s(i)) for i in range(1, W.n)]
        gens += [(1, W.x(i)) for i in range(1, W.n + 1)]
        for i in range(1, W.n + 1):
            for b in range(W.A.dim):
                gens.append((0, W.token(W.A.basis(b), i)))
        return gens

    def _fill_generators(self) -> None:
        by_degree: dict = {}
        for k in self.W.basis_keys(self.Dcomm):
            by_degree.setdefault(sum(k[0]), []).append(k)
        for gdeg, g in self._generators():
            for deg in range(self.Dcomm - gdeg + 1):
                for k in by_degree.get(deg, ()):
                    self._add(supercommutator(g, self._basis_element(k)))

    def _fill_brute(self) -> None:
        keys = self.W.basis_keys(self.Dcomm)
        for a, k1 in enumerate(keys):
            for k2 in keys[a + 1:]:
                if sum(k1[0]) + sum(k2[0]) <= self.Dcomm:
                    self._add(supercommutator(self._basis_element(k1), self._basis_element(k2)))
            if 2 * sum(k1[0]) <= self.Dcomm and self.W.key_parity(k1):
                x = self._basis_element(k1)
                self._add(supercommutator(x, x))

    @property
    def commutator_rank_low(self) -> int:
        """``dim`` of the commutator span meet the degree <= D subspace."""
        return self.echelon.count_pivots_from(self.nhigh)

    @property
    def dimension(self) -> int:
        return len(self.low) - self.commutator_rank_low

    def in_commutator_span(self, f: WreathElement) -> bool:
        """Membership tester for elements of polynomial degree <= D."""
        if f.poly_degree() > self.D:
            raise ValueError("element has polynomial degree above D")
        return self.echelon.contains(self.vector(f))

    def independent_mod(self, elements: Sequence[WreathElement]) -> bool:
        """Whether ``elements`` stay linearly independent in the quotient."""
        ech = Echelon(len(self.keys))
        for row in self.echelon.rows_with_pivot_in(len(self.keys)):
            ech.add(row)
        base = ech.rank
        for f in elements:
            ech.add(self.vector(f))
        return ech.rank == base + len(elements)


def cocenter_truncated(A: FrobeniusAlgebra, n: int, D: int, Dcomm: int, mode: str = "generators") -> tuple:
    """``(dimension, membership tester)`` of the truncated cocenter."""
    tc = TruncatedCocenter(WreathAlgebra(A, n), D, Dcomm, mode)
    return tc.dimension, tc.in_commutator_span


def partitions_into_cycles(n: int) -> Iterable[tuple]:
    """Weakly decreasing tuples of positive integers summing to ``n``."""
    def rec(rest, top):
        if rest == 0:
            yield ()
            return
        for k in range(min(rest, top), 0, -1):
            for tail in rec(rest - k, k):
                yield (k,) + tail
    yield from rec(n, n)


def claimed_basis_labels(A: FrobeniusAlgebra, n: int, D: int) -> list:
    """Sequences of triples ``(n_i, r_i, beta_i)`` strictly descending in the PBW
    order (equal neighbours allowed for even ``beta``), ``sum n_i = n``,
    ``sum r_i <= D``."""
    from .pbw import is_normal

    out = []
    ncoc = A.ncoc

    def rec(prefix, rest_n, rest_d):
        if rest_n == 0:
            out.append(tuple(prefix))
            return
        for m in range(1, rest_n + 1):
            for r in range(rest_d + 1):
                for b in range(ncoc):
                    t = (m, r, b)
                    cand = prefix + [t]
                    if is_normal(A, cand):
                        rec(cand, rest_n - m, rest_d - r)

    rec([], n, D)
    return out


def claimed_basis_element(W: WreathAlgebra, label: Sequence[tuple], averaged: bool = True) -> WreathElement:
    """Juxtaposition of cycle elements, the first factor on the highest strands."""
    A = W.A
    pieces = []
    for m, r, b in label:
        sub = WreathAlgebra(A, m)
        pieces.append(cycle_element(sub, r, A.lift(A.coc_basis(b)), averaged))
    acc = pieces[-1]
    used = acc.n
    for piece in reversed(pieces[:-1]):
        target = WreathAlgebra(A, used + piece.n) if used + piece.n != W.n else W
        acc = juxtapose(target, piece, acc)
        used += piece.n
    if acc.parent is not W:
        acc = WreathElement(W, acc.terms)
    return acc
