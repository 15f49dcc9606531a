"""The Lie superalgebra W(A) on C(A)[X, z, z^-1] plus a central element C.

A basis element ``L(m, r, beta)`` stands for ``<b_beta> X^r z^m`` where
``b_beta`` runs over the cocenter basis of ``A``. Central polynomials in
``kappa`` are kept symbolic as ``{(x_power, kappa_power): coeff}`` and only
act on cocenter classes at the end.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .algebra import FrobeniusAlgebra
from .linalg import fstr, to_fraction

# z carries no degree; rank is tracked separately
Z_DEGREE = 0

Poly = Dict[int, Fraction]
CentralPoly = Dict[Tuple[int, int], Fraction]


def _poly(f) -> Poly:
    if isinstance(f, dict):
        return {int(k): to_fraction(v) for k, v in f.items() if v}
    return {i: to_fraction(c) for i, c in enumerate(f) if c}


def _shifted(f: Poly, alpha: Fraction) -> dict:
    """``f(X + alpha Y)`` as ``{(x_power, y_power): coeff}``."""
    out: dict = {}
    for p, c in f.items():
        for i in range(p + 1):
            v = c * comb(p, i) * alpha**i
            if v:
                key = (p - i, i)
                out[key] = out.get(key, Fraction(0)) + v
    return out


def _mul2(f: dict, g: dict) -> dict:
    out: dict = {}
    for (a, b), c in f.items():
        for (x, y), d in g.items():
            key = (a + x, b + y)
            out[key] = out.get(key, Fraction(0)) + c * d
    return out


def star_symbolic(f, g, m: int, n: int) -> CentralPoly:
    """``f *_{m,n} g`` with ``kappa`` kept as a formal symbol.

    Returns ``{(x_power, kappa_power): coeff}``; raises ``ArithmeticError``
    if an even power of ``Y`` survives the difference.
    """
    f, g = _poly(f), _poly(g)
    half_m, half_n = Fraction(m, 2), Fraction(n, 2)
    plus = _mul2(_shifted(f, half_n), _shifted(g, -half_m))
    minus = _mul2(_shifted(f, -half_n), _shifted(g, half_m))
    out: CentralPoly = {}
    for key in set(plus) | set(minus):
        c = plus.get(key, Fraction(0)) - minus.get(key, Fraction(0))
        if not c:
            continue
        xp, yp = key
        if yp % 2 == 0:
            raise ArithmeticError(f"even Y-degree {yp} survived in star product")
        out[(xp, (yp - 1) // 2)] = c
    return out


@lru_cache(maxsize=None)
def star_monomial(r: int, s: int, m: int, n: int) -> tuple:
    """``X^r *_{m,n} X^s`` as a sorted tuple of ``((x_power, kappa_power), coeff)``."""
    return tuple(sorted(star_symbolic({r: 1}, {s: 1}, m, n).items()))


def fm_symbolic(f, m: int) -> Dict[int, Fraction]:
    """``f_(m)(X^2)`` as ``{power of X^2: coeff}``."""
    if m < 0:
        raise ValueError("f_(m) needs m >= 0")
    f = _poly(f)
    out: Dict[int, Fraction] = {}
    for p, c in f.items():
        total = sum((Fraction(m + 1 - 2 * j, 2) ** p for j in range(1, m + 1)), Fraction(0))
        if not total:
            continue
        if p % 2:
            raise ArithmeticError(f"odd power X^{p} survived in f_(m)")
        out[p // 2] = out.get(p // 2, Fraction(0)) + c * total
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=None)
def fm_monomial(p: int, m: int) -> tuple:
    return tuple(sorted(fm_symbolic({p: 1}, m).items()))


def evaluate_central(A: FrobeniusAlgebra, poly: Dict[int, Fraction]) -> tuple:
    """Element ``sum_k c_k kappa^k`` of Z(A)."""
    out = A.zero()
    for k, c in poly.items():
        out = tuple(x + c * y for x, y in zip(out, A.kappa_power(k)))
    return out


def star(f, g, m: int, n: int, A: FrobeniusAlgebra) -> Dict[int, tuple]:
    """``f *_{m,n} g`` in Z(A)[X] as ``{x_power: central element}``."""
    grouped: Dict[int, Dict[int, Fraction]] = {}
    for (xp, kp), c in star_symbolic(f, g, m, n).items():
        grouped.setdefault(xp, {})[kp] = c
    out = {}
    for xp, poly in grouped.items():
        z = evaluate_central(A, poly)
        if any(z):
            out[xp] = z
    return out


def fm_eval(f, m: int, A: FrobeniusAlgebra) -> tuple:
    """``f_(m)(kappa)`` as an element of Z(A)."""
    return evaluate_central(A, fm_symbolic(f, m))


def _kappa_times(A: FrobeniusAlgebra, k: int, cls: Sequence) -> tuple:
    if k == 0:
        return tuple(cls)
    return A.kappa_power_action(k).apply(cls)


class WElement:
    """Finite sum of ``coeff * L(m, r, beta)`` plus ``central * C``."""

    __slots__ = ("algebra", "terms", "central")

    def __init__(self, algebra: FrobeniusAlgebra, terms: Optional[dict] = None, central=0):
        self.algebra = algebra
        self.terms = {k: to_fraction(v) for k, v in (terms or {}).items() if v}
        self.central = to_fraction(central)

    @classmethod
    def L(cls, A: FrobeniusAlgebra, m: int, r: int, a) -> "WElement":
        """``L_{m,r}(a)``; ``a`` is a cocenter basis index, label or coordinate vector."""
        if r < 0:
            raise ValueError("order r must be non-negative")
        if isinstance(a, str):
            a = A.coc_index(a)
        if isinstance(a, int):
            return cls(A, {(m, r, a): 1})
        return cls(A, {(m, r, b): c for b, c in enumerate(a) if c})

    @classmethod
    def C(cls, A: FrobeniusAlgebra, coeff=1) -> "WElement":
        return cls(A, {}, coeff)

    @classmethod
    def zero(cls, A: FrobeniusAlgebra) -> "WElement":
        return cls(A)

    def classes(self) -> dict:
        """``{(m, r): cocenter coordinate vector}``."""
        out: dict = {}
        n = self.algebra.ncoc
        for (m, r, b), c in self.terms.items():
            v = out.setdefault((m, r), [Fraction(0)] * n)
            v[b] += c
        return {k: tuple(v) for k, v in out.items()}

    def is_zero(self) -> bool:
        return not self.terms and not self.central

    def __add__(self, other: "WElement") -> "WElement":
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return WElement(self.algebra, terms, self.central + other.central)

    def __neg__(self) -> "WElement":
        return self.scale(-1)

    def __sub__(self, other: "WElement") -> "WElement":
        return self + (-other)

    def scale(self, c) -> "WElement":
        c = to_fraction(c)
        return WElement(self.algebra, {k: c * v for k, v in self.terms.items()}, c * self.central)

    def __rmul__(self, c) -> "WElement":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WElement):
            return NotImplemented
        return self.terms == other.terms and self.central == other.central

    def __hash__(self):
        return hash((frozenset(self.terms.items()), self.central))

    def homogeneity(self) -> Optional[tuple]:
        """``(degree, parity)`` if homogeneous and nonzero, else None."""
        keys = {term_degree(self.algebra, t) for t in self.terms}
        if self.central:
            keys.add((0, 0))
        return keys.pop() if len(keys) == 1 else None

    def rank(self) -> Optional[int]:
        ranks = {t[0] for t in self.terms}
        if self.central:
            ranks.add(0)
        return ranks.pop() if len(ranks) == 1 else None

    def render(self) -> str:
        return render(self)

    def __repr__(self):
        return f"WElement({render(self)})"


def term_degree(A: FrobeniusAlgebra, t: tuple) -> tuple:
    """``(degree, parity)`` of ``L(m, r, beta)``."""
    m, r, b = t
    return (2 * A.d * r + A.cocenter.degrees[b] + Z_DEGREE * m, A.cocenter.parities[b])


def term_parity(A: FrobeniusAlgebra, t: tuple) -> int:
    return A.cocenter.parities[t[2]]


def psi_basis(A: FrobeniusAlgebra, x: tuple, y: tuple) -> Fraction:
    """The cocycle on two basis triples ``(m, r, beta)``, ``(n, s, gamma)``."""
    m, r, b = x
    n, s, c = y
    if m != -n:
        return Fraction(0)
    if m >= 0:
        top, sgn = m, 1
    else:
        top, sgn = n, -1
    coeffs = fm_monomial(r + s, top)
    if not coeffs:
        return Fraction(0)
    ab = A.diamond_basis(b, c)
    total = Fraction(0)
    for k, v in coeffs:
        total += v * A.coc_tr(_kappa_times(A, k, ab))
    return sgn * total


def psi(x: WElement, y: WElement) -> Fraction:
    """Bilinear extension of the cocycle to the non-central parts."""
    A = x.algebra
    total = Fraction(0)
    for t, a in x.terms.items():
        for u, b in y.terms.items():
            if t[0] == -u[0]:
                total += a * b * psi_basis(A, t, u)
    return total


def _bracket_basis_uncached(A: FrobeniusAlgebra, x: tuple, y: tuple) -> tuple:
    m, r, b = x
    n, s, c = y
    ab = A.diamond_basis(b, c)
    terms: dict = {}
    if any(ab):
        for (xp, kp), coeff in star_monomial(r, s, m, n):
            cls = _kappa_times(A, kp, ab)
            for g, v in enumerate(cls):
                if v:
                    key = (m + n, xp, g)
                    terms[key] = terms.get(key, Fraction(0)) + coeff * v
    terms = tuple(sorted((k, v) for k, v in terms.items() if v))
    return terms, psi_basis(A, x, y)


def bracket_basis(A: FrobeniusAlgebra, x: tuple, y: tuple) -> tuple:
    """Cached ``[L(x), L(y)]`` as ``(((m, r, beta), coeff), ...), central)``."""
    cache = A.__dict__.setdefault("_bracket_cache", {})
    key = (x, y)
    hit = cache.get(key)
    if hit is None:
        hit = cache[key] = _bracket_basis_uncached(A, x, y)
    return hit


def bracket(x: WElement, y: WElement) -> WElement:
    """The Lie superbracket; C is central."""
    A = x.algebra
    if y.algebra is not A:
        raise ValueError("elements belong to different algebras")
    terms: dict = {}
    central = Fraction(0)
    for t, a in x.terms.items():
        for u, b in y.terms.items():
            res, cen = bracket_basis(A, t, u)
            ab = a * b
            for k, v in res:
                terms[k] = terms.get(k, Fraction(0)) + ab * v
            central += ab * cen
    return WElement(A, terms, central)


def omega(x: WElement) -> WElement:
    """``L_{n,r}(a) -> (-1)^{n-1} L_{-n,r}(a)``, ``C -> -C``."""
    return WElement(
        x.algebra,
        {(-m, r, b): (1 if (m - 1) % 2 == 0 else -1) * c for (m, r, b), c in x.terms.items()},
        -x.central,
    )


def phi(x: WElement) -> WElement:
    """``L_{n,r}(a) -> L_{-n,r}(a)``, ``C -> C``; reverses brackets."""
    return WElement(x.algebra, {(-m, r, b): c for (m, r, b), c in x.terms.items()}, x.central)


def render(x: WElement) -> str:
    """``"2·L(1,0,e1) - 1/2·C"``-style rendering with terms in a fixed order."""
    A = x.algebra
    parts = []
    for (m, r, b) in sorted(x.terms):
        parts.append((x.terms[(m, r, b)], f"L({m},{r},{A.cocenter.labels[b]})"))
    if x.central:
        parts.append((x.central, "C"))
    if not parts:
        return "0"
    out = ""
    for i, (c, name) in enumerate(parts):
        body = f"{fstr(abs(c))}·{name}"
        if i == 0:
            out = body if c > 0 else f"-{body}"
        else:
            out += f" + {body}" if c > 0 else f" - {body}"
    return out


# -- the W_{1+infinity} series oracle ----------------------------------------

def _series_mul(f: dict, g: dict, max_u: int, max_v: int) -> dict:
    out: dict = {}
    for (a, b), c in f.items():
        for (x, y), d in g.items():
            if a + x <= max_u and b + y <= max_v:
                key = (a + x, b + y)
                out[key] = out.get(key, Fraction(0)) + c * d
    return out


def _exp_series(cu: Fraction, cv: Fraction, order: int) -> dict:
    """``exp(cu u + cv v)`` truncated at total degree ``order``."""
    out = {}
    fact = 1
    for t in range(order + 1):
        if t:
            fact *= t
        for i in range(t + 1):
            c = Fraction(comb(t, i)) * cu**i * cv ** (t - i) / fact
            if c:
                out[(i, t - i)] = out.get((i, t - i), Fraction(0)) + c
    return out


def _univariate_inverse(a: list, order: int) -> list:
    """Power-series inverse of ``a`` (``a[0] != 0``) up to ``w^order``."""
    inv = [Fraction(0)] * (order + 1)
    inv[0] = 1 / Fraction(a[0])
    for k in range(1, order + 1):
        s = sum((a[j] * inv[k - j] for j in range(1, min(k, len(a) - 1) + 1)), Fraction(0))
        inv[k] = -s / a[0]
    return inv


def _divide_by_u_plus_v(f: dict, order: int) -> dict:
    """Exact quotient of a series by ``u + v``, homogeneous part by part."""
    out: dict = {}
    for k in range(1, order + 1):
        a = [f.get((i, k - i), Fraction(0)) for i in range(k + 1)]
        q = [Fraction(0)] * k
        q[k - 1] = a[k]
        for i in range(k - 1, 0, -1):
            q[i - 1] = a[i] - q[i]
        if a[0] != q[0]:
            raise ArithmeticError("series is not divisible by u+v")
        for i, c in enumerate(q):
            if c:
                out[(i, k - 1 - i)] = c
    if f.get((0, 0)):
        raise ArithmeticError("series is not divisible by u+v")
    return out


def w1inf_bracket(m: int, r: int, n: int, s: int) -> tuple:
    """``[D^r z^m, D^s z^n]`` in the basis ``w_{l,t} = D^t z^l`` plus C.

    Returns ``({(l, t): coeff}, central)``, read off from the generating
    function of the bracket with exponentials truncated at order ``r+s+2``.
    """
    order = r + s + 2
    fr = Fraction(1)
    for i in range(2, r + 1):
        fr *= i
    fs = Fraction(1)
    for i in range(2, s + 1):
        fs *= i
    scale = fr * fs
    diff = _exp_series(Fraction(n), Fraction(0), order)
    for key, c in _exp_series(Fraction(0), Fraction(m), order).items():
        diff[key] = diff.get(key, Fraction(0)) - c
    terms = {}
    tfact = Fraction(1)
    for t in range(r + s + 1):
        if t:
            tfact *= t
        # (u+v)^t / t!
        uv = {(i, t - i): Fraction(comb(t, i)) / tfact for i in range(t + 1)}
        prod = _series_mul(diff, uv, r, s)
        c = prod.get((r, s), Fraction(0)) * scale
        if c:
            terms[(m + n, t)] = c
    central = Fraction(0)
    if m == -n:
        num = _exp_series(Fraction(-m), Fraction(0), order)
        for key, c in _exp_series(Fraction(0), Fraction(-n), order).items():
            num[key] = num.get(key, Fraction(0)) - c
        num = {k: v for k, v in num.items() if v}
        quotient = _divide_by_u_plus_v(num, order)
        # 1 - e^w = -w (1 + w/2 + w^2/6 + ...)
        fact = [Fraction(1)]
        for j in range(1, order + 2):
            fact.append(fact[-1] * j)
        e_over = [Fraction(1) / fact[j + 1] for j in range(order + 1)]
        inv = _univariate_inverse(e_over, order)
        inv_series: dict = {}
        for j, c in enumerate(inv):
            if c:
                for i in range(j + 1):
                    key = (i, j - i)
                    inv_series[key] = inv_series.get(key, Fraction(0)) - c * comb(j, i)
        prod = _series_mul(quotient, inv_series, r, s)
        central = prod.get((r, s), Fraction(0)) * scale
    return terms, central


def w1inf_image(n: int, r: int) -> dict:
    """``X^r z^n -> (D + (n+1)/2)^r z^n`` in the basis ``w_{n,t}``."""
    shift = Fraction(n + 1, 2)
    return {(n, t): Fraction(comb(r, t)) * shift ** (r - t) for t in range(r + 1)}


def w1inf_bracket_combination(x: dict, y: dict) -> tuple:
    """Bilinear extension of :func:`w1inf_bracket` to ``{(l, t): coeff}`` sums."""
    terms: dict = {}
    central = Fraction(0)
    for (m, r), a in x.items():
        for (n, s), b in y.items():
            res, cen = w1inf_bracket(m, r, n, s)
            for k, v in res.items():
                terms[k] = terms.get(k, Fraction(0)) + a * b * v
            central += a * b * cen
    return {k: v for k, v in terms.items() if v}, central


def to_w1inf(x: WElement) -> tuple:
    """Image of an element of W(field) in W_{1+infinity}."""
    terms: dict = {}
    for (m, r, b), c in x.terms.items():
        if b != 0:
            raise ValueError("to_w1inf needs the one-dimensional cocenter of the field")
        for k, v in w1inf_image(m, r).items():
            terms[k] = terms.get(k, Fraction(0)) + c * v
    return {k: v for k, v in terms.items() if v}, x.central


def random_term(rng, A: FrobeniusAlgebra, max_m: int = 4, max_r: int = 3, parity: Optional[int] = None) -> tuple:
    """A uniformly chosen basis triple ``(m, r, beta)``."""
    betas = [b for b in range(A.ncoc) if parity is None or A.cocenter.parities[b] == parity]
    return (rng.randint(-max_m, max_m), rng.randint(0, max_r), rng.choice(betas))


def random_homogeneous(rng, A: FrobeniusAlgebra, max_m: int = 4, max_r: int = 3, nterms: int = 3) -> WElement:
    """A random element homogeneous in degree, parity and rank."""
    m, r, b = random_term(rng, A, max_m, max_r)
    deg, par = term_degree(A, (m, r, b))
    candidates = [
        (m, s, g)
        for s in range(max_r + 1)
        for g in range(A.ncoc)
        if term_degree(A, (m, s, g)) == (deg, par)
    ]
    terms = {}
    for _ in range(nterms):
        t = rng.choice(candidates)
        terms[t] = terms.get(t, Fraction(0)) + rng.randint(-3, 3)
    if not any(terms.values()):
        terms = {(m, r, b): Fraction(1)}
    central = rng.randint(-2, 2) if (m == 0 and deg == 0 and par == 0) else 0
    return WElement(A, terms, central)


def term_list(x: WElement) -> Iterable:
    return sorted(x.terms.items())
