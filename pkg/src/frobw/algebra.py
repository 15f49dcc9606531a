"""Graded Frobenius superalgebras given by structure constants.

An algebra is described by an :class:`AlgebraData` (basis labels, structure
constants, degrees, parities, unit and trace values) and becomes usable only
through :func:`build_algebra`, which checks every axiom and precomputes the
Gram matrix, dual basis, center, cocenter, the diamond table and kappa.

Elements of ``A`` are plain tuples of Fractions in the given basis; cocenter
classes are tuples over the cocenter basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .linalg import (
    Echelon,
    Mat,
    fstr,
    inverse,
    is_zero,
    kernel_basis,
    rank,
    solve,
    to_fraction,
    unit_vector,
    vadd,
    vscale,
    zero_vector,
)


class AxiomError(ValueError):
    """An algebra definition violates one of the Frobenius superalgebra axioms."""

    def __init__(self, axiom: str, indices: Sequence[int] = (), detail: str = ""):
        self.axiom = axiom
        self.indices = tuple(indices)
        self.detail = detail
        msg = f"axiom violated: {axiom}"
        if detail:
            msg += f" ({detail})"
        if self.indices:
            msg += f" at indices {list(self.indices)}"
        super().__init__(msg)


def sign(e: int) -> int:
    return -1 if e % 2 else 1


@dataclass(frozen=True, eq=False)
class AlgebraData:
    """Unvalidated description: ``products[(i, j)]`` lists ``(k, c)`` with
    ``b_i b_j = sum c b_k``; omitted products are zero."""

    labels: tuple
    degrees: tuple
    parities: tuple
    unit: tuple
    trace: tuple
    d: int
    products: dict = field(default_factory=dict)
    name: str = ""

    @property
    def dim(self) -> int:
        return len(self.labels)

    @classmethod
    def from_json(cls, obj: dict, name: str = "") -> "AlgebraData":
        try:
            products = {}
            for i, j, terms in obj.get("products", []):
                products[(int(i), int(j))] = tuple((int(k), to_fraction(c)) for k, c in terms)
            return cls(
                labels=tuple(str(x) for x in obj["labels"]),
                degrees=tuple(int(x) for x in obj["degrees"]),
                parities=tuple(int(x) for x in obj["parities"]),
                unit=tuple(to_fraction(x) for x in obj["unit"]),
                trace=tuple(to_fraction(x) for x in obj["trace"]),
                d=int(obj["d"]),
                products=products,
                name=name or str(obj.get("name", "")),
            )
        except (KeyError, TypeError, ValueError, AttributeError) as exc:
            raise AxiomError("shape", detail=f"malformed definition: {exc}") from exc

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "labels": list(self.labels),
            "degrees": list(self.degrees),
            "parities": list(self.parities),
            "unit": [fstr(x) for x in self.unit],
            "trace": [fstr(x) for x in self.trace],
            "d": self.d,
            "products": [
                [i, j, [[k, fstr(c)] for k, c in terms if c]]
                for (i, j), terms in sorted(self.products.items())
                if any(c for _, c in terms)
            ],
        }


def load_algebra(path) -> "FrobeniusAlgebra":
    with open(path) as fh:
        obj = json.load(fh)
    return build_algebra(AlgebraData.from_json(obj, name=Path(path).stem))


@dataclass(frozen=True)
class CocenterData:
    reps: tuple  # basis index representing each cocenter basis class
    projection: Mat  # ncoc x dim
    section: Mat  # dim x ncoc
    labels: tuple
    degrees: tuple
    parities: tuple

    @property
    def dim(self) -> int:
        return len(self.reps)


@dataclass(frozen=True)
class CenterData:
    basis: tuple  # elements of A


class FrobeniusAlgebra:
    """A validated graded Frobenius superalgebra together with its caches."""

    def __init__(self, data: AlgebraData):
        self.data = data
        self.name = data.name
        self.dim = data.dim
        self.labels = data.labels
        self.degrees = data.degrees
        self.parities = data.parities
        self.d = data.d
        self.unit = data.unit
        self.trace_values = data.trace
        n = self.dim
        table = [[() for _ in range(n)] for _ in range(n)]
        for (i, j), terms in data.products.items():
            acc = {}
            for k, c in terms:
                acc[k] = acc.get(k, Fraction(0)) + c
            table[i][j] = tuple((k, c) for k, c in sorted(acc.items()) if c)
        self._table = table
        _validate(self)
        self.gram = Mat(n, n, tuple(tuple(self.tr(self.mul_basis_vec(i, j)) for j in range(n)) for i in range(n)))
        try:
            ginv = inverse(self.gram)
        except ZeroDivisionError:
            raise AxiomError("nondegeneracy", detail="Gram singular") from None
        self._dual = tuple(ginv.row(i) for i in range(n))
        self.center = self._compute_center()
        self.cocenter = self._compute_cocenter()
        self._diamond_table = self._compute_diamond_table()
        self.kappa = self._compute_kappa()
        if not self.is_central(self.kappa):
            raise RuntimeError("kappa failed the centrality certificate")
        self.kappa_action = self._action_matrix(self.kappa)

    # -- elementary arithmetic -------------------------------------------
    def basis(self, i: int) -> tuple:
        return unit_vector(self.dim, i)

    def index(self, label: str) -> int:
        return self.labels.index(label)

    def element(self, coeffs: dict) -> tuple:
        v = [Fraction(0)] * self.dim
        for key, c in coeffs.items():
            i = key if isinstance(key, int) else self.index(key)
            v[i] += to_fraction(c)
        return tuple(v)

    def zero(self) -> tuple:
        return zero_vector(self.dim)

    def one(self) -> tuple:
        return tuple(self.unit)

    def mul_basis(self, i: int, j: int) -> tuple:
        return self._table[i][j]

    def mul_basis_vec(self, i: int, j: int) -> tuple:
        v = [Fraction(0)] * self.dim
        for k, c in self._table[i][j]:
            v[k] += c
        return tuple(v)

    def mul(self, x: Sequence, y: Sequence) -> tuple:
        out = [Fraction(0)] * self.dim
        ynz = [(j, b) for j, b in enumerate(y) if b]
        table = self._table
        for i, a in enumerate(x):
            if not a:
                continue
            row = table[i]
            for j, b in ynz:
                ab = a * b
                for k, c in row[j]:
                    out[k] += ab * c
        return tuple(out)

    def mul_many(self, *xs) -> tuple:
        acc = xs[0]
        for x in xs[1:]:
            acc = self.mul(acc, x)
        return acc

    def tr(self, x: Sequence) -> Fraction:
        return sum((a * t for a, t in zip(x, self.trace_values) if a and t), Fraction(0))

    def homogeneity(self, x: Sequence) -> Optional[tuple]:
        """``(degree, parity)`` of a nonzero homogeneous element, else None."""
        keys = {(self.degrees[i], self.parities[i]) for i, a in enumerate(x) if a}
        if len(keys) != 1:
            return None
        return keys.pop()

    def parity_components(self, x: Sequence) -> dict:
        out = {}
        for i, a in enumerate(x):
            if a:
                p = self.parities[i]
                out.setdefault(p, [Fraction(0)] * self.dim)[i] = a
        return {p: tuple(v) for p, v in out.items()}

    def supercommutator(self, x: Sequence, y: Sequence) -> tuple:
        """``xy - (-1)^{|x||y|} yx`` extended bilinearly over homogeneous parts."""
        out = self.zero()
        for px, xc in self.parity_components(x).items():
            for py, yc in self.parity_components(y).items():
                term = vadd(self.mul(xc, yc), vscale(-sign(px * py), self.mul(yc, xc)))
                out = vadd(out, term)
        return out

    def is_central(self, z: Sequence) -> bool:
        return all(is_zero(self.supercommutator(z, self.basis(i))) for i in range(self.dim))

    # -- Frobenius structure ---------------------------------------------
    def dual(self, i: int) -> tuple:
        """The dual basis element ``b_i^vee`` with ``tr(b_i^vee b_j) = delta``."""
        return self._dual[i]

    def dual_basis(self) -> list:
        return list(self._dual)

    def _compute_center(self) -> CenterData:
        n = self.dim
        basis = []
        for p in (0, 1):
            idx = [i for i in range(n) if self.parities[i] == p]
            if not idx:
                continue
            rows = []
            for i in range(n):
                s = sign(p * self.parities[i])
                cols = []
                for j in idx:
                    cols.append(vadd(self.mul_basis_vec(j, i), vscale(-s, self.mul_basis_vec(i, j))))
                for k in range(n):
                    rows.append(tuple(c[k] for c in cols))
            for kv in kernel_basis(Mat(len(rows), len(idx), tuple(rows))):
                v = [Fraction(0)] * n
                for j, c in zip(idx, kv):
                    v[j] = c
                basis.append(tuple(v))
        return CenterData(tuple(basis))

    def _compute_cocenter(self) -> CocenterData:
        n = self.dim
        # reversed column order: pivots land on late basis elements, so the
        # surviving representatives are the earliest ones
        ech = Echelon(n, order=list(reversed(range(n))))
        for i in range(n):
            for j in range(i, n):
                w = self.supercommutator(self.basis(i), self.basis(j))
                if not is_zero(w):
                    ech.add(w)
        pivots = set(ech.pivot_columns())
        reps = tuple(i for i in range(n) if i not in pivots)
        pos = {r: t for t, r in enumerate(reps)}
        m = len(reps)
        proj_cols = [None] * n
        for r in reps:
            proj_cols[r] = unit_vector(m, pos[r])
        for row in ech.rows():
            p = next(j for j in reversed(range(n)) if row[j])
            v = [Fraction(0)] * m
            for j in range(n):
                if j in pos and row[j]:
                    v[pos[j]] = -row[j] / row[p]
            proj_cols[p] = tuple(v)
        projection = Mat(m, n, tuple(tuple(proj_cols[j][t] for j in range(n)) for t in range(m)))
        section = Mat(n, m, tuple(tuple(Fraction(1) if (j == reps[t]) else Fraction(0) for t in range(m)) for j in range(n)))
        return CocenterData(
            reps=reps,
            projection=projection,
            section=section,
            labels=tuple(self.labels[r] for r in reps),
            degrees=tuple(self.degrees[r] for r in reps),
            parities=tuple(self.parities[r] for r in reps),
        )

    # -- cocenter ----------------------------------------------------------
    @property
    def ncoc(self) -> int:
        return self.cocenter.dim

    def project(self, x: Sequence) -> tuple:
        """``<x>``: cocenter coordinates of an element of A."""
        return self.cocenter.projection.apply(x)

    def lift(self, cls: Sequence) -> tuple:
        """Representative of a class, supported on the representative basis elements."""
        return self.cocenter.section.apply(cls)

    def coc_basis(self, beta: int) -> tuple:
        return unit_vector(self.ncoc, beta)

    def coc_index(self, label: str) -> int:
        return self.cocenter.labels.index(label)

    def coc_tr(self, cls: Sequence) -> Fraction:
        return self.tr(self.lift(cls))

    def coc_homogeneity(self, cls: Sequence) -> Optional[tuple]:
        keys = {(self.cocenter.degrees[b], self.cocenter.parities[b]) for b, a in enumerate(cls) if a}
        return keys.pop() if len(keys) == 1 else None

    def central_action(self, z: Sequence, cls: Sequence) -> tuple:
        """``z <a> = <z a>`` for central ``z``."""
        return self.project(self.mul(z, self.lift(cls)))

    def _action_matrix(self, z: Sequence) -> Mat:
        cols = [self.central_action(z, self.coc_basis(b)) for b in range(self.ncoc)]
        return Mat(self.ncoc, self.ncoc, tuple(tuple(c[t] for c in cols) for t in range(self.ncoc)))

    def diamond_elements(self, x: Sequence, y: Sequence) -> tuple:
        """Element-level ``x <> y = sum_c (-1)^{|y||c|} x c y c^vee``."""
        # x <> y = x * phi(y) with phi(y) = sum_c +- c y c^vee, cached on basis elements
        phi = self.__dict__.get("_phi")
        if phi is None:
            phi = self._phi = tuple(self._conjugation_sum(j) for j in range(self.dim))
        inner = [Fraction(0)] * self.dim
        for j, a in enumerate(y):
            if a:
                for k, c in phi[j]:
                    inner[k] += a * c
        return self.mul(x, inner)

    def _conjugation_sum(self, j: int) -> tuple:
        """Sparse ``sum_c (-1)^{|b_j||c|} c b_j c^vee``."""
        acc = [Fraction(0)] * self.dim
        pj = self.parities[j]
        for c in range(self.dim):
            term = self.mul(self.mul_basis_vec(c, j), self._dual[c])
            sg = sign(pj * self.parities[c])
            for k, v in enumerate(term):
                if v:
                    acc[k] += sg * v
        return tuple((k, v) for k, v in enumerate(acc) if v)

    def _compute_diamond_table(self) -> tuple:
        m = self.ncoc
        reps = self.cocenter.reps
        return tuple(
            tuple(self.project(self.diamond_elements(self.basis(reps[s]), self.basis(reps[t]))) for t in range(m))
            for s in range(m)
        )

    def diamond(self, x: Sequence, y: Sequence) -> tuple:
        """The diamond product on cocenter coordinates."""
        m = self.ncoc
        out = [Fraction(0)] * m
        tab = self._diamond_table
        for s, a in enumerate(x):
            if not a:
                continue
            for t, b in enumerate(y):
                if not b:
                    continue
                ab = a * b
                for u, c in enumerate(tab[s][t]):
                    if c:
                        out[u] += ab * c
        return tuple(out)

    def diamond_basis(self, s: int, t: int) -> tuple:
        return self._diamond_table[s][t]

    def _compute_kappa(self) -> tuple:
        out = self.zero()
        for a in range(self.dim):
            out = vadd(out, self.diamond_elements(self.basis(a), self._dual[a]))
        return out

    def kappa_power_action(self, i: int) -> Mat:
        """Matrix of ``<a> -> kappa^i <a>`` on cocenter coordinates."""
        cache = self.__dict__.setdefault("_kappa_powers", {0: Mat.identity(self.ncoc)})
        if i not in cache:
            cache[i] = self.kappa_action @ self.kappa_power_action(i - 1)
        return cache[i]

    def kappa_power(self, i: int) -> tuple:
        out = self.one()
        for _ in range(i):
            out = self.mul(out, self.kappa)
        return out

    def left_mult_matrix(self, e: Sequence) -> Mat:
        cols = [self.mul(e, self.basis(j)) for j in range(self.dim)]
        return Mat(self.dim, self.dim, tuple(tuple(c[i] for c in cols) for i in range(self.dim)))

    def invert(self, e: Sequence) -> Optional[tuple]:
        """Two-sided inverse of ``e``, or None."""
        x = solve(self.left_mult_matrix(e), self.one())
        if x is None or self.mul(x, e) != self.one():
            return None
        return x

    def __repr__(self):
        return f"FrobeniusAlgebra({self.name or '?'}, dim={self.dim}, d={self.d}, ncoc={self.ncoc})"


def _validate(A: FrobeniusAlgebra) -> None:
    data = A.data
    n = data.dim
    if not (len(data.degrees) == len(data.parities) == len(data.unit) == len(data.trace) == n) or n == 0:
        raise AxiomError("shape", detail="field lengths disagree with the basis size")
    for i, p in enumerate(data.parities):
        if p not in (0, 1):
            raise AxiomError("shape", (i,), "parity must be 0 or 1")
    for (i, j), terms in data.products.items():
        if not (0 <= i < n and 0 <= j < n) or any(not 0 <= k < n for k, _ in terms):
            raise AxiomError("shape", (i, j), "product index out of range")
    deg, par = data.degrees, data.parities
    for i in range(n):
        for j in range(n):
            for k, c in A.mul_basis(i, j):
                if deg[k] != deg[i] + deg[j] or par[k] != (par[i] + par[j]) % 2:
                    raise AxiomError("grading", (i, j, k))
    u = A.one()
    for i in range(n):
        b = A.basis(i)
        if A.mul(u, b) != b:
            raise AxiomError("unit", (i,), "1 * b_i != b_i")
        if A.mul(b, u) != b:
            raise AxiomError("unit", (i,), "b_i * 1 != b_i")
    prods = [[A.mul_basis_vec(i, j) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            bij = prods[i][j]
            for k in range(n):
                left = A.mul(bij, A.basis(k))
                right = A.mul(A.basis(i), prods[j][k])
                if left != right:
                    raise AxiomError("associativity", (i, j, k))
    for i, t in enumerate(data.trace):
        if t and par[i] != 0:
            raise AxiomError("trace-even", (i,), "trace is nonzero on an odd basis element")
        if t and deg[i] != 2 * data.d:
            raise AxiomError("trace-degree", (i,), f"trace is nonzero outside degree 2d={2 * data.d}")
    # nondegeneracy before supersymmetry, so a singular pairing is named as such
    gram = Mat(n, n, tuple(tuple(A.tr(prods[i][j]) for j in range(n)) for i in range(n)))
    if rank(gram) < n:
        raise AxiomError("nondegeneracy", detail="Gram singular")
    for i in range(n):
        for j in range(n):
            if A.tr(prods[i][j]) != sign(par[i] * par[j]) * A.tr(prods[j][i]):
                raise AxiomError("supersymmetry", (i, j))


def build_algebra(data: AlgebraData) -> FrobeniusAlgebra:
    """Validate ``data`` and return the algebra handle (or raise AxiomError)."""
    return FrobeniusAlgebra(data)


def rescale_trace(A: FrobeniusAlgebra, e: Sequence) -> FrobeniusAlgebra:
    """Same algebra with trace ``tr2(a) = tr1(e^{-1} a)``.

    ``e`` must be even, of degree 0, central and invertible. The returned
    handle is checked against the change-of-trace rules for duals, diamond
    and kappa before it is handed out.
    """
    e = tuple(to_fraction(x) for x in e)
    if any(a and (A.parities[i] or A.degrees[i]) for i, a in enumerate(e)):
        raise ValueError("rescaling element must be even of degree 0")
    if not A.is_central(e):
        raise ValueError("rescaling element must be central")
    einv = A.invert(e)
    if einv is None:
        raise ValueError("rescaling element must be invertible")
    trace2 = tuple(A.tr(A.mul(einv, A.basis(i))) for i in range(A.dim))
    data = A.data
    B = build_algebra(
        AlgebraData(
            labels=data.labels,
            degrees=data.degrees,
            parities=data.parities,
            unit=data.unit,
            trace=trace2,
            d=data.d,
            products=data.products,
            name=f"{data.name}~",
        )
    )
    for i in range(A.dim):
        if B.dual(i) != A.mul(e, A.dual(i)):
            raise RuntimeError("dual basis does not rescale by e")
    for i in range(A.dim):
        for j in range(A.dim):
            lhs = B.diamond_elements(A.basis(i), A.basis(j))
            rhs = A.mul(e, A.diamond_elements(A.basis(i), A.basis(j)))
            if lhs != rhs:
                raise RuntimeError("diamond does not rescale by e")
    if B.kappa != A.mul_many(e, e, A.kappa):
        raise RuntimeError("kappa does not rescale by e^2")
    return B
