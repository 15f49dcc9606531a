"""Exact linear algebra over the rationals.

Matrices are dense and immutable; entries are :class:`fractions.Fraction`.
Elimination is delegated to the integer kernels in :mod:`frobw.kernels`
(rows are cleared of denominators first), so nothing here ever rounds.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Optional, Sequence

from . import kernels

Vector = tuple  # tuple of Fraction


def to_fraction(x) -> Fraction:
    """Parse ints, Fractions and ``"num/den"`` strings into a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"not an exact scalar: {x!r}")


def fstr(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def vadd(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def vsub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v: Sequence) -> Vector:
    c = Fraction(c)
    return tuple(c * a for a in v)


def is_zero(v: Sequence) -> bool:
    return not any(v)


def _integer_row(v: Sequence) -> list:
    den = 1
    for x in v:
        if x:
            den = lcm(den, Fraction(x).denominator)
    return [int(Fraction(x) * den) for x in v]


@dataclass(frozen=True)
class Mat:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry count does not match shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], cols: Optional[int] = None) -> "Mat":
        ents = tuple(tuple(to_fraction(x) for x in r) for r in rows)
        if cols is None:
            cols = len(ents[0]) if ents else 0
        return cls(len(ents), cols, ents)

    @classmethod
    def identity(cls, n: int) -> "Mat":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @classmethod
    def zero(cls, rows: int, cols: int) -> "Mat":
        return cls(rows, cols, tuple(zero_vector(cols) for _ in range(rows)))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows, tuple(self.col(j) for j in range(self.cols)))

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum((a * b for a, b in zip(r, v) if a and b), Fraction(0)) for r in self.entries)

    def __matmul__(self, other: "Mat") -> "Mat":
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        cols = [other.col(j) for j in range(other.cols)]
        return Mat(
            self.rows,
            other.cols,
            tuple(
                tuple(sum((a * b for a, b in zip(r, c) if a and b), Fraction(0)) for c in cols)
                for r in self.entries
            ),
        )

    def __eq__(self, other):
        if not isinstance(other, Mat):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        body = "; ".join(" ".join(fstr(x) for x in r) for r in self.entries)
        return f"Mat({self.rows}x{self.cols}: {body})"


def _as_mat(M) -> Mat:
    return M if isinstance(M, Mat) else Mat.from_rows(M)


def rref(M) -> tuple:
    """Reduced row-echelon form and pivot columns."""
    M = _as_mat(M)
    rows, pivots = kernels.rref_int([_integer_row(r) for r in M.entries], M.cols)
    out = []
    for r, p in zip(rows, pivots):
        d = r[p]
        out.append(tuple(Fraction(x, d) for x in r))
    out.extend(zero_vector(M.cols) for _ in range(M.rows - len(out)))
    return Mat(M.rows, M.cols, tuple(out)), list(pivots)


def rank(M) -> int:
    return len(rref(M)[1])


def kernel_basis(M) -> list:
    """Basis of the null space, one vector per free column."""
    M = _as_mat(M)
    R, pivots = rref(M)
    pivset = set(pivots)
    basis = []
    for f in range(M.cols):
        if f in pivset:
            continue
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -R[i, f]
        basis.append(tuple(v))
    return basis


def solve(M, b: Sequence) -> Optional[Vector]:
    """A solution of ``M x = b``, or ``None`` when the system is inconsistent."""
    M = _as_mat(M)
    if len(b) != M.rows:
        raise ValueError("dimension mismatch")
    aug = Mat(M.rows, M.cols + 1, tuple(r + (to_fraction(x),) for r, x in zip(M.entries, b)))
    R, pivots = rref(aug)
    if pivots and pivots[-1] == M.cols:
        return None
    x = [Fraction(0)] * M.cols
    for i, p in enumerate(pivots):
        x[p] = R[i, M.cols]
    return tuple(x)


def inverse(M) -> Mat:
    M = _as_mat(M)
    n = M.rows
    if M.cols != n:
        raise ValueError("not square")
    aug = Mat(n, 2 * n, tuple(r + unit_vector(n, i) for i, r in enumerate(M.entries)))
    R, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return Mat(n, n, tuple(R.row(i)[n:] for i in range(n)))


def determinant(M) -> Fraction:
    """Determinant by fraction-based elimination (small matrices only)."""
    M = _as_mat(M)
    a = [list(r) for r in M.entries]
    n = M.rows
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            det = -det
        det *= a[c][c]
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] / a[c][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


class Echelon:
    """Incrementally grown span of rational vectors.

    ``order`` optionally permutes columns before elimination, which decides
    which coordinates become pivots (earlier in ``order`` = pivot first).
    """

    def __init__(self, ncols: int, order: Optional[Sequence[int]] = None):
        self.ncols = ncols
        self.order = list(order) if order is not None else list(range(ncols))
        if sorted(self.order) != list(range(ncols)):
            raise ValueError("order must be a permutation of the columns")
        self._rows: list = []
        self._pivots: list = []
        self._supports: list = []

    def _permute(self, v: Sequence) -> list:
        if len(v) != self.ncols:
            raise ValueError("dimension mismatch")
        ints = _integer_row(v)
        return [ints[j] for j in self.order]

    def add(self, v: Sequence) -> bool:
        """Add ``v``; True when it enlarged the span."""
        return kernels.insert_row(self._permute(v), self._rows, self._pivots, self._supports) >= 0

    def add_sparse(self, entries: dict) -> bool:
        v = [0] * self.ncols
        for j, x in entries.items():
            v[j] = x
        return self.add(v)

    def contains(self, v: Sequence) -> bool:
        r = kernels.reduce_vector(self._permute(v), self._rows, self._pivots, self._supports)
        return not any(r)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def pivot_columns(self) -> list:
        """Pivots as original column indices."""
        return [self.order[p] for p in self._pivots]

    def rows(self) -> list:
        """Basis rows (original column order), each scaled to pivot 1."""
        out = []
        for r, p in zip(self._rows, self._pivots):
            d = r[p]
            v = [Fraction(0)] * self.ncols
            for j, x in enumerate(r):
                if x:
                    v[self.order[j]] = Fraction(x, d)
            out.append(tuple(v))
        return out

    def rows_with_pivot_in(self, positions: int) -> list:
        """Rows whose pivot lies among the first ``positions`` ordered columns."""
        rows = self.rows()
        return [r for r, p in zip(rows, self._pivots) if p < positions]

    def count_pivots_from(self, positions: int) -> int:
        """Number of rows whose pivot lies at ordered position >= ``positions``."""
        return sum(1 for p in self._pivots if p >= positions)
