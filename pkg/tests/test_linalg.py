from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from frobw import _kernels_py
from frobw.linalg import Echelon, Mat, determinant, inverse, kernel_basis, rank, rref, solve

try:
    from frobw import _kernels
except ImportError:
    _kernels = None


def F(*xs):
    return tuple(Fraction(x) for x in xs)


def test_rref_identity():
    R, piv = rref(Mat.identity(3))
    assert R == Mat.identity(3)
    assert piv == [0, 1, 2]


def test_rref_zero():
    R, piv = rref([[0, 0], [0, 0]])
    assert R == Mat.zero(2, 2)
    assert piv == []


def test_rref_rank_one():
    R, piv = rref([[1, 2], [2, 4]])
    assert R.entries == (F(1, 2), F(0, 0))
    assert piv == [0]


def test_kernel_examples():
    assert kernel_basis(Mat.identity(3)) == []
    assert len(kernel_basis(Mat.zero(3, 3))) == 3
    (v,) = kernel_basis([[1, 1]])
    assert v[0] == -v[1] != 0


def test_solve_examples():
    assert solve(Mat.identity(2), [3, Fraction(1, 2)]) == F(3, Fraction(1, 2))
    assert solve([[2]], [1]) == (Fraction(1, 2),)
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


def test_inverse_and_determinant():
    M = Mat.from_rows([[2, 1], [7, 4]])
    assert inverse(M) == Mat.from_rows([[4, -1], [-7, 2]])
    assert determinant(M) == 1
    assert determinant([[1, 2], [2, 4]]) == 0


def test_echelon_with_column_order():
    e = Echelon(3, order=[2, 0, 1])
    assert e.add([1, 0, 1])
    assert not e.add([2, 0, 2])
    assert e.pivot_columns() == [2]
    assert e.contains([Fraction(1, 3), 0, Fraction(1, 3)])
    assert not e.contains([1, 0, 0])
    assert e.count_pivots_from(1) == 0


small = st.integers(min_value=-5, max_value=5)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


@given(matrices())
def test_kernel_vectors_are_annihilated(rows):
    M = Mat.from_rows(rows)
    ker = kernel_basis(M)
    assert len(ker) + rank(M) == M.cols
    for v in ker:
        assert not any(M.apply(v))


@given(matrices(), st.data())
def test_solve_recovers_consistent_rhs(rows, data):
    M = Mat.from_rows(rows)
    x = data.draw(st.lists(small, min_size=M.cols, max_size=M.cols))
    b = M.apply(x)
    y = solve(M, b)
    assert y is not None and M.apply(y) == b


@given(matrices())
def test_rank_of_transpose(rows):
    M = Mat.from_rows(rows)
    assert rank(M) == rank(M.transpose())


@settings(max_examples=60)
@given(matrices(8, 8))
def test_backends_agree(rows):
    if _kernels is None:
        return
    ncols = len(rows[0])
    assert _kernels.rref_int([list(r) for r in rows], ncols) == _kernels_py.rref_int([list(r) for r in rows], ncols)
