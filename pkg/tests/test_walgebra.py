import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobw.builtins import builtin, rescaled_pair
from frobw.linalg import vscale
from frobw.walgebra import (
    WElement,
    bracket,
    fm_symbolic,
    omega,
    phi,
    psi,
    random_homogeneous,
    star_symbolic,
    w1inf_bracket,
    w1inf_image,
)

L = WElement.L


def test_star_of_constants_vanishes():
    assert star_symbolic({0: 1}, {0: 1}, 3, -2) == {}


@pytest.mark.parametrize("m, n", [(0, 0), (1, 2), (-3, 4), (2, -2)])
def test_star_linear(m, n):
    expect = {(1, 0): Fraction(n - m)} if n != m else {}
    assert star_symbolic({1: 1}, {1: 1}, m, n) == expect


@pytest.mark.parametrize("n, r", [(1, 0), (3, 1), (-2, 3)])
def test_star_quadratic_rank_zero(n, r):
    assert star_symbolic({2: 1}, {r: 1}, 0, n) == {(r + 1, 0): Fraction(2 * n)}


@pytest.mark.parametrize("m", range(0, 7))
def test_fm_values(m):
    assert fm_symbolic({0: 1}, m) == ({0: Fraction(m)} if m else {})
    want = Fraction(m**3 - m, 12)
    assert fm_symbolic({2: 1}, m) == ({1: want} if want else {})


def test_fm_zero():
    assert fm_symbolic({4: 3, 2: 1, 0: 5}, 0) == {}


@pytest.mark.parametrize("m", range(1, 6))
def test_fm_odd_powers_cancel(m):
    assert fm_symbolic({1: 1, 3: 2}, m) == {}


def test_psi_values(zigzag2):
    A = zigzag2
    for a in range(A.ncoc):
        for b in range(A.ncoc):
            ab = A.diamond(A.coc_basis(a), A.coc_basis(b))
            for m in range(-3, 4):
                assert psi(L(A, m, 0, a), L(A, -m, 0, b)) == m * A.coc_tr(ab)
            for r in range(3):
                for n in range(-2, 3):
                    for s in range(3):
                        assert psi(L(A, 0, r, a), L(A, n, s, b)) == 0
                        if (r + s) % 2:
                            assert psi(L(A, 2, r, a), L(A, -2, s, b)) == 0


def test_comm1_field(field):
    assert bracket(L(field, 1, 0, 0), L(field, -1, 0, 0)) == WElement.C(field)
    assert bracket(L(field, 1, 0, 0), L(field, -1, 0, 0)).render() == "1·C"


def test_comm4_field(field):
    assert bracket(L(field, 0, 2, 0), L(field, 3, 1, 0)).render() == "6·L(3,2,1)"


def test_central_element_is_central(field):
    assert bracket(WElement.C(field), L(field, 2, 1, 0)).is_zero()


def test_kappa_zero_example(zigzag2):
    A = zigzag2
    got = bracket(L(A, 2, 1, "e1"), L(A, 3, 2, "e2"))
    # (rn - sm) = 3 - 4 = -1, times <e1> <> <e2> = -<c>
    assert got == L(A, 5, 2, "c1")


def test_even_self_bracket_vanishes(algebras):
    rng = random.Random(3)
    for name in ("matrix2", "zigzag2", "S3"):
        A = algebras[name]
        for _ in range(20):
            x = random_homogeneous(rng, A)
            if x.homogeneity()[1] == 0:
                assert bracket(x, x).is_zero()


def test_odd_even_bracket_in_exterior_algebra(exterior2):
    A = exterior2
    # <x1> <> <1> would sit in degree 1 + 0 + 2 = 3 > 2d, so it vanishes
    x = L(A, 1, 0, "x1")
    assert bracket(x, L(A, -1, 0, "1")).is_zero()
    # odd classes are symmetric under the bracket: [x, y] = [y, x]
    y = L(A, 2, 1, "x2")
    assert bracket(x, y) == bracket(y, x)


def test_omega_and_phi_examples(zigzag2):
    A = zigzag2
    assert omega(L(A, 2, 0, "e1")) == L(A, -2, 0, "e1").scale(-1)
    assert omega(WElement.C(A)) == WElement.C(A, -1)
    x = L(A, 3, 2, "c1") + WElement.C(A, 5)
    assert phi(phi(x)) == x


def test_w1inf_central_lowest_order():
    assert w1inf_bracket(1, 0, -1, 0) == ({}, 1)
    assert w1inf_bracket(0, 0, 0, 0) == ({}, 0)


@pytest.mark.parametrize("m, n", [(0, 1), (2, 3), (-1, 4)])
def test_w1inf_derivation(m, n):
    terms, central = w1inf_bracket(m, 1, n, 0)
    assert terms == ({(m + n, 0): Fraction(n)} if n else {})
    assert central == 0


def _operator_bracket_values(m, r, n, s, k):
    # w_{m,r} acts on z^k as z^m D^r with D = z d/dz: z^k -> k^r z^(m+k)
    return k**s * (n + k) ** r - k**r * (m + k) ** s


@settings(max_examples=80, deadline=None)
@given(st.integers(-4, 4), st.integers(0, 3), st.integers(-4, 4), st.integers(0, 3))
def test_w1inf_matches_differential_operators(m, r, n, s):
    terms, _ = w1inf_bracket(m, r, n, s)
    for k in range(-6, 7):
        acted = sum((c * Fraction(k) ** t for (l, t), c in terms.items()), Fraction(0))
        assert acted == _operator_bracket_values(m, r, n, s, k)


def test_w1inf_image_shift():
    assert w1inf_image(1, 1) == {(1, 0): Fraction(1), (1, 1): Fraction(1)}


def test_rescaled_pair_kappa():
    A = rescaled_pair()
    assert A.kappa == A.one()


def _triple(A, seed):
    rng = random.Random(seed)
    return [random_homogeneous(rng, A, 4, 3) for _ in range(3)]


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["zigzag2", "matrix2", "exterior2", "S3", "clifford1^2"]), st.integers(0, 10**6))
def test_super_jacobi_property(algebras, name, seed):
    A = algebras[name]
    x, y, z = _triple(A, seed)
    s = -1 if x.homogeneity()[1] * y.homogeneity()[1] else 1
    assert bracket(x, bracket(y, z)) == bracket(bracket(x, y), z) + bracket(y, bracket(x, z)).scale(s)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["zigzag3", "Z3", "exterior2", "dual_numbers"]), st.integers(0, 10**6))
def test_antisymmetry_and_gradings(algebras, name, seed):
    A = algebras[name]
    x, y, _ = _triple(A, seed)
    s = -1 if x.homogeneity()[1] * y.homogeneity()[1] else 1
    b = bracket(x, y)
    assert b == bracket(y, x).scale(-s)
    if not b.is_zero():
        hx, hy = x.homogeneity(), y.homogeneity()
        assert b.homogeneity() == (hx[0] + hy[0], hx[1] ^ hy[1])
        assert b.rank() == x.rank() + y.rank()


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["zigzag2", "matrix2", "exterior2"]), st.integers(0, 10**6))
def test_omega_phi_properties(algebras, name, seed):
    A = algebras[name]
    x, y, _ = _triple(A, seed)
    assert bracket(omega(x), omega(y)) == omega(bracket(x, y))
    assert bracket(phi(x), phi(y)) == phi(bracket(x, y)).scale(-1)


def test_bracket_vanishes_with_diamond(dual_numbers):
    A = dual_numbers
    c = A.coc_index("c")
    for m in range(-2, 3):
        for n in range(-2, 3):
            assert bracket(L(A, m, 1, c), L(A, n, 2, c)).is_zero()
