import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from frobw.linalg import vadd, vscale
from frobw.symfunc import SymElement, canonical, h, sym_functions
from frobw.verify import _evaluate_sym, _sym_field_poly, random_class


def test_h_negative(zigzag2):
    assert h(zigzag2, -2, zigzag2.coc_basis(0)).is_zero()


def test_h_zero_is_trace(zigzag2):
    c = zigzag2.coc_basis(zigzag2.coc_index("c1"))
    assert h(zigzag2, 0, c) == 1


def test_h_linear(zigzag2):
    A = zigzag2
    e1, e2 = A.coc_basis(A.coc_index("e1")), A.coc_basis(A.coc_index("e2"))
    assert h(A, 3, vadd(e1, e2)) == h(A, 3, e1) + h(A, 3, e2)


@pytest.mark.parametrize("name", ["field", "zigzag2", "S3", "exterior2"])
def test_e_zero_and_negative(algebras, name):
    A = algebras[name]
    S = sym_functions(A)
    for b in range(A.ncoc):
        a = A.coc_basis(b)
        assert S.e(0, a) == A.coc_tr(a)
        assert S.e(-1, a).is_zero()


def test_e1_is_h1_for_field(field):
    S = sym_functions(field)
    assert S.e(1, (1,)) == h(field, 1, (1,))


@pytest.mark.parametrize("name", ["field", "matrix2", "zigzag2", "dual_numbers", "exterior2"])
def test_p_low_orders(algebras, name):
    A = algebras[name]
    S = sym_functions(A)
    for b in range(A.ncoc):
        a = A.coc_basis(b)
        assert S.p(0, a).is_zero()
        assert S.p(1, a) == S.e(1, a)


def test_newton_identity_field(field):
    S = sym_functions(field)
    e1, e2 = S.e(1, (1,)), S.e(2, (1,))
    assert S.p(2, (1,)) == e1 * e1 - e2.scale(2)


def test_ell0_cases_field(field):
    S = sym_functions(field)
    one = (Fraction(1),)
    assert S.ell0(0, one) == S.p(1, one).scale(-1)
    assert S.ell0(2, one) == S.p(3, one).scale(Fraction(-1, 3)) + S.p(1, one).scale(Fraction(1, 12))


def test_ell0_kappa_zero(zigzag3):
    A = zigzag3
    S = sym_functions(A)
    for r in range(4):
        for b in range(A.ncoc):
            a = A.coc_basis(b)
            assert S.ell0(r, a) == S.p(r + 1, a).scale(Fraction(-1, r + 1))


def test_ell0_ignores_k(m2):
    S = sym_functions(m2)
    a = m2.coc_basis(0)
    assert S.ell0(3, a, k=0) == S.ell0(3, a, k=5)


def test_classical_oracle_field(field):
    S = sym_functions(field)
    epoly, hpoly, ppoly = _sym_field_poly(6, 6)
    for n in range(7):
        assert _evaluate_sym(S.e(n, (1,)), hpoly, 6) == epoly[n]
        assert _evaluate_sym(S.p(n, (1,)), hpoly, 6) == ppoly[n]


def test_classical_oracle_by_newton(field):
    # independent of the monomial oracle: n e_n = sum_i (-1)^(i-1) e_{n-i} p_i
    S = sym_functions(field)
    one = (Fraction(1),)
    for n in range(1, 7):
        rhs = SymElement(field)
        for i in range(1, n + 1):
            rhs = rhs + (S.e(n - i, one) * S.p(i, one)).scale(-1 if i % 2 == 0 else 1)
        assert S.e(n, one).scale(n) == rhs


def test_odd_generators_square_to_zero(exterior2):
    A = exterior2
    x = A.coc_index("x1")
    assert canonical(A, [(1, x), (1, x)])[0] == 0
    g = SymElement.generator(A, 2, x)
    assert (g * g).is_zero()
    y = SymElement.generator(A, 1, A.coc_index("x2"))
    assert g * y == (y * g).scale(-1)


@pytest.mark.parametrize("name", ["field", "matrix2", "Z3", "zigzag2", "exterior2", "clifford1^2"])
def test_duality_through_order_six(algebras, name):
    A = algebras[name]
    S = sym_functions(A)
    for N in range(7):
        for i in range(A.dim):
            for j in range(A.dim):
                assert S.duality_defect(N, A.basis(i), A.basis(j)).is_zero()


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["zigzag2", "S3", "exterior2", "dual_numbers"]), st.integers(0, 4), st.integers(0, 10**6))
def test_linearity_and_degree(algebras, name, n, seed):
    A = algebras[name]
    S = sym_functions(A)
    rng = random.Random(seed)
    x, y = random_class(rng, A), random_class(rng, A)
    c = Fraction(rng.randint(-3, 3), rng.randint(1, 3))
    xy = vadd(x, vscale(c, y))
    assert S.e(n, xy) == S.e(n, x) + S.e(n, y).scale(c)
    assert S.p(n, xy) == S.p(n, x) + S.p(n, y).scale(c)
    deg, par = A.coc_homogeneity(x)
    if n >= 1 and not S.e(n, x).is_zero():
        assert S.e(n, x).homogeneity() == (2 * A.d * (n - 1) + deg, par)
