from itertools import combinations

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from bisphere import model
from bisphere.model import ModelParams, all_subsets
from bisphere.operators import (
    InvVar,
    MulVar,
    Reflect,
    Scalar,
    Scale,
    Sum,
    anticommutator,
    apply,
    compose,
    equal_on_degree,
    op_sum,
)
from bisphere.polyalg import LaurentPoly, Rational, monomials_up_to, sum_of_squares
from conftest import S, from_sympy, sym_dunkl, sym_reflect, to_sympy

P2 = ModelParams.of(Rational(1, 2), Rational(1, 3))
P3 = ModelParams.of(Rational(1, 2), Rational(1, 3), Rational(1, 4))


def test_params_validation():
    with pytest.raises(ValueError):
        ModelParams.of(Rational(1))
    with pytest.raises(ValueError):
        ModelParams.of(Rational(-1, 2), 0)
    with pytest.raises(ValueError):
        ModelParams(3, (0, 0))
    assert P3.gamma((1, 3)) == Rational(1, 2) + Rational(1, 4) + 1
    assert P3.gamma_total == Rational(1, 2) + Rational(1, 3) + Rational(1, 4) + Rational(3, 2)


def test_default_mu_vectors():
    vecs = model.default_mu_vectors(4, seed=0)
    assert len(vecs) == 5
    assert vecs[0].mu == (Rational(1, 2), Rational(1, 3), Rational(1, 4), Rational(1, 5))
    assert vecs[-1].mu == (0, 0, 0, 0)
    assert all(m >= 0 and m.denominator <= 12 for v in vecs[1:4] for m in v.mu)
    assert vecs == model.default_mu_vectors(4, seed=0)
    assert vecs != model.default_mu_vectors(4, seed=1)


def test_tilde_D_examples():
    D1 = model.tilde_D(1, P2)
    one = LaurentPoly.constant(2, 1)
    s1 = LaurentPoly.variable(2, 1)
    assert not apply(D1, one)
    assert apply(D1, s1) == one.scale(1 + 2 * P2.mu[0])
    assert apply(D1, s1 ** 2) == s1.scale(2)


def test_subset_realization_examples():
    one = LaurentPoly.constant(2, 1)
    s1, s2 = LaurentPoly.variable(2, 1), LaurentPoly.variable(2, 2)
    r1 = model.subset_realization({1}, P2)
    assert equal_on_degree(r1.D, model.tilde_D(1, P2), 2, 6)
    assert equal_on_degree(r1.x, MulVar(1), 2, 6)
    assert apply(model.subset_realization({2}, P2).x, one) == s2
    assert apply(model.subset_realization({1, 2}, P2).x, s1) == s1 ** 2 - s1 * s2


def sym_subset_D(f, A, params):
    # D_A f = sum_i D~_i R_1 ... R_{i-1} f, evaluated symbolically
    out = 0
    for i in A:
        g = f
        for j in range(1, i):
            g = sym_reflect(g, j)
        out += sym_dunkl(g, i, params.mu)
    return sp.expand(out)


@pytest.mark.parametrize("A", [(1, 2), (2, 3), (1, 3), (1, 2, 3)])
def test_subset_D_matches_symbolic(A):
    D = model.subset_realization(A, P3).D
    for e in monomials_up_to(3, 4):
        p = LaurentPoly.monomial(e)
        assert apply(D, p) == from_sympy(sym_subset_D(to_sympy(p), A, P3), 3)


def test_restricted_prefix_differs_from_full():
    full = model.subset_realization((2, 3), P3, "full").x
    restricted = model.subset_realization((2, 3), P3, "restricted").x
    assert not equal_on_degree(full, restricted, 3, 2)
    with pytest.raises(ValueError):
        model.subset_realization((1,), P3, "sideways")


def test_casimir_examples():
    for i in (1, 2, 3):
        assert model.casimir({i}, P3) == Scalar(P3.mu[i - 1])
        assert equal_on_degree(model.constructed_casimir({i}, P3), Scalar(P3.mu[i - 1]), 3, 6)
    assert model.casimir((), P3) == Scalar(Rational(-1, 2))


def test_scasimir_on_kernel_element():
    # s1 - (gamma_1/gamma_2) s2 spans K_1 for n = 2
    psi = LaurentPoly.variable(2, 1) - LaurentPoly.variable(2, 2).scale(P2.gamma(1) / P2.gamma(2))
    assert not apply(model.subset_realization((1, 2), P2).D, psi)
    S = model.scasimir((1, 2), P2)
    assert apply(S, psi) == psi.scale(1 + P2.gamma_total - Rational(1, 2))


def test_symmetry_M_examples():
    assert equal_on_degree(model.symmetry_M((1, 2), P2), model.casimir((1, 2), P2), 2, 8)
    assert model.symmetry_M({2}, P3) == Scalar(P3.mu[1])
    img = apply(model.symmetry_M((1, 3), P3), LaurentPoly.variable(3, 2))
    assert img.is_polynomial()


def test_qa_equals_ma_n3():
    for A in all_subsets(3):
        assert equal_on_degree(model.symmetry_M(A, P3), model.casimir(A, P3), 3, 5,
                               require_polynomial_images=True)


def test_hamiltonian_constant():
    # the scalar term -(n-1)(n-3)/4 at n = 2
    assert -model.hamiltonian_constant(2) == Rational(1, 4)
    assert model.hamiltonian_constant(3) == 0


def test_hamiltonian_identity_n3():
    params = ModelParams.of(1, Rational(1, 2), Rational(1, 3))
    assert equal_on_degree(model.hamiltonian_rhs(params), model.hamiltonian(params), 3, 6,
                           require_polynomial_images=True)


def test_hamiltonian_on_ground_state():
    params = ModelParams.of(Rational(1, 2), Rational(1, 2), Rational(1, 2))
    one = LaurentPoly.constant(3, 1)
    # gamma = 3; the printed formula gives 3, the operator gives sigma^2 - sigma = 15/4
    assert model.hamiltonian_eigenvalue_printed(0, params) == 3
    assert apply(model.hamiltonian(params), one) == one.scale(Rational(15, 4))
    assert model.hamiltonian_eigenvalue(0, params) == Rational(15, 4)


def test_hamiltonian_mu_zero_is_spherical_laplacian():
    params = ModelParams.of(0, 0, 0)
    p = LaurentPoly.variable(3, 1) * LaurentPoly.variable(3, 2)
    f = to_sympy(p)
    expected = 0
    for i, j in combinations(range(3), 2):
        L = lambda g: S[i] * sp.diff(g, S[j]) - S[j] * sp.diff(g, S[i])
        expected -= L(L(f))
    assert apply(model.hamiltonian(params), p) == from_sympy(expected, 3) == p.scale(6)


def test_potential_alone_leaves_polynomials():
    # (sum s_i^2) times the potential, applied to 1, is not a polynomial by itself
    params = ModelParams.of(Rational(1, 4), Rational(1, 4))
    pot = op_sum(*(Scale(m * (m - 1), compose(InvVar(i), InvVar(i))) for i, m in enumerate(params.mu, 1)))
    radius = Sum((compose(MulVar(1), MulVar(1)), compose(MulVar(2), MulVar(2))))
    w = equal_on_degree(compose(radius, pot), compose(radius, pot), 2, 0, require_polynomial_images=True)
    assert not w
    assert equal_on_degree(model.hamiltonian_rhs(params), model.hamiltonian(params), 2, 4,
                           require_polynomial_images=True)


def test_hamiltonian_commutes_with_reflections_n2():
    H = model.hamiltonian(P2)
    for i in (1, 2):
        assert equal_on_degree(compose(H, Reflect(i)), compose(Reflect(i), H), 2, 6)


def test_bannai_ito_rank_one_example():
    K1, K2, K3 = model.rank_one_generators(P3)
    w1, w2, w3 = model.rank_one_central(P3)
    lhs = anticommutator(K1, K2)
    assert equal_on_degree(lhs, model.bi_rhs((1, 2), (2, 3), P3), 3, 6)
    assert equal_on_degree(lhs, Sum((K3, w3)), 3, 6)


def test_bannai_ito_diagonal_and_disjoint():
    Q = lambda *A: model.casimir(A, P3)
    assert equal_on_degree(model.bi_rhs((1, 2), (1, 2), P3), Scale(2, compose(Q(1, 2), Q(1, 2))), 3, 5)
    assert equal_on_degree(model.bi_rhs((1,), (2, 3), P3), Scale(2, compose(Q(1), Q(2, 3))), 3, 5)


def test_bannai_ito_all_pairs_n3():
    for A in all_subsets(3, include_empty=True):
        for B in all_subsets(3, include_empty=True):
            assert equal_on_degree(model.bi_lhs(A, B, P3), model.bi_rhs(A, B, P3), 3, 4), (A, B)


def test_rank_one_needs_n3():
    with pytest.raises(ValueError):
        model.rank_one_generators(P2)


mus = st.lists(st.fractions(0, 3, max_denominator=6), min_size=2, max_size=2)


@settings(max_examples=15, deadline=None)
@given(mus)
def test_casimir_centrality_property(mu):
    params = ModelParams.of(*mu)
    r = model.subset_realization((1, 2), params)
    Q = model.casimir((1, 2), params)
    for z in (r.D, r.x, r.E):
        assert equal_on_degree(compose(Q, z), compose(z, Q), 2, 4)
