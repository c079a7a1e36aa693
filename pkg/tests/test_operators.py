import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from bisphere.model import ModelParams, scasimir
from bisphere.operators import (
    Compose,
    Identity,
    InvVar,
    MulVar,
    Partial,
    Reflect,
    Scalar,
    Scale,
    Sum,
    anticommutator,
    apply,
    commutator,
    compose,
    equal_on_degree,
    gauge_conjugate,
    power,
    render,
    vanishes_on_degree,
)
from bisphere.polyalg import LaurentPoly, Rational, monomials_up_to
from conftest import S, from_sympy, to_sympy

one2 = LaurentPoly.constant(2, 1)
s1 = LaurentPoly.variable(2, 1)
s2 = LaurentPoly.variable(2, 2)


def test_apply_examples():
    assert apply(compose(Partial(1), MulVar(1)), one2) == one2
    assert apply(compose(Reflect(1), MulVar(1)), s2) == -(s1 * s2)
    p = s1 ** 2 + s2.scale(Rational(1, 3))
    assert apply(Sum((Scalar(2), Scalar(3))), p) == p.scale(5)


def test_rightmost_factor_acts_first():
    # d_1 s_1 versus s_1 d_1 on a constant
    assert apply(Partial(1) * MulVar(1), one2) == one2
    assert apply(MulVar(1) * Partial(1), one2) == LaurentPoly.zero(2)


def test_commutator_examples():
    for e in monomials_up_to(2, 5):
        m = LaurentPoly.monomial(e)
        assert apply(commutator(Partial(1), MulVar(1)), m) == m
        assert not apply(commutator(Partial(1), MulVar(2)), m)
    assert not apply(anticommutator(Reflect(1), MulVar(1)), one2)


def test_gauge_conjugate_examples():
    mu = (Rational(2, 5), Rational(1, 7))
    assert apply(gauge_conjugate(Partial(1), mu), s1) == one2.scale(1 + mu[0])
    assert gauge_conjugate(MulVar(2), mu) == MulVar(2)
    assert gauge_conjugate(Reflect(1), mu) == Reflect(1)


@settings(max_examples=30, deadline=None)
@given(st.fractions(0, 3, max_denominator=9), st.integers(0, 4), st.integers(-1, 3))
def test_gauge_conjugate_matches_symbolic_conjugation(mu, a, b):
    # on s > 0 the gauge factor is a plain power s^mu
    x, y = sp.symbols("s1 s2", positive=True)
    f = x ** a * y ** b
    m = sp.Rational(mu.numerator, mu.denominator)
    expected = sp.expand(sp.simplify(sp.diff(x ** m * f, x) / x ** m))
    p = LaurentPoly.monomial((a, b))
    got = apply(gauge_conjugate(Partial(1), (Rational(mu), Rational(0))), p)
    assert to_sympy(got) == expected.subs({x: S[0], y: S[1]})


def test_equal_on_degree_examples():
    assert equal_on_degree(commutator(Partial(1), MulVar(1)), Identity(), 2, 6)
    w = equal_on_degree(compose(Reflect(1), Partial(1)), compose(Partial(1), Reflect(1)), 2, 3)
    assert not w
    assert w.monomial == (1, 0)
    assert w.lhs_image == -w.rhs_image
    assert "monomial (1, 0)" in w.describe()


def test_single_axis_scasimir_against_reflection():
    # the single-axis sCasimir is +mu_1 R_1; the opposite sign is a counterexample
    params = ModelParams.of(Rational(1, 4), Rational(1, 3))
    S1 = scasimir((1,), params)
    mu1 = params.mu[0]
    assert equal_on_degree(S1, Scale(mu1, Reflect(1)), 2, 8)
    w = equal_on_degree(S1, Scale(-mu1, Reflect(1)), 2, 8)
    assert not w and w.monomial == (0, 0)
    # brute force on s_1^k: the image is mu_1 (-1)^k s_1^k
    for k in range(9):
        p = LaurentPoly.monomial((k, 0))
        assert apply(S1, p) == p.scale(mu1 * (-1) ** k)


def test_polynomial_image_requirement():
    w = equal_on_degree(InvVar(1), InvVar(1), 2, 2, require_polynomial_images=True)
    assert not w and w.reason == "non-polynomial image"
    assert equal_on_degree(InvVar(1), InvVar(1), 2, 2)


def test_equal_on_degree_rejects_negative_degree():
    with pytest.raises(ValueError):
        equal_on_degree(Identity(), Identity(), 2, -1)


def test_power_and_vanishing():
    assert equal_on_degree(power(Reflect(2), 2), Identity(), 2, 4)
    assert vanishes_on_degree(power(Partial(1), 3), 2, 2)
    assert not vanishes_on_degree(power(Partial(1), 3), 2, 3)


def test_render():
    op = Scale(Rational(1, 2), Sum((compose(Partial(1), MulVar(1)), Reflect(2), InvVar(1))))
    assert render(op) == "(scale 1/2 (+ (* d_1 x_1) R_2 1/x_1))"


def test_composition_flattens():
    c = compose(compose(Partial(1), MulVar(1)), Reflect(1))
    assert isinstance(c, Compose) and len(c.factors) == 3


exps = st.tuples(st.integers(-2, 4), st.integers(-2, 4))
atoms = st.sampled_from([MulVar(1), MulVar(2), InvVar(1), Partial(1), Partial(2), Reflect(1), Reflect(2)])


@settings(max_examples=80, deadline=None)
@given(st.lists(atoms, min_size=1, max_size=4), exps)
def test_composition_matches_sympy(chain, e):
    f = to_sympy(LaurentPoly.monomial(e))
    for atom in reversed(chain):
        x = S[atom.i - 1]
        if isinstance(atom, MulVar):
            f = x * f
        elif isinstance(atom, InvVar):
            f = f / x
        elif isinstance(atom, Partial):
            f = sp.diff(f, x)
        else:
            f = f.subs(x, -x)
    assert apply(compose(*chain), LaurentPoly.monomial(e)) == from_sympy(f, 2)
