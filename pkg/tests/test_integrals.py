import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from bisphere import integrals
from bisphere.integrals import GammaExpr, GammaSum
from bisphere.model import ModelParams
from bisphere.polyalg import LaurentPoly, Rational
from bisphere.precision import PRECISION_ENV, working_precision
from bisphere.wavefn import WavefunctionLabel, closed_form_psi, labels

Z2 = ModelParams.of(0, 0)
P2 = ModelParams.of(Rational(1, 2), Rational(1, 3))
P3 = ModelParams.of(Rational(1, 2), Rational(1, 3), Rational(1, 4))


def mp(q):
    return mpmath.mpf(q.numerator) / q.denominator


def test_circle_examples():
    with mpmath.workdps(50):
        assert abs(integrals.monomial_sphere_integral((0, 0), Z2).evaluate() - 2 * mpmath.pi) < 1e-45
        assert abs(integrals.monomial_sphere_integral((2, 0), Z2).evaluate() - mpmath.pi) < 1e-45
        quad = mpmath.quad(lambda t: mpmath.cos(t) ** 2, [0, 2 * mpmath.pi])
        assert abs(quad - mpmath.pi) < 1e-40
    assert not integrals.monomial_sphere_integral((1, 2), Z2).coeff


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.fractions(0, 2, max_denominator=4), st.fractions(0, 2, max_denominator=4))
def test_circle_integral_matches_quadrature(a, b, m1, m2):
    params = ModelParams.of(Rational(m1), Rational(m2))
    exact = integrals.monomial_sphere_integral((2 * a, 2 * b), params).evaluate(20)
    w1, w2 = 2 * mp(Rational(m1)), 2 * mp(Rational(m2))
    with mpmath.workdps(20):
        f = lambda t: abs(mpmath.cos(t)) ** w1 * abs(mpmath.sin(t)) ** w2 * mpmath.cos(t) ** (2 * a) * mpmath.sin(t) ** (2 * b)
        quad = mpmath.quad(f, mpmath.linspace(0, 2 * mpmath.pi, 5))
    assert abs(exact - quad) < 1e-8 * max(1, abs(quad))


def test_two_sphere_integral_matches_quadrature():
    params = ModelParams.of(Rational(1, 2), 0, Rational(1, 4))
    exact = integrals.monomial_sphere_integral((2, 0, 2), params).evaluate(20)
    with mpmath.workdps(20):
        def f(th, ph):
            s = (mpmath.sin(th) * mpmath.cos(ph), mpmath.sin(th) * mpmath.sin(ph), mpmath.cos(th))
            return abs(s[0]) ** 1 * abs(s[2]) ** mpmath.mpf(0.5) * s[0] ** 2 * s[2] ** 2 * mpmath.sin(th)
        quad = mpmath.quad(f, [0, mpmath.pi / 2, mpmath.pi], mpmath.linspace(0, 2 * mpmath.pi, 5))
    assert abs(exact - quad) < 1e-8


def test_gamma_expr_canonical_form():
    g = GammaExpr.build(1, [Rational(5, 2)], [Rational(1, 2)])
    assert g.coeff == Rational(3, 4) and g.num == () and g.den == ()
    h = GammaExpr.build(2, [Rational(7, 3)], [Rational(4, 3)])
    assert h.coeff == Rational(8, 3) and not h.num and not h.den
    with pytest.raises(ValueError):
        GammaExpr.build(1, [Rational(0)])


def test_gamma_sum_cancels():
    s = GammaSum()
    s.add(GammaExpr.build(1, [Rational(3, 2)], [Rational(1, 3)]))
    # Gamma(3/2)/Gamma(1/3) = (1/2) Gamma(1/2)/Gamma(1/3) = (1/6) Gamma(1/2)/Gamma(4/3)
    s.add(GammaExpr.build(-1, [Rational(1, 2)], [Rational(4, 3)]), Rational(1, 6))
    assert s.is_zero()


def test_inner_product_examples():
    one, s1 = LaurentPoly.constant(2, 1), LaurentPoly.variable(2, 1)
    assert integrals.inner_product(one, s1, P2).is_zero()
    p1 = closed_form_psi(WavefunctionLabel.of(1), P2)
    p0 = closed_form_psi(WavefunctionLabel.of(0), P2)
    assert integrals.inner_product(p1, p0, P2).is_zero()
    with pytest.raises(ValueError):
        integrals.integrate(LaurentPoly.variable(2, 1, -2), P2)


def test_gram_examples():
    gram = integrals.degree_gram(2, 2, P2)
    assert len(gram) == 1 and not integrals.off_diagonal_nonzero(gram)
    gram = integrals.degree_gram(3, 2, P3)
    assert len(gram) == 3 and not integrals.off_diagonal_nonzero(gram)
    assert all(not gram[i][i].is_zero() for i in range(3))
    block = integrals.cross_degree_products(3, 1, 2, P3)
    assert all(g.is_zero() for row in block for g in row)


def test_off_diagonal_detects_nonorthogonal_sets():
    s1, s2 = LaurentPoly.variable(2, 1), LaurentPoly.variable(2, 2)
    gram = integrals.gram_matrix([s1 ** 2, s2 ** 2], P2)
    assert [(i, j) for i, j, _ in integrals.off_diagonal_nonzero(gram)] == [(0, 1), (1, 0)]


def test_unit_norms():
    for m in range(4):
        for label in labels(3, m):
            with mpmath.workdps(50):
                value = integrals.normalized_norm(label, P3)
                assert abs(value - 1) < mpmath.mpf(10) ** -12


def test_precision_env(monkeypatch):
    monkeypatch.setenv(PRECISION_ENV, "80")
    assert working_precision() == 80
    assert working_precision(30) == 30
    monkeypatch.delenv(PRECISION_ENV)
    assert working_precision() == 50


def test_unit_norms_four_axes():
    params = ModelParams.of(Rational(1, 4), Rational(1, 3), Rational(1, 2), Rational(1, 5))
    for m in range(3):
        for label in labels(4, m):
            with mpmath.workdps(50):
                assert abs(integrals.normalized_norm(label, params) - 1) < mpmath.mpf(10) ** -40
