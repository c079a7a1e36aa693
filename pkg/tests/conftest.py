"""Shared helpers: a sympy mirror of the polynomial and operator layer.

The mirror is deliberately naive (symbolic substitution and differentiation)
so that it can serve as an independent oracle for the exact engine.
"""

import random

import pytest
import sympy as sp

from bisphere.polyalg import LaurentPoly, Rational

S = sp.symbols("s1:7")


def to_sympy(p: LaurentPoly):
    expr = sp.Integer(0)
    for e, c in p.terms.items():
        term = sp.Rational(int(c.numerator), int(c.denominator))
        for x, a in zip(S, e):
            term *= x ** a
        expr += term
    return sp.expand(expr)


def from_sympy(expr, n: int) -> LaurentPoly:
    expr = sp.expand(expr)
    if expr == 0:
        return LaurentPoly.zero(n)
    poly = sp.Poly(expr * sp.Mul(*[x ** 20 for x in S[:n]]), *S[:n])
    terms = {}
    for mono, c in poly.terms():
        c = sp.Rational(c)
        terms[tuple(a - 20 for a in mono)] = Rational(int(c.p), int(c.q))
    return LaurentPoly(n, terms)


def sym_reflect(f, i):
    x = S[i - 1]
    return f.subs(x, -x)


def sym_dunkl(f, i, mu):
    """Gauged single-axis Dunkl operator d_i + mu_i (1 - R_i)/s_i."""
    x = S[i - 1]
    m = sp.Rational(int(mu[i - 1].numerator), int(mu[i - 1].denominator))
    return sp.expand(sp.diff(f, x) + m * sp.cancel((f - sym_reflect(f, i)) / x))


@pytest.fixture
def rng():
    return random.Random(1234)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for k in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[k])
