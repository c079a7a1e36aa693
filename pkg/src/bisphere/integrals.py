"""Weighted integrals over the unit sphere, exactly.

With weight prod |s_i|^{2 mu_i} (the square of the gauge factor), the
integral of an even monomial s^a over S^{n-1} is

    2 prod_i Gamma(a_i/2 + gamma_i) / Gamma(|a|/2 + gamma_[n])

and zero as soon as one exponent is odd.  Values are carried as rational
multiples of Gamma-function ratios whose arguments are shifted into (0, 1],
so that sums with a common argument class cancel by rational arithmetic.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

import mpmath

from .ckfischer import kernel_basis
from .model import ModelParams
from .precision import working_precision
from .polyalg import Rational, LaurentPoly, as_rational
from .wavefn import WavefunctionLabel, closed_form_psi, labels, normalization_constants

Key = Tuple[Tuple[Rational, ...], Tuple[Rational, ...]]


@dataclass(frozen=True)
class GammaExpr:
    """coeff * prod Gamma(num) / prod Gamma(den), kept in canonical form."""

    coeff: Rational
    num: Tuple[Rational, ...] = ()
    den: Tuple[Rational, ...] = ()

    @classmethod
    def build(cls, coeff, num: Sequence = (), den: Sequence = ()) -> "GammaExpr":
        c = as_rational(coeff)
        top, bottom = Counter(), Counter()
        for x, bucket, up in [(as_rational(a), top, True) for a in num] + [
            (as_rational(a), bottom, False) for a in den
        ]:
            if x <= 0:
                raise ValueError(f"Gamma argument {x} is not positive")
            while x > 1:
                x -= 1
                c = c * x if up else c / x
            if x != 1:
                bucket[x] += 1
        common = top & bottom
        top -= common
        bottom -= common
        if not c:
            return cls(Rational(0))
        return cls(c, tuple(sorted(top.elements())), tuple(sorted(bottom.elements())))

    @property
    def key(self) -> Key:
        return (self.num, self.den)

    def evaluate(self, digits: int | None = None):
        with mpmath.workdps(working_precision(digits)):
            v = mpmath.mpf(self.coeff.numerator) / self.coeff.denominator
            for a in self.num:
                v *= mpmath.gamma(mpmath.mpf(a.numerator) / a.denominator)
            for a in self.den:
                v /= mpmath.gamma(mpmath.mpf(a.numerator) / a.denominator)
            return +v

    def __str__(self) -> str:
        g = lambda xs: "*".join(f"G({x})" for x in xs) or "1"
        return f"{self.coeff} * {g(self.num)} / {g(self.den)}"


@dataclass
class GammaSum:
    """Finite sum of GammaExpr, grouped by canonical argument class."""

    terms: Dict[Key, Rational] = field(default_factory=dict)

    def add(self, g: GammaExpr, scale: Rational = Rational(1)) -> None:
        if not g.coeff or not scale:
            return
        v = self.terms.get(g.key, 0) + g.coeff * scale
        if v:
            self.terms[g.key] = v
        else:
            self.terms.pop(g.key, None)

    def is_zero(self) -> bool:
        return not self.terms

    def parts(self) -> List[GammaExpr]:
        return [GammaExpr(c, k[0], k[1]) for k, c in sorted(self.terms.items())]

    def evaluate(self, digits: int | None = None):
        with mpmath.workdps(working_precision(digits)):
            return mpmath.fsum(g.evaluate(digits) for g in self.parts())

    def __str__(self) -> str:
        return " + ".join(map(str, self.parts())) or "0"


def monomial_sphere_integral(a: Sequence[int], params: ModelParams) -> GammaExpr:
    a = tuple(a)
    if len(a) != params.n:
        raise ValueError("exponent vector length differs from n")
    if any(x < 0 for x in a):
        raise ValueError("exponents must be non-negative")
    if any(x & 1 for x in a):
        return GammaExpr(Rational(0))
    num = [Rational(x, 2) + params.gamma(i) for i, x in enumerate(a, start=1)]
    den = [Rational(sum(a), 2) + params.gamma_total]
    return GammaExpr.build(2, num, den)


def integrate(p: LaurentPoly, params: ModelParams) -> GammaSum:
    """Integral of p against prod |s_i|^{2 mu_i} over S^{n-1}."""
    if not p.is_polynomial():
        raise ValueError("only polynomials can be integrated")
    out = GammaSum()
    for e, c in p.terms.items():
        out.add(monomial_sphere_integral(e, params), c)
    return out


def inner_product(p: LaurentPoly, q: LaurentPoly, params: ModelParams) -> GammaSum:
    """<p G, q G> on the sphere for gauged (real) polynomials p, q."""
    return integrate(p * q, params)


def gram_matrix(polys: Sequence[LaurentPoly], params: ModelParams) -> List[List[GammaSum]]:
    return [[inner_product(p, q, params) for q in polys] for p in polys]


def off_diagonal_nonzero(gram: List[List[GammaSum]]) -> List[Tuple[int, int, GammaSum]]:
    return [
        (i, j, g)
        for i, row in enumerate(gram)
        for j, g in enumerate(row)
        if i != j and not g.is_zero()
    ]


def degree_basis(n: int, m: int, params: ModelParams, basis: str = "closed_form") -> List[LaurentPoly]:
    if basis == "kernel":
        return list(kernel_basis(n, m, params).elements)
    if basis == "closed_form":
        return [closed_form_psi(l, params) for l in labels(n, m)]
    raise ValueError(f"unknown basis {basis!r}")


def degree_gram(n: int, m: int, params: ModelParams, basis: str = "closed_form") -> List[List[GammaSum]]:
    """Gram matrix of all degree-m basis wavefunctions (labels in colex order)."""
    return gram_matrix(degree_basis(n, m, params, basis), params)


def cross_degree_products(n: int, m1: int, m2: int, params: ModelParams,
                          basis: str = "closed_form") -> List[List[GammaSum]]:
    left = degree_basis(n, m1, params, basis)
    right = degree_basis(n, m2, params, basis)
    return [[inner_product(p, q, params) for q in right] for p in left]


def normalized_norm(label: WavefunctionLabel, params: ModelParams, digits: int | None = None):
    """<Psi, Psi> for the normalized wavefunction, at working precision."""
    psi = closed_form_psi(label, params)
    with mpmath.workdps(working_precision(digits)):
        factor = normalization_constants(label, params, digits).factor
        return inner_product(psi, psi, params).evaluate(digits) * factor ** 2
