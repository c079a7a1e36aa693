"""Separated wavefunctions in closed form via Jacobi polynomials.

A label (m; j_1, ..., j_{n-1}) with j_1 + ... + j_{n-1} = m picks one
element of the kernel space K_m(R^n).  The closed form is built from the
inside out: a two-variable factor in (s_1, s_2) first, then one Jacobi
"ladder" operator per extra axis s_3, ..., s_n.  All coefficients are
exact; floating point only enters the normalization constants.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial
from typing import Dict, List, Sequence, Tuple

import mpmath

from .ckfischer import compositions, kernel_basis, nested_ck, pochhammer, poly_rank, prefix_realization
from .model import ModelParams, hamiltonian, hamiltonian_eigenvalue, scasimir, scasimir_eigenvalue
from .operators import apply
from .precision import working_precision
from .polyalg import Rational, LaurentPoly, as_rational, sum_of_squares


@dataclass(frozen=True)
class WavefunctionLabel:
    m: int
    j: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "j", tuple(self.j))
        if any(x < 0 for x in self.j):
            raise ValueError(f"negative label entry in {self.j}")
        if sum(self.j) != self.m:
            raise ValueError(f"label {self.j} does not sum to m={self.m}")

    @classmethod
    def of(cls, *j: int) -> "WavefunctionLabel":
        return cls(sum(j), tuple(j))

    def __str__(self) -> str:
        return f"m={self.m};j=" + ",".join(map(str, self.j))


def labels(n: int, m: int) -> List[WavefunctionLabel]:
    return [WavefunctionLabel(m, j) for j in compositions(m, n - 1)]


# -- Jacobi polynomials ----------------------------------------------------------------

class JacobiGuardError(ZeroDivisionError):
    pass


@dataclass(frozen=True)
class JacobiPoly:
    degree: int
    alpha: Rational
    beta: Rational
    coeffs: Tuple[Rational, ...]  # ascending powers of x

    def __call__(self, x) -> Rational:
        x = as_rational(x)
        v = Rational(0)
        for c in reversed(self.coeffs):
            v = v * x + c
        return v


def _guard(alpha: Rational, nn: int) -> None:
    if any(alpha + 1 + k == 0 for k in range(nn)):
        raise JacobiGuardError(f"(alpha+1)_k vanishes for alpha={alpha}, degree {nn}")


def jacobi(nn: int, alpha, beta) -> JacobiPoly:
    """P_nn^{(alpha, beta)} from its terminating 2F1 series."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    if nn < 0:
        raise ValueError("negative degree")
    _guard(alpha, nn)
    lead = pochhammer(alpha + 1, nn) / factorial(nn)
    coeffs = [Rational(0)] * (nn + 1)
    for k in range(nn + 1):
        t = lead * pochhammer(-nn, k) * pochhammer(nn + alpha + beta + 1, k)
        t /= pochhammer(alpha + 1, k) * factorial(k) * 2 ** k
        # ((1 - x)/2)^k expanded
        for l in range(k + 1):
            coeffs[l] += t * comb(k, l) * (-1) ** l
    return JacobiPoly(nn, alpha, beta, tuple(coeffs))


def homogenized_jacobi(nn: int, alpha, beta) -> LaurentPoly:
    """(X+Y)^nn P_nn((X-Y)/(X+Y)) as a polynomial in (X, Y).

    Uses (a+1)_n/n! X^n 2F1(-n, -n-beta; a+1; -Y/X).
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    if nn < 0:
        return LaurentPoly.zero(2)
    _guard(alpha, nn)
    lead = pochhammer(alpha + 1, nn) / factorial(nn)
    terms = {}
    for k in range(nn + 1):
        c = lead * pochhammer(-nn, k) * pochhammer(-nn - beta, k)
        c /= pochhammer(alpha + 1, k) * factorial(k)
        terms[(nn - k, k)] = c * (-1) ** k
    return LaurentPoly(2, terms)


def substitute_xy(h: LaurentPoly, k: int, n: int) -> LaurentPoly:
    """h(X, Y) with X = s_1^2 + ... + s_{k-1}^2 and Y = s_k^2, inside n variables."""
    X = sum_of_squares(n, k - 1)
    Y = LaurentPoly.variable(n, k, 2)
    out = LaurentPoly.zero(n)
    for (a, b), c in h.terms.items():
        out = out + (X ** a) * (Y ** b) * c
    return out


def _jac(nn: int, alpha, beta, k: int, n: int) -> LaurentPoly:
    return substitute_xy(homogenized_jacobi(nn, alpha, beta), k, n)


# -- closed forms -------------------------------------------------------------------------

def ladder(k: int, f: LaurentPoly, j_prev: int, j_k: int, params: ModelParams,
           strict_as_printed: bool = False) -> LaurentPoly:
    """Apply the k-th Jacobi ladder operator (k >= 3) to f in K_{j_prev}(R^{k-1}).

    In the odd case the printed second Jacobi parameter reads gamma_4; the
    default uses gamma_k, which coincides with it at k = 4.
    """
    n = params.n
    gk = params.gamma(k)
    G = params.gamma(range(1, k))
    c, odd = divmod(j_k, 2)
    pref = Rational(factorial(c)) / pochhammer(gk, c)
    r = prefix_realization(k - 1, params)
    Rf = apply(r.R, f)
    sk = LaurentPoly.variable(n, k)
    if not odd:
        out = _jac(c, gk - 1, j_prev + G - 1, k, n) * f
        if c:
            out = out + sk * _jac(c - 1, gk, j_prev + G, k, n) * apply(r.x, Rf)
    else:
        if strict_as_printed:
            if n < 4:
                raise ValueError("the printed odd ladder refers to gamma_4, undefined for n < 4")
            a2 = params.gamma(4)
        else:
            a2 = gk
        out = _jac(c, gk - 1, j_prev + G, k, n) * apply(r.x, f)
        ratio = (j_prev + c + G) / (c + gk)
        out = out - sk * _jac(c, a2, j_prev + G - 1, k, n) * Rf * ratio
    return out.scale(pref)


def two_variable_factor(j1: int, params: ModelParams) -> LaurentPoly:
    """Q_{j_1}(s_1, s_2)."""
    n = params.n
    g1, g2 = params.gamma(1), params.gamma(2)
    a, odd = divmod(j1, 2)
    pref = Rational(factorial(a)) / pochhammer(g2, a)
    s1, s2 = LaurentPoly.variable(n, 1), LaurentPoly.variable(n, 2)
    if not odd:
        out = _jac(a, g2 - 1, g1 - 1, 2, n)
        if a:
            out = out + s1 * s2 * _jac(a - 1, g2, g1, 2, n)
    else:
        out = s1 * _jac(a, g2 - 1, g1, 2, n) - s2 * _jac(a, g2, g1 - 1, 2, n) * ((a + g1) / (a + g2))
    return out.scale(pref)


def closed_form_psi(label: WavefunctionLabel, params: ModelParams,
                    strict_as_printed: bool = False) -> LaurentPoly:
    j = label.j
    if len(j) != params.n - 1:
        raise ValueError(f"label needs {params.n - 1} entries for n={params.n}")
    f = two_variable_factor(j[0], params)
    for k in range(3, params.n + 1):
        f = ladder(k, f, sum(j[:k - 2]), j[k - 2], params, strict_as_printed)
    return f


# -- cross validation and eigenvalues -----------------------------------------------------

@dataclass(frozen=True)
class CrossValidation:
    label: WavefunctionLabel
    outcome: str  # "exact" | "proportional" | "mismatch"
    ratio: Rational | None = None


def proportionality(p: LaurentPoly, q: LaurentPoly) -> Rational | None:
    """The rational r with p = r q, or None."""
    if not q:
        return Rational(1) if not p else None
    if not p:
        return Rational(0)
    e = next(iter(q.terms))
    r = p.coefficient(e) / q.terms[e]
    return r if r and p == q.scale(r) else None


def cross_validate(label: WavefunctionLabel, params: ModelParams,
                   strict_as_printed: bool = False) -> CrossValidation:
    """Closed form versus the nested-CK basis element of the same label."""
    closed = closed_form_psi(label, params, strict_as_printed)
    ck = nested_ck(label.j, params)
    r = proportionality(closed, ck)
    if r is None:
        return CrossValidation(label, "mismatch")
    return CrossValidation(label, "exact" if r == 1 else "proportional", r)


class EigenCheckError(AssertionError):
    def __init__(self, message: str, residual: LaurentPoly):
        super().__init__(f"{message}; residual {residual.to_text()}")
        self.residual = residual


@dataclass(frozen=True)
class EigenValues:
    scasimir_eigenvalue: Rational
    hamiltonian_eigenvalue: Rational


def measured_eigenvalue(op, psi: LaurentPoly) -> Tuple[Rational | None, LaurentPoly]:
    image = apply(op, psi)
    return proportionality(image, psi), image


def eigen_check(label: WavefunctionLabel, params: ModelParams, hamiltonian_value=None,
                psi: LaurentPoly | None = None) -> EigenValues:
    """Check S psi = (m + gamma - 1/2) psi and H psi = lambda psi exactly.

    ``hamiltonian_value`` defaults to sigma^2 - sigma - (n-1)(n-3)/4 with
    sigma the sCasimir eigenvalue; pass another rational to test a different
    formula.  Returns the two eigenvalues; raises EigenCheckError with the
    residual on failure.
    """
    if psi is None:
        psi = closed_form_psi(label, params)
    n = params.n
    sigma = scasimir_eigenvalue(label.m, params)
    residual = apply(scasimir(range(1, n + 1), params), psi) - psi.scale(sigma)
    if residual:
        raise EigenCheckError(f"sCasimir eigenvalue {sigma} fails for {label}", residual)
    lam = hamiltonian_eigenvalue(label.m, params) if hamiltonian_value is None else as_rational(hamiltonian_value)
    residual = apply(hamiltonian(params), psi) - psi.scale(lam)
    if residual:
        raise EigenCheckError(f"Hamiltonian eigenvalue {lam} fails for {label}", residual)
    return EigenValues(sigma, lam)


def closed_form_rank(n: int, m: int, params: ModelParams) -> int:
    return poly_rank([closed_form_psi(l, params) for l in labels(n, m)])


# -- normalization ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Normalization:
    nu1: mpmath.mpf
    eta: Dict[int, mpmath.mpf]

    @property
    def factor(self):
        """nu_1/sqrt(2) * prod eta_k."""
        v = self.nu1 / mpmath.sqrt(2)
        for k in sorted(self.eta):
            v *= self.eta[k]
        return v


def _mp(q: Rational):
    return mpmath.mpf(q.numerator) / q.denominator


def _level_constant(c: int, odd: bool, g_top: Rational, g_low: Rational, shift: int):
    """(g_top)_c sqrt(Gamma(c+J+g_low+g_top) / (c! Gamma(c+g_top) Gamma(c+J+g_low))), parity-corrected."""
    base = c + shift + g_low
    v = _mp(pochhammer(g_top, c)) * mpmath.sqrt(
        mpmath.gamma(_mp(base + g_top))
        / (mpmath.factorial(c) * mpmath.gamma(_mp(c + g_top)) * mpmath.gamma(_mp(base)))
    )
    if odd:
        v *= mpmath.sqrt(_mp((c + g_top) / base))
    return v


def normalization_constants(label: WavefunctionLabel, params: ModelParams,
                            digits: int | None = None) -> Normalization:
    """nu_1 and eta_3..eta_n at working precision (default 50 digits).

    eta_k is evaluated with the level-k quantities j_[k-2], gamma_k,
    gamma_[k-1] and gamma_[k].
    """
    j = label.j
    with mpmath.workdps(working_precision(digits)):
        a, odd = divmod(j[0], 2)
        nu1 = _level_constant(a, bool(odd), params.gamma(2), params.gamma(1), 0)
        eta = {}
        for k in range(3, params.n + 1):
            c, odd = divmod(j[k - 2], 2)
            eta[k] = _level_constant(c, bool(odd), params.gamma(k), params.gamma(range(1, k)), sum(j[:k - 2]))
        return Normalization(nu1, eta)
