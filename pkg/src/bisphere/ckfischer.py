"""Cauchy-Kovalevskaia extension, kernel spaces of the Dunkl-Dirac operator
and the Fischer decomposition of homogeneous polynomials.

K_m(R^k) denotes the homogeneous degree-m polynomials annihilated by the
gauged D_[k] = D_{1..k}.  Everything here is exact.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial
from typing import Iterator, List, Sequence, Tuple

from . import linalg
from .model import ModelParams, subset_realization
from .operators import apply
from .polyalg import Rational, LaurentPoly, monomial_exponents


def pochhammer(a, k: int) -> Rational:
    """Rising factorial (a)_k = a (a+1) ... (a+k-1)."""
    out = Rational(1)
    a = Rational(a)
    for i in range(k):
        out *= a + i
    return out


def compositions(m: int, parts: int) -> List[Tuple[int, ...]]:
    """Compositions of m into `parts` non-negative parts, colexicographic order."""
    def gen(total: int, k: int) -> Iterator[Tuple[int, ...]]:
        if k == 1:
            yield (total,)
            return
        for first in range(total + 1):
            for rest in gen(total - first, k - 1):
                yield (first,) + rest
    return sorted(gen(m, parts), key=lambda c: c[::-1])


def kernel_dimension(k: int, m: int) -> int:
    return comb(m + k - 2, k - 2)


def prefix_realization(k: int, params: ModelParams):
    return subset_realization(range(1, k + 1), params)


def in_kernel(p: LaurentPoly, params: ModelParams, k: int | None = None) -> bool:
    k = params.n if k is None else k
    return not apply(prefix_realization(k, params).D, p)


def x_power(p: LaurentPoly, k: int, power: int, params: ModelParams) -> LaurentPoly:
    """Apply x_[k] `power` times."""
    x = prefix_realization(k, params).x
    for _ in range(power):
        p = apply(x, p)
    return p


def ck_extend(p: LaurentPoly, k: int, params: ModelParams, check: bool = True) -> LaurentPoly:
    """CK map along s_k: homogeneous p(s_1..s_{k-1}) -> element of K_m(R^k).

    The series in powers of s_k stops once D_[k-1] has annihilated p, which
    happens after at most deg(p) + 1 steps.
    """
    if not 2 <= k <= params.n:
        raise IndexError(f"extension axis {k} outside 2..{params.n}")
    if p.n != params.n:
        raise ValueError("polynomial and model dimensions differ")
    if not p:
        return p
    if not p.is_polynomial() or not p.is_homogeneous():
        raise ValueError("ck_extend needs a homogeneous polynomial (decompose first)")
    if not p.uses_only(k - 1):
        raise ValueError(f"input may only involve s_1..s_{k - 1}")
    g = params.gamma(k)
    low = prefix_realization(k - 1, params)
    result = p
    q = p
    order = 0
    while True:
        q = apply(low.D, q)
        order += 1
        if not q:
            break
        i, odd = divmod(order, 2)
        if odd:
            c = Rational((-1) ** (i + 1), factorial(i) * 2 ** (2 * i + 1)) / pochhammer(g, i + 1)
            result = result + apply(low.R, q).shift(k, order).scale(c)
        else:
            c = Rational((-1) ** i, factorial(i) * 4 ** i) / pochhammer(g, i)
            result = result + q.shift(k, order).scale(c)
        if order > p.degree + 1:
            raise ArithmeticError("D_[k-1] failed to terminate on a homogeneous input")
    if check and not in_kernel(result, params, k):
        raise ArithmeticError("CK extension left the kernel")
    return result


def nested_ck(label: Sequence[int], params: ModelParams) -> LaurentPoly:
    """CK_n[x_[n-1]^{j_{n-1}} ... x_[2]^{j_2} CK_2[s_1^{j_1}]]."""
    n = params.n
    if len(label) != n - 1:
        raise ValueError(f"label needs {n - 1} entries")
    f = LaurentPoly.variable(n, 1, label[0])
    f = ck_extend(f, 2, params)
    for k in range(3, n + 1):
        f = ck_extend(x_power(f, k - 1, label[k - 2], params), k, params)
    return f


@dataclass(frozen=True)
class KernelBasis:
    n: int
    m: int
    labels: Tuple[Tuple[int, ...], ...]
    elements: Tuple[LaurentPoly, ...]

    def __len__(self):
        return len(self.elements)


@lru_cache(maxsize=None)
def kernel_basis(n: int, m: int, params: ModelParams) -> KernelBasis:
    """Nested-CK basis of K_m(R^n), labels in colex order."""
    if params.n != n:
        raise ValueError("params dimension differs from n")
    if m < 0:
        raise ValueError("degree must be non-negative")
    labels = tuple(compositions(m, n - 1))
    return KernelBasis(n, m, labels, tuple(nested_ck(j, params) for j in labels))


def coefficient_matrix(polys: Sequence[LaurentPoly]) -> List[List[Rational]]:
    """Rows = polynomials, columns = the union of their monomials (sorted)."""
    support = sorted({e for p in polys for e in p.terms})
    return [[p.coefficient(e) for e in support] for p in polys]


def poly_rank(polys: Sequence[LaurentPoly]) -> int:
    if not polys:
        return 0
    return linalg.rank(coefficient_matrix(polys))


def fischer_decompose(p: LaurentPoly, params: ModelParams) -> List[LaurentPoly]:
    """Return h_0..h_m with h_j in K_{m-j} and p = sum_j x_[n]^j h_j."""
    n = params.n
    if not p.is_polynomial() or not p.is_homogeneous():
        raise ValueError("fischer_decompose needs a homogeneous polynomial")
    if not p:
        return [p]
    m = p.degree
    columns, owners = [], []
    for j in range(m + 1):
        for b in kernel_basis(n, m - j, params).elements:
            columns.append(x_power(b, n, j, params))
            owners.append((j, b))
    support = list(monomial_exponents(n, m))
    A = [[col.coefficient(e) for col in columns] for e in support]
    rhs = [p.coefficient(e) for e in support]
    coeffs = linalg.solve(A, rhs)
    parts = [LaurentPoly.zero(n) for _ in range(m + 1)]
    for c, (j, b) in zip(coeffs, owners):
        if c:
            parts[j] = parts[j] + b.scale(c)
    return parts


def fischer_reassemble(parts: Sequence[LaurentPoly], params: ModelParams) -> LaurentPoly:
    out = LaurentPoly.zero(params.n)
    for j, h in enumerate(parts):
        out = out + x_power(h, params.n, j, params)
    return out


# -- the four D^a x^b identities on kernel elements -----------------------------------

IDENTITY_KINDS = ("even-even", "even-odd", "odd-even", "odd-odd")


def ladder_identity(kind: str, alpha: int, beta: int, psi: LaurentPoly, m: int,
                    params: ModelParams, as_printed: bool = False) -> Tuple[LaurentPoly, LaurentPoly]:
    """Both sides of one of the four ladder identities for psi in K_m(R^n).

    kind names the parities of the D power and the x power.  With
    ``as_printed`` the odd-even case keeps the prefactor 2^{2a}; by default it
    uses 2^{2a+1}, which is what the osp(1|2) relations give.
    """
    n = params.n
    r = prefix_realization(n, params)
    g = params.gamma_total
    P = pochhammer

    def D_pow(f, k):
        for _ in range(k):
            f = apply(r.D, f)
        return f

    def x_pow(f, k):
        if k < 0:
            return None
        return x_power(f, n, k, params)

    def scaled(c, f):
        # negative x powers only occur with a vanishing coefficient
        if not c:
            return LaurentPoly.zero(n)
        if f is None:
            raise ArithmeticError("nonzero coefficient on a negative power of x")
        return f.scale(c)

    Rpsi = apply(r.R, psi)
    if kind == "even-even":
        lhs = D_pow(x_pow(psi, 2 * beta), 2 * alpha)
        c = 4 ** alpha * P(-beta, alpha) * P(1 - m - beta - g, alpha)
        rhs = scaled(c, x_pow(psi, 2 * beta - 2 * alpha))
    elif kind == "even-odd":
        lhs = D_pow(x_pow(psi, 2 * beta + 1), 2 * alpha)
        c = 4 ** alpha * P(-beta, alpha) * P(-m - beta - g, alpha)
        rhs = scaled(c, x_pow(psi, 2 * beta + 1 - 2 * alpha))
    elif kind == "odd-even":
        lhs = apply(r.R, D_pow(x_pow(psi, 2 * beta), 2 * alpha + 1))
        two = 4 ** alpha if as_printed else 2 * 4 ** alpha
        c = -two * beta * P(1 - beta, alpha) * P(1 - m - beta - g, alpha)
        rhs = scaled(c, x_pow(Rpsi, 2 * beta - 2 * alpha - 1))
    elif kind == "odd-odd":
        lhs = apply(r.R, D_pow(x_pow(psi, 2 * beta + 1), 2 * alpha + 1))
        c = 2 * 4 ** alpha * P(-beta, alpha) * (m + beta + g) * P(1 - m - beta - g, alpha)
        rhs = scaled(c, x_pow(Rpsi, 2 * beta - 2 * alpha))
    else:
        raise ValueError(f"unknown identity kind {kind!r}")
    return lhs, rhs
