"""Operators of the reflection model on the sphere, in the gauged picture.

Every builder returns an :class:`~bisphere.operators.Op`.  Builders are
memoized on their (hashable) arguments so that repeated requests share one
tree, and with it one cache of monomial images.

Subsets of axes are passed as any iterable of 1-based ints and normalised to
sorted tuples.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

from .operators import (
    InvVar,
    MulVar,
    Op,
    Partial,
    Reflect,
    Scalar,
    Scale,
    Sum,
    anticommutator,
    commutator,
    compose,
    gauge_conjugate,
    op_sum,
)
from .polyalg import Rational, as_rational

HALF = Rational(1, 2)
Subset = Tuple[int, ...]

PREFIX_MODES = ("full", "restricted")


@dataclass(frozen=True)
class ModelParams:
    n: int
    mu: Tuple[Rational, ...]

    def __post_init__(self):
        mu = tuple(as_rational(m) for m in self.mu)
        object.__setattr__(self, "mu", mu)
        if self.n < 2:
            raise ValueError(f"dimension must be at least 2, got {self.n}")
        if len(mu) != self.n:
            raise ValueError(f"expected {self.n} parameters, got {len(mu)}")
        if any(m < 0 for m in mu):
            raise ValueError("parameters mu_i must be non-negative")

    @classmethod
    def of(cls, *mu) -> "ModelParams":
        return cls(len(mu), tuple(mu))

    def gamma(self, A: Iterable[int] | int) -> Rational:
        """gamma_A = sum over A of (mu_i + 1/2)."""
        if isinstance(A, int):
            A = (A,)
        return sum((self.mu[i - 1] + HALF for i in A), Rational(0))

    @property
    def gamma_total(self) -> Rational:
        return self.gamma(range(1, self.n + 1))

    def restrict(self, k: int) -> "ModelParams":
        return ModelParams(k, self.mu[:k])

    def label(self) -> str:
        return ",".join(f"{m.numerator}/{m.denominator}" for m in self.mu)


def subset(A: Iterable[int]) -> Subset:
    return tuple(sorted(set(A)))


def all_subsets(n: int, include_empty: bool = False) -> List[Subset]:
    out = [()] if include_empty else []
    for k in range(1, n + 1):
        out.extend(combinations(range(1, n + 1), k))
    return out


def default_mu_vectors(n: int, seed: int = 0, n_random: int = 3) -> List[ModelParams]:
    """(1/2, 1/3, ...), three seeded random vectors (denominators <= 12) and mu = 0."""
    rng = random.Random(seed * 7919 + n)
    out = [ModelParams(n, tuple(Rational(1, k + 2) for k in range(n)))]
    for _ in range(n_random):
        out.append(
            ModelParams(n, tuple(Rational(rng.randint(0, 24), rng.randint(1, 12)) for _ in range(n)))
        )
    out.append(ModelParams(n, (Rational(0),) * n))
    return out


def _check(A: Subset, n: int) -> None:
    if any(not 1 <= i <= n for i in A):
        raise IndexError(f"subset {A} not inside 1..{n}")


def _refl(axes: Iterable[int]) -> Op:
    axes = list(axes)
    if not axes:
        return Scalar(1)
    return compose(*(Reflect(j) for j in axes))


# -- single-axis pieces -------------------------------------------------------------

@lru_cache(maxsize=None)
def tilde_D(i: int, params: ModelParams) -> Op:
    """Gauged Dunkl operator d_i + (mu_i/s_i)(1 - R_i)."""
    mu = params.mu[i - 1]
    return Sum((Partial(i), Scale(mu, compose(InvVar(i), Sum((Scalar(1), Scale(-1, Reflect(i))))))))


@lru_cache(maxsize=None)
def tilde_E(i: int, params: ModelParams) -> Op:
    return Sum((compose(MulVar(i), Partial(i)), Scalar(params.gamma(i))))


@lru_cache(maxsize=None)
def dunkl_D(i: int, params: ModelParams) -> Op:
    """Ungauged odd generator d_i - (mu_i/s_i) R_i."""
    return Sum((Partial(i), Scale(-params.mu[i - 1], compose(InvVar(i), Reflect(i)))))


def dunkl_E(i: int) -> Op:
    return Sum((compose(MulVar(i), Partial(i)), Scalar(HALF)))


# -- subset realizations ----------------------------------------------------------

@dataclass(frozen=True)
class Realization:
    D: Op
    x: Op
    E: Op
    R: Op
    abs_x_sq: Op

    @property
    def D2(self) -> Op:
        return compose(self.D, self.D)


def _prefix(i: int, A: Subset, mode: str) -> List[int]:
    if mode == "full":
        return list(range(1, i))
    if mode == "restricted":
        return [j for j in A if j < i]
    raise ValueError(f"unknown reflection prefix mode {mode!r}")


@lru_cache(maxsize=None)
def _realization(A: Subset, params: ModelParams, mode: str, gauged: bool) -> Realization:
    if not A:
        raise ValueError("realizations need a nonempty subset")
    _check(A, params.n)
    D_terms, x_terms = [], []
    for i in A:
        Di = tilde_D(i, params) if gauged else dunkl_D(i, params)
        pre = _prefix(i, A, mode)
        D_terms.append(compose(Di, _refl(pre)) if pre else Di)
        x_terms.append(compose(MulVar(i), _refl(pre)) if pre else MulVar(i))
    E = op_sum(*(tilde_E(i, params) if gauged else dunkl_E(i) for i in A))
    sq = op_sum(*(compose(MulVar(i), MulVar(i)) for i in A))
    return Realization(op_sum(*D_terms), op_sum(*x_terms), E, _refl(A), sq)


def subset_realization(A: Iterable[int], params: ModelParams, reflection_prefix: str = "full") -> Realization:
    """The osp(1|2) generators D_A, x_A, E_A, R_A, |x_A|^2 (gauged)."""
    return _realization(subset(A), params, reflection_prefix, True)


def ungauged_realization(A: Iterable[int], params: ModelParams, reflection_prefix: str = "full") -> Realization:
    return _realization(subset(A), params, reflection_prefix, False)


@lru_cache(maxsize=None)
def _scasimir(A: Subset, params: ModelParams, mode: str) -> Op:
    r = _realization(A, params, mode, True)
    return Scale(HALF, Sum((commutator(r.D, r.x), Scalar(-1))))


def scasimir(A: Iterable[int], params: ModelParams, reflection_prefix: str = "full") -> Op:
    """S_A = ([D_A, x_A] - 1)/2."""
    return _scasimir(subset(A), params, reflection_prefix)


def constructed_casimir(A: Iterable[int], params: ModelParams, reflection_prefix: str = "full") -> Op:
    """S_A R_A built literally, also for singletons."""
    A = subset(A)
    return compose(_scasimir(A, params, reflection_prefix), _refl(A))


@lru_cache(maxsize=None)
def _casimir(A: Subset, params: ModelParams, mode: str) -> Op:
    if not A:
        return Scalar(-HALF)
    _check(A, params.n)
    if len(A) == 1:
        return Scalar(params.mu[A[0] - 1])
    return compose(_scasimir(A, params, mode), _refl(A))


def casimir(A: Iterable[int], params: ModelParams, reflection_prefix: str = "full") -> Op:
    """Q_A = S_A R_A, with Q_{} = -1/2 and Q_{i} = mu_i."""
    return _casimir(subset(A), params, reflection_prefix)


# -- the model's own symmetries and Hamiltonian --------------------------------------

def minus_i_J(j: int, k: int) -> Op:
    """-i J_jk = s_k d_j - s_j d_k (real)."""
    return Sum((compose(MulVar(k), Partial(j)), Scale(-1, compose(MulVar(j), Partial(k)))))


def J_squared(i: int, j: int) -> Op:
    """J_ij^2 = -(s_i d_j - s_j d_i)^2."""
    L = Sum((compose(MulVar(i), Partial(j)), Scale(-1, compose(MulVar(j), Partial(i)))))
    return Scale(-1, compose(L, L))


@lru_cache(maxsize=None)
def ungauged_symmetry_M(A: Subset, params: ModelParams) -> Op:
    mu = params.mu
    if len(A) == 1:
        return Scalar(mu[A[0] - 1])
    terms: List[Op] = [Scalar(-HALF)]
    for i in A:
        terms.append(Sum((Scalar(HALF), Scale(mu[i - 1], Reflect(i)))))
    for j, k in combinations(A, 2):
        inner = Sum((
            minus_i_J(j, k),
            Scale(-mu[j - 1], compose(MulVar(k), InvVar(j), Reflect(j))),
            Scale(mu[k - 1], compose(MulVar(j), InvVar(k), Reflect(k))),
        ))
        terms.append(compose(inner, _refl(range(j, k))))
    return compose(Sum(tuple(terms)), _refl(A))


@lru_cache(maxsize=None)
def _symmetry_M(A: Subset, params: ModelParams) -> Op:
    if len(A) < 2:
        if not A:
            raise ValueError("M_A needs a nonempty subset")
        return Scalar(params.mu[A[0] - 1])
    _check(A, params.n)
    return gauge_conjugate(ungauged_symmetry_M(A, params), params)


def symmetry_M(A: Iterable[int], params: ModelParams) -> Op:
    """Gauge conjugate of the conserved quantity M_A."""
    return _symmetry_M(subset(A), params)


def hamiltonian_constant(n: int) -> Rational:
    return Rational((n - 1) * (n - 3), 4)


@lru_cache(maxsize=None)
def hamiltonian(params: ModelParams) -> Op:
    """Gauged H = S^2 - S - (n-1)(n-3)/4 with S the total sCasimir."""
    S = scasimir(range(1, params.n + 1), params)
    return Sum((compose(S, S), Scale(-1, S), Scalar(-hamiltonian_constant(params.n))))


def _potential(params: ModelParams) -> Op:
    terms = []
    for i, mu in enumerate(params.mu, start=1):
        if mu:
            terms.append(Scale(mu, compose(InvVar(i), InvVar(i), Sum((Scalar(mu), Scale(-1, Reflect(i)))))))
    return op_sum(*terms)


def _angular(n: int) -> Op:
    return op_sum(*(J_squared(i, j) for i, j in combinations(range(1, n + 1), 2)))


@lru_cache(maxsize=None)
def ungauged_hamiltonian(params: ModelParams) -> Op:
    """H as written on the sphere: sum J_ij^2 + sum (mu_i/s_i^2)(mu_i - R_i)."""
    return Sum((_angular(params.n), _potential(params)))


@lru_cache(maxsize=None)
def hamiltonian_rhs(params: ModelParams) -> Op:
    """Gauged sum J_ij^2 + (sum s_i^2) sum (mu_i/s_i^2)(mu_i - R_i) on all of R^n."""
    n = params.n
    radius = op_sum(*(compose(MulVar(i), MulVar(i)) for i in range(1, n + 1)))
    rhs = Sum((_angular(n), compose(radius, _potential(params))))
    return gauge_conjugate(rhs, params)


@lru_cache(maxsize=None)
def gauged_sphere_hamiltonian(params: ModelParams) -> Op:
    return gauge_conjugate(ungauged_hamiltonian(params), params)


# -- Bannai-Ito relations -------------------------------------------------------------

def bi_rhs(A: Iterable[int], B: Iterable[int], params: ModelParams, reflection_prefix: str = "full") -> Op:
    """Q_{A xor B} + 2 Q_{A&B} Q_{A|B} + 2 Q_{A-B} Q_{B-A}."""
    A, B = set(A), set(B)
    Q = lambda S: casimir(S, params, reflection_prefix)
    return Sum((
        Q(A ^ B),
        Scale(2, compose(Q(A & B), Q(A | B))),
        Scale(2, compose(Q(A - B), Q(B - A))),
    ))


def bi_lhs(A: Iterable[int], B: Iterable[int], params: ModelParams, reflection_prefix: str = "full") -> Op:
    return anticommutator(casimir(A, params, reflection_prefix), casimir(B, params, reflection_prefix))


def rank_one_generators(params: ModelParams) -> Tuple[Op, Op, Op]:
    """K_1 = Q_12, K_2 = Q_23, K_3 = Q_13 for n = 3."""
    if params.n != 3:
        raise ValueError("the K_i generators are defined for n = 3")
    return casimir((1, 2), params), casimir((2, 3), params), casimir((1, 3), params)


def rank_one_central(params: ModelParams) -> Tuple[Op, Op, Op]:
    """omega_1, omega_2, omega_3 for n = 3."""
    Q = lambda *A: casimir(A, params)
    Q123 = Q(1, 2, 3)
    w = lambda a, b, c: Sum((Scale(2, compose(Q(a), Q123)), Scale(2, compose(Q(b), Q(c)))))
    return w(3, 1, 2), w(1, 2, 3), w(2, 1, 3)


# -- closed-form eigenvalues ----------------------------------------------------------

def scasimir_eigenvalue(m: int, params: ModelParams) -> Rational:
    return m + params.gamma_total - HALF


def hamiltonian_eigenvalue_printed(m: int, params: ModelParams) -> Rational:
    """(m + gamma)(m + gamma - 2), the eigenvalue formula as printed."""
    g = params.gamma_total
    return (m + g) * (m + g - 2)


def hamiltonian_eigenvalue(m: int, params: ModelParams) -> Rational:
    """sigma^2 - sigma - (n-1)(n-3)/4 with sigma the sCasimir eigenvalue."""
    s = scasimir_eigenvalue(m, params)
    return s * s - s - hamiltonian_constant(params.n)
