"""Verification suites: a catalog of named checks and the code that runs them.

Each check produces one :class:`Record` per case (parameter vector, subset,
label, ...).  Records come out in catalog order, so a report depends only
on the configuration and the seed.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Callable, Dict, Iterator, List, Optional, Sequence, Tuple

import mpmath

from . import ckfischer as ckf
from . import integrals, model, wavefn
from .model import ModelParams, all_subsets
from .operators import (
    MulVar,
    Op,
    Reflect,
    Scalar,
    Scale,
    anticommutator,
    commutator,
    compose,
    equal_on_degree,
    vanishes_on_degree,
)
from .polyalg import LaurentPoly, Rational, format_rational, monomial_exponents
from .precision import working_precision

SUITES = (
    "polyalg", "osp", "scasimir", "qa-eq-ma", "hamiltonian", "bannai-ito",
    "ck", "fischer", "identities23", "wavefunctions", "eigen", "gram", "norms",
)
SELECTABLE = SUITES[1:]


@dataclass(frozen=True)
class Check:
    id: str
    suite: str
    tag: str
    anchor: str


CATALOG: Tuple[Check, ...] = (
    Check("poly-ring-axioms", "polyalg", "plumbing", "exact Laurent arithmetic"),
    Check("poly-reflect-involution", "polyalg", "Eq. (2)", "R_i f(s_i) = f(-s_i)"),
    Check("poly-partial-reflect", "polyalg", "Eq. (2)", "are the angular momentum operators"),
    Check("poly-homogeneous-split", "polyalg", "Sec. 4", "the space of homogeneous polynomials"),
    Check("osp-single", "osp", "Eq. (6)/(7)", "This superalgebra has 5 generators"),
    Check("osp-subset", "osp", "Eq. (6)/(12)", "thus form new realizations"),
    Check("osp-mutual-commute", "osp", "Eq. (7)", "realize mutually commuting copies"),
    Check("scasimir-singleton", "scasimir", "Eq. (21)", "the one-dimensional parabose oscillator"),
    Check("scasimir-anticommute", "scasimir", "Eq. (9)", "which anticommutes with the odd generators"),
    Check("scasimir-commute", "scasimir", "Eq. (10)", "thus commutes with the even generators"),
    Check("reflection-mimics-scasimir", "scasimir", "Eq. (10)", "obeys the same commutation relations as the sCasimir"),
    Check("casimir-central", "scasimir", "Eq. (11)", "Q_i indeed commutes with every generator"),
    Check("casimir-singleton", "scasimir", "Eq. (21)", "Q_i = mu_i"),
    Check("qa-eq-ma", "qa-eq-ma", "Eq. (14)", "Q_A = M_A"),
    Check("hamiltonian-identity", "hamiltonian", "Eq. (15)", "Another explicit computation gives"),
    Check("hamiltonian-reflections", "hamiltonian", "Eq. (5)", "all reflections are also symmetries"),
    Check("hamiltonian-casimirs", "hamiltonian", "Eq. (16)", "[Q_A,H]=0 for A in [n]"),
    Check("bi-relation", "bannai-ito", "Eq. (19)", "The defining relations have been obtained"),
    Check("bi-rank-one", "bannai-ito", "Eq. (20)", "can then be rewritten as"),
    Check("ck-kernel", "ck", "CK series", "A straightforward calculation yields"),
    Check("ck-injective", "ck", "CK series", "the resulting map is an isomorphism"),
    Check("kernel-dimension", "ck", "Eq. (22)", "a basis for K_m(R^n) is provided by"),
    Check("fischer-reconstruct", "fischer", "Fischer", "the Fisher decomposition which states"),
    Check("fischer-dimension", "fischer", "Fischer", "the Fisher decomposition which states"),
    Check("ladder-identity", "identities23", "Eq. (23)", "with the help of the identities"),
    Check("closed-form-kernel", "wavefunctions", "Sec. 4", "where P_k is an operator depending on the k variables"),
    Check("closed-form-rank", "wavefunctions", "Eq. (22)", "a basis for K_m(R^n) is provided by"),
    Check("closed-form-cross-validate", "wavefunctions", "Eq. (22)", "One obtains"),
    Check("eigen-scasimir", "eigen", "Eq. (24)", "S_[n] psi_m = (m+gamma_[n]-1/2) psi_m"),
    Check("eigen-hamiltonian", "eigen", "Eq. (26)", "this is seen to imply that"),
    Check("gram-orthogonal", "gram", "Eq. (27)", "orthogonality relation of the Jacobi polynomials"),
    Check("gram-cross-degree", "gram", "Eq. (27)", "orthogonality relation of the Jacobi polynomials"),
    Check("norm-unit", "norms", "Eq. (27)", "The normalized eigenfunctions are given by"),
)
CHECKS: Dict[str, Check] = {c.id: c for c in CATALOG}


@dataclass
class SuiteConfig:
    n: int = 3
    mu: Optional[List[Rational]] = None  # None selects the default parameter vectors
    max_degree: Optional[int] = None
    suites: Tuple[str, ...] = SELECTABLE
    seed: int = 0
    precision_digits: Optional[int] = None
    reflection_prefix: str = "full"
    strict_as_printed: bool = False
    max_m: Optional[int] = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("n must be at least 2")
        if self.max_degree is not None and self.max_degree < 1:
            raise ValueError("max degree must be at least 1")
        if self.mu is not None:
            self.mu = [Rational(m) for m in self.mu]
            if len(self.mu) != self.n:
                raise ValueError(f"expected {self.n} values of mu, got {len(self.mu)}")
            if any(m < 0 for m in self.mu):
                raise ValueError("mu values must be non-negative")
        unknown = set(self.suites) - set(SUITES)
        if unknown:
            raise ValueError(f"unknown suites: {', '.join(sorted(unknown))}")
        if self.reflection_prefix not in model.PREFIX_MODES:
            raise ValueError(f"reflection prefix must be one of {model.PREFIX_MODES}")

    @property
    def degree(self) -> int:
        if self.max_degree is not None:
            return self.max_degree
        return 8 if self.n <= 3 else 6

    def param_vectors(self) -> List[ModelParams]:
        if self.mu is not None:
            return [ModelParams(self.n, tuple(self.mu))]
        return model.default_mu_vectors(self.n, self.seed)

    def m_limit(self, default: int) -> int:
        return default if self.max_m is None else self.max_m


@dataclass
class Record:
    check: str
    tag: str
    suite: str
    n: int
    mu: str
    case: str
    status: str
    detail: str = ""
    counterexample: str = ""
    elapsed_ms: float = 0.0

    def to_json(self, timing: bool = True) -> str:
        d = {
            "check": self.check, "tag": self.tag, "suite": self.suite, "n": self.n,
            "mu": self.mu, "case": self.case, "status": self.status,
        }
        if self.detail:
            d["detail"] = self.detail
        if self.counterexample:
            d["counterexample"] = self.counterexample
        if timing:
            d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return json.dumps(d, ensure_ascii=False)


@dataclass
class SuiteReport:
    records: List[Record] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.records)

    def failures(self) -> List[Record]:
        return [r for r in self.records if r.status != "pass"]

    def lines(self, timing: bool = True) -> List[str]:
        return [r.to_json(timing) for r in self.records]

    def summary(self) -> List[str]:
        out = []
        by_suite: Dict[str, List[int]] = {}
        for r in self.records:
            tally = by_suite.setdefault(r.suite, [0, 0])
            tally[0 if r.status == "pass" else 1] += 1
        for suite in SUITES:
            if suite in by_suite:
                ok, bad = by_suite[suite]
                out.append(f"# {suite:<14} {ok:>5} pass {bad:>5} fail")
        total = len(self.records)
        bad = len(self.failures())
        out.append(f"# total          {total - bad:>5} pass {bad:>5} fail")
        out.append("# status: " + ("PASS" if self.passed else "FAIL"))
        return out

    def render(self, timing: bool = True) -> str:
        return "\n".join(self.lines(timing) + self.summary()) + "\n"


# -- helpers -----------------------------------------------------------------------------------

def _subset_text(A) -> str:
    return "{" + ",".join(map(str, A)) + "}"


def _witness(w) -> Tuple[bool, str]:
    return bool(w), "" if w else w.describe()


def _rng(cfg: SuiteConfig, check: str, params: ModelParams) -> random.Random:
    return random.Random(f"{cfg.seed}:{check}:{params.label()}")


def _random_rational(rng: random.Random) -> Rational:
    return Rational(rng.randint(-9, 9), rng.randint(1, 6))


def random_homogeneous(n: int, m: int, rng: random.Random, k: Optional[int] = None) -> LaurentPoly:
    """Random homogeneous degree-m polynomial in s_1..s_k, living in n variables."""
    k = n if k is None else k
    terms = {}
    for e in monomial_exponents(k, m):
        if rng.random() < 0.7:
            terms[e + (0,) * (n - k)] = _random_rational(rng)
    if not terms:
        terms[(m,) + (0,) * (n - 1)] = Rational(1)
    return LaurentPoly(n, terms)


def random_kernel_element(params: ModelParams, m: int, rng: random.Random) -> LaurentPoly:
    out = LaurentPoly.zero(params.n)
    for b in ckf.kernel_basis(params.n, m, params).elements:
        out = out + b.scale(_random_rational(rng))
    return out if out else ckf.kernel_basis(params.n, m, params).elements[0]


def osp_relations(r) -> List[Tuple[str, Op, Op]]:
    """The ten defining relations as (name, lhs, rhs)."""
    D, x, E, sq, D2 = r.D, r.x, r.E, r.abs_x_sq, r.D2
    return [
        ("{x,x}=2|x|^2", anticommutator(x, x), Scale(2, sq)),
        ("{D,D}=2D^2", anticommutator(D, D), Scale(2, D2)),
        ("{x,D}=2E", anticommutator(x, D), Scale(2, E)),
        ("[D,E]=D", commutator(D, E), D),
        ("[D,|x|^2]=2x", commutator(D, sq), Scale(2, x)),
        ("[E,x]=x", commutator(E, x), x),
        ("[D^2,x]=2D", commutator(D2, x), Scale(2, D)),
        ("[D^2,E]=2D^2", commutator(D2, E), Scale(2, D2)),
        ("[D^2,|x|^2]=4E", commutator(D2, sq), Scale(4, E)),
        ("[E,|x|^2]=2|x|^2", commutator(E, sq), Scale(2, sq)),
    ]


CaseResult = Tuple[str, bool, str, str]  # case, ok, detail, counterexample


# -- check bodies ----------------------------------------------------------------------------
# Each yields CaseResult tuples for one parameter vector.

def _poly_ring_axioms(cfg, params):
    rng = _rng(cfg, "poly-ring-axioms", params)
    n = params.n
    bad = ""
    for trial in range(10):
        p, q, r = (random_homogeneous(n, rng.randint(0, 3), rng) for _ in range(3))
        r = r + LaurentPoly.variable(n, 1, -1)  # one Laurent term
        if (p * q) * r != p * (q * r):
            bad = f"associativity, trial {trial}"
        elif p * (q + r) != p * q + p * r:
            bad = f"distributivity, trial {trial}"
        elif p * q != q * p or p + q != q + p:
            bad = f"commutativity, trial {trial}"
        if bad:
            break
    yield "10 random triples", not bad, "", bad


def _poly_reflect_involution(cfg, params):
    rng = _rng(cfg, "poly-reflect-involution", params)
    p = random_homogeneous(params.n, 4, rng) + random_homogeneous(params.n, 3, rng)
    for i in range(1, params.n + 1):
        yield f"axis={i}", p.reflect(i).reflect(i) == p, "", ""


def _poly_partial_reflect(cfg, params):
    rng = _rng(cfg, "poly-partial-reflect", params)
    p = random_homogeneous(params.n, 4, rng) + random_homogeneous(params.n, 5, rng)
    for i in range(1, params.n + 1):
        ok = p.reflect(i).partial(i) == -(p.partial(i).reflect(i))
        yield f"axis={i}", ok, "", ""


def _poly_homogeneous_split(cfg, params):
    rng = _rng(cfg, "poly-homogeneous-split", params)
    p = sum((random_homogeneous(params.n, d, rng) for d in range(5)), LaurentPoly.zero(params.n))
    parts = sum((p.homogeneous_component(d) for d in range(5)), LaurentPoly.zero(params.n))
    yield "degrees 0..4", parts == p, "", ""


def _osp_single(cfg, params):
    D = cfg.degree
    for i in range(1, params.n + 1):
        # the bare one-axis copy, no reflection prefix
        sq = compose(MulVar(i), MulVar(i))
        r = model.Realization(model.tilde_D(i, params), MulVar(i), model.tilde_E(i, params), Reflect(i), sq)
        for name, lhs, rhs in osp_relations(r):
            ok, ce = _witness(equal_on_degree(lhs, rhs, params.n, D))
            yield f"i={i};{name}", ok, "", ce


def _osp_subset(cfg, params):
    D = cfg.degree
    for A in all_subsets(params.n):
        r = model.subset_realization(A, params, cfg.reflection_prefix)
        for name, lhs, rhs in osp_relations(r):
            ok, ce = _witness(equal_on_degree(lhs, rhs, params.n, D))
            yield f"A={_subset_text(A)};{name}", ok, "", ce


def _osp_mutual(cfg, params):
    D = min(cfg.degree, 6)
    for i, j in combinations(range(1, params.n + 1), 2):
        # the bare copies, without the reflection prefix used for subsets
        gi = (("D", model.tilde_D(i, params)), ("x", MulVar(i)), ("E", model.tilde_E(i, params)))
        gj = (("D", model.tilde_D(j, params)), ("x", MulVar(j)), ("E", model.tilde_E(j, params)))
        for a_name, a in gi:
            for b_name, b in gj:
                ok, ce = _witness(vanishes_on_degree(commutator(a, b), params.n, D))
                yield f"[{a_name}_{i},{b_name}_{j}]=0", ok, "", ce


def _scasimir_singleton(cfg, params):
    D = cfg.degree
    sign = -1 if cfg.strict_as_printed else 1
    for i in range(1, params.n + 1):
        expected = Scale(sign * params.mu[i - 1], Reflect(i))
        ok, ce = _witness(equal_on_degree(model.scasimir((i,), params), expected, params.n, D))
        form = "-mu_i R_i (as printed)" if sign < 0 else "mu_i R_i"
        yield f"i={i}", ok, f"S_i = {form}", ce


def _nonempty(cfg, params):
    for A in all_subsets(params.n):
        yield A, model.subset_realization(A, params, cfg.reflection_prefix), model.scasimir(A, params, cfg.reflection_prefix)


def _scasimir_anticommute(cfg, params):
    for A, r, S in _nonempty(cfg, params):
        for name, z in (("D", r.D), ("x", r.x)):
            ok, ce = _witness(vanishes_on_degree(anticommutator(S, z), params.n, cfg.degree))
            yield f"A={_subset_text(A)};{{S,{name}}}=0", ok, "", ce


def _scasimir_commute(cfg, params):
    for A, r, S in _nonempty(cfg, params):
        for name, z in (("E", r.E), ("|x|^2", r.abs_x_sq), ("D^2", r.D2)):
            ok, ce = _witness(vanishes_on_degree(commutator(S, z), params.n, cfg.degree))
            yield f"A={_subset_text(A)};[S,{name}]=0", ok, "", ce


def _reflection_mimics(cfg, params):
    for i in range(1, params.n + 1):
        r = model.subset_realization((i,), params)
        R = Reflect(i)
        cases = [("[R,E]", commutator(R, r.E)), ("[R,|x|^2]", commutator(R, r.abs_x_sq)),
                 ("[R,D^2]", commutator(R, r.D2)), ("{R,D}", anticommutator(R, r.D)),
                 ("{R,x}", anticommutator(R, r.x))]
        for name, op in cases:
            ok, ce = _witness(vanishes_on_degree(op, params.n, cfg.degree))
            yield f"i={i};{name}=0", ok, "", ce


def _casimir_central(cfg, params):
    for A, r, _ in _nonempty(cfg, params):
        Q = model.constructed_casimir(A, params, cfg.reflection_prefix)
        for name, z in (("D", r.D), ("x", r.x), ("E", r.E)):
            ok, ce = _witness(vanishes_on_degree(commutator(Q, z), params.n, cfg.degree))
            yield f"A={_subset_text(A)};[Q,{name}]=0", ok, "", ce


def _casimir_singleton(cfg, params):
    for i in range(1, params.n + 1):
        ok, ce = _witness(equal_on_degree(
            model.constructed_casimir((i,), params), Scalar(params.mu[i - 1]), params.n, cfg.degree))
        yield f"i={i}", ok, "", ce


def _qa_eq_ma(cfg, params):
    for A in all_subsets(params.n):
        if len(A) < 2:
            continue
        w = equal_on_degree(model.symmetry_M(A, params), model.casimir(A, params, cfg.reflection_prefix),
                            params.n, cfg.degree, require_polynomial_images=True)
        ok, ce = _witness(w)
        yield f"A={_subset_text(A)}", ok, "", ce


def _hamiltonian_identity(cfg, params):
    D = min(cfg.degree, 6)
    w = equal_on_degree(model.hamiltonian(params), model.hamiltonian_rhs(params), params.n, D,
                        require_polynomial_images=True)
    ok, ce = _witness(w)
    yield f"degree<={D}", ok, f"constant (n-1)(n-3)/4={model.hamiltonian_constant(params.n)}", ce


def _hamiltonian_reflections(cfg, params):
    D = min(cfg.degree, 6)
    H = model.hamiltonian(params)
    for i in range(1, params.n + 1):
        ok, ce = _witness(vanishes_on_degree(commutator(H, Reflect(i)), params.n, D))
        yield f"[H,R_{i}]=0", ok, "", ce


def _hamiltonian_casimirs(cfg, params):
    D = min(cfg.degree, 6)
    H = model.hamiltonian(params)
    for A in all_subsets(params.n):
        if len(A) < 2:
            continue
        Q = model.casimir(A, params, cfg.reflection_prefix)
        ok, ce = _witness(vanishes_on_degree(commutator(Q, H), params.n, D))
        yield f"[Q_{_subset_text(A)},H]=0", ok, "", ce


def _bi_relation(cfg, params):
    D = min(cfg.degree, 6) if params.n >= 4 else cfg.degree
    subsets = all_subsets(params.n)
    for A in subsets:
        for B in subsets:
            w = equal_on_degree(model.bi_lhs(A, B, params, cfg.reflection_prefix),
                                model.bi_rhs(A, B, params, cfg.reflection_prefix), params.n, D)
            ok, ce = _witness(w)
            yield f"A={_subset_text(A)};B={_subset_text(B)}", ok, "", ce


def _bi_rank_one(cfg, params):
    if params.n != 3:
        return
    K1, K2, K3 = model.rank_one_generators(params)
    w1, w2, w3 = model.rank_one_central(params)
    cases = [("{K1,K2}=K3+w3", K1, K2, K3, w3), ("{K2,K3}=K1+w1", K2, K3, K1, w1),
             ("{K3,K1}=K2+w2", K3, K1, K2, w2)]
    for name, a, b, c, w in cases:
        ok, ce = _witness(equal_on_degree(anticommutator(a, b), c + w, 3, cfg.degree))
        yield name, ok, "", ce


def _ck_m(cfg, params) -> int:
    return cfg.m_limit(6 if params.n <= 4 else 4)


def _ck_kernel(cfg, params):
    for k in range(2, params.n + 1):
        for m in range(_ck_m(cfg, params) + 1):
            bad = ""
            for e in monomial_exponents(k - 1, m):
                p = LaurentPoly.monomial(e + (0,) * (params.n - k + 1))
                f = ckf.ck_extend(p, k, params, check=False)
                if not f.is_homogeneous() or not ckf.in_kernel(f, params, k):
                    bad = f"monomial {e}"
                    break
            yield f"k={k};m={m}", not bad, "", bad


def _ck_injective(cfg, params):
    rng = _rng(cfg, "ck-injective", params)
    for k in range(2, params.n + 1):
        for m in range(_ck_m(cfg, params) + 1):
            images = []
            ok = True
            for e in monomial_exponents(k - 1, m):
                p = LaurentPoly.monomial(e + (0,) * (params.n - k + 1))
                f = ckf.ck_extend(p, k, params)
                images.append(f)
                ok &= f.restrict_zero(k) == p
            q = random_homogeneous(params.n, m, rng, k - 1)
            ok &= ckf.ck_extend(q, k, params).restrict_zero(k) == q
            rank = ckf.poly_rank(images)
            ok &= rank == comb(m + k - 2, k - 2)
            yield f"k={k};m={m}", ok, f"rank={rank}", ""


def _kernel_dimension(cfg, params):
    n = params.n
    for m in range(_ck_m(cfg, params) + 1):
        kb = ckf.kernel_basis(n, m, params)
        rank = ckf.poly_rank(list(kb.elements))
        expected = ckf.kernel_dimension(n, m)
        ok = rank == expected == len(kb) and all(ckf.in_kernel(e, params) for e in kb.elements)
        yield f"m={m}", ok, f"rank={rank};expected={expected}", ""


def _fischer_reconstruct(cfg, params):
    rng = _rng(cfg, "fischer-reconstruct", params)
    for m in range(_ck_m(cfg, params) + 1):
        bad = ""
        for trial in range(25):
            p = random_homogeneous(params.n, m, rng)
            parts = ckf.fischer_decompose(p, params)
            if ckf.fischer_reassemble(parts, params) != p:
                bad = f"trial {trial}: reassembly differs"
            elif not all(ckf.in_kernel(h, params) for h in parts):
                bad = f"trial {trial}: component outside the kernel"
            if bad:
                break
        yield f"m={m};25 random", not bad, "", bad


def _fischer_dimension(cfg, params):
    n = params.n
    for m in range(_ck_m(cfg, params) + 1):
        total = sum(ckf.kernel_dimension(n, m - j) for j in range(m + 1))
        monomials = sum(1 for _ in monomial_exponents(n, m))
        yield f"m={m}", total == monomials == comb(m + n - 1, n - 1), f"sum dim K={total}", ""


def _ladder_identity(cfg, params):
    rng = _rng(cfg, "ladder-identity", params)
    for m in range(cfg.m_limit(4) + 1):
        psi = random_kernel_element(params, m, rng)
        for kind in ckf.IDENTITY_KINDS:
            bad = ""
            for alpha in range(4):
                for beta in range(4):
                    lhs, rhs = ckf.ladder_identity(kind, alpha, beta, psi, m, params,
                                                   as_printed=cfg.strict_as_printed)
                    if lhs != rhs:
                        bad = f"alpha={alpha},beta={beta}: lhs={lhs.to_text()} rhs={rhs.to_text()}"
                        break
                if bad:
                    break
            yield f"m={m};{kind}", not bad, "", bad


def _wf_m(cfg, params) -> int:
    return cfg.m_limit(5 if params.n <= 4 else 3)


def _closed_form_kernel(cfg, params):
    for m in range(_wf_m(cfg, params) + 1):
        for label in wavefn.labels(params.n, m):
            try:
                psi = wavefn.closed_form_psi(label, params, cfg.strict_as_printed)
            except (ValueError, ZeroDivisionError) as exc:
                yield str(label), False, "", str(exc)
                continue
            ok = psi.is_polynomial() and psi.is_homogeneous() and ckf.in_kernel(psi, params)
            yield str(label), ok, "", ""


def _closed_form_rank(cfg, params):
    for m in range(_wf_m(cfg, params) + 1):
        rank = ckf.poly_rank([wavefn.closed_form_psi(l, params) for l in wavefn.labels(params.n, m)])
        expected = ckf.kernel_dimension(params.n, m)
        yield f"m={m}", rank == expected, f"rank={rank};expected={expected}", ""


def _closed_form_cross(cfg, params):
    for m in range(_wf_m(cfg, params) + 1):
        for label in wavefn.labels(params.n, m):
            try:
                cv = wavefn.cross_validate(label, params, cfg.strict_as_printed)
            except (ValueError, ZeroDivisionError) as exc:
                yield str(label), False, "", str(exc)
                continue
            detail = cv.outcome + ("" if cv.ratio is None else f";ratio={format_rational(cv.ratio)}")
            yield str(label), cv.outcome != "mismatch", detail, ""


def _eigen_scasimir(cfg, params):
    S = model.scasimir(range(1, params.n + 1), params)
    for m in range(_wf_m(cfg, params) + 1):
        sigma = model.scasimir_eigenvalue(m, params)
        for label in wavefn.labels(params.n, m):
            psi = wavefn.closed_form_psi(label, params)
            residual = S(psi) - psi.scale(sigma)
            yield str(label), not residual, f"eigenvalue={format_rational(sigma)}", residual.to_text() if residual else ""


def _eigen_hamiltonian(cfg, params):
    H = model.hamiltonian(params)
    formula = model.hamiltonian_eigenvalue_printed if cfg.strict_as_printed else model.hamiltonian_eigenvalue
    for m in range(_wf_m(cfg, params) + 1):
        lam = formula(m, params)
        for label in wavefn.labels(params.n, m):
            psi = wavefn.closed_form_psi(label, params)
            measured, _ = wavefn.measured_eigenvalue(H, psi)
            ok = measured == lam
            detail = f"expected={format_rational(lam)}"
            ce = "" if ok else f"measured eigenvalue {format_rational(measured) if measured is not None else 'none'}"
            yield str(label), ok, detail, ce


def _gram_orthogonal(cfg, params):
    for m in range(cfg.m_limit(4) + 1):
        gram = integrals.degree_gram(params.n, m, params)
        bad = integrals.off_diagonal_nonzero(gram)
        ce = "; ".join(f"({i},{j})={g}" for i, j, g in bad[:3])
        yield f"m={m};{len(gram)}x{len(gram)}", not bad, "", ce


def _gram_cross(cfg, params):
    top = min(cfg.m_limit(3), 3) if cfg.max_m is None else cfg.max_m
    for m1 in range(top + 1):
        for m2 in range(m1 + 1, top + 1):
            block = integrals.cross_degree_products(params.n, m1, m2, params)
            bad = [(i, j) for i, row in enumerate(block) for j, g in enumerate(row) if not g.is_zero()]
            yield f"m={m1};m'={m2}", not bad, "", f"nonzero entries {bad[:3]}" if bad else ""


def _norm_unit(cfg, params):
    digits = working_precision(cfg.precision_digits)
    tol = mpmath.mpf(10) ** -12
    for m in range(cfg.m_limit(4) + 1):
        for label in wavefn.labels(params.n, m):
            with mpmath.workdps(digits):
                value = integrals.normalized_norm(label, params, digits)
                dev = abs(value - 1)
                ok = dev < tol
                yield str(label), ok, f"|norm-1|={mpmath.nstr(dev, 3)}", "" if ok else mpmath.nstr(value, 20)


BODIES: Dict[str, Callable] = {
    "poly-ring-axioms": _poly_ring_axioms,
    "poly-reflect-involution": _poly_reflect_involution,
    "poly-partial-reflect": _poly_partial_reflect,
    "poly-homogeneous-split": _poly_homogeneous_split,
    "osp-single": _osp_single,
    "osp-subset": _osp_subset,
    "osp-mutual-commute": _osp_mutual,
    "scasimir-singleton": _scasimir_singleton,
    "scasimir-anticommute": _scasimir_anticommute,
    "scasimir-commute": _scasimir_commute,
    "reflection-mimics-scasimir": _reflection_mimics,
    "casimir-central": _casimir_central,
    "casimir-singleton": _casimir_singleton,
    "qa-eq-ma": _qa_eq_ma,
    "hamiltonian-identity": _hamiltonian_identity,
    "hamiltonian-reflections": _hamiltonian_reflections,
    "hamiltonian-casimirs": _hamiltonian_casimirs,
    "bi-relation": _bi_relation,
    "bi-rank-one": _bi_rank_one,
    "ck-kernel": _ck_kernel,
    "ck-injective": _ck_injective,
    "kernel-dimension": _kernel_dimension,
    "fischer-reconstruct": _fischer_reconstruct,
    "fischer-dimension": _fischer_dimension,
    "ladder-identity": _ladder_identity,
    "closed-form-kernel": _closed_form_kernel,
    "closed-form-rank": _closed_form_rank,
    "closed-form-cross-validate": _closed_form_cross,
    "eigen-scasimir": _eigen_scasimir,
    "eigen-hamiltonian": _eigen_hamiltonian,
    "gram-orthogonal": _gram_orthogonal,
    "gram-cross-degree": _gram_cross,
    "norm-unit": _norm_unit,
}


def iter_records(cfg: SuiteConfig) -> Iterator[Record]:
    selected = {"polyalg", *cfg.suites}
    for check in CATALOG:
        if check.suite not in selected:
            continue
        for params in cfg.param_vectors():
            body = BODIES[check.id](cfg, params)
            while True:
                t0 = time.perf_counter()
                try:
                    case, ok, detail, ce = next(body)
                except StopIteration:
                    break
                yield Record(check.id, check.tag, check.suite, params.n, params.label(), case,
                             "pass" if ok else "fail", detail, ce,
                             (time.perf_counter() - t0) * 1000)


def run(cfg: SuiteConfig) -> SuiteReport:
    return SuiteReport(list(iter_records(cfg)))
