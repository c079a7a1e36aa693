"""Operator expressions acting on Laurent polynomials.

An operator is a small immutable tree over five kinds of atom
(multiplication by s_i, multiplication by 1/s_i, d/ds_i, the reflection
R_i and rational scalars) combined by sums, compositions and scalings.
Operators are compared by applying them to every monomial up to a degree
bound; there is no normal form.

Composition reads like operator notation: ``compose(a, b, c)`` is ``a b c``
and acts on a polynomial with ``c`` first.  The Python operators follow the
same convention: ``a * b`` composes, ``a + b`` sums, ``q * a`` scales.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .polyalg import Rational, Exponents, LaurentPoly, as_rational, format_rational, monomials_up_to


class Op:
    """Base class; subclasses are frozen dataclasses."""

    def __add__(self, other):
        other = _lift(other)
        return Sum((self, other))

    def __radd__(self, other):
        return _lift(other) + self

    def __sub__(self, other):
        return self + Scale(Rational(-1), _lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __neg__(self):
        return Scale(Rational(-1), self)

    def __mul__(self, other):
        if isinstance(other, Op):
            return compose(self, other)
        return Scale(as_rational(other), self)

    def __rmul__(self, other):
        return Scale(as_rational(other), self)

    def __call__(self, p: LaurentPoly) -> LaurentPoly:
        return apply(self, p)

    def __str__(self) -> str:
        return render(self)


def _lift(x) -> Op:
    if isinstance(x, Op):
        return x
    return Scalar(as_rational(x))


@dataclass(frozen=True)
class MulVar(Op):
    i: int


@dataclass(frozen=True)
class InvVar(Op):
    i: int


@dataclass(frozen=True)
class Partial(Op):
    i: int


@dataclass(frozen=True)
class Reflect(Op):
    i: int


@dataclass(frozen=True)
class Scalar(Op):
    q: Rational

    def __post_init__(self):
        object.__setattr__(self, "q", as_rational(self.q))


def Identity() -> Scalar:
    return Scalar(Rational(1))


# Composite nodes keep a per-node cache of monomial images.  They compare by
# identity: structural equality of large trees is never needed, and hashing
# them recursively would dominate the cost of a verification sweep.

@dataclass(frozen=True, eq=False)
class Sum(Op):
    terms: Tuple[Op, ...]
    _cache: Dict = field(default_factory=dict, repr=False, compare=False)


@dataclass(frozen=True, eq=False)
class Compose(Op):
    factors: Tuple[Op, ...]
    _cache: Dict = field(default_factory=dict, repr=False, compare=False)


@dataclass(frozen=True, eq=False)
class Scale(Op):
    q: Rational
    expr: Op
    _cache: Dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "q", as_rational(self.q))


def compose(*ops: Op) -> Op:
    flat = []
    for op in ops:
        if isinstance(op, Compose):
            flat.extend(op.factors)
        else:
            flat.append(op)
    if len(flat) == 1:
        return flat[0]
    return Compose(tuple(flat))


def op_sum(*ops: Op) -> Op:
    if not ops:
        return Scalar(Rational(0))
    if len(ops) == 1:
        return ops[0]
    return Sum(tuple(ops))


def power(op: Op, k: int) -> Op:
    if k < 0:
        raise ValueError("negative operator power")
    if k == 0:
        return Identity()
    return compose(*([op] * k))


def commutator(a: Op, b: Op) -> Op:
    return Sum((compose(a, b), Scale(Rational(-1), compose(b, a))))


def anticommutator(a: Op, b: Op) -> Op:
    return Sum((compose(a, b), compose(b, a)))


# -- evaluation -----------------------------------------------------------------

def _atom_on_monomial(op: Op, e: Exponents, n: int) -> Dict[Exponents, Rational]:
    if isinstance(op, Scalar):
        return {e: op.q} if op.q else {}
    k = op.i - 1
    if not 0 <= k < n:
        raise IndexError(f"axis {op.i} outside 1..{n}")
    if isinstance(op, MulVar):
        return {e[:k] + (e[k] + 1,) + e[k + 1:]: Rational(1)}
    if isinstance(op, InvVar):
        return {e[:k] + (e[k] - 1,) + e[k + 1:]: Rational(1)}
    if isinstance(op, Partial):
        a = e[k]
        return {e[:k] + (a - 1,) + e[k + 1:]: Rational(a)} if a else {}
    if isinstance(op, Reflect):
        return {e: Rational(-1 if e[k] & 1 else 1)}
    raise TypeError(f"unknown operator atom {op!r}")


def _accumulate(out: Dict[Exponents, Rational], image: Dict[Exponents, Rational], c) -> None:
    for e, v in image.items():
        w = out.get(e, 0) + c * v
        if w:
            out[e] = w
        else:
            out.pop(e, None)


def _apply_terms(op: Op, terms: Dict[Exponents, Rational], n: int) -> Dict[Exponents, Rational]:
    out: Dict[Exponents, Rational] = {}
    for e, c in terms.items():
        _accumulate(out, _on_monomial(op, e, n), c)
    return out


def _on_monomial(op: Op, e: Exponents, n: int) -> Dict[Exponents, Rational]:
    cache = getattr(op, "_cache", None)
    if cache is None:
        return _atom_on_monomial(op, e, n)
    hit = cache.get(e)
    if hit is not None:
        return hit
    if isinstance(op, Sum):
        out: Dict[Exponents, Rational] = {}
        for t in op.terms:
            _accumulate(out, _on_monomial(t, e, n), 1)
    elif isinstance(op, Compose):
        out = _on_monomial(op.factors[-1], e, n)
        for f in reversed(op.factors[:-1]):
            if not out:
                break
            out = _apply_terms(f, out, n)
    elif isinstance(op, Scale):
        out = {k: v * op.q for k, v in _on_monomial(op.expr, e, n).items()} if op.q else {}
    else:
        raise TypeError(f"unknown operator node {op!r}")
    cache[e] = out
    return out


def apply(op: Op, p: LaurentPoly) -> LaurentPoly:
    """Exact image of p under op."""
    return LaurentPoly._raw(p.n, _apply_terms(op, p.terms, p.n))


# -- gauge conjugation ------------------------------------------------------------

def gauge_conjugate(op: Op, mu) -> Op:
    """Conjugate by G = prod |s_i|^mu_i, i.e. return G^-1 op G.

    ``mu`` is a sequence indexed from axis 1 (or a ModelParams).
    Only d/ds_i changes: it becomes d/ds_i + mu_i/s_i.
    """
    mu = tuple(getattr(mu, "mu", mu))
    memo: Dict[int, Op] = {}

    def walk(node: Op) -> Op:
        key = id(node)
        if key in memo:
            return memo[key]
        if isinstance(node, Partial):
            m = mu[node.i - 1]
            new = node if not m else Sum((node, Scale(m, InvVar(node.i))))
        elif isinstance(node, Sum):
            new = Sum(tuple(walk(t) for t in node.terms))
        elif isinstance(node, Compose):
            new = Compose(tuple(walk(f) for f in node.factors))
        elif isinstance(node, Scale):
            new = Scale(node.q, walk(node.expr))
        else:
            new = node
        memo[key] = new
        return new

    return walk(op)


# -- identity testing -----------------------------------------------------------------

@dataclass(frozen=True)
class EqualityWitness:
    """Outcome of :func:`equal_on_degree`; truthy iff the operators agreed."""

    equal: bool
    monomial: Optional[Exponents] = None
    lhs_image: Optional[LaurentPoly] = None
    rhs_image: Optional[LaurentPoly] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.equal

    def describe(self) -> str:
        if self.equal:
            return "equal"
        return (
            f"{self.reason or 'images differ'} at monomial {self.monomial}: "
            f"lhs={self.lhs_image.to_text()} rhs={self.rhs_image.to_text()}"
        )


def equal_on_degree(
    a: Op,
    b: Op,
    n: int,
    max_degree: int,
    require_polynomial_images: bool = False,
) -> EqualityWitness:
    """Compare a and b on every monomial s^alpha with |alpha| <= max_degree."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    for e in monomials_up_to(n, max_degree):
        lhs = LaurentPoly._raw(n, dict(_on_monomial(a, e, n)))
        rhs = LaurentPoly._raw(n, dict(_on_monomial(b, e, n)))
        if lhs != rhs:
            return EqualityWitness(False, e, lhs, rhs, "images differ")
        if require_polynomial_images and not (lhs.is_polynomial() and rhs.is_polynomial()):
            return EqualityWitness(False, e, lhs, rhs, "non-polynomial image")
    return EqualityWitness(True)


def vanishes_on_degree(a: Op, n: int, max_degree: int, **kw) -> EqualityWitness:
    return equal_on_degree(a, Scalar(Rational(0)), n, max_degree, **kw)


# -- rendering ---------------------------------------------------------------------------

def render(op: Op) -> str:
    """Prefix rendering: atoms x_i, 1/x_i, d_i, R_i, rationals p/q."""
    if isinstance(op, MulVar):
        return f"x_{op.i}"
    if isinstance(op, InvVar):
        return f"1/x_{op.i}"
    if isinstance(op, Partial):
        return f"d_{op.i}"
    if isinstance(op, Reflect):
        return f"R_{op.i}"
    if isinstance(op, Scalar):
        return format_rational(op.q)
    if isinstance(op, Sum):
        return "(+ " + " ".join(render(t) for t in op.terms) + ")"
    if isinstance(op, Compose):
        return "(* " + " ".join(render(f) for f in op.factors) + ")"
    if isinstance(op, Scale):
        return f"(scale {format_rational(op.q)} {render(op.expr)})"
    raise TypeError(f"unknown operator node {op!r}")
