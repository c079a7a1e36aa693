"""Exact multivariate Laurent polynomials over the rationals.

Axes are numbered from 1, matching the coordinate names s_1, ..., s_n.
A polynomial is an immutable map from exponent tuples to nonzero
``gmpy2.mpq`` coefficients, so equality is map equality and
"exactly zero" means "no terms".
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from gmpy2 import mpq, mpz

Rational = mpq
Exponents = Tuple[int, ...]
Scalar = Union[int, Rational]


class DimensionError(ValueError):
    pass


def as_rational(value) -> Rational:
    """Coerce ints, Fractions, mpz and ``"p/q"`` strings to an exact Rational."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, (int, Fraction, type(mpz(0)))):
        return Rational(value)
    if isinstance(value, str):
        return Rational(value.strip())
    raise TypeError(f"not an exact rational: {value!r}")


def format_rational(q: Rational) -> str:
    return f"{q.numerator}/{q.denominator}"


class LaurentPoly:
    __slots__ = ("n", "terms", "_hash")

    def __init__(self, n: int, terms: Mapping[Exponents, Scalar] | None = None):
        if n < 1:
            raise DimensionError(f"dimension must be positive, got {n}")
        clean: Dict[Exponents, Rational] = {}
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise DimensionError(f"exponent vector {exps} has length != {n}")
            c = as_rational(c)
            if c:
                clean[exps] = clean.get(exps, 0) + c
                if not clean[exps]:
                    del clean[exps]
        self.n = n
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, n: int, terms: Dict[Exponents, Rational]) -> "LaurentPoly":
        # caller guarantees canonical form
        p = object.__new__(cls)
        p.n = n
        p.terms = terms
        p._hash = None
        return p

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "LaurentPoly":
        return cls._raw(n, {})

    @classmethod
    def constant(cls, n: int, c: Scalar = 1) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    @classmethod
    def monomial(cls, exps: Iterable[int], c: Scalar = 1) -> "LaurentPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: c})

    @classmethod
    def variable(cls, n: int, i: int, power: int = 1) -> "LaurentPoly":
        _check_axis(n, i)
        exps = [0] * n
        exps[i - 1] = power
        return cls._raw(n, {tuple(exps): Rational(1)})

    # -- container protocol ---------------------------------------------------

    def __iter__(self) -> Iterator[Tuple[Exponents, Rational]]:
        return iter(sorted(self.terms.items()))

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, LaurentPoly):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (int, Fraction, Rational)):
            return self == LaurentPoly.constant(self.n, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, frozenset(self.terms.items())))
        return self._hash

    def coefficient(self, exps: Iterable[int]) -> Rational:
        return self.terms.get(tuple(exps), Rational(0))

    # -- arithmetic ---------------------------------------------------------

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.n != self.n:
                raise DimensionError(f"dimension mismatch: {self.n} vs {other.n}")
            return other
        return LaurentPoly.constant(self.n, as_rational(other))

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return LaurentPoly._raw(self.n, out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly._raw(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return self._coerce(other) - self

    def scale(self, q: Scalar) -> "LaurentPoly":
        q = as_rational(q)
        if not q:
            return LaurentPoly.zero(self.n)
        return LaurentPoly._raw(self.n, {e: c * q for e, c in self.terms.items()})

    def __mul__(self, other) -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return self.scale(other)
        other = self._coerce(other)
        out: Dict[Exponents, Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly._raw(self.n, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("negative powers of polynomials are not supported")
        result = LaurentPoly.constant(self.n, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- calculus and reflections ---------------------------------------------

    def partial(self, i: int) -> "LaurentPoly":
        _check_axis(self.n, i)
        k = i - 1
        out = {}
        for e, c in self.terms.items():
            a = e[k]
            if a:
                out[e[:k] + (a - 1,) + e[k + 1:]] = c * a
        return LaurentPoly._raw(self.n, out)

    def reflect(self, i: int) -> "LaurentPoly":
        _check_axis(self.n, i)
        k = i - 1
        return LaurentPoly._raw(
            self.n, {e: (-c if e[k] & 1 else c) for e, c in self.terms.items()}
        )

    def shift(self, i: int, power: int) -> "LaurentPoly":
        """Multiply by s_i**power (power may be negative)."""
        _check_axis(self.n, i)
        k = i - 1
        return LaurentPoly._raw(
            self.n,
            {e[:k] + (e[k] + power,) + e[k + 1:]: c for e, c in self.terms.items()},
        )

    def restrict_zero(self, i: int) -> "LaurentPoly":
        """Set s_i = 0. Only defined for polynomials in s_i."""
        _check_axis(self.n, i)
        k = i - 1
        if any(e[k] < 0 for e in self.terms):
            raise ValueError(f"s_{i} = 0 is a pole of this Laurent polynomial")
        return LaurentPoly._raw(self.n, {e: c for e, c in self.terms.items() if e[k] == 0})

    def embed(self, n: int) -> "LaurentPoly":
        """View as a polynomial in n >= self.n variables (new axes get exponent 0)."""
        if n < self.n:
            raise DimensionError("cannot embed into fewer variables")
        pad = (0,) * (n - self.n)
        return LaurentPoly._raw(n, {e + pad: c for e, c in self.terms.items()})

    # -- degree bookkeeping ---------------------------------------------------

    def degrees(self) -> set:
        return {sum(e) for e in self.terms}

    @property
    def degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(self.degrees())

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_component(self, m: int) -> "LaurentPoly":
        return LaurentPoly._raw(self.n, {e: c for e, c in self.terms.items() if sum(e) == m})

    def is_polynomial(self) -> bool:
        return all(a >= 0 for e in self.terms for a in e)

    def uses_only(self, k: int) -> bool:
        """True if only the first k variables occur."""
        return all(not any(e[k:]) for e in self.terms)

    def evaluate(self, point) -> Rational:
        total = Rational(0)
        for e, c in self.terms.items():
            term = c
            for x, a in zip(point, e):
                term *= Rational(x) ** a
            total += term
        return total

    # -- rendering ------------------------------------------------------------

    def to_text(self) -> str:
        """Canonical text: lexicographically sorted terms, coefficients as p/q."""
        if not self.terms:
            return "0"
        parts = []
        for e, c in sorted(self.terms.items()):
            parts.append(f"{format_rational(c)}*[{','.join(map(str, e))}]")
        return " + ".join(parts)

    def __repr__(self) -> str:
        if not self.terms:
            return "LaurentPoly(0)"
        parts = []
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(
                f"s{i + 1}" if a == 1 else f"s{i + 1}^{a}" for i, a in enumerate(e) if a
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"({c})*{mono}")
        return "LaurentPoly(" + " + ".join(parts) + ")"


def _check_axis(n: int, i: int) -> None:
    if not 1 <= i <= n:
        raise IndexError(f"axis {i} outside 1..{n}")


# Functional aliases of the methods above.

def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def partial(p: LaurentPoly, i: int) -> LaurentPoly:
    return p.partial(i)


def reflect(p: LaurentPoly, i: int) -> LaurentPoly:
    return p.reflect(i)


def homogeneous_component(p: LaurentPoly, m: int) -> LaurentPoly:
    return p.homogeneous_component(m)


def is_polynomial(p: LaurentPoly) -> bool:
    return p.is_polynomial()


def monomial_exponents(n: int, degree: int) -> Iterator[Exponents]:
    """All non-negative exponent vectors of the given total degree, colex-free lex order."""
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomial_exponents(n - 1, degree - first):
            yield (first,) + rest


def monomials_up_to(n: int, max_degree: int) -> Iterator[Exponents]:
    for d in range(max_degree + 1):
        yield from monomial_exponents(n, d)


def sum_of_squares(n: int, k: int | None = None) -> LaurentPoly:
    """s_1^2 + ... + s_k^2 inside n variables (k defaults to n)."""
    k = n if k is None else k
    out = {}
    for i in range(k):
        e = [0] * n
        e[i] = 2
        out[tuple(e)] = Rational(1)
    return LaurentPoly._raw(n, out)
