"""Sparse multivariate polynomials over the integers, exactly.

This is the certificate side of the toolkit: the solver's search widths are
justified by nonzero coefficients of explicit monomials, and those
coefficients are computed here with arbitrary-precision arithmetic. Terms
are a dict from exponent tuples to ints; zero coefficients are never stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .errors import CertificateError, ContractError

MODE_UNDIRECTED = "undirected"
MODE_ORIENTED = "oriented"
MODES = (MODE_UNDIRECTED, MODE_ORIENTED)


class Polynomial:
    """Immutable polynomial in a fixed number of variables."""

    __slots__ = ("arity", "_terms")

    def __init__(self, arity, terms=()):
        if arity < 0:
            raise ContractError("arity must be nonnegative")
        self.arity = arity
        store = {}
        for exps, coeff in dict(terms).items():
            exps = tuple(exps)
            if len(exps) != arity or any(e < 0 for e in exps):
                raise ContractError(f"bad exponent vector {exps} for arity {arity}")
            if coeff:
                store[exps] = store.get(exps, 0) + coeff
                if not store[exps]:
                    del store[exps]
        self._terms = store

    @classmethod
    def constant(cls, arity, value):
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def zero(cls, arity):
        return cls(arity)

    @classmethod
    def one(cls, arity):
        return cls.constant(arity, 1)

    @classmethod
    def variable(cls, arity, index):
        if not 0 <= index < arity:
            raise ContractError(f"variable index {index} out of range")
        exps = tuple(1 if i == index else 0 for i in range(arity))
        return cls(arity, {exps: 1})

    @classmethod
    def linear(cls, arity, coeffs, constant=0):
        """The polynomial sum(coeffs[i] * x_i) + constant."""
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                terms[tuple(1 if j == i else 0 for j in range(arity))] = c
        if constant:
            terms[(0,) * arity] = constant
        return cls(arity, terms)

    def terms(self):
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exponents):
        exps = tuple(exponents)
        if len(exps) != self.arity:
            raise ContractError(f"expected {self.arity} exponents, got {len(exps)}")
        return self._terms.get(exps, 0)

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def is_homogeneous(self):
        degrees = {sum(e) for e in self._terms}
        return len(degrees) <= 1

    def term_count(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.arity == other.arity
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.arity, frozenset(self._terms.items())))

    def _check_arity(self, other):
        if self.arity != other.arity:
            raise ContractError(f"arity mismatch: {self.arity} vs {other.arity}")

    def __add__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.arity, other)
        self._check_arity(other)
        terms = dict(self._terms)
        for exps, c in other._terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return Polynomial(self.arity, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.arity, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = Polynomial.constant(self.arity, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return Polynomial(self.arity, {e: c * other for e, c in self._terms.items()})
        self._check_arity(other)
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, 0) + c1 * c2
        return Polynomial(self.arity, out)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int) or exponent < 0:
            raise ContractError("exponent must be a nonnegative integer")
        result = Polynomial.one(self.arity)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def evaluate(self, point):
        """Exact value at a point of ints or Fractions."""
        if len(point) != self.arity:
            raise ContractError(f"expected {self.arity} coordinates")
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = Fraction(c)
            for x, e in zip(point, exps):
                if e:
                    term *= Fraction(x) ** e
            total += term
        return total

    def __repr__(self):
        if not self._terms:
            return "Polynomial(0)"
        bits = []
        for exps, c in self.terms():
            mono = "*".join(f"x{i}^{e}" for i, e in enumerate(exps) if e)
            bits.append(f"{c}{'*' + mono if mono else ''}")
        return "Polynomial(" + " + ".join(bits) + ")"


def product(polys, arity):
    out = Polynomial.one(arity)
    for p in polys:
        out = out * p
    return out


def vandermonde_power(n_vars, power):
    """The product over i < j of (x_i - x_j) ** power."""
    factors = []
    for i in range(n_vars):
        for j in range(i + 1, n_vars):
            xi = Polynomial.variable(n_vars, i)
            xj = Polynomial.variable(n_vars, j)
            factors.append((xi - xj) ** power)
    return product(factors, n_vars)


def vandermonde_target_exponents(n_vars, s):
    """Exponents (s*(N-1) + i - 1 for i = 1..N) of the distinguished monomial."""
    return tuple(s * (n_vars - 1) + i for i in range(n_vars))


def vandermonde_coefficient_formula(n_vars, s):
    """((s+1)N)! / (N! * (s+1)!^N).

    This is the absolute value of the coefficient of the monomial
    ``prod x_i^(s(N-1)+i-1)`` in ``prod_{i<j} (x_i - x_j)^(2s+1)``; it is a
    positive integer for all N >= 1, s >= 0, which is what licenses the
    matching-stage search widths for every matching size.
    """
    if n_vars < 1 or s < 0:
        raise ContractError("need n_vars >= 1 and s >= 0")
    num = factorial((s + 1) * n_vars)
    den = factorial(n_vars) * factorial(s + 1) ** n_vars
    quotient, remainder = divmod(num, den)
    if remainder:  # pragma: no cover - the quotient is always integral
        raise CertificateError(f"non-integral coefficient for N={n_vars}, s={s}")
    return quotient


@dataclass(frozen=True)
class CoefficientCertificate:
    """An extracted coefficient backing a three-variable extension search.

    ``exponents`` always sum to the polynomial's total degree, so a nonzero
    coefficient licenses candidate sets of sizes ``exponent + 1``.
    """

    mode: str
    n: int
    exponents: tuple
    coefficient: int

    @property
    def nonzero(self):
        return self.coefficient != 0

    def to_obj(self):
        return {
            "mode": self.mode,
            "n": self.n,
            "abc": list(self.exponents),
            "coefficient": str(self.coefficient),
            "nonzero": self.nonzero,
        }


def reduction_target_exponents(n, mode):
    """The (a, b, c) exponents certified for extending three edges at a vertex.

    They sum to the reduction polynomial's total degree: 4n-7 in the
    undirected case, 4n-4 in the oriented one.
    """
    if n < 4:
        raise ContractError("need n >= 4")
    if mode == MODE_UNDIRECTED:
        d = 4 * n - 7
        b = d // 3
        return (d - 2 * b + 1, b, b - 1)
    if mode == MODE_ORIENTED:
        d = 4 * n - 4
        b = d // 3
        return (d - 2 * b, b, b)
    raise ContractError(f"unknown mode {mode!r}")


def reduction_polynomial(n, mode):
    """Top-degree model of the three-edge extension system on n vertices.

    Every constraint polynomial of the extension step agrees with this
    polynomial on its monomials of maximal total degree, so a nonzero
    coefficient here is a nonzero coefficient there.
    """
    if n < 4:
        raise ContractError("need n >= 4")
    x1, x2, x3 = (Polynomial.variable(3, i) for i in range(3))
    sum_all = x1 + x2 + x3
    if mode == MODE_UNDIRECTED:
        h = (x1 * x2 * x3) ** (n - 4) * sum_all ** (n - 4)
        for a, b in ((x1, x2), (x1, x3), (x2, x3)):
            h = h * (a - b) ** 2 * (a + b)
        return h
    if mode == MODE_ORIENTED:
        h = (x1 * x2 * x3) ** (n - 4) * sum_all ** (n - 4)
        if (3 * (n - 4)) % 2:
            h = -h
        for a, b in ((x1, x2), (x1, x3), (x2, x3)):
            h = h * (a * a - b * b) * (b - a)
        h = h * (sum_all + x1) * (sum_all + x2) * (sum_all + x3)
        return h
    raise ContractError(f"unknown mode {mode!r}")


@lru_cache(maxsize=None)
def certify_reduction_monomial(n, mode):
    """Extract the (a, b, c) coefficient of the reduction polynomial for n."""
    exps = reduction_target_exponents(n, mode)
    h = reduction_polynomial(n, mode)
    return CoefficientCertificate(mode, n, exps, h.coefficient(exps))


def nonzero_top_monomial(p):
    """Exponents of a nonzero top-degree monomial, minimizing the largest one.

    Fallback for the never-observed case of a zero certificate: the
    polynomial is a product of nonzero factors, so some top-degree monomial
    survives and can license the search instead.
    """
    d = p.degree()
    if d < 0:
        raise ContractError("the zero polynomial has no monomials")
    best = None
    for exps, _ in p.terms():
        if sum(exps) == d:
            key = (max(exps), exps)
            if best is None or key < best:
                best = key
    return best[1]
