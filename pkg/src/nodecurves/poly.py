"""Bivariate polynomials with exact rational coefficients.

A polynomial of degree bound n is a dense coefficient vector over the
monomials x^i y^j with i + j <= n, ordered graded-lex: total degree
ascending, then i descending.  The sequence starts

    1, x, y, x^2, x*y, y^2, x^3, x^2*y, ...

so the monomial x^i y^j with t = i + j sits at index t(t+1)/2 + (t - i).
The degree bound is bookkeeping only; the effective degree of a polynomial
is the largest total degree with a nonzero coefficient, and the zero
polynomial has no degree (reported as None).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Iterator, Optional

from . import linalg
from .linalg import Matrix, ZERO, ONE, frac


def space_dim(n: int) -> int:
    """Number of monomials x^i y^j with i + j <= n."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    return (n + 1) * (n + 2) // 2


def monomial_index(i: int, j: int) -> int:
    """Position of x^i y^j in graded-lex order."""
    if i < 0 or j < 0:
        raise ValueError("exponents must be nonnegative")
    t = i + j
    return t * (t + 1) // 2 + (t - i)


def monomial_exponents(index: int) -> tuple[int, int]:
    """Inverse of monomial_index."""
    if index < 0:
        raise ValueError("index must be nonnegative")
    t = (isqrt(8 * index + 1) - 1) // 2
    offset = index - t * (t + 1) // 2
    return t - offset, offset


@dataclass(frozen=True)
class Poly:
    """Dense bivariate polynomial; ``coeffs[monomial_index(i, j)]`` is the
    coefficient of x^i y^j."""

    bound: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.coeffs) != space_dim(self.bound):
            raise ValueError("coefficient count does not match degree bound")

    @staticmethod
    def zero(bound: int = 0) -> "Poly":
        return Poly(bound, (ZERO,) * space_dim(bound))

    @staticmethod
    def constant(value, bound: int = 0) -> "Poly":
        coeffs = [ZERO] * space_dim(bound)
        coeffs[0] = frac(value)
        return Poly(bound, tuple(coeffs))

    @staticmethod
    def monomial(i: int, j: int, coeff=1, bound: Optional[int] = None) -> "Poly":
        bound = i + j if bound is None else bound
        if i + j > bound:
            raise ValueError("monomial degree exceeds bound")
        coeffs = [ZERO] * space_dim(bound)
        coeffs[monomial_index(i, j)] = frac(coeff)
        return Poly(bound, tuple(coeffs))

    @staticmethod
    def from_terms(terms: dict[tuple[int, int], object], bound: int) -> "Poly":
        coeffs = [ZERO] * space_dim(bound)
        for (i, j), c in terms.items():
            if i + j > bound:
                raise ValueError("term degree exceeds bound")
            coeffs[monomial_index(i, j)] += frac(c)
        return Poly(bound, tuple(coeffs))

    @staticmethod
    def from_coeffs(coeffs, bound: int) -> "Poly":
        return Poly(bound, tuple(frac(c) for c in coeffs))

    @property
    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def degree(self) -> Optional[int]:
        """Effective total degree; None for the zero polynomial."""
        top = None
        for idx, c in enumerate(self.coeffs):
            if c != 0:
                top = idx
        if top is None:
            return None
        i, j = monomial_exponents(top)
        return i + j

    def coeff(self, i: int, j: int) -> Fraction:
        if i < 0 or j < 0 or i + j > self.bound:
            return ZERO
        return self.coeffs[monomial_index(i, j)]

    def terms(self) -> Iterator[tuple[int, int, Fraction]]:
        for idx, c in enumerate(self.coeffs):
            if c != 0:
                i, j = monomial_exponents(idx)
                yield i, j, c

    def eval(self, x, y) -> Fraction:
        x, y = frac(x), frac(y)
        xs = [ONE]
        ys = [ONE]
        for _ in range(self.bound):
            xs.append(xs[-1] * x)
            ys.append(ys[-1] * y)
        total = ZERO
        for idx, c in enumerate(self.coeffs):
            if c != 0:
                i, j = monomial_exponents(idx)
                total += c * xs[i] * ys[j]
        return total

    def eval_float(self, x: float, y: float) -> float:
        # float path for rendering only; decisions always use eval()
        total = 0.0
        for idx, c in enumerate(self.coeffs):
            if c != 0:
                i, j = monomial_exponents(idx)
                total += float(c) * x**i * y**j
        return total

    def with_bound(self, bound: int) -> "Poly":
        """Same polynomial re-stored with another degree bound."""
        deg = self.degree
        if deg is not None and deg > bound:
            raise ValueError("effective degree exceeds requested bound")
        coeffs = [ZERO] * space_dim(bound)
        for i, j, c in self.terms():
            coeffs[monomial_index(i, j)] = c
        return Poly(bound, tuple(coeffs))

    def equals(self, other: "Poly") -> bool:
        """Mathematical equality, ignoring degree bounds."""
        bound = max(self.bound, other.bound)
        return self.with_bound(bound).coeffs == other.with_bound(bound).coeffs

    def normalized(self) -> "Poly":
        """Scale so the first nonzero graded-lex coefficient is 1."""
        lead = next((c for c in self.coeffs if c != 0), None)
        if lead is None or lead == 1:
            return self
        return Poly(self.bound, tuple(c / lead for c in self.coeffs))

    def scale(self, value) -> "Poly":
        v = frac(value)
        return Poly(self.bound, tuple(c * v for c in self.coeffs))

    def __neg__(self) -> "Poly":
        return self.scale(-1)

    def __add__(self, other: "Poly") -> "Poly":
        bound = max(self.bound, other.bound)
        a, b = self.with_bound(bound), other.with_bound(bound)
        return Poly(bound, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        bound = self.bound + other.bound
        coeffs = [ZERO] * space_dim(bound)
        mine = list(self.terms())
        for oi, oj, oc in other.terms():
            for i, j, c in mine:
                coeffs[monomial_index(i + oi, j + oj)] += c * oc
        return Poly(bound, tuple(coeffs))

    def __str__(self) -> str:
        parts = []
        for i, j, c in self.terms():
            mono = "*".join(
                ([f"x^{i}" if i > 1 else "x"] if i else [])
                + ([f"y^{j}" if j > 1 else "y"] if j else []))
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def to_json(self) -> dict:
        return {"n": self.bound, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(data: dict) -> "Poly":
        return Poly.from_coeffs(data["coeffs"], int(data["n"]))


def linear(a, b, c) -> Poly:
    """The degree-1 polynomial a*x + b*y + c."""
    return Poly.from_terms({(1, 0): a, (0, 1): b, (0, 0): c}, 1)


def multiplication_matrix(q: Poly, n: int) -> Matrix:
    """Matrix of r -> q*r from coefficients over bound n - deg(q) to bound n.

    Column m is the coefficient vector of q * (m-th monomial).
    """
    k = q.degree
    if k is None:
        raise ValueError("multiplication by the zero polynomial")
    if k > n:
        raise ValueError("divisor degree exceeds target bound")
    src_dim = space_dim(n - k)
    dst_dim = space_dim(n)
    cols = []
    qterms = list(q.terms())
    for m in range(src_dim):
        mi, mj = monomial_exponents(m)
        col = [ZERO] * dst_dim
        for i, j, c in qterms:
            col[monomial_index(i + mi, j + mj)] += c
        cols.append(col)
    flat = tuple(cols[j][i] for i in range(dst_dim) for j in range(src_dim))
    return Matrix(dst_dim, src_dim, flat)


def quotient(p: Poly, q: Poly, n: int) -> Optional[Poly]:
    """Exact quotient r with p = q * r and deg(r) <= n - deg(q), else None.

    Decided by solving the linear system given by the multiplication matrix
    of q; there is no polynomial division loop, so the answer is exact for
    any q including reducible ones.  Raises if q is zero or a degree exceeds
    n.
    """
    if q.is_zero:
        raise ValueError("division by the zero polynomial")
    pdeg = p.degree
    if pdeg is not None and pdeg > n:
        raise ValueError("dividend degree exceeds bound")
    m = multiplication_matrix(q, n)
    target = p.with_bound(n).coeffs
    sol = linalg.solve(m, target)
    if sol is None:
        return None
    return Poly(n - q.degree, sol)
