"""Algebraic curves through node sets: counting bounds, maximality, and
the division relation behind fundamental polynomials.

A curve is a nonconstant polynomial considered up to a nonzero scalar.  Two
counting facts drive everything here.  Working at degree n, a curve of
degree k <= n can pass through at most

    max_nodes_on_curve(n, k) = dim(n) - dim(n-k) = k*(2n + 3 - k)/2

n-independent nodes, and an independent set reaching that count forces
every degree-n polynomial vanishing on it to be divisible by the curve.
``uniqueness_threshold(n, k)`` is the matching size at which at most one
degree-k curve can pass through an independent set.

Samplers produce exact rational points on a curve in a fixed order, so
search results are reproducible: a line is swept by a deterministic
enumeration of rational parameters, a union of lines round-robin, and a
rational parametrization by the same parameter sequence minus denominator
roots.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterator, Sequence

from . import linalg, nodes as _nodes, poly as _poly
from .errors import BudgetExceeded
from .linalg import Matrix, RankTracker, frac
from .nodes import Node, NodeSet, node
from .poly import Poly, space_dim

SAMPLER_BUDGET = 10_000


def max_nodes_on_curve(n: int, k: int) -> int:
    """Largest n-independent node count a degree-k curve can carry."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return k * (2 * n + 3 - k) // 2


def uniqueness_threshold(n: int, k: int) -> int:
    """Minimal size of an n-independent set through which at most one
    degree-k curve passes."""
    if not 1 <= k <= n:
        raise ValueError("need 1 <= k <= n")
    return (k - 1) * (2 * n + 4 - k) // 2 + 2


@dataclass(frozen=True)
class Curve:
    """Nonconstant polynomial with its declared (= effective) degree."""

    poly: Poly
    degree: int

    def __post_init__(self):
        if self.poly.degree != self.degree or self.degree < 1:
            raise ValueError("declared degree must match and be >= 1")

    @staticmethod
    def from_poly(p: Poly) -> "Curve":
        deg = p.degree
        if deg is None or deg < 1:
            raise ValueError("a curve needs effective degree >= 1")
        return Curve(p, deg)

    def contains(self, p) -> bool:
        p = _nodes._coerce(p)
        return self.poly.eval(p.x, p.y) == 0

    def to_json(self) -> dict:
        return {"degree": self.degree, "poly": self.poly.to_json()}

    @staticmethod
    def from_json(data: dict) -> "Curve":
        return Curve(Poly.from_json(data["poly"]), int(data["degree"]))


def same_curve(a: Curve, b: Curve) -> bool:
    """Equality up to a nonzero scalar, as a rank-1 check on coefficients."""
    bound = max(a.poly.bound, b.poly.bound)
    stacked = Matrix.from_rows([
        a.poly.with_bound(bound).coeffs,
        b.poly.with_bound(bound).coeffs,
    ])
    return linalg.rank(stacked) == 1


def rational_sequence() -> Iterator[Fraction]:
    """Every rational exactly once: p/q read off integer spiral points
    (p, q) with q > 0 and gcd(p, q) = 1, so 0, 1, -1, 2, 1/2, -1/2, -2, ..."""
    for pt in _nodes.integer_spiral():
        p, q = int(pt.x), int(pt.y)
        if q > 0 and gcd(p, q) == 1:
            yield Fraction(p, q)


@dataclass(frozen=True)
class LineForm:
    """The line a*x + b*y + c = 0 with rational coefficients."""

    a: Fraction
    b: Fraction
    c: Fraction

    def __post_init__(self):
        if self.a == 0 and self.b == 0:
            raise ValueError("a and b cannot both be zero")

    @staticmethod
    def of(a, b, c) -> "LineForm":
        return LineForm(frac(a), frac(b), frac(c))

    @staticmethod
    def through(p, q) -> "LineForm":
        p, q = _nodes._coerce(p), _nodes._coerce(q)
        if p == q:
            raise ValueError("two distinct points are needed")
        a = p.y - q.y
        b = q.x - p.x
        return LineForm(a, b, -(a * p.x + b * p.y))

    def poly(self) -> Poly:
        return _poly.linear(self.a, self.b, self.c)

    def eval(self, x, y) -> Fraction:
        return self.a * frac(x) + self.b * frac(y) + self.c

    def point_at(self, t) -> Node:
        """Exact point base + t * (b, -a); every parameter gives a distinct
        point of the line."""
        t = frac(t)
        if self.b != 0:
            base = node(0, -self.c / self.b)
        else:
            base = node(-self.c / self.a, 0)
        return node(base.x + t * self.b, base.y - t * self.a)

    def canonical(self) -> "LineForm":
        lead = self.a if self.a != 0 else self.b
        return LineForm(self.a / lead, self.b / lead, self.c / lead)

    def points(self) -> Iterator[Node]:
        for t in rational_sequence():
            yield self.point_at(t)

    def to_json(self) -> dict:
        return {"a": str(self.a), "b": str(self.b), "c": str(self.c)}

    @staticmethod
    def from_json(data: dict) -> "LineForm":
        return LineForm.of(data["a"], data["b"], data["c"])


def proportional(p: LineForm, q: LineForm) -> bool:
    return p.canonical() == q.canonical()


@dataclass(frozen=True)
class LineUnion:
    """Product of pairwise distinct lines; the one curve family whose
    squarefreeness the library can check itself."""

    lines: tuple[LineForm, ...]

    def __post_init__(self):
        if not self.lines:
            raise ValueError("at least one line")
        for p, q in itertools.combinations(self.lines, 2):
            if proportional(p, q):
                raise ValueError("lines must be pairwise non-proportional")

    @staticmethod
    def of(lines: Sequence[LineForm]) -> "LineUnion":
        return LineUnion(tuple(lines))

    def poly(self) -> Poly:
        out = self.lines[0].poly()
        for line in self.lines[1:]:
            out = out * line.poly()
        return out

    def curve(self) -> Curve:
        return Curve.from_poly(self.poly())

    def points(self) -> Iterator[Node]:
        """Round-robin over the component lines' samplers."""
        streams = [line.points() for line in self.lines]
        for batch in zip(*streams):
            yield from batch


@dataclass(frozen=True)
class RationalParam:
    """Curve points (xn(t)/xd(t), yn(t)/yd(t)) for univariate rational
    functions given by ascending coefficient tuples; parameters where a
    denominator vanishes are skipped."""

    x_num: tuple[Fraction, ...]
    x_den: tuple[Fraction, ...]
    y_num: tuple[Fraction, ...]
    y_den: tuple[Fraction, ...]

    @staticmethod
    def of(x_num, x_den, y_num, y_den) -> "RationalParam":
        mk = lambda cs: tuple(frac(c) for c in cs)
        return RationalParam(mk(x_num), mk(x_den), mk(y_num), mk(y_den))

    def point_at(self, t) -> Node:
        t = frac(t)
        ev = lambda cs: sum((c * t ** e for e, c in enumerate(cs)), linalg.ZERO)
        xd, yd = ev(self.x_den), ev(self.y_den)
        if xd == 0 or yd == 0:
            raise ZeroDivisionError("parameter hits a denominator root")
        return node(ev(self.x_num) / xd, ev(self.y_num) / yd)

    def points(self) -> Iterator[Node]:
        for t in rational_sequence():
            try:
                yield self.point_at(t)
            except ZeroDivisionError:
                continue


def is_maximal_curve(q: Curve, xs: NodeSet, n: int) -> bool:
    """Does q pass through exactly max_nodes_on_curve(n, deg q) nodes of the
    n-independent set xs?"""
    if not _nodes.is_independent(xs, n):
        raise ValueError("set is not independent at this degree")
    if q.degree > n:
        raise ValueError("curve degree exceeds n")
    want = max_nodes_on_curve(n, q.degree)
    if len(xs) < want:
        raise ValueError("set too small to contain a maximal curve")
    return sum(1 for p in xs if q.contains(p)) == want


def node_uses(a, xs: NodeSet, n: int, q: Curve) -> bool:
    """Does some degree-n fundamental polynomial of a (w.r.t. xs) have q as
    a factor?

    Decided by one linear solve: writing p = q*r, the conditions p(a) = 1
    and p = 0 on xs minus a are linear in r's coefficients.  The set need
    not be poised; any fundamental polynomial counts.  Raises if a is not
    in xs or has no fundamental polynomial at all.
    """
    a = _nodes._coerce(a)
    idx = xs.index(a)
    if fundamental_missing(a, xs, n):
        raise ValueError("node has no fundamental polynomial")
    if q.degree > n:
        raise ValueError("curve degree exceeds n")
    src_dim = space_dim(n - q.degree)
    rows = []
    rhs = []
    for i, p in enumerate(xs):
        value = q.poly.eval(p.x, p.y)
        row = [value * v for v in _nodes._monomial_row(p, n - q.degree)]
        rows.append(row)
        rhs.append(linalg.ONE if i == idx else linalg.ZERO)
    sol = linalg.solve(Matrix.from_rows(rows), rhs)
    return sol is not None


def fundamental_missing(a, xs: NodeSet, n: int) -> bool:
    # a's row is spanned by the other rows iff removing it keeps the rank
    others = xs.without(a)
    return _nodes.hilbert_function(xs, n) == _nodes.hilbert_function(others, n)


def extend_on_curve(xs: NodeSet, sampler, q: Curve, n: int) -> NodeSet:
    """Grow an independent on-curve set to max_nodes_on_curve(n, deg q)
    nodes using the sampler's deterministic point stream.

    Candidates are taken in sampler order and kept when they add a new
    interpolation condition; at most SAMPLER_BUDGET candidates are tried.
    The sampler must emit points of q (checked); xs must lie on q and be
    n-independent.
    """
    if q.degree > n:
        raise ValueError("curve degree exceeds n")
    target = max_nodes_on_curve(n, q.degree)
    if len(xs) > target:
        raise ValueError("set larger than the on-curve maximum")
    if any(not q.contains(p) for p in xs):
        raise ValueError("set must lie on the curve")
    if not _nodes.is_independent(xs, n):
        raise ValueError("set is not independent at this degree")
    found = list(xs)
    tracker = RankTracker(space_dim(n))
    for p in found:
        tracker.add(_nodes._monomial_row(p, n))
    stream = sampler.points()
    for count in range(SAMPLER_BUDGET):
        if tracker.rank == target:
            return NodeSet(found)
        try:
            cand = next(stream)
        except StopIteration:
            break
        if not q.contains(cand):
            raise ValueError("sampler emitted a point off the curve")
        if tracker.add(_nodes._monomial_row(cand, n)):
            found.append(cand)
    if tracker.rank == target:
        return NodeSet(found)
    raise BudgetExceeded("curve sampler exhausted before reaching the maximum")


def space_divisible_by(space: _nodes.VanishingSpace, q: Curve) -> bool:
    """Is every polynomial of the space divisible by q?

    Equivalent to span containment in q * (polynomials of degree
    <= n - deg q), checked with one rank computation instead of a solve per
    basis element.
    """
    n = space.n
    if q.degree > n:
        return all(p.is_zero for p in space.basis)
    mult = _poly.multiplication_matrix(q.poly, n)
    tracker = RankTracker(space_dim(n))
    for j in range(mult.ncols):
        tracker.add(mult.column(j))
    base = tracker.rank
    return all(not tracker.would_grow(p.coeffs) for p in space.basis) and \
        base == space_dim(n - q.degree)
