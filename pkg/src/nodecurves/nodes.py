"""Planar node sets and their exact degree-n interpolation structure.

A node is a point of Q^2; a node set is an ordered tuple of distinct nodes.
The collocation matrix of a set at degree n evaluates every monomial of
degree <= n at every node, one row per node.  Everything else is read off
that matrix exactly:

* the set is n-independent iff the matrix has full row rank, and n-poised
  iff in addition its size equals the full space dimension;
* the Hilbert function value at n is the rank;
* the degree-n vanishing space is the nullspace, returned with its
  canonical basis;
* a node's fundamental polynomial (value 1 there, 0 on the rest) is the
  canonical solution of the collocation system against a unit vector, and
  is absent exactly when the node's row is spanned by the others.

Search routines (``extend_to_poised`` and friends) walk a fixed enumeration
of integer points, so their output is reproducible everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple, Optional

from . import linalg
from . import poly as _poly
from .errors import BudgetExceeded
from .linalg import Matrix, RankTracker, frac
from .poly import Poly, space_dim

SEARCH_BUDGET = 10_000


class Node(NamedTuple):
    x: Fraction
    y: Fraction


def node(x, y) -> Node:
    return Node(frac(x), frac(y))


def _coerce(value) -> Node:
    if isinstance(value, Node):
        return value
    x, y = value
    return node(x, y)


class NodeSet:
    """Ordered collection of pairwise distinct nodes."""

    def __init__(self, nodes: Iterable = ()):
        items = tuple(_coerce(v) for v in nodes)
        if len(set(items)) != len(items):
            raise ValueError("duplicate nodes")
        self._nodes = items

    def __len__(self) -> int:
        return len(self._nodes)

    def __iter__(self) -> Iterator[Node]:
        return iter(self._nodes)

    def __getitem__(self, i: int) -> Node:
        return self._nodes[i]

    def __contains__(self, value) -> bool:
        return _coerce(value) in self._nodes

    def __eq__(self, other) -> bool:
        return isinstance(other, NodeSet) and self._nodes == other._nodes

    def __hash__(self) -> int:
        return hash(self._nodes)

    def __repr__(self) -> str:
        inner = ", ".join(f"({n.x}, {n.y})" for n in self._nodes)
        return f"NodeSet([{inner}])"

    def index(self, value) -> int:
        return self._nodes.index(_coerce(value))

    def with_node(self, value) -> "NodeSet":
        return NodeSet(self._nodes + (_coerce(value),))

    def without(self, value) -> "NodeSet":
        target = _coerce(value)
        if target not in self._nodes:
            raise ValueError("node not in set")
        return NodeSet(n for n in self._nodes if n != target)

    def subset(self, indices: Iterable[int]) -> "NodeSet":
        return NodeSet(self._nodes[i] for i in indices)

    def to_json(self, n: Optional[int] = None, meta: Optional[dict] = None) -> dict:
        data: dict = {}
        if n is not None:
            data["n"] = n
        data["nodes"] = [[str(p.x), str(p.y)] for p in self._nodes]
        if meta is not None:
            data["meta"] = meta
        return data

    @staticmethod
    def from_json(data: dict) -> tuple["NodeSet", Optional[int]]:
        nodes = NodeSet(data["nodes"])
        n = data.get("n")
        return nodes, (int(n) if n is not None else None)


def _monomial_row(p: Node, n: int) -> list[Fraction]:
    xs = [linalg.ONE]
    ys = [linalg.ONE]
    for _ in range(n):
        xs.append(xs[-1] * p.x)
        ys.append(ys[-1] * p.y)
    row = []
    for idx in range(space_dim(n)):
        i, j = _poly.monomial_exponents(idx)
        row.append(xs[i] * ys[j])
    return row


def collocation_matrix(xs: NodeSet, n: int) -> Matrix:
    """One row per node, evaluating the degree-n monomial basis there."""
    rows = [_monomial_row(p, n) for p in xs]
    if not rows:
        return Matrix(0, space_dim(n), ())
    return Matrix.from_rows(rows)


def hilbert_function(xs: NodeSet, n: int) -> int:
    """Number of independent interpolation conditions the set imposes."""
    tracker = RankTracker(space_dim(n))
    for p in xs:
        tracker.add(_monomial_row(p, n))
    return tracker.rank


def is_independent(xs: NodeSet, n: int) -> bool:
    """True iff every node admits a degree-n fundamental polynomial."""
    return hilbert_function(xs, n) == len(xs)


def is_poised(xs: NodeSet, n: int) -> bool:
    """True iff degree-n interpolation on the set is uniquely solvable."""
    return len(xs) == space_dim(n) and is_independent(xs, n)


def maximal_independent_subset(xs: NodeSet, n: int) -> NodeSet:
    """Greedy scan in set order, keeping nodes that add a new condition."""
    tracker = RankTracker(space_dim(n))
    kept = [p for p in xs if tracker.add(_monomial_row(p, n))]
    return NodeSet(kept)


@dataclass(frozen=True)
class VanishingSpace:
    """Basis of the degree-n polynomials vanishing on a node set."""

    n: int
    basis: tuple[Poly, ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)


def vanishing_basis(xs: NodeSet, n: int) -> VanishingSpace:
    ns = linalg.nullspace(collocation_matrix(xs, n))
    basis = tuple(Poly(n, ns.column(j)) for j in range(ns.ncols))
    return VanishingSpace(n, basis)


def fundamental_polynomial(a, xs: NodeSet, n: int) -> Optional[Poly]:
    """Canonical p with p(a) = 1 and p = 0 on the rest of xs, or None."""
    a = _coerce(a)
    idx = xs.index(a)  # raises ValueError if a is not a node of xs
    target = [linalg.ONE if i == idx else linalg.ZERO for i in range(len(xs))]
    sol = linalg.solve(collocation_matrix(xs, n), target)
    return None if sol is None else Poly(n, sol)


def fundamental_polynomials(xs: NodeSet, n: int) -> list[Optional[Poly]]:
    """All fundamental polynomials with a single elimination."""
    size = len(xs)
    columns = [[linalg.ONE if i == idx else linalg.ZERO for i in range(size)]
               for idx in range(size)]
    sols = linalg.solve_columns(collocation_matrix(xs, n), columns)
    return [None if s is None else Poly(n, s) for s in sols]


def integer_spiral() -> Iterator[Node]:
    """All integer points, ordered (0,0), (1,0), (0,1), (-1,0), (0,-1),
    (1,1), ...

    Points are grouped by max(|x|,|y|), then by |x|+|y|, then swept
    counterclockwise from the positive x-axis; all comparisons are exact.
    """
    yield node(0, 0)
    radius = 1
    while True:
        ring = []
        for x in range(-radius, radius + 1):
            for y in range(-radius, radius + 1):
                if max(abs(x), abs(y)) == radius:
                    ring.append((x, y))

        def angle_key(pt):
            x, y = pt
            if x > 0 and y >= 0:
                return (0, Fraction(y, x))
            if x <= 0 and y > 0:
                return (1, Fraction(-x, y))
            if x < 0 and y <= 0:
                return (2, Fraction(-y, -x))
            return (3, Fraction(x, -y))

        ring.sort(key=lambda pt: (abs(pt[0]) + abs(pt[1]), angle_key(pt)))
        for x, y in ring:
            yield node(x, y)
        radius += 1


def next_independent_node(xs: NodeSet, n: int) -> Node:
    """First spiral point where some current vanishing-basis element is
    nonzero; adding it keeps the set n-independent.

    Requires an n-independent xs with fewer than space_dim(n) nodes.
    """
    if not is_independent(xs, n):
        raise ValueError("set is not independent at this degree")
    if len(xs) >= space_dim(n):
        raise ValueError("set already has full size")
    space = vanishing_basis(xs, n)
    count = 0
    for cand in integer_spiral():
        count += 1
        if count > SEARCH_BUDGET:
            raise BudgetExceeded("no independent node found within budget")
        if cand in xs:
            continue
        if any(q.eval(cand.x, cand.y) != 0 for q in space.basis):
            return cand
    raise BudgetExceeded("unreachable")


def extend_to_poised(xs: NodeSet, n: int) -> NodeSet:
    """Deterministically grow an independent set to an n-poised superset."""
    if not is_independent(xs, n):
        raise ValueError("set is not independent at this degree")
    if len(xs) > space_dim(n):
        raise ValueError("set larger than the space dimension")
    out = xs
    while len(out) < space_dim(n):
        out = out.with_node(next_independent_node(out, n))
    return out
