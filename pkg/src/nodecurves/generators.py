"""Seeded generators for test geometries.

Pseudo-randomness comes from splitmix64, a published 64-bit mixing
generator with fixed constants, so a (kind, n, k, seed) tuple produces the
same geometry in any implementation of this package, on any platform.
Random rational coordinates always have numerators in [-20, 20] and
denominators in {1, 2, 3, 4}; everything downstream of the raw draws
(node placement on lines, outlier search) is a deterministic scan.

Three generators are provided:

* ``berzolari_radon(n, seed)``: n+1 random pairwise non-proportional
  lines carrying n+1, n, ..., 1 nodes, each batch placed off all earlier
  lines.  Sets built this way are n-poised; that is a classical fact the
  construction embodies, and the test suite re-verifies it by rank.
* ``random_poised(n, seed)``: full-size sets drawn node by node, keeping
  only draws that add an interpolation condition.
* ``defect_config(n, k, seed)``: an n-independent set of
  max_nodes_on_curve(n, k-1) + 1 nodes that lies, except for one outlier,
  on a degree-(k-1) union of lines.  Such sets admit at least two distinct
  degree-k curves, which is what the defect verifier characterizes.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import curves as _curves, nodes as _nodes
from .curves import Curve, LineForm, LineUnion, proportional
from .errors import BudgetExceeded
from .linalg import Fraction, RankTracker
from .nodes import Node, NodeSet, node
from .poly import space_dim

LINE_RESAMPLE_BUDGET = 100
PLACEMENT_BUDGET = 10_000


class SplitMix64:
    """splitmix64: x += 0x9e3779b97f4a7c15; mix with shifts/multiplies.

    Small, public-domain, and stable across languages; used for every
    seeded draw in this package.
    """

    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self._state = seed & self.MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & self.MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & self.MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & self.MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-enough integer in [0, bound); bound must be positive."""
        return self.next_u64() % bound

    def randint(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)

    def rational(self) -> Fraction:
        """Coordinate draw: numerator in [-20, 20], denominator in 1..4."""
        return Fraction(self.randint(-20, 20), self.randint(1, 4))


def random_node(rng: SplitMix64) -> Node:
    return node(rng.rational(), rng.rational())


def random_line(rng: SplitMix64) -> LineForm:
    for _ in range(LINE_RESAMPLE_BUDGET):
        a, b, c = rng.rational(), rng.rational(), rng.rational()
        if a != 0 or b != 0:
            return LineForm(a, b, c)
    raise BudgetExceeded("could not draw a nondegenerate line")


def random_lines(rng: SplitMix64, count: int) -> tuple[LineForm, ...]:
    """Pairwise non-proportional lines; degenerate draws are resampled."""
    out: list[LineForm] = []
    for _ in range(count):
        for _ in range(LINE_RESAMPLE_BUDGET):
            cand = random_line(rng)
            if all(not proportional(cand, prev) for prev in out):
                out.append(cand)
                break
        else:
            raise BudgetExceeded("could not draw distinct lines")
    return tuple(out)


@dataclass(frozen=True)
class BRSet:
    """Nodes distributed over lines with the classical count profile
    n+1, n, ..., 1."""

    n: int
    nodes: NodeSet
    lines: tuple[LineForm, ...]
    counts: tuple[int, ...]


def berzolari_radon(n: int, seed: int) -> BRSet:
    """Seeded poised set built line by line.

    Line j (0-based) receives n+1-j nodes taken from its deterministic
    parameter sweep, skipping points on any earlier line, so each batch
    avoids every line before its own.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    rng = SplitMix64(seed)
    lines = random_lines(rng, n + 1)
    placed: list[Node] = []
    counts = []
    for j, line in enumerate(lines):
        want = n + 1 - j
        got = 0
        for t in _curves.rational_sequence():
            if got == want:
                break
            cand = line.point_at(t)
            if any(prev.eval(cand.x, cand.y) == 0 for prev in lines[:j]):
                continue
            if cand in placed:
                continue
            placed.append(cand)
            got += 1
        counts.append(want)
    return BRSet(n, NodeSet(placed), lines, tuple(counts))


def random_poised(n: int, seed: int) -> NodeSet:
    """Full-size n-poised set of seeded random nodes, drawn with rank
    resampling."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    rng = SplitMix64(seed)
    tracker = RankTracker(space_dim(n))
    out: list[Node] = []
    for _ in range(PLACEMENT_BUDGET):
        if len(out) == space_dim(n):
            return NodeSet(out)
        cand = random_node(rng)
        if tracker.add(_nodes._monomial_row(cand, n)):
            out.append(cand)
    raise BudgetExceeded("random poised draw exceeded budget")


@dataclass(frozen=True)
class DefectConfig:
    """Independent set = maximal nodes on a line-union curve + one outlier
    off it; at least two degree-k curves pass through the whole set."""

    n: int
    k: int
    nodes: NodeSet
    mu: Curve
    mu_lines: tuple[LineForm, ...]
    outlier: Node

    @property
    def outlier_index(self) -> int:
        return self.nodes.index(self.outlier)


def defect_config(n: int, k: int, seed: int) -> DefectConfig:
    """Seeded configuration with a defective curve count at degree k.

    mu is a product of k-1 random pairwise non-proportional lines; the
    first max_nodes_on_curve(n, k-1) nodes are an on-mu extension from
    empty, and the last node is the first integer spiral point off mu that
    keeps the set n-independent.
    """
    if not 2 <= k <= n:
        raise ValueError("need 2 <= k <= n")
    rng = SplitMix64(seed)
    lines = random_lines(rng, k - 1)
    union = LineUnion.of(lines)
    mu = union.curve()
    on_curve = _curves.extend_on_curve(NodeSet(), union, mu, n)
    tracker = RankTracker(space_dim(n))
    for p in on_curve:
        tracker.add(_nodes._monomial_row(p, n))
    outlier = None
    for count, cand in enumerate(_nodes.integer_spiral()):
        if count >= PLACEMENT_BUDGET:
            raise BudgetExceeded("no outlier found within budget")
        if cand in on_curve or mu.contains(cand):
            continue
        if tracker.add(_nodes._monomial_row(cand, n)):
            outlier = cand
            break
    return DefectConfig(n, k, on_curve.with_node(outlier), mu, lines, outlier)
