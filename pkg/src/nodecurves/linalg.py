"""Exact dense linear algebra over the rationals.

Everything here works with ``fractions.Fraction`` entries and makes exact
decisions; no floating point is involved.  The canonical forms matter to the
rest of the package and are fixed:

* ``rref`` uses first-nonzero pivoting (the first row at or below the pivot
  row with a nonzero entry in the pivot column), scales pivots to 1 and
  eliminates above and below, so equal row spaces give equal RREFs.
* ``nullspace`` returns the RREF-derived basis: one vector per free column,
  with 1 in that free column and 0 in every other free column.
* ``solve`` returns the particular solution with all free variables 0, and
  ``None`` (not an error) when the system is inconsistent.

Rank-only queries go through :class:`RankTracker`, which clears denominators
and eliminates with integer cross-multiplication plus gcd normalization.
That path never builds a Fraction during elimination and is what the greedy
node-search loops use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Optional, Sequence

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(value) -> Fraction:
    """Coerce an int, string like "3/4", or Fraction to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"not a rational value: {value!r}")


@dataclass(frozen=True)
class Matrix:
    """Immutable dense matrix, entries row-major."""

    nrows: int
    ncols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.entries) != self.nrows * self.ncols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(rows: Iterable[Sequence]) -> "Matrix":
        rows = [tuple(frac(v) for v in row) for row in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(row) != ncols for row in rows):
            raise ValueError("ragged rows")
        flat = tuple(v for row in rows for v in row)
        return Matrix(len(rows), ncols, flat)

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "Matrix":
        return Matrix(nrows, ncols, (ZERO,) * (nrows * ncols))

    @staticmethod
    def identity(size: int) -> "Matrix":
        return Matrix(size, size, tuple(
            ONE if i == j else ZERO for i in range(size) for j in range(size)))

    def at(self, i: int, j: int) -> Fraction:
        return self.entries[i * self.ncols + j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self.entries[i * self.ncols:(i + 1) * self.ncols]

    def rows(self) -> list[tuple[Fraction, ...]]:
        return [self.row(i) for i in range(self.nrows)]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(self.at(i, j) for i in range(self.nrows))

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, tuple(
            self.at(i, j) for j in range(self.ncols) for i in range(self.nrows)))

    def mul_vec(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        if len(v) != self.ncols:
            raise ValueError("vector length does not match column count")
        return tuple(
            sum((self.at(i, j) * v[j] for j in range(self.ncols)), ZERO)
            for i in range(self.nrows))


class RrefResult(NamedTuple):
    matrix: Matrix
    pivots: tuple[int, ...]
    rank: int


def _eliminate(rows: list[list[Fraction]], pivot_limit: int) -> list[int]:
    """Gauss-Jordan in place; pivots are searched in columns < pivot_limit.

    Returns the pivot column list.  Columns at or past pivot_limit are
    carried along (augmented part) but never chosen as pivots.
    """
    pivots: list[int] = []
    prow = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(min(pivot_limit, ncols)):
        hit = next((r for r in range(prow, len(rows)) if rows[r][col] != 0), None)
        if hit is None:
            continue
        rows[prow], rows[hit] = rows[hit], rows[prow]
        lead = rows[prow][col]
        if lead != 1:
            rows[prow] = [v / lead for v in rows[prow]]
        pivot_row = rows[prow]
        for r in range(len(rows)):
            if r == prow:
                continue
            factor = rows[r][col]
            if factor != 0:
                row = rows[r]
                rows[r] = [row[j] - factor * pivot_row[j] for j in range(ncols)]
        pivots.append(col)
        prow += 1
        if prow == len(rows):
            break
    return pivots


def rref(m: Matrix) -> RrefResult:
    """Reduced row echelon form with first-nonzero pivoting."""
    rows = [list(m.row(i)) for i in range(m.nrows)]
    pivots = _eliminate(rows, m.ncols)
    return RrefResult(Matrix.from_rows(rows) if rows else m, tuple(pivots), len(pivots))


def nullspace(m: Matrix) -> Matrix:
    """Canonical nullspace basis, one column per free variable.

    Basis vector for free column f has entry 1 at f, 0 at the other free
    columns, and -R[r][f] at each pivot column; free columns are taken in
    increasing index order.  An injective matrix yields a (ncols x 0) result.
    """
    red, pivots, rank = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.ncols) if j not in pivot_set]
    basis: list[list[Fraction]] = []
    for f in free:
        vec = [ZERO] * m.ncols
        vec[f] = ONE
        for r, p in enumerate(pivots):
            vec[p] = -red.at(r, f)
        basis.append(vec)
    flat = tuple(basis[j][i] for i in range(m.ncols) for j in range(len(free)))
    return Matrix(m.ncols, len(free), flat)


def solve(m: Matrix, b: Sequence) -> Optional[tuple[Fraction, ...]]:
    """Particular solution of m x = b with free variables 0; None if none."""
    sols = solve_columns(m, [b])
    return sols[0]


def solve_columns(m: Matrix, columns: Sequence[Sequence]) -> list[Optional[tuple[Fraction, ...]]]:
    """Solve m x = b for several right-hand sides with one elimination.

    Each element of ``columns`` is one right-hand side of length ``m.nrows``.
    Returns, per column, the canonical free-variables-zero solution or None
    when that column is inconsistent.
    """
    ncols = m.ncols
    rhs = [[frac(v) for v in col] for col in columns]
    if any(len(col) != m.nrows for col in rhs):
        raise ValueError("right-hand side length does not match row count")
    k = len(rhs)
    rows = [list(m.row(i)) + [rhs[c][i] for c in range(k)] for i in range(m.nrows)]
    if not rows:
        return [(ZERO,) * ncols for _ in range(k)]
    pivots = _eliminate(rows, ncols)
    rank = len(pivots)
    out: list[Optional[tuple[Fraction, ...]]] = []
    for c in range(k):
        aug = ncols + c
        if any(rows[r][aug] != 0 for r in range(rank, len(rows))):
            out.append(None)
            continue
        x = [ZERO] * ncols
        for r, p in enumerate(pivots):
            x[p] = rows[r][aug]
        out.append(tuple(x))
    return out


def _int_rows(row: Sequence[Fraction]) -> list[int]:
    # scale a rational row to integers; rank is unchanged
    mult = 1
    for v in row:
        d = v.denominator
        mult = mult // gcd(mult, d) * d
    return [int(v * mult) for v in row]


class RankTracker:
    """Incremental rank of a growing row set, fraction-free.

    Rows are scaled to integers and kept in echelon form (sorted by pivot
    column).  New rows are reduced by cross-multiplication, so elimination
    stays in integer arithmetic; each surviving row is divided by its gcd to
    keep entries small.
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self._rows: list[list[int]] = []   # echelon rows, pivot cols ascending
        self._pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self._rows)

    def _reduce(self, row: Sequence[Fraction]) -> Optional[tuple[int, list[int]]]:
        work = _int_rows(row)
        for pivot, base in zip(self._pivots, self._rows):
            lead = work[pivot]
            if lead == 0:
                continue
            blead = base[pivot]
            work = [blead * w - lead * b for w, b in zip(work, base)]
        lead_col = next((j for j, v in enumerate(work) if v != 0), None)
        if lead_col is None:
            return None
        g = 0
        for v in work:
            g = gcd(g, v)
        if work[lead_col] < 0:
            g = -g
        return lead_col, [v // g for v in work]

    def would_grow(self, row: Sequence[Fraction]) -> bool:
        """True iff adding this row would increase the rank."""
        return self._reduce(row) is not None

    def add(self, row: Sequence[Fraction]) -> bool:
        """Add a row; returns True iff the rank grew."""
        reduced = self._reduce(row)
        if reduced is None:
            return False
        lead_col, work = reduced
        # keep every pivot column zero in all other rows, so _reduce stays
        # sound when rows arrive out of pivot order
        for i, base in enumerate(self._rows):
            coef = base[lead_col]
            if coef != 0:
                merged = [work[lead_col] * b - coef * w for b, w in zip(base, work)]
                g = 0
                for v in merged:
                    g = gcd(g, v)
                if merged[self._pivots[i]] < 0:
                    g = -g
                self._rows[i] = [v // g for v in merged]
        at = next((i for i, p in enumerate(self._pivots) if p > lead_col),
                  len(self._pivots))
        self._pivots.insert(at, lead_col)
        self._rows.insert(at, work)
        return True


def rank(m: Matrix) -> int:
    """Rank via the integer fraction-free path."""
    tracker = RankTracker(m.ncols)
    for i in range(m.nrows):
        tracker.add(m.row(i))
    return tracker.rank
