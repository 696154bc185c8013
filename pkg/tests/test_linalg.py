from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from nodecurves import linalg
from nodecurves.linalg import Matrix, RankTracker


def F(v):
    return Fraction(v)


def test_frac_parses_canonical_strings():
    assert linalg.frac("3/4") == Fraction(3, 4)
    assert linalg.frac("-2/6") == Fraction(-1, 3)
    assert linalg.frac(5) == Fraction(5)
    assert str(Fraction(-3, 4)) == "-3/4"
    assert str(Fraction(8, 4)) == "2"


def test_rref_hand_example():
    # rows of the 4-node degree-2 collocation example
    m = Matrix.from_rows([
        [1, 0, 0, 0, 0, 0],
        [1, 1, 0, 1, 0, 0],
        [1, 2, 0, 4, 0, 0],
        [1, 0, 1, 0, 0, 1],
    ])
    red, pivots, rk = linalg.rref(m)
    assert rk == 4
    assert pivots == (0, 1, 2, 3)
    assert red.rows() == [
        (F(1), F(0), F(0), F(0), F(0), F(0)),
        (F(0), F(1), F(0), F(0), F(0), F(0)),
        (F(0), F(0), F(1), F(0), F(0), F(1)),
        (F(0), F(0), F(0), F(1), F(0), F(0)),
    ]


def test_nullspace_canonical_basis():
    m = Matrix.from_rows([
        [1, 0, 0, 0, 0, 0],
        [1, 1, 0, 1, 0, 0],
        [1, 2, 0, 4, 0, 0],
        [1, 0, 1, 0, 0, 1],
    ])
    ns = linalg.nullspace(m)
    assert ns.ncols == 2
    assert ns.column(0) == (F(0), F(0), F(0), F(0), F(1), F(0))
    assert ns.column(1) == (F(0), F(0), F(-1), F(0), F(0), F(1))


def test_nullspace_of_zero_row_spans_everything():
    m = Matrix.from_rows([[0, 0, 0]])
    ns = linalg.nullspace(m)
    assert ns.ncols == 3
    assert [ns.column(j) for j in range(3)] == [
        (F(1), F(0), F(0)), (F(0), F(1), F(0)), (F(0), F(0), F(1))]


def test_solve_free_variables_zero():
    m = Matrix.from_rows([[1, 1]])
    assert linalg.solve(m, [2]) == (F(2), F(0))


def test_solve_inconsistent_returns_none():
    m = Matrix.from_rows([[1], [1]])
    assert linalg.solve(m, [0, 1]) is None


def test_solve_columns_mixed_consistency():
    m = Matrix.from_rows([[1, 0], [1, 0]])
    got = linalg.solve_columns(m, [[1, 1], [0, 1]])
    assert got[0] == (F(1), F(0))
    assert got[1] is None


def test_empty_matrix_edges():
    m = Matrix.from_rows([])
    assert linalg.rref(m).rank == 0
    assert linalg.rank(m) == 0
    zero_rows = Matrix(0, 4, ())
    assert linalg.nullspace(zero_rows).ncols == 4


def test_rank_tracker_matches_rref_rank():
    rows = [
        [1, 2, 3],
        [2, 4, 6],
        [0, 1, 1],
        [1, 3, 4],
    ]
    m = Matrix.from_rows(rows)
    tracker = RankTracker(3)
    grew = [tracker.add([Fraction(v) for v in r]) for r in rows]
    assert grew == [True, False, True, False]
    assert tracker.rank == linalg.rref(m).rank == 2


def test_rank_tracker_out_of_order_pivots():
    tracker = RankTracker(3)
    assert tracker.add([F(0), F(0), F(1)])
    assert tracker.add([F(0), F(1), F(1)])
    assert not tracker.add([F(0), F(1), F(2)])
    assert tracker.add([F(1), F(1), F(1)])
    assert tracker.rank == 3


def test_would_grow_does_not_mutate():
    tracker = RankTracker(2)
    tracker.add([F(1), F(0)])
    assert tracker.would_grow([F(0), F(1)])
    assert tracker.rank == 1


small_fracs = st.fractions(
    min_value=-6, max_value=6, max_denominator=4)


def matrices(max_rows=5, max_cols=5):
    return st.integers(1, max_cols).flatmap(
        lambda c: st.lists(
            st.lists(small_fracs, min_size=c, max_size=c),
            min_size=1, max_size=max_rows).map(Matrix.from_rows))


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rref_idempotent(m):
    red = linalg.rref(m).matrix
    assert linalg.rref(red).matrix == red


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_rank_plus_nullity_is_ncols(m):
    red = linalg.rref(m)
    ns = linalg.nullspace(m)
    assert red.rank + ns.ncols == m.ncols
    assert linalg.rank(m) == red.rank


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_nullspace_vectors_are_annihilated(m):
    ns = linalg.nullspace(m)
    for j in range(ns.ncols):
        out = m.mul_vec(ns.column(j))
        assert all(v == 0 for v in out)


@settings(max_examples=60, deadline=None)
@given(matrices(), st.data())
def test_solve_solution_satisfies_system(m, data):
    x = data.draw(st.lists(small_fracs, min_size=m.ncols, max_size=m.ncols))
    b = m.mul_vec(x)
    got = linalg.solve(m, b)
    assert got is not None
    assert m.mul_vec(got) == b


@settings(max_examples=60, deadline=None)
@given(matrices())
def test_tracker_rank_agrees_with_fraction_path(m):
    tracker = RankTracker(m.ncols)
    for i in range(m.nrows):
        tracker.add(m.row(i))
    assert tracker.rank == linalg.rref(m).rank
