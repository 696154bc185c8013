import pytest

from nodecurves import curves, generators, nodes, poly, verify
from nodecurves.curves import Curve
from nodecurves.errors import TheoremViolation
from nodecurves.nodes import NodeSet
from nodecurves.poly import Poly

FOUR = NodeSet([(0, 0), (1, 0), (2, 0), (0, 1)])


def test_curves_through_dimensions():
    # poised set leaves no curve at its own degree
    tri = NodeSet([(0, 0), (1, 0), (0, 1)])
    assert verify.curves_through(tri, 1).dimension == 0
    # one node short of poised leaves exactly one
    short = NodeSet([(0, 0), (1, 0)])
    assert verify.curves_through(short, 1).dimension == 1
    assert verify.curves_through(FOUR, 2).dimension == 2


def test_verify_uniqueness_generic_five():
    xs = NodeSet([(0, 0), (1, 0), (0, 1), (1, 1), (2, 3)])
    assert len(xs) == curves.uniqueness_threshold(2, 2)
    assert verify.verify_uniqueness(xs, 2, 2)


def test_verify_uniqueness_precondition_breach():
    xs = NodeSet([(0, 0), (1, 0), (0, 1), (1, 1)])
    with pytest.raises(ValueError):
        verify.verify_uniqueness(xs, 2, 2)
    dependent = NodeSet([(0, 0), (1, 0), (2, 0), (3, 0), (4, 0)])
    with pytest.raises(ValueError):
        verify.verify_uniqueness(dependent, 2, 2)


def test_verify_uniqueness_after_extension():
    cfg = generators.defect_config(3, 2, 21)
    extended = cfg.nodes.with_node(nodes.next_independent_node(cfg.nodes, 3))
    assert verify.verify_uniqueness(extended, 3, 2)


def test_characterize_defect_round_trip():
    for n, k, seed in [(2, 2, 0), (3, 2, 5), (4, 3, 9), (5, 3, 1)]:
        cfg = generators.defect_config(n, k, seed)
        report = verify.characterize_defect(cfg.nodes, n, k)
        assert report.curve_space_dim == 2
        assert report.consistent
        assert report.outlier == cfg.outlier
        assert report.outlier_index == cfg.outlier_index
        assert curves.same_curve(report.mu, cfg.mu)


def test_characterize_defect_generic_set_has_no_defect():
    # right size, independent, but no curve surplus: nothing to characterize
    xs = NodeSet([(0, 0), (1, 0), (0, 1), (1, 1), (2, 3)])
    assert len(xs) == curves.max_nodes_on_curve(3, 1) + 1
    report = verify.characterize_defect(xs, 3, 2)
    assert report.curve_space_dim <= 1
    assert report.mu is None and report.outlier is None
    assert report.consistent


def test_characterize_defect_aborts_outside_theorem_range():
    # at k = n the curve surplus is automatic for any valid input, so a set
    # with no 3-collinear split must abort loudly instead of reporting junk
    square = NodeSet([(0, 0), (1, 0), (0, 1), (1, 1)])
    with pytest.raises(TheoremViolation):
        verify.characterize_defect(square, 2, 2)


def test_characterize_defect_preconditions():
    with pytest.raises(ValueError):
        verify.characterize_defect(FOUR, 2, 1)
    with pytest.raises(ValueError):
        verify.characterize_defect(NodeSet([(0, 0)]), 2, 2)
    dependent = NodeSet([(0, 0), (1, 0), (2, 0), (3, 0)])
    with pytest.raises(ValueError):
        verify.characterize_defect(dependent, 2, 2)


def test_characterize_defect_four_node_example():
    report = verify.characterize_defect(FOUR, 2, 2)
    assert report.curve_space_dim == 2
    assert report.outlier == nodes.node(0, 1)
    assert report.outlier_index == 3
    line = Curve.from_poly(poly.linear(0, 1, 0))  # y = 0 through the rest
    assert curves.same_curve(report.mu, line)


def test_combination_hand_example():
    got = verify.curve_through_extra_node(FOUR, 2, (1, 1))
    want = Poly.from_terms({(0, 2): 1, (0, 1): -1}, 2)
    assert got.poly.equals(want)


def test_combination_first_basis_element_when_it_fits():
    # (0, 2) is a zero of the first basis element x*y already
    got = verify.curve_through_extra_node(FOUR, 2, (0, 2))
    assert got.poly.equals(Poly.from_terms({(1, 1): 1}, 2))


def test_combination_generic_point_vanishes_everywhere_needed():
    a = (3, 5)
    got = verify.curve_through_extra_node(FOUR, 2, a)
    assert got.poly.eval(3, 5) == 0
    for p in FOUR:
        assert got.poly.eval(p.x, p.y) == 0


def test_combination_preconditions():
    with pytest.raises(ValueError):
        verify.curve_through_extra_node(FOUR, 2, (0, 0))
    tri = NodeSet([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(ValueError):
        verify.curve_through_extra_node(tri, 1, (5, 5))


def test_line_usage_on_engineered_set():
    # 3-poised set whose second line carries exactly 3 nodes
    br = generators.berzolari_radon(3, 2)
    reports = verify.line_usage_reports(br.nodes, 3)
    for rep in reports:
        assert len(rep.nodes_on_line) == 3
        assert len(rep.users) in (1, 3)
        assert rep.noncollinear_users


def test_line_usage_preconditions():
    tri = NodeSet([(0, 0), (1, 0), (0, 1)])
    with pytest.raises(ValueError):
        verify.line_usage_reports(tri, 1)
    br = generators.berzolari_radon(3, 2)
    with pytest.raises(ValueError):
        verify.line_usage_reports(br.nodes.without(br.nodes[0]), 3)


def test_line_usage_no_three_node_lines_is_empty():
    # poised set with every pair line carrying only 2 nodes
    xs = generators.random_poised(3, 123)
    pairs = [(i, j) for i in range(len(xs)) for j in range(i + 1, len(xs))]
    counts = []
    for i, j in pairs:
        line = curves.LineForm.through(xs[i], xs[j])
        counts.append(sum(1 for p in xs if line.eval(p.x, p.y) == 0))
    if all(c == 2 for c in counts):
        assert verify.line_usage_reports(xs, 3) == []
    else:
        reports = verify.line_usage_reports(xs, 3)
        assert all(len(r.users) in (1, 3) for r in reports)
