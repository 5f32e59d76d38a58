import random

import pytest

from metric_realize import (
    Cmp,
    DistanceFamily,
    FamilyError,
    WeightedGraph,
    check_four_point,
    check_median,
    check_triangle,
    is_indecomposable,
    prune,
    support_graph,
    two_weights,
)

from conftest import fam, fam_of, random_connected_graph


class TestDistanceFamily:
    def test_requires_all_pairs(self):
        with pytest.raises(FamilyError):
            DistanceFamily(3, {(1, 2): 1, (1, 3): 1})

    def test_rejects_nonpositive(self):
        with pytest.raises(FamilyError):
            fam(3, {(1, 2): 1, (1, 3): 0, (2, 3): 1})

    def test_diagonal_is_zero(self):
        f = fam(3, {(1, 2): 1, (1, 3): 2, (2, 3): 1})
        assert f.d(2, 2) == 0

    def test_symmetric_lookup(self):
        f = fam(3, {(1, 2): 1, (1, 3): 2, (2, 3): 1})
        assert f.d(3, 1) == f.d(1, 3) == 2

    def test_needs_two_vertices(self):
        with pytest.raises(FamilyError):
            DistanceFamily(1, {})


class TestTriangle:
    def test_equality_case_holds(self):
        f = fam(3, {(1, 2): 1, (2, 3): 1, (1, 3): 2})
        assert check_triangle(f).holds

    def test_violation_reported(self):
        f = fam(3, {(1, 2): 1, (2, 3): 1, (1, 3): 3})
        report = check_triangle(f)
        assert not report.holds
        assert (1, 3, 2) in report.violations

    def test_violation_cap(self):
        # D_{1,2} huge: many (1,2,k) violations, capped at the limit
        values = {(i, j): 1 for i in range(1, 9) for j in range(i + 1, 9)}
        values[(1, 2)] = 10
        f = fam(8, values)
        report = check_triangle(f, max_violations=3)
        assert not report.holds
        assert len(report.violations) == 3

    def test_graph_families_satisfy_triangle(self):
        rng = random.Random(11)
        for _ in range(100):
            g = random_connected_graph(rng.randint(2, 10), rng)
            assert check_triangle(two_weights(g)).holds


class TestFourPoint:
    def test_path_family_holds(self):
        f = fam_of(4, [(1, 2, 1), (2, 3, 2), (3, 4, 3)])
        assert check_four_point(f).holds

    def test_unit_four_cycle_fails(self):
        f = fam_of(4, [(1, 2, 1), (2, 3, 1), (3, 4, 1), (4, 1, 1)])
        report = check_four_point(f)
        assert not report.holds
        assert report.violations == [(1, 2, 3, 4)]

    def test_vacuous_for_three_points(self):
        f = fam(3, {(1, 2): 1, (1, 3): 3, (2, 3): 1})
        assert check_four_point(f).holds

    def test_tree_families_hold(self):
        from metric_realize.generators import random_prufer_tree

        rng = random.Random(5)
        for _ in range(60):
            n = rng.randint(2, 10)
            edges = [(u, v, rng.randint(1, 20)) for u, v in random_prufer_tree(n, rng)]
            f = two_weights(WeightedGraph(n, edges))
            assert check_four_point(f).holds
            assert check_median(f).holds


class TestMedian:
    def test_path_triple_median_is_interior_vertex(self):
        f = fam_of(3, [(1, 2, 1), (2, 3, 2)])
        assert check_median(f).holds

    def test_unit_star_median_is_center(self):
        f = fam_of(4, [(1, 2, 1), (1, 3, 1), (1, 4, 1)])
        assert check_median(f).holds

    def test_unit_complete_graph_has_no_medians(self):
        f = fam(4, {(i, j): 1 for i in range(1, 5) for j in range(i + 1, 5)})
        report = check_median(f)
        assert not report.holds
        assert report.violations[0] == (1, 2, 3, 0)

    def test_vacuous_for_two_points(self):
        f = fam(2, {(1, 2): 5})
        assert check_median(f).holds


class TestIndecomposable:
    def test_unit_triangle(self):
        f = fam(3, {(1, 2): 1, (1, 3): 1, (2, 3): 1})
        assert is_indecomposable(f, 1, 2)

    def test_tight_entry_is_decomposable(self):
        f = fam(3, {(1, 2): 1, (2, 3): 1, (1, 3): 2})
        assert not is_indecomposable(f, 1, 3)

    def test_figure_family_entries(self, fig2_family):
        assert is_indecomposable(fig2_family, 7, 9)
        assert not is_indecomposable(fig2_family, 1, 12)

    def test_symmetry(self, fig2_family):
        for i, j in [(3, 5), (1, 2), (4, 6), (12, 11)]:
            assert is_indecomposable(fig2_family, i, j) == is_indecomposable(fig2_family, j, i)

    def test_bad_indices(self):
        f = fam(2, {(1, 2): 1})
        with pytest.raises(FamilyError):
            is_indecomposable(f, 1, 1)
        with pytest.raises(FamilyError):
            is_indecomposable(f, 0, 2)


class TestSupportGraph:
    def test_unit_triangle_gives_complete(self):
        f = fam(3, {(1, 2): 1, (1, 3): 1, (2, 3): 1})
        g = support_graph(f)
        assert g.edge_pairs() == {(1, 2), (1, 3), (2, 3)}

    def test_tight_family_gives_path(self):
        f = fam(3, {(1, 2): 1, (2, 3): 1, (1, 3): 2})
        g = support_graph(f)
        assert g.edge_pairs() == {(1, 2), (2, 3)}

    def test_unit_k5(self):
        f = fam(5, {(i, j): 1 for i in range(1, 6) for j in range(i + 1, 6)})
        assert len(support_graph(f).edges) == 10

    def test_rejects_triangle_violation(self):
        f = fam(3, {(1, 2): 1, (2, 3): 1, (1, 3): 3})
        with pytest.raises(FamilyError):
            support_graph(f)

    def test_support_of_pruned_graph_family_is_the_graph(self):
        rng = random.Random(99)
        for _ in range(40):
            g = prune(random_connected_graph(rng.randint(2, 9), rng))
            assert support_graph(two_weights(g)) == WeightedGraph(
                g.n, g.edges, require_connected=False
            )


class TestToleranceMode:
    def test_float_equality_within_tolerance(self):
        cmp = Cmp(1e-9)
        f = fam(3, {(1, 2): 1.0, (2, 3): 1.0, (1, 3): 2.0 + 1e-13}, cmp)
        assert check_triangle(f).holds
        assert not is_indecomposable(f, 1, 3)

    def test_strictness_needs_clear_gap(self):
        cmp = Cmp(1e-6)
        f = fam(3, {(1, 2): 1.0, (2, 3): 1.0, (1, 3): 2.0 - 1e-9}, cmp)
        # within tolerance of equality: still counted as decomposable
        assert not is_indecomposable(f, 1, 3)
