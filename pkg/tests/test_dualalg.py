import pytest

from splitkit.calibration import calibrate_convention, default_cases
from splitkit.dualalg import (
    GraphPresentation,
    QuadraticPresentation,
    vertex_algebra_presentation,
    discrepancy_lhs,
    discrepancy_lhs_table,
    graded_dims,
    vertex_hilbert,
    numerical_koszul_check,
    quadratic_dual,
)
from splitkit.errors import SizeLimit
from splitkit.exactlinalg import GF2, GF3, RATIONALS
from splitkit.fixtures import koszul_corpus, rp2_six, single_edge_graph
from splitkit.laygraph import boolean_graph, complex_graph, hat
from splitkit.topo import discrepancy_rhs_table


def test_presentation_counts_boolean2():
    pres = vertex_algebra_presentation(boolean_graph(2), RATIONALS)
    assert pres.generators == ("{1}", "{2}", "{1,2}")
    # 7 non-edge pairs + 1 cover-sum relation, all independent
    assert len(pres.relations) == 8


def test_presentation_counts_boolean3():
    pres = vertex_algebra_presentation(boolean_graph(3), RATIONALS)
    assert pres.num_generators == 7
    vec_count = sum(1 for v, lv in boolean_graph(3).vertices if lv >= 2)
    assert vec_count == 4  # one sum relation per vertex of level >= 2


def test_single_edge_algebra_is_dual_numbers():
    g = single_edge_graph()
    pres = vertex_algebra_presentation(g, RATIONALS)
    assert pres.generators == ("a",)
    assert pres.relations == ((1,),)  # x (x) x = 0, nothing else
    assert list(vertex_hilbert(g, RATIONALS).coeffs) == [1, 1]


def test_graded_dims_of_vertex_algebras():
    assert list(vertex_hilbert(boolean_graph(2), RATIONALS).coeffs) == [1, 3, 1]
    assert list(vertex_hilbert(boolean_graph(3), RATIONALS).coeffs) == [1, 7, 5, 1]
    assert list(vertex_hilbert(boolean_graph(3), GF2).coeffs) == [1, 7, 5, 1]


def test_height_one_graph_with_m_tops():
    from splitkit.laygraph import LayeredGraph

    g = LayeredGraph(
        [("∅", 0), ("a", 1), ("b", 1), ("c", 1)],
        [("a", "∅"), ("b", "∅"), ("c", "∅")],
    )
    assert list(vertex_hilbert(g, RATIONALS).coeffs) == [1, 3]


def test_path_basis_route_matches_generic_tensor_route():
    # same dimensions through the full tensor quotient, with the graph
    # structure erased from the presentation
    for g, field, maxdeg in [
        (boolean_graph(2), RATIONALS, 4),
        (boolean_graph(2), GF2, 4),
        (single_edge_graph(), RATIONALS, 4),
        (boolean_graph(3), GF2, 3),
    ]:
        pres = vertex_algebra_presentation(g, field)
        plain = QuadraticPresentation(pres.generators, pres.relations, field)
        generic = graded_dims(plain, maxdeg)
        path = graded_dims(pres, maxdeg)
        assert generic == path, (field, maxdeg)


def test_graded_dims_free_and_truncated_closed_forms():
    free = QuadraticPresentation.make(("x", "y"), [], RATIONALS)
    assert graded_dims(free, 4) == [1, 2, 4, 8, 16]
    full = QuadraticPresentation.make(
        ("x", "y"), [[1 if i == j else 0 for i in range(4)] for j in range(4)], RATIONALS
    )
    assert graded_dims(full, 4) == [1, 2, 0, 0, 0]


def test_graded_dims_cap():
    free = QuadraticPresentation.make(tuple("abcdefgh"), [[0] * 64], RATIONALS)
    with pytest.raises(SizeLimit):
        graded_dims(free, 9, cap=10**4)


def test_quadratic_dual_extremes():
    free = QuadraticPresentation.make(("x", "y"), [], RATIONALS)
    dual = quadratic_dual(free)
    assert len(dual.relations) == 4  # full relation space
    assert graded_dims(dual, 3) == [1, 2, 0, 0]
    redual = quadratic_dual(dual)
    assert redual.relations == free.relations


def test_quadratic_dual_of_square_zero_is_polynomial_ring():
    p = QuadraticPresentation.make(("x",), [[1]], RATIONALS)
    dual = quadratic_dual(p)
    assert dual.relations == ()
    assert graded_dims(dual, 4) == [1, 1, 1, 1, 1]


def test_double_dual_restores_relation_space():
    pres = vertex_algebra_presentation(boolean_graph(2), GF2)
    plain = QuadraticPresentation(pres.generators, pres.relations, GF2)
    assert quadratic_dual(quadratic_dual(plain)).relations == plain.relations


def test_dims_vanish_beyond_height_on_corpus():
    for name, g in koszul_corpus():
        pres = vertex_algebra_presentation(g, GF2)
        dims = graded_dims(pres, g.height + 2)
        assert dims[g.height + 1 :] == [0, 0], name


def test_dims_degree_one_counts_generators():
    for name, g in koszul_corpus():
        poly = vertex_hilbert(g, GF2)
        positives = sum(1 for _, lv in g.vertices if lv > 0)
        assert poly[1] == positives, name


def test_koszul_check_passes_on_corpus_both_fields():
    for name, g in koszul_corpus():
        for field in (RATIONALS, GF2):
            verdict = numerical_koszul_check(g, field)
            assert verdict.passes, (name, field)


def test_koszul_check_fails_for_hatted_projective_plane_char2_only():
    g = hat(complex_graph(rp2_six()))
    bad = numerical_koszul_check(g, GF2)
    assert not bad.passes
    assert bad.first_divergence_degree == 4  # frozen regression value
    assert list(bad.algebra_side.coeffs) == [1, 32, 44, 16, 1]
    assert list(bad.series_side.coeffs) == [1, 32, 44, 16]
    for field in (RATIONALS, GF3):
        assert numerical_koszul_check(g, field).passes


def test_discrepancy_lhs_zero_whenever_koszul():
    for name, g in koszul_corpus():
        assert discrepancy_lhs_table(g, GF2) == [0] * (g.height + 1), name


def test_discrepancy_lhs_degree_values():
    g = hat(complex_graph(rp2_six()))
    assert discrepancy_lhs_table(g, GF2) == [0, 0, 0, 0, 1]
    assert discrepancy_lhs(g, GF2, 0) == 0 and discrepancy_lhs(g, GF2, 1) == 0


def test_discrepancy_cross_module_oracle():
    g = hat(complex_graph(rp2_six()))
    for field in (GF2, RATIONALS):
        assert discrepancy_lhs_table(g, field) == discrepancy_rhs_table(g, field, "calibrated")


def test_calibration_uniquely_selects_shipped_convention():
    result = calibrate_convention(default_cases())
    assert result.selected == ("calibrated",)
    assert result.unique
    nonzero = result.tables["hat_rp2_six/GF2"]
    assert nonzero["lhs"] == [0, 0, 0, 0, 1]


def test_graph_presentation_carries_graph():
    pres = vertex_algebra_presentation(boolean_graph(2), RATIONALS)
    assert isinstance(pres, GraphPresentation)
    assert pres.graph == boolean_graph(2)


def test_discrepancy_identity_holds_off_corpus():
    # the two sides agree on any valid layered graph, Koszul or not,
    # uniform or not; these two have genuinely nonzero tables
    from splitkit.fixtures import nonuniform_graph
    from splitkit.laygraph import LayeredGraph

    bad = nonuniform_graph()
    hat_two_edges = LayeredGraph(
        [("∅", 0), ("1", 1), ("2", 1), ("3", 1), ("4", 1), ("a", 2), ("b", 2), ("M", 3)],
        [("1", "∅"), ("2", "∅"), ("3", "∅"), ("4", "∅"),
         ("a", "1"), ("a", "2"), ("b", "3"), ("b", "4"), ("M", "a"), ("M", "b")],
    )
    for g in (bad, hat_two_edges):
        for field in (RATIONALS, GF2):
            lhs = discrepancy_lhs_table(g, field)
            assert lhs == discrepancy_rhs_table(g, field, "calibrated")
            assert lhs == [0, 0, 0, 1]  # field-independent here
    # independent route agrees on the non-uniform graph too
    pres = vertex_algebra_presentation(bad, RATIONALS)
    plain = QuadraticPresentation(pres.generators, pres.relations, RATIONALS)
    assert graded_dims(plain, 3) == graded_dims(pres, 3) == [1, 5, 1, 0]


def test_vertex_algebra_field_must_be_explicit():
    with pytest.raises(TypeError):
        vertex_hilbert(boolean_graph(2))  # no default field


def test_vertex_dims_equal_top_down_set_homology():
    # third, fully independent route: the degree-k dimension is the sum
    # over vertices of level >= k of the top reduced Betti number of the
    # order complex of the k-1 levels strictly below the vertex
    from splitkit.fixtures import full_graph_corpus
    from splitkit.laygraph import STAR_ID, down_graph
    from splitkit.topo import betti, order_complex

    for name, g in full_graph_corpus():
        for field in (RATIONALS, GF2):
            dims = list(vertex_hilbert(g, field).coeffs)
            dims += [0] * (g.height + 1 - len(dims))
            for k in range(2, g.height + 1):
                total = 0
                for v, lv in g.vertices:
                    if lv >= k:
                        oc = order_complex(down_graph(g, v, k), exclude={STAR_ID})
                        total += betti(oc, field, reduced=True)[k - 2]
                assert dims[k] == total, (name, field, k)


def test_subspace_lattices_are_numerically_koszul():
    from splitkit.laygraph import subspace_graph

    for n, q in [(2, 2), (3, 2), (2, 3)]:
        g = subspace_graph(n, q)
        for field in (RATIONALS, GF2, GF3):
            assert numerical_koszul_check(g, field).passes, (n, q, field)
            assert discrepancy_lhs_table(g, field) == discrepancy_rhs_table(g, field, "calibrated")


def test_zero_dimensional_complex_algebra():
    from splitkit.laygraph import SimplicialComplex, complex_graph

    g = complex_graph(SimplicialComplex([[1], [2], [3]]))
    assert list(vertex_hilbert(g, GF2).coeffs) == [1, 3]
    assert numerical_koszul_check(g, RATIONALS).passes
