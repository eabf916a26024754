import pytest

from splitkit.errors import SizeLimit, ValidationError
from splitkit.fixtures import (
    boundary_delta3,
    delta2,
    nonuniform_graph,
    rp2_six,
    triangle_plus_edge,
    wedge_triangles,
)
from splitkit.laygraph import (
    LayeredGraph,
    SimplicialComplex,
    boolean_graph,
    complex_graph,
    down_graph,
    hat,
    is_codim1_connected,
    is_pure,
    is_uniform,
    subspace_graph,
    validate,
)


def test_boolean_graph_counts():
    assert len(boolean_graph(1).vertices) == 2 and len(boolean_graph(1).edges) == 1
    g2 = boolean_graph(2)
    assert len(g2.vertices) == 4 and len(g2.edges) == 4
    g3 = boolean_graph(3)
    assert len(g3.vertices) == 8 and len(g3.edges) == 12
    for n in range(1, 5):
        g = boolean_graph(n)
        from math import comb

        assert [len(g.level_vertices(i)) for i in range(n + 1)] == [comb(n, i) for i in range(n + 1)]
        assert len(g.edges) == n * 2 ** (n - 1)


def test_every_constructor_output_validates():
    graphs = [boolean_graph(n) for n in range(1, 5)]
    graphs += [complex_graph(x) for x in (delta2(), boundary_delta3(), rp2_six(), wedge_triangles())]
    graphs += [hat(g) for g in graphs[:2]]
    graphs += [subspace_graph(2, 2), subspace_graph(3, 2)]
    for g in graphs:
        assert validate(g).ok


def test_validate_reports_level_gap():
    g = LayeredGraph([("a", 2), ("b", 0)], [("a", "b")])
    rep = validate(g)
    assert not rep.ok and any("level gap" in v for v in rep.violations)


def test_validate_reports_non_unique_minimum():
    g = LayeredGraph([("a", 0), ("b", 0), ("c", 1)], [("c", "a")])
    rep = validate(g)
    assert any("non-unique minimum" in v for v in rep.violations)


def test_validate_reports_stranded_vertex():
    g = LayeredGraph([("a", 0), ("b", 1), ("c", 1)], [("b", "a")])
    rep = validate(g)
    assert any("no downward edge" in v for v in rep.violations)


def test_constructor_rejects_broken_input():
    with pytest.raises(ValidationError):
        LayeredGraph([("a", 0), ("a", 1)], [])
    with pytest.raises(ValidationError):
        LayeredGraph([("a", 0)], [("a", "zz")])
    with pytest.raises(ValidationError):
        LayeredGraph([], [])


def test_subspace_graph_small_cases():
    g = subspace_graph(1, 5)
    assert len(g.vertices) == 2 and len(g.edges) == 1
    g = subspace_graph(2, 2)
    assert [len(g.level_vertices(i)) for i in range(3)] == [1, 3, 1]
    assert len(g.edges) == 6
    g = subspace_graph(3, 2)
    assert [len(g.level_vertices(i)) for i in range(4)] == [1, 7, 7, 1]
    assert len(g.edges) == 35  # 7 lines over 0 + 21 line-in-plane + 7 planes under F


def test_subspace_graph_cap():
    with pytest.raises(SizeLimit):
        subspace_graph(5, 5, cap=100)


def test_complex_graph_of_full_simplex_is_boolean():
    gx = complex_graph(delta2())
    gb = boolean_graph(3)
    # same layered structure up to vertex naming
    assert [len(gx.level_vertices(i)) for i in range(4)] == [len(gb.level_vertices(i)) for i in range(4)]
    assert len(gx.edges) == len(gb.edges)
    # identical under the canonical face ids
    assert gx == gb


def test_complex_graph_boundary_tetrahedron_levels():
    g = complex_graph(boundary_delta3())
    assert [len(g.level_vertices(i)) for i in range(4)] == [1, 4, 6, 4]


def test_complex_graph_single_vertex():
    g = complex_graph(SimplicialComplex([[1]]))
    assert len(g.vertices) == 2 and len(g.edges) == 1


def test_hat_adds_one_top_vertex():
    g = complex_graph(boundary_delta3())
    h = hat(g)
    assert h.height == g.height + 1
    assert len(h.level_vertices(h.height)) == 1
    top = h.level_vertices(h.height)[0]
    assert set(h.children(top)) == set(g.level_vertices(g.height))
    assert validate(h).ok


def test_hat_over_rp2_has_ten_covers():
    h = hat(complex_graph(rp2_six()))
    top = h.level_vertices(4)[0]
    assert len(h.children(top)) == 10


def test_hat_of_truncated_diamond():
    g = LayeredGraph([("∅", 0), ("{1}", 1), ("{2}", 1)], [("{1}", "∅"), ("{2}", "∅")])
    h = hat(g)
    assert len(h.vertices) == 4 and len(h.edges) == 4  # the diamond shape


def test_down_graph_examples():
    g = boolean_graph(3)
    dg = down_graph(g, "{1,3}", 2)
    assert sorted(v for v, _ in dg.vertices) == ["*", "{1}", "{3}"]
    dg = down_graph(g, "{1,2,3}", 3)
    assert validate(dg).ok
    # k = level(v): the whole open down-set under a fresh minimum
    open_down = {w for w in g.descendants()["{1,2,3}"] if g.level(w) >= 1}
    assert {v for v, _ in dg.vertices} == open_down | {"*"}
    assert len(dg.vertices) == 7  # six proper nonempty subsets plus the minimum


def test_down_graph_of_hatted_face_poset_top():
    from splitkit.fixtures import rp2_six

    g = hat(complex_graph(rp2_six()))
    dg = down_graph(g, "M", 4)
    # the whole face poset of the complex, re-minimized over "*"
    assert len(dg.vertices) == 1 + 6 + 15 + 10
    assert validate(dg).ok and dg.height == 3


def test_down_graph_k1_is_star_only():
    g = boolean_graph(3)
    dg = down_graph(g, "{1,2}", 1)
    assert [v for v, _ in dg.vertices] == ["*"]


def test_down_graph_bad_args():
    g = boolean_graph(2)
    with pytest.raises(ValueError):
        down_graph(g, "{1}", 2)
    with pytest.raises(ValueError):
        down_graph(g, "nope", 1)


def test_uniformity():
    for n in range(1, 5):
        assert is_uniform(boolean_graph(n))
    for x in (delta2(), boundary_delta3(), rp2_six()):
        assert is_uniform(complex_graph(x))
        assert is_uniform(hat(complex_graph(x)))
    assert not is_uniform(nonuniform_graph())


def test_single_path_graph_is_uniform():
    g = LayeredGraph([("a", 0), ("b", 1), ("c", 2)], [("c", "b"), ("b", "a")])
    assert is_uniform(g)


def test_purity_and_codim1_connectivity():
    assert is_pure(boundary_delta3(), 2)
    assert is_codim1_connected(boundary_delta3())
    assert is_pure(wedge_triangles(), 2)
    assert not is_codim1_connected(wedge_triangles())
    assert not is_pure(triangle_plus_edge())
    assert is_pure(delta2(), 2) and is_codim1_connected(delta2())


def test_simplicial_complex_canonicalization():
    x = SimplicialComplex([[3, 2, 1], [1, 2], [2, 3, 1]])
    assert x.facets == ((1, 2, 3),)
    assert x.dim == 2
    assert x.f_vector() == [3, 3, 1]
    assert x.has_face([2, 3]) and not x.has_face([4])
    with pytest.raises(ValueError):
        SimplicialComplex([[]])


def test_graph_json_round_trip():
    for g in (boolean_graph(3), hat(complex_graph(rp2_six())), nonuniform_graph()):
        assert LayeredGraph.from_json_dict(g.to_json_dict()) == g


def test_complex_json_round_trip():
    for x in (delta2(), rp2_six(), wedge_triangles()):
        assert SimplicialComplex.from_json_dict(x.to_json_dict()) == x


def test_graph_is_immutable():
    g = boolean_graph(2)
    with pytest.raises(AttributeError):
        g.height = 7
