"""The in-repo corpus every check and demo runs against, offline."""

from .laygraph import LayeredGraph, SimplicialComplex, boolean_graph, complex_graph, hat


def delta2() -> SimplicialComplex:
    """The full triangle (a 2-simplex)."""
    return SimplicialComplex([[1, 2, 3]])


def boundary_delta3() -> SimplicialComplex:
    """Boundary of the tetrahedron: the minimal 2-sphere."""
    return SimplicialComplex([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]])


def rp2_six() -> SimplicialComplex:
    """The 6-vertex projective plane (antipodal quotient of the icosahedron).

    Every edge lies in exactly two triangles and every vertex link is a
    5-cycle; homology has 2-torsion, so its field Betti numbers differ
    between characteristic 2 and characteristic 0.
    """
    return SimplicialComplex(
        [
            [1, 2, 3],
            [1, 3, 4],
            [1, 4, 5],
            [1, 5, 6],
            [1, 2, 6],
            [2, 3, 5],
            [2, 4, 5],
            [2, 4, 6],
            [3, 4, 6],
            [3, 5, 6],
        ]
    )


def wedge_triangles() -> SimplicialComplex:
    """Two triangles glued at a single vertex: pure but not connected
    through codimension-one faces."""
    return SimplicialComplex([[1, 2, 3], [3, 4, 5]])


def triangle_plus_edge() -> SimplicialComplex:
    """A triangle with a dangling edge: not pure."""
    return SimplicialComplex([[1, 2, 3], [3, 4]])


def single_edge_graph() -> LayeredGraph:
    """Height-1 graph with one generator: one vertex over the minimum."""
    return LayeredGraph([("∅", 0), ("a", 1)], [("a", "∅")])


def nonuniform_graph() -> LayeredGraph:
    """Hand-built counterexample to uniformity.

    The two children of the top vertex have disjoint lower covers and
    there is no third level-2 vertex to bridge them.
    """
    return LayeredGraph(
        [("∅", 0), ("p", 1), ("q", 1), ("c", 2), ("d", 2), ("T", 3)],
        [("T", "c"), ("T", "d"), ("c", "p"), ("d", "q"), ("p", "∅"), ("q", "∅")],
    )


def complexes() -> list:
    return [
        ("delta2", delta2()),
        ("boundary_delta3", boundary_delta3()),
        ("rp2_six", rp2_six()),
    ]


def koszul_corpus() -> list:
    """(name, graph) pairs whose algebras are numerically Koszul over any field."""
    corpus = [(f"boolean_{n}", boolean_graph(n)) for n in range(1, 5)]
    corpus += [(f"faces_{name}", complex_graph(x)) for name, x in complexes()]
    corpus += [
        ("hat_delta2", hat(complex_graph(delta2()))),
        ("hat_boundary_delta3", hat(complex_graph(boundary_delta3()))),
    ]
    return corpus


def full_graph_corpus() -> list:
    """Koszul corpus plus the hatted projective plane (non-Koszul in char 2)."""
    return koszul_corpus() + [("hat_rp2_six", hat(complex_graph(rp2_six())))]
