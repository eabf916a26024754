"""Quadratic presentations, graded dimensions, duals, and the Koszul numerics.

The vertex algebra of a layered graph is generated by the positive-level
vertices with two families of degree-2 relations: products along
non-edges vanish, and each vertex kills the sum of its lower covers.
Its graded dimensions are computed by exact rank on the path-word basis,
and compared against the sign-alternated inverse Hilbert series of the
edge algebra.
"""

import itertools
from dataclasses import dataclass

from .caps import TENSOR_ENTRY_CAP, size_cap
from .errors import NegativeDiscrepancy, SizeLimit
from .exactlinalg import EchelonBasis, FieldSpec, annihilator_basis
from .laygraph import LayeredGraph, require_valid
from .mobius import hilbert_series_inverse
from .seriespoly import IntPolynomial, substitute_neg


@dataclass(frozen=True)
class QuadraticPresentation:
    """Generators plus a canonical (RREF) basis of the degree-2 relation space.

    Relation vectors live in the m^2-dimensional tensor square of the
    generator space, coordinates ordered (row generator, column generator).
    """

    generators: tuple
    relations: tuple
    field: FieldSpec

    @classmethod
    def make(cls, generators, relation_vectors, field: FieldSpec) -> "QuadraticPresentation":
        generators = tuple(generators)
        dim = len(generators) ** 2
        basis = EchelonBasis(field)
        for vec in relation_vectors:
            if len(vec) != dim:
                raise ValueError("relation vector has wrong length")
            basis.insert({i: field.of(v) for i, v in enumerate(vec) if v})
        rows = []
        for sparse in basis.reduced_rows():
            dense = [field.zero()] * dim
            for i, v in sparse.items():
                dense[i] = v
            rows.append(tuple(dense))
        return cls(generators, tuple(rows), field)

    @property
    def num_generators(self) -> int:
        return len(self.generators)


@dataclass(frozen=True)
class GraphPresentation(QuadraticPresentation):
    """Presentation of the vertex algebra of a layered graph; remembers the
    graph so graded dimensions can run on the path basis."""

    graph: LayeredGraph = None


def vertex_algebra_presentation(g: LayeredGraph, field: FieldSpec) -> GraphPresentation:
    """Vertex-algebra presentation: generators are the positive-level vertices.

    Relations: u (x) v for every ordered pair without an edge u -> v, and
    v (x) (sum of lower covers of v) for every v of level >= 2.  Level-1
    vertices cover only the minimum, which is not a generator, so they
    contribute no sum relation.
    """
    require_valid(g)
    gens = [v for v, lv in g.vertices if lv > 0]
    index = {v: i for i, v in enumerate(gens)}
    m = len(gens)
    vectors = []
    edge_set = set(g.edges)
    for u, v in itertools.product(gens, repeat=2):
        if (u, v) not in edge_set:
            vec = [0] * (m * m)
            vec[index[u] * m + index[v]] = 1
            vectors.append(vec)
    for v in gens:
        if g.level(v) >= 2:
            vec = [0] * (m * m)
            for w in g.children(v):
                vec[index[v] * m + index[w]] = 1
            vectors.append(vec)
    base = QuadraticPresentation.make(gens, vectors, field)
    return GraphPresentation(base.generators, base.relations, field, graph=g)


def _paths_by_length(g: LayeredGraph, maxlen: int) -> list:
    """paths[k] = all downward edge-paths of k vertices inside positive levels."""
    gens = [v for v, lv in g.vertices if lv > 0]
    paths = [[()], [(v,) for v in gens]]
    for _ in range(2, maxlen + 1):
        nxt = []
        for p in paths[-1]:
            tail = p[-1]
            if g.level(tail) >= 2:
                nxt.extend(p + (w,) for w in g.children(tail))
        paths.append(nxt)
    return paths


def _graph_graded_dims(g: LayeredGraph, field: FieldSpec, maxdeg: int) -> list:
    """Graded dimensions of the vertex algebra on the path-word basis.

    Words with a non-edge adjacency are already relations, so degree k is
    spanned by paths of k vertices; the sum relations embed as rows
    summing over the middle vertex of path words with fixed ends.
    """
    paths = _paths_by_length(g, maxdeg)
    dims = [1]
    for k in range(1, maxdeg + 1):
        cols = {p: i for i, p in enumerate(paths[k])}
        if not cols:
            dims.append(0)
            continue
        if k == 1:
            dims.append(len(cols))
            continue
        basis = EchelonBasis(field)
        one = field.one()
        for a in range(k - 1):
            b = k - 2 - a
            for prefix in paths[a + 1]:
                u = prefix[-1]
                if g.level(u) < 2:
                    continue
                ws = g.children(u)
                for suffix in paths[b]:
                    row = {}
                    for w in ws:
                        if b == 0 or suffix[0] in g.children(w):
                            word = prefix + (w,) + suffix
                            idx = cols.get(word)
                            if idx is not None:
                                row[idx] = field.add(row.get(idx, field.zero()), one)
                    if row:
                        basis.insert(row)
        dims.append(len(cols) - basis.rank)
    if maxdeg > g.height:
        assert all(d == 0 for d in dims[g.height + 1 :]), "dimensions persist beyond the graph height"
    return dims


def graded_dims(p: QuadraticPresentation, maxdeg: int, cap: int | None = None) -> list:
    """dims[k] = dim of degree k of the quadratic algebra, k = 0..maxdeg.

    Graph presentations run on the path basis.  Generic presentations
    quotient the full tensor power by all embedded relation vectors; the
    ambient size (rows x columns) is capped.
    """
    if isinstance(p, GraphPresentation) and p.graph is not None:
        return _graph_graded_dims(p.graph, p.field, maxdeg)
    cap = size_cap(TENSOR_ENTRY_CAP) if cap is None else cap
    m = p.num_generators
    field = p.field
    dims = [1]
    for k in range(1, maxdeg + 1):
        if k == 1:
            dims.append(m)
            continue
        ambient = m**k
        n_rows = (k - 1) * len(p.relations) * m ** (k - 2)
        if ambient * max(n_rows, 1) > cap:
            raise SizeLimit(f"degree {k}: {n_rows} x {ambient} exceeds cap {cap}")
        basis = EchelonBasis(field)
        for a in range(k - 1):
            b = k - 2 - a
            for rel in p.relations:
                nonzero = [(i, v) for i, v in enumerate(rel) if v]
                for left in itertools.product(range(m), repeat=a):
                    for right in itertools.product(range(m), repeat=b):
                        row = {}
                        for pair, v in nonzero:
                            word = left + divmod(pair, m) + right
                            idx = 0
                            for w in word:
                                idx = idx * m + w
                            row[idx] = field.add(row.get(idx, field.zero()), v)
                        basis.insert({i: v for i, v in row.items() if v})
        dims.append(ambient - basis.rank)
    return dims


def vertex_hilbert(g: LayeredGraph, field: FieldSpec) -> IntPolynomial:
    """Hilbert polynomial of the vertex algebra; degree is at most the height."""
    require_valid(g)
    dims = _graph_graded_dims(g, field, g.height)
    poly = IntPolynomial(dims)
    assert poly.degree <= g.height
    return poly


def quadratic_dual(p: QuadraticPresentation) -> QuadraticPresentation:
    """Dual presentation: dual generators, relations = annihilator of R.

    The pairing identifies coordinates, <a (x) b, f (x) g> = f(a) g(b),
    so the annihilator is the kernel of the relation matrix.
    """
    m = p.num_generators
    rows = [list(r) for r in p.relations]
    ann = annihilator_basis(rows, m * m, p.field)
    return QuadraticPresentation.make(tuple(f"{g}*" for g in p.generators), ann, p.field)


@dataclass(frozen=True)
class KoszulVerdict:
    """Comparison of the two Hilbert polynomials that agree iff numerically Koszul."""

    passes: bool
    first_divergence_degree: int | None
    series_side: IntPolynomial  # inverse Hilbert polynomial at -tau
    algebra_side: IntPolynomial  # Hilbert polynomial of the vertex algebra
    field: FieldSpec


def numerical_koszul_check(g: LayeredGraph, field: FieldSpec) -> KoszulVerdict:
    """Exact polynomial comparison; no truncation is involved.

    The series side is the inverse Hilbert polynomial with tau -> -tau;
    the algebra side is the vertex-algebra Hilbert polynomial over the
    requested field.  The field must be passed explicitly because the
    algebra side is characteristic-sensitive.
    """
    series_side = substitute_neg(hilbert_series_inverse(g, check_degree=False))
    algebra_side = vertex_hilbert(g, field)
    first = None
    for k in range(max(series_side.degree, algebra_side.degree) + 1):
        if series_side[k] != algebra_side[k]:
            first = k
            break
    return KoszulVerdict(first is None, first, series_side, algebra_side, field)


def discrepancy_lhs(g: LayeredGraph, field: FieldSpec, k: int) -> int:
    """Series/algebra discrepancy at degree k, from the algebra side:

        [tau^k] ( H_vertex_algebra(tau) - H_inverse(-tau) ).

    Nonnegative on every corpus graph; a negative value would contradict
    the topological interpretation and raises NegativeDiscrepancy.
    """
    diff = vertex_hilbert(g, field) - substitute_neg(hilbert_series_inverse(g, check_degree=False))
    val = diff[k]
    if val < 0:
        raise NegativeDiscrepancy(f"degree {k}: {val}")
    return val


def discrepancy_lhs_table(g: LayeredGraph, field: FieldSpec) -> list:
    """[lhs(k) for k = 0..height]."""
    return [discrepancy_lhs(g, field, k) for k in range(g.height + 1)]
