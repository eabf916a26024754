"""Simplicial homology over a field, order complexes, and local homology.

Boundary matrices are exact DenseMatrix objects; Betti numbers come from
rank-nullity.  Over a field, cohomology dimensions equal homology
dimensions degreewise, so the homological ranks serve for both.
"""

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .errors import FaceNotInComplex, HypothesisViolation
from .exactlinalg import DenseMatrix, FieldSpec
from .laygraph import (
    STAR_ID,
    LayeredGraph,
    SimplicialComplex,
    down_graph,
    is_codim1_connected,
    is_pure,
    require_valid,
)

DISCREPANCY_CONVENTIONS = ("calibrated", "reduced-proper", "reduced-min", "unreduced-min")


@dataclass(frozen=True)
class BettiVector:
    """Betti numbers b[i] for i = 0..dim, over the given field."""

    b: tuple
    reduced: bool
    field: FieldSpec

    def __getitem__(self, i: int) -> int:
        return self.b[i] if 0 <= i < len(self.b) else 0

    def total(self) -> int:
        return sum(self.b)


def boundary_matrices(x: SimplicialComplex, field: FieldSpec, reduced: bool) -> list:
    """[D_0, ..., D_dim] with D_k the boundary map C_k -> C_{k-1}.

    D_0 is the augmentation row when reduced, else a 0-row matrix.
    Simplices are ordered by sorted vertex tuple; the sign of dropping
    position j is (-1)^j.  The composite of consecutive maps is checked
    to vanish.
    """
    bases = [x.faces_of_dim(k) for k in range(x.dim + 1)]
    mats = []
    for k in range(x.dim + 1):
        if k == 0:
            if reduced:
                mats.append(DenseMatrix([[field.one()] * len(bases[0])], field))
            else:
                mats.append(DenseMatrix.zeros(0, len(bases[0]), field))
            continue
        index = {s: i for i, s in enumerate(bases[k - 1])}
        cols = []
        for simplex in bases[k]:
            col = [field.zero()] * len(bases[k - 1])
            sign = field.one()
            for j in range(len(simplex)):
                face = simplex[:j] + simplex[j + 1 :]
                col[index[face]] = sign
                sign = field.neg(sign)
            cols.append(col)
        mats.append(DenseMatrix(list(zip(*cols)), field, shape=(len(bases[k - 1]), len(bases[k]))))
    for k in range(1, len(mats)):
        if mats[k - 1].rows and not (mats[k - 1] * mats[k]).is_zero():
            raise AssertionError(f"boundary composite at dimension {k} is nonzero")
    return mats


def betti(x: SimplicialComplex, field: FieldSpec, reduced: bool = False) -> BettiVector:
    """Betti numbers b_i = nullity(D_i) - rank(D_{i+1}) for i = 0..dim."""
    if x.is_empty():
        return BettiVector((), reduced, field)
    mats = boundary_matrices(x, field, reduced)
    ranks = [m.rank() for m in mats] + [0]
    sizes = [m.cols for m in mats]
    b = tuple(sizes[i] - ranks[i] - ranks[i + 1] for i in range(len(sizes)))
    return BettiVector(b, reduced, field)


def euler_characteristic(x: SimplicialComplex) -> int:
    return sum((-1) ** k * f for k, f in enumerate(x.f_vector()))


def order_complex(g: LayeredGraph, exclude=frozenset()) -> SimplicialComplex:
    """Order complex of the poset of a layered graph: simplices are chains.

    Vertices of the complex are integer indices of the poset elements in
    (level, id) order; facets are the maximal chains.  `exclude` drops
    poset elements (e.g. an added minimum) before taking chains.
    """
    complex_, _ = order_complex_labeled(g, exclude)
    return complex_


def order_complex_labeled(g: LayeredGraph, exclude=frozenset()) -> tuple:
    exclude = set(exclude)
    elems = [v for v, _ in g.vertices if v not in exclude]
    index = {v: i for i, v in enumerate(elems)}
    if not elems:
        return SimplicialComplex([]), []
    desc = g.descendants()
    below = {v: {w for w in desc[v] if w not in exclude} for v in elems}
    covers = {}
    for v in elems:
        direct = set(below[v])
        for w in below[v]:
            direct -= below[w]
        covers[v] = sorted(direct)
    maximal = [v for v in elems if not any(v in below[u] for u in elems)]
    chains = []

    def walk(v, chain):
        chain.append(v)
        if covers[v]:
            for w in covers[v]:
                walk(w, chain)
        else:
            chains.append([index[u] for u in chain])
        chain.pop()

    for v in maximal:
        walk(v, [])
    return SimplicialComplex(chains), elems


def link(x: SimplicialComplex, simplex) -> SimplicialComplex:
    """Link of a face: all faces disjoint from it whose union with it is a face."""
    s = frozenset(simplex)
    if not x.has_face(s):
        raise FaceNotInComplex(f"{sorted(s)} is not a face")
    facets = [set(f) - s for f in x.facets if s <= set(f)]
    return SimplicialComplex([f for f in facets if f])


def local_homology_vanishes(x: SimplicialComplex, field: FieldSpec, n: int | None = None) -> bool:
    """Local homology vanishing below degree n at every point.

    At a point in the open cell of a k-face, local homology in degree i
    is the reduced link homology in degree i-k-1; local homology is
    constant on open cells, so one check per face covers every point.
    """
    if n is None:
        n = x.dim
    for face in sorted(x.all_faces(), key=lambda f: (len(f), tuple(sorted(f)))):
        k = len(face) - 1
        top_j = n - k - 2  # highest reduced link degree that must vanish
        if top_j < -1:
            continue
        lk = link(x, face)
        if lk.is_empty():
            return False  # reduced degree -1 of the empty link is nonzero
        if top_j >= 0:
            bv = betti(lk, field, reduced=True)
            if any(bv[j] for j in range(0, top_j + 1)):
                return False
    return True


@dataclass(frozen=True)
class KoszulityPrediction:
    """Outcome of the homological Koszulity criteria for a pure complex."""

    passes: bool
    low_homology_vanishes: bool  # reduced H_i(X) = 0 for i < n
    local_homology_ok: bool
    n: int
    field: FieldSpec


def predict_koszulity(x: SimplicialComplex, field: FieldSpec) -> KoszulityPrediction:
    """Predict Koszulity of the hatted-graph algebras from X's topology.

    Requires X pure and connected through codimension-one faces; the
    verdict is the conjunction of reduced-homology vanishing below the
    top dimension and local-homology vanishing.
    """
    n = x.dim
    if not is_pure(x, n):
        short = next(f for f in x.facets if len(f) != n + 1)
        raise HypothesisViolation(f"complex is not pure: facet {list(short)} has dimension {len(short) - 1} < {n}")
    if not is_codim1_connected(x):
        facets = [set(f) for f in x.facets]
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(len(facets)):
                if j not in seen and len(facets[i] & facets[j]) == n:
                    seen.add(j)
                    stack.append(j)
        stranded = next(i for i in range(len(facets)) if i not in seen)
        raise HypothesisViolation(
            "complex is not connected through codimension-one faces: no such path "
            f"between facets {list(x.facets[0])} and {list(x.facets[stranded])}"
        )
    bv = betti(x, field, reduced=True)
    low = all(bv[i] == 0 for i in range(n))
    local = local_homology_vanishes(x, field, n)
    return KoszulityPrediction(low and local, low, local, n, field)


def _vertex_contribution(g, v, k, field, convention) -> int:
    level = g.level(v)
    if level < k:
        return 0
    if convention == "calibrated":
        if k < 2:
            return 0
        dg = down_graph(g, v, k)
        proper = order_complex(dg, exclude={STAR_ID})
        acc = 0
        if len(dg.vertices) == 1:  # empty down-set: reduced degree -1 is 1
            acc += 1 if k % 2 == 0 else -1
        bv = betti(proper, field, reduced=True)
        for i in range(0, k - 2):  # the top degree k-2 never enters
            acc += (1 if (k - 1 + i) % 2 == 0 else -1) * bv[i]
        return acc
    if k == 0:
        # the truncated down-set is empty; only the added minimum remains
        return 1 if convention == "unreduced-min" else 0
    dg = down_graph(g, v, k)
    if convention == "reduced-proper":
        bv = betti(order_complex(dg, exclude={STAR_ID}), field, reduced=True)
    elif convention == "reduced-min":
        bv = betti(order_complex(dg), field, reduced=True)
    elif convention == "unreduced-min":
        bv = betti(order_complex(dg), field, reduced=False)
    else:
        raise ValueError(f"unknown convention {convention!r}")
    return sum(bv[i] for i in range(level))


def discrepancy_rhs(
    g: LayeredGraph,
    field: FieldSpec,
    k: int,
    convention: str = "calibrated",
    parallel: bool = False,
) -> int:
    """Topological side of the series/algebra discrepancy at degree k.

    Sums, over vertices of level >= k, homology data of the order complex
    of the k-1 levels strictly below the vertex.  The shipped default is
    the convention the calibration suite selects: the signed sum of
    reduced Betti numbers below the top degree,

        sum over i in [-1, k-3] of (-1)^(k-1+i) * bt_i(proper down-set),

    which matches the series side exactly on every corpus graph.  The
    three plain-sum conventions are kept for comparison; none of them
    survives calibration.
    """
    require_valid(g)
    if convention not in DISCREPANCY_CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    if k < 0 or k > g.height:
        raise ValueError(f"need 0 <= k <= height = {g.height}")
    vs = [v for v, lv in g.vertices if lv >= k]
    if parallel:
        with ThreadPoolExecutor() as pool:
            return sum(pool.map(lambda v: _vertex_contribution(g, v, k, field, convention), vs))
    return sum(_vertex_contribution(g, v, k, field, convention) for v in vs)


def discrepancy_rhs_table(
    g: LayeredGraph, field: FieldSpec, convention: str = "calibrated", parallel: bool = False
) -> list:
    """[rhs(k) for k = 0..height]."""
    return [discrepancy_rhs(g, field, k, convention, parallel) for k in range(g.height + 1)]
