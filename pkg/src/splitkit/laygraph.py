"""Layered graphs and abstract simplicial complexes.

A layered graph is a finite DAG whose vertices carry levels and whose
edges drop exactly one level.  Constructors cover the subset lattice,
the subspace lattice of GF(q)^n, face posets of simplicial complexes,
and the one-vertex-on-top completion of a graph.
"""

import itertools
from dataclasses import dataclass

from .caps import SUBSPACE_VERTEX_CAP, size_cap
from .errors import SizeLimit, ValidationError
from .exactlinalg import EchelonBasis, FieldSpec

MIN_ID = "∅"
STAR_ID = "*"
TOP_ID = "M"


def set_id(vertices) -> str:
    """Canonical id of a finite set of ints: "∅", "{1}", "{1,3}"."""
    vs = sorted(vertices)
    if not vs:
        return MIN_ID
    return "{" + ",".join(str(v) for v in vs) + "}"


class LayeredGraph:
    """Immutable layered graph: vertices with levels, one-step-down edges."""

    __slots__ = ("vertices", "edges", "_level", "_out", "_in", "height", "_desc")

    def __init__(self, vertices, edges):
        vs = [(str(v), int(lv)) for v, lv in vertices]
        ids = [v for v, _ in vs]
        if len(set(ids)) != len(ids):
            raise ValidationError("duplicate vertex ids")
        if not vs:
            raise ValidationError("graph needs at least one vertex")
        level = dict(vs)
        if any(lv < 0 for lv in level.values()):
            raise ValidationError("negative level")
        es = []
        for t, h in edges:
            t, h = str(t), str(h)
            if t not in level or h not in level:
                raise ValidationError(f"edge ({t},{h}) references unknown vertex")
            es.append((t, h))
        if len(set(es)) != len(es):
            raise ValidationError("duplicate edges")
        self._level = level
        self.vertices = tuple(sorted(vs, key=lambda p: (p[1], p[0])))
        self.edges = tuple(sorted(es))
        self.height = max(level.values())
        out = {v: [] for v in level}
        inc = {v: [] for v in level}
        for t, h in self.edges:
            out[t].append(h)
            inc[h].append(t)
        self._out = {v: tuple(sorted(ws)) for v, ws in out.items()}
        self._in = {v: tuple(sorted(ws)) for v, ws in inc.items()}
        self._desc = None

    def __setattr__(self, name, value):
        if hasattr(self, "_in") and name != "_desc":
            raise AttributeError("LayeredGraph is immutable")
        super().__setattr__(name, value)

    def level(self, v: str) -> int:
        return self._level[v]

    def ids(self) -> tuple:
        return tuple(v for v, _ in self.vertices)

    def level_vertices(self, i: int) -> tuple:
        return tuple(v for v, lv in self.vertices if lv == i)

    def children(self, v: str) -> tuple:
        """Heads of edges out of v (the set S(v))."""
        return self._out[v]

    def parents(self, v: str) -> tuple:
        return self._in[v]

    def __contains__(self, v) -> bool:
        return v in self._level

    def __eq__(self, other):
        return (
            isinstance(other, LayeredGraph)
            and self.vertices == other.vertices
            and self.edges == other.edges
        )

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def descendants(self) -> dict:
        """Map v -> frozenset of vertices strictly below v (path order)."""
        if self._desc is None:
            desc = {}
            for v, _ in self.vertices:  # sorted by level, so children first
                acc = set()
                for w in self._out[v]:
                    acc.add(w)
                    acc |= desc[w]
                desc[v] = frozenset(acc)
            self._desc = desc
        return self._desc

    def less_than(self, w: str, v: str) -> bool:
        """w < v in the partial order (a directed path from v to w)."""
        return w in self.descendants()[v]

    def to_json_dict(self) -> dict:
        return {
            "vertices": [{"id": v, "level": lv} for v, lv in self.vertices],
            "edges": [[t, h] for t, h in self.edges],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "LayeredGraph":
        try:
            vertices = [(item["id"], item["level"]) for item in data["vertices"]]
            edges = [tuple(e) for e in data["edges"]]
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad layered-graph JSON: {exc}") from exc
        return cls(vertices, edges)

    def __repr__(self):
        return f"LayeredGraph({len(self.vertices)} vertices, {len(self.edges)} edges, height {self.height})"


@dataclass(frozen=True)
class ValidationReport:
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def validate(g: LayeredGraph) -> ValidationReport:
    """Check the layered-graph axioms plus the unique-minimum hypothesis."""
    bad = []
    for t, h in g.edges:
        if g.level(t) != g.level(h) + 1:
            bad.append(f"edge level gap: {t}({g.level(t)}) -> {h}({g.level(h)})")
    bottom = g.level_vertices(0)
    if len(bottom) == 0:
        bad.append("no minimum: level 0 is empty")
    elif len(bottom) > 1:
        bad.append(f"non-unique minimum: {list(bottom)}")
    for v, lv in g.vertices:
        if lv > 0 and not g.children(v):
            bad.append(f"no downward edge from {v} (level {lv})")
    return ValidationReport(tuple(bad))


def require_valid(g: LayeredGraph):
    rep = validate(g)
    if not rep.ok:
        raise ValidationError("; ".join(rep.violations))


def boolean_graph(n: int) -> LayeredGraph:
    """Subset lattice of {1..n}: level = cardinality, edges drop one element."""
    if n < 1:
        raise ValueError("n must be >= 1")
    vertices = []
    edges = []
    for mask in range(1 << n):
        s = frozenset(i + 1 for i in range(n) if mask >> i & 1)
        vertices.append((set_id(s), len(s)))
        for x in s:
            edges.append((set_id(s), set_id(s - {x})))
    return LayeredGraph(vertices, edges)


def _gaussian_binomial(n: int, k: int, q: int) -> int:
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def subspace_graph(n: int, q: int, cap: int | None = None) -> LayeredGraph:
    """Lattice of subspaces of GF(q)^n: level = dimension, edges = codim-1.

    Subspace ids are the rows of the reduced row echelon basis, e.g.
    "⟨110,011⟩"; single-digit entries, so q < 10.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if q >= 10:
        raise ValueError("subspace ids use single-digit entries; q must be < 10")
    field = FieldSpec(q)
    cap = size_cap(SUBSPACE_VERTEX_CAP) if cap is None else cap
    total = sum(_gaussian_binomial(n, k, q) for k in range(n + 1))
    if total > cap:
        raise SizeLimit(f"{total} subspaces exceeds cap {cap}")

    def rref_bases(k):
        if k == 0:
            yield ()
            return
        for pivots in itertools.combinations(range(n), k):
            free_cells = [
                (i, j)
                for i in range(k)
                for j in range(pivots[i] + 1, n)
                if j not in pivots
            ]
            for values in itertools.product(range(q), repeat=len(free_cells)):
                rows = [[0] * n for _ in range(k)]
                for i, p in enumerate(pivots):
                    rows[i][p] = 1
                for (i, j), val in zip(free_cells, values):
                    rows[i][j] = val
                yield tuple(tuple(r) for r in rows)

    def space_id(rows):
        return "⟨" + ",".join("".join(str(x) for x in r) for r in rows) + "⟩"

    by_dim = [list(rref_bases(k)) for k in range(n + 1)]
    vertices = [(space_id(rows), k) for k in range(n + 1) for rows in by_dim[k]]
    edges = []
    for k in range(1, n + 1):
        for big in by_dim[k]:
            basis = EchelonBasis(field)
            for row in big:
                basis.insert({j: v for j, v in enumerate(row) if v})
            for small in by_dim[k - 1]:
                if all(not basis.reduce({j: v for j, v in enumerate(r) if v}) for r in small):
                    edges.append((space_id(big), space_id(small)))
    return LayeredGraph(vertices, edges)


class SimplicialComplex:
    """Finite abstract simplicial complex given by its facets.

    Vertices are ints.  An empty facet list denotes the empty complex
    (only the empty face), which arises as the link of a facet.
    """

    __slots__ = ("facets", "_faces")

    def __init__(self, facets):
        sets = []
        for f in facets:
            fs = frozenset(int(v) for v in f)
            if not fs:
                raise ValueError("facets must be nonempty")
            sets.append(fs)
        maximal = [f for f in sets if not any(f < g for g in sets)]
        self.facets = tuple(sorted({tuple(sorted(f)) for f in maximal}))
        self._faces = None

    def __setattr__(self, name, value):
        if hasattr(self, "facets") and name != "_faces":
            raise AttributeError("SimplicialComplex is immutable")
        super().__setattr__(name, value)

    @property
    def vertices(self) -> tuple:
        return tuple(sorted({v for f in self.facets for v in f}))

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self.facets

    def all_faces(self) -> frozenset:
        """Every nonempty face, as frozensets."""
        if self._faces is None:
            faces = set()
            for f in self.facets:
                for k in range(1, len(f) + 1):
                    faces.update(map(frozenset, itertools.combinations(f, k)))
            self._faces = frozenset(faces)
        return self._faces

    def faces_of_dim(self, k: int) -> list:
        """Sorted k-dimensional faces as tuples."""
        return sorted(tuple(sorted(f)) for f in self.all_faces() if len(f) == k + 1)

    def has_face(self, simplex) -> bool:
        fs = frozenset(simplex)
        return any(fs <= set(f) for f in self.facets)

    def f_vector(self) -> list:
        out = [0] * (self.dim + 1)
        for f in self.all_faces():
            out[len(f) - 1] += 1
        return out

    def __eq__(self, other):
        return isinstance(other, SimplicialComplex) and self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def to_json_dict(self) -> dict:
        return {"facets": [list(f) for f in self.facets]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "SimplicialComplex":
        try:
            return cls(data["facets"])
        except (KeyError, TypeError) as exc:
            raise ValidationError(f"bad simplicial-complex JSON: {exc}") from exc

    def __repr__(self):
        return f"SimplicialComplex({len(self.facets)} facets, dim {self.dim})"


def complex_graph(x: SimplicialComplex) -> LayeredGraph:
    """Face poset of a simplicial complex as a layered graph.

    Each nonempty face sits at level dim+1; the empty face is the
    level-0 minimum; edges join a face to its codimension-1 faces.
    """
    if x.is_empty():
        raise ValueError("complex must have at least one facet")
    vertices = [(MIN_ID, 0)]
    edges = []
    for face in x.all_faces():
        fid = set_id(face)
        vertices.append((fid, len(face)))
        if len(face) == 1:
            edges.append((fid, MIN_ID))
        else:
            for v in face:
                edges.append((fid, set_id(face - {v})))
    return LayeredGraph(vertices, edges)


def hat(g: LayeredGraph) -> LayeredGraph:
    """Add one maximal vertex over everything at the current top level."""
    require_valid(g)
    top_id = TOP_ID
    while top_id in g:
        top_id += "'"
    vertices = list(g.vertices) + [(top_id, g.height + 1)]
    edges = list(g.edges) + [(top_id, v) for v in g.level_vertices(g.height)]
    return LayeredGraph(vertices, edges)


def down_graph(g: LayeredGraph, v: str, k: int) -> LayeredGraph:
    """Poset of the k-1 levels strictly under v, with a fresh minimum "*".

    Keeps {w : w < v, level(w) >= level(v)-k+1}, re-levelled so the
    lowest kept layer sits at level 1 over the added minimum.
    """
    if v not in g:
        raise ValueError(f"vertex {v!r} not in graph")
    lv = g.level(v)
    if not 1 <= k <= lv:
        raise ValueError(f"need 1 <= k <= level({v}) = {lv}")
    cutoff = lv - k + 1
    kept = {w for w in g.descendants()[v] if g.level(w) >= cutoff}
    vertices = [(STAR_ID, 0)] + [(w, g.level(w) - cutoff + 1) for w in kept]
    edges = []
    for w in kept:
        if g.level(w) == cutoff:
            edges.append((w, STAR_ID))
        else:
            edges.extend((w, u) for u in g.children(w) if u in kept)
    return LayeredGraph(vertices, edges)


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[ra] = rb


def is_uniform(g: LayeredGraph) -> bool:
    """Down-up connectivity of the children of every vertex.

    Two same-level vertices are linked when they share a lower cover;
    the graph is uniform when, for each vertex, all its children land
    in a single class of the equivalence this generates on their level.
    """
    require_valid(g)
    for i in range(1, g.height + 1):
        uf = _UnionFind(g.level_vertices(i))
        for w in g.level_vertices(i - 1):
            ps = g.parents(w)
            for a, b in zip(ps, ps[1:]):
                uf.union(a, b)
        for t in g.level_vertices(i + 1):
            ws = g.children(t)
            if any(uf.find(a) != uf.find(ws[0]) for a in ws[1:]):
                return False
    return True


def is_pure(x: SimplicialComplex, n: int | None = None) -> bool:
    """True when every facet has dimension n (default: dim of the complex)."""
    if x.is_empty():
        return False
    if n is None:
        n = x.dim
    return all(len(f) == n + 1 for f in x.facets)


def is_codim1_connected(x: SimplicialComplex) -> bool:
    """Facet dual graph (adjacency = shared codim-1 face) is connected."""
    if x.is_empty():
        return False
    d = x.dim
    facets = [set(f) for f in x.facets]
    if len(facets) == 1:
        return True
    seen = {0}
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(len(facets)):
            if j not in seen and len(facets[i] & facets[j]) == d:
                seen.add(j)
                stack.append(j)
    return len(seen) == len(facets)
