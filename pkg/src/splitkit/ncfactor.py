"""Factorizations of monic polynomials with exact rational matrix roots.

Given n square rational matrices in generic position, every ordering of
the roots yields a factorization of the same monic degree-n polynomial
into linear factors t - x, where the x are conjugates of the roots by
quasideterminants of block Vandermonde matrices.  This module builds
those conjugates, the n! factorizations, and the consistency checks
between them.
"""

import itertools
from dataclasses import dataclass, field

from .errors import GenericityFailure, SingularMatrix
from .exactlinalg import RATIONALS, DenseMatrix, char_poly


@dataclass(frozen=True)
class RootSystem:
    """n square rational matrices of a common size d, playing the roots."""

    roots: tuple

    def __post_init__(self):
        roots = tuple(self.roots)
        object.__setattr__(self, "roots", roots)
        if not roots:
            raise ValueError("need at least one root")
        d = roots[0].rows
        for m in roots:
            if not isinstance(m, DenseMatrix) or m.rows != m.cols or m.rows != d:
                raise ValueError("roots must be square matrices of a common size")
            if not m.field.is_rational:
                raise ValueError("roots must be rational matrices")

    @property
    def n(self) -> int:
        return len(self.roots)

    @property
    def d(self) -> int:
        return self.roots[0].rows

    def root(self, i: int) -> DenseMatrix:
        """Root x_i, 1-indexed."""
        return self.roots[i - 1]

    @classmethod
    def from_scalars(cls, values) -> "RootSystem":
        return cls(tuple(DenseMatrix([[v]], RATIONALS) for v in values))

    @classmethod
    def from_entries(cls, matrices) -> "RootSystem":
        return cls(tuple(DenseMatrix(m, RATIONALS) for m in matrices))


def block_vandermonde(rs: RootSystem, indices) -> DenseMatrix:
    """Block Vandermonde on an ordered index list: block (r, c) = x_{i_c}^(k-r).

    For k+1 indices this is the (k+1)d x (k+1)d matrix whose block rows
    hold the powers k down to 0; the bottom row is a row of identities.
    """
    indices = list(indices)
    if len(set(indices)) != len(indices):
        raise ValueError("indices must be distinct")
    k = len(indices) - 1
    cols = [[rs.root(i) ** (k - r) for r in range(k + 1)] for i in indices]
    d = rs.d
    entries = []
    for r in range(k + 1):
        for dr in range(d):
            entries.append([v for c in range(k + 1) for v in cols[c][r].entries[dr]])
    return DenseMatrix(entries, RATIONALS)


def quasideterminant_ordered(rs: RootSystem, ordered_a, i: int) -> DenseMatrix:
    """Schur-complement quasideterminant w for an explicit ordering of A.

    w = x_i^k - r . W(A)^{-1} . c with k = |A|, r the top block row over A
    and c the powers column of x_i.  The result is independent of the
    ordering of A; `quasideterminant` exposes the canonical sorted form.
    """
    ordered_a = list(ordered_a)
    k = len(ordered_a)
    if i in ordered_a:
        raise ValueError(f"index {i} must not lie in A")
    xi = rs.root(i)
    if k == 0:
        return DenseMatrix.identity(rs.d, RATIONALS)
    try:
        inner_inv = block_vandermonde(rs, ordered_a).inverse()
    except SingularMatrix as exc:
        raise GenericityFailure(ordered_a, "inner block Vandermonde is singular") from exc
    d = rs.d
    r_blocks = [rs.root(a) ** k for a in ordered_a]
    r_mat = DenseMatrix([[v for b in r_blocks for v in b.entries[dr]] for dr in range(d)], RATIONALS)
    c_mat = DenseMatrix(
        [row for p in range(k - 1, -1, -1) for row in (xi**p).entries],
        RATIONALS,
    )
    return xi**k - r_mat * inner_inv * c_mat


def quasideterminant(rs: RootSystem, a, i: int) -> DenseMatrix:
    return quasideterminant_ordered(rs, sorted(a), i)


class PseudoRootTable:
    """Cache of (A, i) -> (w, x) with x = w . x_i . w^{-1}."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._cache: dict = {}

    def pair(self, a, i: int) -> tuple:
        key = (frozenset(a), i)
        if key not in self._cache:
            w = quasideterminant(self.rs, key[0], i)
            if not key[0]:
                x = self.rs.root(i)
            else:
                try:
                    w_inv = w.inverse()
                except SingularMatrix as exc:
                    raise GenericityFailure(
                        sorted(key[0]) + [i], f"quasideterminant w(A={sorted(key[0])}, i={i}) is singular"
                    ) from exc
                x = w * self.rs.root(i) * w_inv
            self._cache[key] = (w, x)
        return self._cache[key]

    def pseudo_root(self, a, i: int) -> DenseMatrix:
        return self.pair(a, i)[1]

    def entries(self) -> dict:
        return dict(self._cache)


def pseudo_root(rs: RootSystem, a, i: int) -> DenseMatrix:
    return PseudoRootTable(rs).pseudo_root(a, i)


@dataclass(frozen=True)
class GenericityReport:
    """Singular configurations found while probing a root system."""

    singular_vandermondes: tuple  # index subsets with singular W
    singular_transforms: tuple  # (A, i) pairs with singular w

    @property
    def generic(self) -> bool:
        return not self.singular_vandermondes and not self.singular_transforms


def genericity_check(rs: RootSystem) -> GenericityReport:
    """Probe every index subset for singular Vandermondes and singular w's.

    Failures are returned as data, not raised; an empty report means the
    system is generic and every factorization path is available.
    """
    bad_w = []
    bad_t = []
    singular = set()
    for size in range(2, rs.n + 1):
        for subset in itertools.combinations(range(1, rs.n + 1), size):
            if block_vandermonde(rs, subset).rank() < rs.d * size:
                bad_w.append(subset)
                singular.add(subset)
    table = PseudoRootTable(rs)
    for size in range(2, rs.n + 1):
        for subset in itertools.combinations(range(1, rs.n + 1), size):
            for i in subset:
                a = tuple(sorted(set(subset) - {i}))
                if a in singular:
                    continue  # w is not even defined; already reported
                try:
                    table.pair(a, i)
                except GenericityFailure:
                    bad_t.append((a, i))
    return GenericityReport(tuple(bad_w), tuple(bad_t))


@dataclass(frozen=True)
class MatrixPolynomial:
    """Monic matrix polynomial t^n + a_1 t^(n-1) + ... + a_n (a_k stored 1-indexed)."""

    coefficients: tuple = field(default=())

    @property
    def n(self) -> int:
        return len(self.coefficients)

    def coefficient(self, k: int) -> DenseMatrix:
        """a_k, the coefficient of t^(n-k), 1-indexed."""
        return self.coefficients[k - 1]


def _ordering_pseudo_roots(rs: RootSystem, ordering, table: PseudoRootTable | None):
    ordering = list(ordering)
    if sorted(ordering) != list(range(1, rs.n + 1)):
        raise ValueError(f"ordering must be a permutation of 1..{rs.n}")
    table = table or PseudoRootTable(rs)
    ys = []
    for k, i in enumerate(ordering):
        ys.append(table.pseudo_root(ordering[:k], i))
    return ys


def viete_coefficients(rs: RootSystem, ordering, table: PseudoRootTable | None = None) -> MatrixPolynomial:
    """Coefficients from the symmetric-function sums over one ordering.

    a_m = (-1)^m * sum over k_1 > ... > k_m of y_{k_1} ... y_{k_m}, where
    y_k is the k-th pseudo-root along the ordering and factors keep the
    descending order.
    """
    ys = _ordering_pseudo_roots(rs, ordering, table)
    d = rs.d
    ident = DenseMatrix.identity(d, RATIONALS)
    zero = DenseMatrix.zeros(d, d, RATIONALS)
    sums = [ident] + [zero] * rs.n
    for y in ys:  # ascending k; y becomes the leftmost factor
        for m in range(rs.n, 0, -1):
            sums[m] = sums[m] + y * sums[m - 1]
    coeffs = [sums[m] if m % 2 == 0 else -sums[m] for m in range(1, rs.n + 1)]
    return MatrixPolynomial(tuple(coeffs))


def expand_factorization(rs: RootSystem, ordering, table: PseudoRootTable | None = None) -> MatrixPolynomial:
    """Expand the product (t - y_n)(t - y_{n-1}) ... (t - y_1) along an ordering.

    Independent of viete_coefficients (which never forms the product);
    the two must agree entrywise on generic input.
    """
    ys = _ordering_pseudo_roots(rs, ordering, table)
    coeffs = [DenseMatrix.identity(rs.d, RATIONALS)]
    for y in ys:  # multiply by (t - y) on the left
        nxt = [coeffs[0]]
        for j in range(1, len(coeffs) + 1):
            prev = coeffs[j] if j < len(coeffs) else None
            term = y * coeffs[j - 1]
            nxt.append(prev - term if prev is not None else -term)
        coeffs = nxt
    return MatrixPolynomial(tuple(coeffs[1:]))


@dataclass(frozen=True)
class OrderingCheck:
    """Outcome of comparing the factorizations over all n! orderings."""

    passed: bool
    polynomial: MatrixPolynomial | None
    orderings: tuple
    mismatched: tuple  # orderings whose coefficients differ from the first


def check_all_orderings(rs: RootSystem) -> OrderingCheck:
    table = PseudoRootTable(rs)
    orderings = tuple(itertools.permutations(range(1, rs.n + 1)))
    polys = [viete_coefficients(rs, o, table) for o in orderings]
    mismatched = tuple(o for o, p in zip(orderings, polys) if p != polys[0])
    return OrderingCheck(not mismatched, polys[0] if not mismatched else None, orderings, mismatched)


def check_diamond(rs: RootSystem, a, i: int, j: int, table: PseudoRootTable | None = None) -> bool:
    """Exact check of the two local exchange identities on a diamond.

    Linear:    x_{A+i, j} + x_{A, i} = x_{A+j, i} + x_{A, j}
    Quadratic: x_{A+i, j} . x_{A, i} = x_{A+j, i} . x_{A, j}
    """
    a = frozenset(a)
    if i == j or i in a or j in a:
        raise ValueError("need distinct i, j outside A")
    table = table or PseudoRootTable(rs)
    xi = table.pseudo_root(a, i)
    xj = table.pseudo_root(a, j)
    xij = table.pseudo_root(a | {i}, j)
    xji = table.pseudo_root(a | {j}, i)
    return (xij + xi == xji + xj) and (xij * xi == xji * xj)


def root_char_poly(m: DenseMatrix):
    """Characteristic polynomial coefficients of a rational matrix."""
    return char_poly(m)


def random_generic_roots(n: int, d: int, rng, bound: int = 4, max_tries: int = 200) -> RootSystem:
    """Random small-integer root matrices, retried until fully generic."""
    for _ in range(max_tries):
        rs = RootSystem.from_entries(
            [[[rng.randint(-bound, bound) for _ in range(d)] for _ in range(d)] for _ in range(n)]
        )
        if genericity_check(rs).generic:
            return rs
    raise GenericityFailure(range(1, n + 1), f"no generic system found in {max_tries} tries")
