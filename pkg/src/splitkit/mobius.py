"""Möbius functions of layered-graph posets and the Hilbert series they control.

The partial order is path-reachability.  The graded Möbius polynomial
includes the diagonal pairs (constant term = number of vertices); the
strict variant without the diagonal is kept available for comparison,
but it breaks the closed-form oracle already at height 1.
"""

from .errors import DegreeMismatch, NegativeDimension, NonzeroRemainder
from .laygraph import LayeredGraph, require_valid
from .seriespoly import IntPolynomial, TruncatedSeries, poly_divide, series_inverse, series_mul


def mobius_value(g: LayeredGraph, v: str, w: str) -> int:
    """mu(v, w): Möbius value from w up to v; 0 unless w <= v."""
    if v == w:
        return 1
    if not g.less_than(w, v):
        return 0
    return _mu_table(g)[(v, w)]


_MU_MEMO: dict = {}


def _mu_table(g: LayeredGraph) -> dict:
    """All Möbius values mu(v, w) for w <= v, by the recursion on the lower
    argument: mu(v, w) = -sum of mu(v, u) over w < u <= v."""
    key = (g.vertices, g.edges)
    if key in _MU_MEMO:
        return _MU_MEMO[key]
    desc = g.descendants()
    table = {}
    for v, _ in g.vertices:
        table[(v, v)] = 1
        # process w from high level down so the values above it exist
        below = sorted(desc[v], key=lambda w: -g.level(w))
        for w in below:
            acc = 1  # the u = v term
            for u in desc[v]:
                if u != w and w in desc[u]:
                    acc += table[(v, u)]
            table[(v, w)] = -acc
    _MU_MEMO[key] = table
    return table


def mobius_value_chain(g: LayeredGraph, v: str, w: str) -> int:
    """mu(v, w) by signed chain counting.

    Accumulates sum over chains w = v0 < v1 < ... < vl = v of (-1)^l by
    dynamic programming upward from w: the signed count f(u) of chains
    from w to u satisfies f(w) = 1 and f(u) = -sum of f(z) over w <= z < u.
    Runs in the opposite direction to the recursion behind mobius_value,
    so the two act as cross-checks.
    """
    if v == w:
        return 1
    if not g.less_than(w, v):
        return 0
    desc = g.descendants()
    interval = {u for u in desc[v] if u == w or w in desc[u]}  # [w, v)
    signed = {w: 1}
    for u in sorted(interval - {w}, key=lambda x: g.level(x)) + [v]:
        below = desc[u]
        signed[u] = -sum(s for z, s in signed.items() if z == w or z in below)
    return signed[v]


def graded_mobius(g: LayeredGraph, strict: bool = False) -> IntPolynomial:
    """Graded Möbius polynomial: sum of mu(v,w) * tau^(|v|-|w|) over pairs w <= v.

    The diagonal is included, so the constant term is |V|.  With
    strict=True the diagonal is dropped (experimentation only).
    """
    table = _mu_table(g)
    coeffs = [0] * (g.height + 1)
    for (v, w), mu in table.items():
        if strict and v == w:
            continue
        coeffs[g.level(v) - g.level(w)] += mu
    return IntPolynomial(coeffs)


def _one_minus_tau_m(g: LayeredGraph, strict: bool) -> IntPolynomial:
    m = graded_mobius(g, strict=strict)
    return IntPolynomial([1]) - m.shift(1)


def hilbert_series(g: LayeredGraph, truncation: int | None = None, strict: bool = False) -> TruncatedSeries:
    """Hilbert series of the graph's edge algebra, to a truncation degree.

    Computed as (1 - tau) / (1 - tau * M(tau)).  Coefficients are graded
    dimensions, so any negative value is a convention bug and raises.
    """
    require_valid(g)
    d = 2 * g.height if truncation is None else truncation
    denom = _one_minus_tau_m(g, strict).to_series(d)
    series = series_mul(IntPolynomial([1, -1]).to_series(d), series_inverse(denom))
    for k, c in enumerate(series.coeffs):
        if c < 0:
            raise NegativeDimension(f"coefficient {c} at degree {k}")
    return series


def subset_lattice_series(n: int, truncation: int) -> TruncatedSeries:
    """Closed-form series (1 - tau) / (1 - tau (2 - tau)^n), truncated.

    Independent oracle for hilbert_series on the subset-lattice graph.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    denom = IntPolynomial([1]) - (IntPolynomial([2, -1]) ** n).shift(1)
    series = series_mul(
        IntPolynomial([1, -1]).to_series(truncation),
        series_inverse(denom.to_series(truncation)),
    )
    return series


def hilbert_series_inverse(g: LayeredGraph, strict: bool = False, check_degree: bool = True) -> IntPolynomial:
    """The inverse Hilbert series (1 - tau*M) / (1 - tau), as an exact polynomial.

    Raises NonzeroRemainder if the division is inexact, and (with
    check_degree) DegreeMismatch if the quotient degree differs from the
    graph height.  The degree does drop below the height on real graphs:
    the top coefficient is, up to sign, the top-to-bottom Möbius value,
    which vanishes e.g. for the one-vertex completion of the face poset
    of a complex whose order complex has zero reduced Euler
    characteristic.  Callers that only need the polynomial (the Koszul
    numerics) pass check_degree=False.
    """
    require_valid(g)
    num = _one_minus_tau_m(g, strict)
    quotient, remainder = poly_divide(num, IntPolynomial([1, -1]))
    if not remainder.is_zero():
        raise NonzeroRemainder(f"remainder {remainder!r} dividing {num!r} by (1 - tau)")
    if check_degree and quotient.degree != g.height:
        raise DegreeMismatch(
            f"degree {quotient.degree} != height {g.height} "
            "(the top-level graded Möbius coefficient vanishes)"
        )
    return quotient
