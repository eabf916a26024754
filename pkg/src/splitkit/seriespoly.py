"""Integer polynomials and truncated power series.

Coefficients are arbitrary-precision ints, stored ascending by degree.
Polynomials trim trailing zeros; series carry a fixed truncation degree.
"""

from .errors import NonUnitConstantTerm, TruncationMismatch


class IntPolynomial:
    """Polynomial with integer coefficients; coeffs[k] multiplies tau^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [int(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPolynomial([other])
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[k] + other[k] for k in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial([self[k] - other[k] for k in range(n)])

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        acc = IntPolynomial([1])
        for _ in range(k):
            acc = acc * self
        return acc

    def shift(self, k: int) -> "IntPolynomial":
        """Multiply by tau^k."""
        if self.is_zero():
            return self
        return IntPolynomial((0,) * k + self.coeffs)

    def to_series(self, truncation: int) -> "TruncatedSeries":
        return TruncatedSeries([self[k] for k in range(truncation + 1)])

    def __repr__(self):
        if self.is_zero():
            return "IntPolynomial(0)"
        terms = [f"{c}*t^{k}" for k, c in enumerate(self.coeffs) if c]
        return "IntPolynomial(" + " + ".join(terms) + ")"


class TruncatedSeries:
    """Power series known up to a truncation degree D; coeffs has length D+1."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(int(c) for c in coeffs)
        if not coeffs:
            raise ValueError("series needs at least the degree-0 coefficient")
        self.coeffs = coeffs

    @property
    def truncation(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, truncation: int) -> "TruncatedSeries":
        return cls([1] + [0] * truncation)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __eq__(self, other):
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def _check(self, other):
        if self.truncation != other.truncation:
            raise TruncationMismatch(f"degrees {self.truncation} != {other.truncation}")

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __repr__(self):
        return f"TruncatedSeries({list(self.coeffs)})"


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated at the common degree."""
    a._check(b)
    d = a.truncation
    out = [0] * (d + 1)
    for i, ca in enumerate(a.coeffs):
        if not ca:
            continue
        for j in range(d + 1 - i):
            cb = b.coeffs[j]
            if cb:
                out[i + j] += ca * cb
    return TruncatedSeries(out)


def series_inverse(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse up to the truncation degree.

    Needs constant term +-1 so the recursion stays in the integers.
    """
    if a.coeffs[0] not in (1, -1):
        raise NonUnitConstantTerm(f"constant term {a.coeffs[0]} is not a unit")
    u = a.coeffs[0]
    d = a.truncation
    out = [u] + [0] * d
    for k in range(1, d + 1):
        acc = 0
        for j in range(1, k + 1):
            if a.coeffs[j]:
                acc += a.coeffs[j] * out[k - j]
        out[k] = -u * acc
    return TruncatedSeries(out)


def poly_divide(num: IntPolynomial, den: IntPolynomial) -> tuple[IntPolynomial, IntPolynomial]:
    """Long division num = den*quotient + remainder, deg(rem) < deg(den).

    The divisor must have a unit (+-1) leading coefficient so every step
    is exact over the integers; (1-tau) and (1+tau) both qualify.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if den.coeffs[-1] not in (1, -1):
        raise ValueError("divisor needs a unit leading coefficient")
    rem = list(num.coeffs)
    dd = den.degree
    lead = den.coeffs[-1]
    if num.degree < dd:
        return IntPolynomial(), num
    q = [0] * (num.degree - dd + 1)
    for k in range(num.degree - dd, -1, -1):
        c = rem[k + dd] * lead  # lead is +-1, so this is exact division
        if c:
            q[k] = c
            for j, b in enumerate(den.coeffs):
                rem[k + j] -= c * b
    return IntPolynomial(q), IntPolynomial(rem)


def substitute_neg(a):
    """Substitute tau -> -tau, i.e. negate every odd coefficient."""
    if isinstance(a, TruncatedSeries):
        return TruncatedSeries([c if k % 2 == 0 else -c for k, c in enumerate(a.coeffs)])
    return IntPolynomial([c if k % 2 == 0 else -c for k, c in enumerate(a.coeffs)])


def coeffs_as_strings(a) -> list[str]:
    """JSON rendering: decimal strings, degree 0 first."""
    return [str(c) for c in a.coeffs]
