"""Exact scalar fields (rationals, GF(p)) and dense matrix algebra.

Everything here is exact: rationals are `fractions.Fraction`, prime-field
elements are ints reduced into [0, p).  No floating point anywhere.
"""

from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularMatrix

_WORD_LIMIT = 2**31  # single-word modular arithmetic only


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Field of scalars: rationals when `p` is None, else GF(p).

    Elements are plain values (Fraction / int), not wrapped objects; the
    FieldSpec supplies the arithmetic.  Keeps matrices light and hashable.
    """

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not _is_prime(self.p):
                raise ValueError(f"modulus {self.p} is not prime")
            if self.p >= _WORD_LIMIT:
                raise ValueError(f"modulus {self.p} exceeds 2^31 word limit")

    @property
    def is_rational(self) -> bool:
        return self.p is None

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def of(self, value):
        """Coerce int, Fraction, or a "p/q" string into a field element."""
        if isinstance(value, str):
            value = Fraction(value)
        if self.p is None:
            return Fraction(value)
        if isinstance(value, Fraction):
            den = value.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return value.numerator * pow(den, self.p - 2, self.p) % self.p
        return value % self.p

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / Fraction(a)
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def to_str(self, a) -> str:
        return str(a)

    def __str__(self):
        return "Q" if self.p is None else f"GF({self.p})"


RATIONALS = FieldSpec()
GF2 = FieldSpec(2)
GF3 = FieldSpec(3)


def parse_field(name: str) -> FieldSpec:
    """Parse "q" / "gf<p>" field names used in CLI flags and JSON."""
    name = name.strip().lower()
    if name in ("q", "qq", "rationals"):
        return RATIONALS
    if name.startswith("gf"):
        return FieldSpec(int(name[2:]))
    raise ValueError(f"unknown field {name!r} (expected 'q' or 'gf<p>')")


class EchelonBasis:
    """Incremental row-echelon basis of sparse vectors over a field.

    Rows are dicts {column: value} with the pivot normalized to 1.  Used
    for rank computations on large sparse relation systems and for
    canonical (RREF) storage of relation spaces.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self.pivots: dict[int, dict] = {}  # pivot column -> row

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, vec: dict) -> dict:
        """Return vec with its leading column reduced past every pivot.

        Result is empty iff vec lies in the current row space.
        """
        f = self.field
        row = {c: v for c, v in vec.items() if v}
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                break
            coeff = row[col]
            for c, v in piv.items():
                nv = f.sub(row.get(c, f.zero()), f.mul(coeff, v))
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return row

    def insert(self, vec: dict) -> bool:
        """Add a vector; True if it increased the rank."""
        row = self.reduce(vec)
        if not row:
            return False
        col = min(row)
        inv = self.field.inv(row[col])
        self.pivots[col] = {c: self.field.mul(inv, v) for c, v in row.items()}
        return True

    def reduced_rows(self) -> list[dict]:
        """Fully back-reduced (RREF) rows, sorted by pivot column."""
        f = self.field
        cols = sorted(self.pivots)
        rows = {c: dict(self.pivots[c]) for c in cols}
        for i in reversed(range(len(cols))):
            ci = cols[i]
            for j in range(i):
                cj = cols[j]
                coeff = rows[cj].get(ci)
                if not coeff:
                    continue
                for c, v in rows[ci].items():
                    nv = f.sub(rows[cj].get(c, f.zero()), f.mul(coeff, v))
                    if nv:
                        rows[cj][c] = nv
                    else:
                        rows[cj].pop(c, None)
        return [rows[c] for c in cols]


class DenseMatrix:
    """Immutable dense matrix over an exact field."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, entries, field: FieldSpec, shape=None):
        entries = [list(r) for r in entries]
        if shape is not None:
            rows, cols = shape
        else:
            rows = len(entries)
            cols = len(entries[0]) if entries else 0
        if any(len(r) != cols for r in entries):
            raise ValueError("ragged rows")
        self.rows = rows
        self.cols = cols
        self.entries = tuple(tuple(field.of(v) for v in r) for r in entries)
        self.field = field

    def __setattr__(self, name, value):
        if hasattr(self, "field"):
            raise AttributeError("DenseMatrix is immutable")
        super().__setattr__(name, value)

    @classmethod
    def from_rows(cls, rows, field: FieldSpec) -> "DenseMatrix":
        return cls(rows, field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "DenseMatrix":
        one, zero = field.one(), field.zero()
        return cls([[one if i == j else zero for j in range(n)] for i in range(n)], field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "DenseMatrix":
        if rows == 0:
            return cls([], field, shape=(0, cols))
        zero = field.zero()
        return cls([[zero] * cols for _ in range(rows)], field)

    def __eq__(self, other):
        return (
            isinstance(other, DenseMatrix)
            and self.field == other.field
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.field, self.entries, self.rows, self.cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other):
        self._check_same_shape(other)
        f = self.field
        return DenseMatrix(
            [[f.add(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            f,
            shape=(self.rows, self.cols),
        )

    def __sub__(self, other):
        self._check_same_shape(other)
        f = self.field
        return DenseMatrix(
            [[f.sub(a, b) for a, b in zip(ra, rb)] for ra, rb in zip(self.entries, other.entries)],
            f,
            shape=(self.rows, self.cols),
        )

    def __neg__(self):
        f = self.field
        return DenseMatrix([[f.neg(a) for a in r] for r in self.entries], f, shape=(self.rows, self.cols))

    def __mul__(self, other):
        if isinstance(other, DenseMatrix):
            if self.cols != other.rows or self.field != other.field:
                raise ValueError("incompatible shapes/fields for product")
            f = self.field
            bt = list(zip(*other.entries)) if other.entries else [()] * other.cols
            out = []
            for ra in self.entries:
                row = []
                for cb in bt:
                    acc = f.zero()
                    for a, b in zip(ra, cb):
                        if a and b:
                            acc = f.add(acc, f.mul(a, b))
                    row.append(acc)
                out.append(row)
            return DenseMatrix(out, f, shape=(self.rows, other.cols))
        return self.scale(other)

    def scale(self, c):
        f = self.field
        c = f.of(c)
        return DenseMatrix([[f.mul(c, a) for a in r] for r in self.entries], f, shape=(self.rows, self.cols))

    def __pow__(self, k: int):
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        acc = DenseMatrix.identity(self.rows, self.field)
        base = self
        while k:
            if k & 1:
                acc = acc * base
            base = base * base if k > 1 else base
            k >>= 1
        return acc

    def transpose(self) -> "DenseMatrix":
        return DenseMatrix(list(zip(*self.entries)) if self.entries else [], self.field, shape=(self.cols, self.rows))

    def trace(self):
        f = self.field
        acc = f.zero()
        for i in range(min(self.rows, self.cols)):
            acc = f.add(acc, self.entries[i][i])
        return acc

    def is_zero(self) -> bool:
        return all(not v for r in self.entries for v in r)

    def _check_same_shape(self, other):
        if self.rows != other.rows or self.cols != other.cols or self.field != other.field:
            raise ValueError("shape/field mismatch")

    def _echelon(self):
        """(echelon rows as lists, pivot column list); destructive on a copy."""
        f = self.field
        m = [list(r) for r in self.entries]
        pivots = []
        r = 0
        for c in range(self.cols):
            pr = next((i for i in range(r, self.rows) if m[i][c]), None)
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = f.inv(m[r][c])
            m[r] = [f.mul(inv, v) for v in m[r]]
            for i in range(self.rows):
                if i != r and m[i][c]:
                    coeff = m[i][c]
                    m[i] = [f.sub(a, f.mul(coeff, b)) for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
            if r == self.rows:
                break
        return m, pivots

    def rank(self) -> int:
        return len(self._echelon()[1])

    def nullspace_dim(self) -> int:
        return self.cols - self.rank()

    def nullspace_basis(self) -> list[list]:
        """Basis of {x : self @ x = 0}, one vector per free column."""
        f = self.field
        m, pivots = self._echelon()
        pivot_set = set(pivots)
        free = [c for c in range(self.cols) if c not in pivot_set]
        basis = []
        for fc in free:
            vec = [f.zero()] * self.cols
            vec[fc] = f.one()
            for r, pc in enumerate(pivots):
                vec[pc] = f.neg(m[r][fc])
            basis.append(vec)
        return basis

    def inverse(self) -> "DenseMatrix":
        if self.rows != self.cols:
            raise ValueError("inverse of a non-square matrix")
        f = self.field
        n = self.rows
        m = [list(r) + [f.one() if i == j else f.zero() for j in range(n)] for i, r in enumerate(self.entries)]
        r = 0
        for c in range(n):
            pr = next((i for i in range(r, n) if m[i][c]), None)
            if pr is None:
                raise SingularMatrix(f"matrix of size {n} has rank < {n}")
            m[r], m[pr] = m[pr], m[r]
            inv = f.inv(m[r][c])
            m[r] = [f.mul(inv, v) for v in m[r]]
            for i in range(n):
                if i != r and m[i][c]:
                    coeff = m[i][c]
                    m[i] = [f.sub(a, f.mul(coeff, b)) for a, b in zip(m[i], m[r])]
            r += 1
        return DenseMatrix([row[n:] for row in m], f, shape=(n, n))

    def to_lists(self):
        return [list(r) for r in self.entries]

    def __repr__(self):
        body = "; ".join(" ".join(str(v) for v in r) for r in self.entries)
        return f"DenseMatrix({self.rows}x{self.cols} over {self.field}: [{body}])"


def rank(m: DenseMatrix) -> int:
    return m.rank()


def inverse(m: DenseMatrix) -> DenseMatrix:
    return m.inverse()


def nullspace_dim(m: DenseMatrix) -> int:
    return m.nullspace_dim()


def annihilator_basis(rows: list[list], dim: int, field: FieldSpec) -> list[list]:
    """Basis of {f : sum_j f[j]*r[j] = 0 for every r in rows}.

    `rows` live in a coordinate space of dimension `dim`; the pairing is
    the coordinate dot product, which matches <a@b, f@g> = f(a)g(b) when
    both sides are written in the same product basis.
    """
    for r in rows:
        if len(r) != dim:
            raise ValueError("row length does not match ambient dimension")
    if not rows:
        return [list(r) for r in DenseMatrix.identity(dim, field).entries]
    return DenseMatrix(rows, field).nullspace_basis()


def char_poly(m: DenseMatrix) -> list[Fraction]:
    """Characteristic polynomial coefficients [1, c1, ..., cn], descending.

    Faddeev-LeVerrier recursion; divides by 1..n, so rationals only.
    """
    if not m.field.is_rational:
        raise ValueError("char_poly requires the rational field")
    if m.rows != m.cols:
        raise ValueError("char_poly of a non-square matrix")
    n = m.rows
    coeffs = [Fraction(1)]
    mk = DenseMatrix.identity(n, m.field)
    for k in range(1, n + 1):
        if k > 1:
            mk = m * mk + DenseMatrix.identity(n, m.field).scale(coeffs[-1])
        prod = m * mk
        c = -Fraction(prod.trace(), k)
        coeffs.append(c)
    return coeffs
