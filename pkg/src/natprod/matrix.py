"""Dense exact matrices under the natural (componentwise) product.

`A * B` is the natural product, `A @ B` the usual matrix product, `A + B`
entrywise addition.  Matrices are immutable and hashable; every entry
lives in one coefficient domain (see scalars).
"""

from __future__ import annotations

import json
from typing import NamedTuple

from .errors import (
    DomainMismatch,
    NotAUnit,
    NotInvertible,
    ParseError,
    ShapeMismatch,
    TooLarge,
    ZeroDivisorEntry,
)
from .scalars import Domain, Q, Scalar, Z, domain_from_code


class Shape(NamedTuple):
    rows: int
    cols: int

    def __str__(self):
        return f"{self.rows}x{self.cols}"

    @property
    def size(self):
        return self.rows * self.cols


def _shape(value) -> Shape:
    shape = Shape(*value)
    if shape.rows < 1 or shape.cols < 1:
        raise ValueError(f"invalid shape {shape}")
    return shape


class Matrix:
    """An immutable rows x cols matrix over one exact domain."""

    __slots__ = ("shape", "domain", "values")

    def __init__(self, shape, domain: Domain, values):
        shape = _shape(shape)
        values = tuple(domain.coerce(v) for v in values)
        if len(values) != shape.size:
            raise ValueError(
                f"{shape} needs {shape.size} entries, got {len(values)}"
            )
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "values", values)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def _make(cls, shape, domain, values):
        # internal: values already canonical for the domain
        self = object.__new__(cls)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "values", values)
        return self

    @classmethod
    def from_rows(cls, rows, domain: Domain):
        rows = [list(r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one entry")
        cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        flat = [v for r in rows for v in r]
        return cls(Shape(len(rows), cols), domain, flat)

    # -- basic access ----------------------------------------------------

    def __getitem__(self, key):
        i, j = key
        return Scalar(self.domain, self.values[i * self.shape.cols + j])

    @property
    def entries(self):
        """Row-major tuple of Scalars."""
        return tuple(Scalar(self.domain, v) for v in self.values)

    def rows(self):
        c = self.shape.cols
        return [list(self.values[i * c : (i + 1) * c]) for i in range(self.shape.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.domain == other.domain
            and self.values == other.values
        )

    def __hash__(self):
        return hash((self.shape, self.domain, self.values))

    def __repr__(self):
        return f"Matrix({render_matrix(self)!r}, {self.domain.code})"

    def __str__(self):
        return render_matrix(self)

    # -- arithmetic ------------------------------------------------------

    def _check_peer(self, other, same_shape=True):
        if not isinstance(other, Matrix):
            raise TypeError(f"expected a Matrix, got {type(other).__name__}")
        if self.domain != other.domain:
            raise DomainMismatch(
                f"domains differ: {self.domain.code} vs {other.domain.code}"
            )
        if same_shape and self.shape != other.shape:
            raise ShapeMismatch(f"shapes differ: {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_peer(other)
        if self.domain.is_modular:
            n = self.domain.modulus
            values = tuple((a + b) % n for a, b in zip(self.values, other.values))
        else:
            values = tuple(a + b for a, b in zip(self.values, other.values))
        return Matrix._make(self.shape, self.domain, values)

    def __neg__(self):
        neg = self.domain.neg
        return Matrix._make(
            self.shape, self.domain, tuple(neg(a) for a in self.values)
        )

    def __sub__(self, other):
        self._check_peer(other)
        sub = self.domain.sub
        return Matrix._make(
            self.shape,
            self.domain,
            tuple(sub(a, b) for a, b in zip(self.values, other.values)),
        )

    def __mul__(self, other):
        """Natural product: entrywise multiplication."""
        self._check_peer(other)
        if self.domain.is_modular:
            n = self.domain.modulus
            values = tuple((a * b) % n for a, b in zip(self.values, other.values))
        else:
            values = tuple(a * b for a, b in zip(self.values, other.values))
        return Matrix._make(self.shape, self.domain, values)

    def __matmul__(self, other):
        """Usual matrix product."""
        self._check_peer(other, same_shape=False)
        if self.shape.cols != other.shape.rows:
            raise ShapeMismatch(
                f"cannot multiply {self.shape} by {other.shape}"
            )
        n, k, m = self.shape.rows, self.shape.cols, other.shape.cols
        modulus = self.domain.modulus if self.domain.is_modular else None
        out = []
        for i in range(n):
            for j in range(m):
                acc = sum(
                    self.values[i * k + t] * other.values[t * m + j] for t in range(k)
                )
                out.append(acc % modulus if modulus else acc)
        return Matrix(Shape(n, m), self.domain, out)

    def npow(self, k):
        """k-th power under the natural product (k >= 0)."""
        if k < 0:
            raise ValueError("negative power")
        result = ones(self.shape, self.domain)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def is_zero(self):
        zero = self.domain.zero
        return all(v == zero for v in self.values)

    def scale(self, c):
        """Multiply every entry by the scalar c (same domain)."""
        c = self.domain.coerce(c)
        mul = self.domain.mul
        return Matrix(self.shape, self.domain, [mul(c, v) for v in self.values])


def zeros(shape, domain: Domain) -> Matrix:
    shape = _shape(shape)
    return Matrix(shape, domain, [domain.zero] * shape.size)


def ones(shape, domain: Domain) -> Matrix:
    """The all-ones matrix: the identity of the natural product."""
    shape = _shape(shape)
    return Matrix(shape, domain, [domain.one] * shape.size)


def identity(n, domain: Domain) -> Matrix:
    return Matrix(
        Shape(n, n),
        domain,
        [domain.one if i == j else domain.zero for i in range(n) for j in range(n)],
    )


def diagonal(values, domain: Domain) -> Matrix:
    values = list(values)
    n = len(values)
    out = zeros(Shape(n, n), domain).rows()
    for i, v in enumerate(values):
        out[i][i] = v
    return Matrix.from_rows(out, domain)


# -- spec operation surface ----------------------------------------------


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return a + b


def nproduct(a: Matrix, b: Matrix) -> Matrix:
    return a * b


def uproduct(a: Matrix, b: Matrix) -> Matrix:
    return a @ b


def natural_inverse(a: Matrix) -> Matrix:
    """The entrywise inverse: B with A * B = all-ones.

    Exists exactly when every entry is a unit of the domain (so never for
    an integer matrix with an entry outside {1, -1}, and never with a 0).
    """
    inv = a.domain.inv
    try:
        return Matrix(a.shape, a.domain, [inv(v) for v in a.values])
    except NotAUnit as exc:
        raise NotInvertible(str(exc)) from exc


def is_idempotent(a: Matrix) -> bool:
    return a * a == a


def support(a: Matrix) -> "SupportMask":
    zero = a.domain.zero
    return SupportMask(a.shape, [0 if v == zero else 1 for v in a.values])


def main_complement(a: Matrix) -> "SupportMask":
    """The support pattern of the unique largest matrices orthogonal to a."""
    return support(a).complement()


def is_orthogonal(a: Matrix, b: Matrix) -> bool:
    return (a * b).is_zero()


def divides(a: Matrix, b: Matrix):
    """Entrywise divisibility over Z: the quotient matrix, or None.

    Every entry of `a` must be nonzero; negative entries divide as usual
    in Z.
    """
    if a.domain != Z or b.domain != Z:
        raise DomainMismatch("divides is defined over Z")
    a._check_peer(b)
    quotient = []
    for x, y in zip(a.values, b.values):
        if x == 0:
            raise ZeroDivisorEntry("divisor matrix has a zero entry")
        q, r = divmod(y, x)
        if r != 0:
            return None
        quotient.append(q)
    return Matrix(a.shape, Z, quotient)


def _is_prime(n):
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def is_prime_row(a: Matrix) -> bool:
    """True iff a is a 1 x n integer row with every entry a positive prime."""
    if a.domain != Z or a.shape.rows != 1:
        return False
    return all(_is_prime(v) for v in a.values)


def zero_divisor_witness(a: Matrix):
    """A canonical annihilator of `a`, or None when a has full support.

    Returns the {0,1} matrix supported exactly on the zero-set of `a`;
    any matrix supported there works equally well.
    """
    if a.domain.is_modular:
        raise DomainMismatch("witness construction expects a zero-divisor-free scalar domain")
    zero, one = a.domain.zero, a.domain.one
    bits = [one if v == zero else zero for v in a.values]
    if all(b == zero for b in bits):
        return None
    return Matrix(a.shape, a.domain, bits)


# -- support masks ---------------------------------------------------------


class SupportMask:
    """A {0,1} pattern of positions of one shape.

    Doubles as a trivial idempotent (over Z, Q and the cones these are
    the only idempotents) and as the description of a coordinate
    subspace.
    """

    __slots__ = ("shape", "bits")

    def __init__(self, shape, bits):
        shape = _shape(shape)
        bits = tuple(int(b) for b in bits)
        if len(bits) != shape.size:
            raise ValueError(f"{shape} needs {shape.size} bits")
        if any(b not in (0, 1) for b in bits):
            raise ValueError("mask bits must be 0 or 1")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):
        raise AttributeError("SupportMask is immutable")

    @classmethod
    def from_int(cls, shape, n):
        shape = _shape(shape)
        bits = [(n >> (shape.size - 1 - i)) & 1 for i in range(shape.size)]
        return cls(shape, bits)

    def to_int(self):
        n = 0
        for b in self.bits:
            n = (n << 1) | b
        return n

    def __eq__(self, other):
        return (
            isinstance(other, SupportMask)
            and self.shape == other.shape
            and self.bits == other.bits
        )

    def __hash__(self):
        return hash((self.shape, self.bits))

    def __le__(self, other):
        """Containment of supports."""
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return all(a <= b for a, b in zip(self.bits, other.bits))

    def __and__(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return SupportMask(self.shape, [a & b for a, b in zip(self.bits, other.bits)])

    def __or__(self, other):
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        return SupportMask(self.shape, [a | b for a, b in zip(self.bits, other.bits)])

    def complement(self):
        return SupportMask(self.shape, [1 - b for b in self.bits])

    @property
    def popcount(self):
        return sum(self.bits)

    def is_zero(self):
        return self.popcount == 0

    def is_full(self):
        return self.popcount == self.shape.size

    def positions(self):
        """Sorted (row, col) pairs of the set bits."""
        c = self.shape.cols
        return [(i // c, i % c) for i, b in enumerate(self.bits) if b]

    def to_matrix(self, domain: Domain) -> Matrix:
        one, zero = domain.one, domain.zero
        return Matrix._make(
            self.shape, domain, tuple(one if b else zero for b in self.bits)
        )

    def __repr__(self):
        return f"SupportMask({self.shape}, {''.join(map(str, self.bits))})"

    def __str__(self):
        c = self.shape.cols
        rows = [
            " ".join(str(b) for b in self.bits[i * c : (i + 1) * c])
            for i in range(self.shape.rows)
        ]
        return "[" + ";".join(rows) + "]"


DEFAULT_ENUM_BITS = 24


def trivial_idempotent_count(shape) -> int:
    """2^(rows*cols); no enumeration, so no size bound."""
    return 1 << _shape(shape).size


def trivial_idempotents(shape, bound=DEFAULT_ENUM_BITS):
    """All {0,1} masks of the shape in row-major lexicographic order."""
    shape = _shape(shape)
    if shape.size > bound:
        raise TooLarge(
            f"{shape} has 2^{shape.size} trivial idempotents; bound is 2^{bound}"
        )
    return [SupportMask.from_int(shape, n) for n in range(1 << shape.size)]


# -- text and JSON forms ---------------------------------------------------


def render_matrix(a: Matrix) -> str:
    """Canonical literal: `[a b c;d e f]`."""
    c = a.shape.cols
    render = a.domain.render
    rows = [
        " ".join(render(v) for v in a.values[i * c : (i + 1) * c])
        for i in range(a.shape.rows)
    ]
    return "[" + ";".join(rows) + "]"


def parse_matrix(text: str, domain: Domain = Q) -> Matrix:
    """Parse `[a b c ; d e f]` (whitespace-separated entries, `;` rows)."""
    stripped = text.strip()
    if not (stripped.startswith("[") and stripped.endswith("]")):
        raise ParseError("matrix literal must be bracketed", column=1)
    body = stripped[1:-1]
    if "|" in body or "--" in body:
        raise ParseError("plain matrix literal cannot carry partition marks")
    rows = []
    for raw in body.split(";"):
        tokens = raw.split()
        if not tokens:
            raise ParseError("empty row in matrix literal")
        rows.append([domain.parse(t) for t in tokens])
    if any(len(r) != len(rows[0]) for r in rows):
        raise ParseError("ragged rows in matrix literal")
    return Matrix.from_rows(rows, domain)


def matrix_to_json(a: Matrix) -> dict:
    render = a.domain.render
    c = a.shape.cols
    return {
        "domain": a.domain.code,
        "rows": a.shape.rows,
        "cols": a.shape.cols,
        "entries": [
            [render(v) for v in a.values[i * c : (i + 1) * c]]
            for i in range(a.shape.rows)
        ],
    }


def matrix_from_json(obj) -> Matrix:
    if isinstance(obj, str):
        obj = json.loads(obj)
    domain = domain_from_code(obj["domain"])
    rows = [[domain.parse(v) for v in row] for row in obj["entries"]]
    m = Matrix.from_rows(rows, domain)
    if m.shape != Shape(obj["rows"], obj["cols"]):
        raise ParseError("declared shape disagrees with entries")
    return m


def usual_inverse(a: Matrix) -> Matrix:
    """Exact Gauss-Jordan inverse of a square rational matrix.

    Only what monicization of usual-product polynomials needs; raises
    NotInvertible on singular input.
    """
    if a.shape.rows != a.shape.cols:
        raise ShapeMismatch("only square matrices have a usual inverse")
    if not a.domain.is_rational or a.domain.is_cone:
        raise DomainMismatch("usual inverse is computed over Q")
    n = a.shape.rows
    aug = [list(a.values[i * n : (i + 1) * n]) + [a.domain.one if j == i else a.domain.zero for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise NotInvertible("singular matrix")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        factor = aug[col][col]
        aug[col] = [v / factor for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[col])]
    return Matrix.from_rows([row[n:] for row in aug], a.domain)
