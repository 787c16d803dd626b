"""Polynomials in one variable with matrix (or super matrix) coefficients.

Coefficients all share one shape, domain and (optionally) one partition
type.  Multiplication comes in two flavours: the natural-product
convolution, which is commutative for every shape, and the usual-product
convolution, defined for square unpartitioned coefficients only and
noncommutative.  Formal derivative and integral act coefficientwise.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    ConeViolation,
    DomainMismatch,
    NoRationalRoot,
    NotClosed,
    NotMonicizable,
    NotInvertible,
    NotSquare,
    ParseError,
    ShapeMismatch,
    SingularLead,
    TypeMismatch,
    UnsupportedDomain,
    ZeroLead,
)
from .matrix import (
    Matrix,
    Shape,
    matrix_from_json,
    matrix_to_json,
    natural_inverse,
    ones,
    render_matrix,
    usual_inverse,
    zeros,
)
from .scalars import Domain, Q, Scalar, Z, domain_from_code, kth_root
from .supermatrix import PartitionType, SuperMatrix, parse_super, render_super


class MatPoly:
    """A finite sum of (degree, coefficient) terms; zero terms are dropped."""

    __slots__ = ("shape", "domain", "ptype", "_terms")

    def __init__(self, shape, domain: Domain, terms, ptype: PartitionType | None = None):
        cleaned = {}
        for deg, coeff in dict(terms).items():
            deg = int(deg)
            if deg < 0:
                raise ValueError("degrees must be nonnegative")
            if not isinstance(coeff, Matrix):
                raise TypeError("coefficients must be Matrix values")
            if coeff.shape != shape:
                raise ShapeMismatch(
                    f"coefficient at degree {deg} has shape {coeff.shape}, expected {shape}"
                )
            if coeff.domain != domain:
                raise DomainMismatch(
                    f"coefficient at degree {deg} is over {coeff.domain.code}"
                )
            if not coeff.is_zero():
                cleaned[deg] = coeff
        if ptype is not None and ptype.is_plain:
            ptype = None  # a cut-free partition is no partition
        if ptype is not None and ptype.shape != shape:
            raise ShapeMismatch("partition shape disagrees with coefficient shape")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "ptype", ptype)
        object.__setattr__(self, "_terms", dict(cleaned))

    def __setattr__(self, name, value):
        raise AttributeError("MatPoly is immutable")

    @classmethod
    def from_terms(cls, terms, ptype=None):
        """Build from (degree, Matrix-or-SuperMatrix) pairs."""
        terms = list(terms)
        if not terms:
            raise ValueError("from_terms needs at least one term; use MatPoly.zero")
        plain = {}
        for deg, coeff in terms:
            if isinstance(coeff, SuperMatrix):
                if ptype is None:
                    ptype = coeff.ptype
                elif coeff.ptype != ptype:
                    raise TypeMismatch("coefficients carry different partitions")
                coeff = coeff.base
            if deg in plain:
                plain[deg] = plain[deg] + coeff
            else:
                plain[deg] = coeff
        first = next(iter(plain.values()))
        return cls(first.shape, first.domain, plain, ptype)

    @classmethod
    def zero(cls, shape, domain, ptype=None):
        return cls(shape, domain, {}, ptype)

    @classmethod
    def constant(cls, coeff, ptype=None):
        if isinstance(coeff, SuperMatrix):
            return cls.from_terms([(0, coeff)])
        return cls(coeff.shape, coeff.domain, {0: coeff}, ptype)

    # -- access ----------------------------------------------------------

    @property
    def terms(self):
        """Terms sorted by degree."""
        return tuple(sorted(self._terms.items()))

    def coeff(self, deg) -> Matrix:
        return self._terms.get(deg, zeros(self.shape, self.domain))

    def degree(self):
        """Highest stored degree, or None for the zero polynomial."""
        return max(self._terms) if self._terms else None

    def lead(self) -> Matrix:
        deg = self.degree()
        if deg is None:
            raise ValueError("the zero polynomial has no leading coefficient")
        return self._terms[deg]

    def is_zero(self):
        return not self._terms

    def __eq__(self, other):
        return (
            isinstance(other, MatPoly)
            and self.shape == other.shape
            and self.domain == other.domain
            and self.ptype == other.ptype
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.shape, self.domain, self.ptype, tuple(sorted(self._terms.items()))))

    def __repr__(self):
        return f"MatPoly({render_poly(self)!r})"

    def __str__(self):
        return render_poly(self)

    # -- ring operations ---------------------------------------------------

    def _check_peer(self, other):
        if not isinstance(other, MatPoly):
            raise TypeError(f"expected a MatPoly, got {type(other).__name__}")
        if self.shape != other.shape:
            raise ShapeMismatch(f"shapes differ: {self.shape} vs {other.shape}")
        if self.domain != other.domain:
            raise DomainMismatch(
                f"domains differ: {self.domain.code} vs {other.domain.code}"
            )
        if self.ptype != other.ptype:
            raise TypeMismatch("partition types differ")

    def __add__(self, other):
        self._check_peer(other)
        terms = dict(self._terms)
        for deg, coeff in other._terms.items():
            terms[deg] = terms[deg] + coeff if deg in terms else coeff
        return MatPoly(self.shape, self.domain, terms, self.ptype)

    def __neg__(self):
        return MatPoly(
            self.shape, self.domain, {d: -c for d, c in self._terms.items()}, self.ptype
        )

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        """Cauchy convolution with the natural product on coefficients."""
        self._check_peer(other)
        terms = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                prod = a * b
                k = i + j
                terms[k] = terms[k] + prod if k in terms else prod
        return MatPoly(self.shape, self.domain, terms, self.ptype)

    def __matmul__(self, other):
        """Convolution with the usual matrix product; square, unpartitioned."""
        self._check_peer(other)
        if self.shape.rows != self.shape.cols:
            raise NotSquare("usual product needs square coefficients")
        if self.ptype is not None and not self.ptype.is_plain:
            raise TypeMismatch("usual product is undefined on partitioned coefficients")
        terms = {}
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                prod = a @ b
                k = i + j
                terms[k] = terms[k] + prod if k in terms else prod
        return MatPoly(self.shape, self.domain, terms, self.ptype)


# -- spec operation surface --------------------------------------------------


def poly_add(p: MatPoly, q: MatPoly) -> MatPoly:
    return p + q


def poly_mul_natural(p: MatPoly, q: MatPoly) -> MatPoly:
    return p * q


def poly_mul_usual(p: MatPoly, q: MatPoly) -> MatPoly:
    return p @ q


def poly_degree(p: MatPoly):
    return p.degree()


def poly_derivative(p: MatPoly) -> MatPoly:
    """Formal derivative; closed in every coefficient domain."""
    terms = {}
    for deg, coeff in p._terms.items():
        if deg >= 1:
            terms[deg - 1] = coeff.scale(deg)
    return MatPoly(p.shape, p.domain, terms, p.ptype)


def poly_integrate(p: MatPoly, constant: Matrix | None = None) -> MatPoly:
    """Formal integral with an additive constant of integration.

    Closed over Q and Q+; over Z, Z+ and Z_n it exists only when every
    required division by deg+1 is exact (otherwise NotClosed).
    """
    domain = p.domain
    if constant is None:
        constant = zeros(p.shape, domain)
    if constant.shape != p.shape:
        raise ShapeMismatch("integration constant has the wrong shape")
    if constant.domain != domain:
        raise DomainMismatch("integration constant has the wrong domain")
    terms = {}
    for deg, coeff in p._terms.items():
        k = deg + 1
        if domain.is_rational:
            factor = Fraction(1, k)
            terms[k] = coeff.scale(factor)
        elif domain.is_modular:
            kk = k % domain.modulus
            if not domain.is_unit(kk):
                raise NotClosed(
                    f"degree-{deg} term needs division by {k}, not a unit mod {domain.modulus}"
                )
            terms[k] = coeff.scale(domain.inv(kk))
        else:
            divided = []
            for v in coeff.values:
                q, r = divmod(v, k)
                if r != 0:
                    raise NotClosed(
                        f"degree-{deg} term needs {domain.render(v)}/{k}, "
                        f"which leaves {domain.code}"
                    )
                divided.append(q)
            terms[k] = Matrix(p.shape, domain, divided)
    if not constant.is_zero():
        terms[0] = constant
    return MatPoly(p.shape, domain, terms, p.ptype)


def poly_evaluate_natural(p: MatPoly, x: Matrix) -> Matrix:
    """Substitute x for the variable, with powers under the natural product."""
    if x.shape != p.shape:
        raise ShapeMismatch(f"argument shape {x.shape} differs from {p.shape}")
    if x.domain != p.domain:
        raise DomainMismatch("argument domain differs")
    total = zeros(p.shape, p.domain)
    power = ones(p.shape, p.domain)
    last_deg = 0
    for deg, coeff in sorted(p._terms.items()):
        for _ in range(deg - last_deg):
            power = power * x
        last_deg = deg
        total = total + coeff * power
    return total


def monicize_natural(p: MatPoly) -> MatPoly:
    """Scale by the entrywise inverse of the lead so the lead becomes all-ones."""
    if p.is_zero():
        raise NotMonicizable("the zero polynomial has no leading coefficient")
    try:
        t = natural_inverse(p.lead())
    except NotInvertible as exc:
        raise NotMonicizable(str(exc)) from exc
    return MatPoly(
        p.shape, p.domain, {d: t * c for d, c in p._terms.items()}, p.ptype
    )


def monicize_usual(p: MatPoly) -> MatPoly:
    """Premultiply by the usual inverse of the lead so the lead becomes I."""
    if p.is_zero():
        raise NotMonicizable("the zero polynomial has no leading coefficient")
    if p.shape.rows != p.shape.cols:
        raise NotSquare("usual monicization needs square coefficients")
    if p.ptype is not None and not p.ptype.is_plain:
        raise TypeMismatch("usual monicization is undefined on partitioned coefficients")
    try:
        t = usual_inverse(p.lead())
    except NotInvertible as exc:
        raise SingularLead(str(exc)) from exc
    return MatPoly(
        p.shape, p.domain, {d: t @ c for d, c in p._terms.items()}, p.ptype
    )


@dataclass(frozen=True)
class RootSet:
    """Roots of a componentwise equation.

    `componentwise_signs` notes that beyond the aligned pair listed here,
    independent per-component sign flips give further roots (2^m of them
    when m components admit a nonzero square root); they are not
    enumerated.
    """

    roots: tuple = ()
    componentwise_signs: bool = False
    reason: str | None = None

    def __iter__(self):
        return iter(self.roots)

    def __len__(self):
        return len(self.roots)

    def __bool__(self):
        return bool(self.roots)


def _require_entrywise_nonzero(a: Matrix):
    if any(v == a.domain.zero for v in a.values):
        raise ZeroLead("leading coefficient has a zero entry")


def solve_binomial(a: Matrix, c: Matrix, k: int) -> RootSet:
    """All aligned solutions x of a *n x^k = c over Z or Q.

    Odd k has at most one root; even k yields the aligned pair +-r when
    every component c_i/a_i is a nonnegative perfect k-th power.
    """
    if k < 1:
        raise ValueError("k must be a positive integer")
    if a.domain not in (Z, Q):
        raise UnsupportedDomain("componentwise roots are taken over Z or Q")
    a._check_peer(c)
    _require_entrywise_nonzero(a)
    root_vals = []
    for i, (ai, ci) in enumerate(zip(a.values, c.values)):
        t = Fraction(ci, 1) / Fraction(ai, 1)
        if k % 2 == 0 and t < 0:
            return RootSet(reason=f"NoRationalRoot: component {i} needs an even root of {t}")
        r = kth_root(Scalar(Q, t), k)
        if r is None:
            return RootSet(reason=f"NoRationalRoot: component {i}: {t} is not a perfect {k}-th power")
        root_vals.append(r.value)
    try:
        root = Matrix(a.shape, a.domain, root_vals)
    except (ValueError, ConeViolation):
        return RootSet(reason=f"NoRationalRoot: root leaves {a.domain.code}")
    if k % 2 == 1:
        return RootSet((root,))
    if root.is_zero():
        return RootSet((root,))
    nonzero = sum(1 for v in root.values if v != 0)
    return RootSet((root, -root), componentwise_signs=nonzero > 1)


def solve_quadratic(a: Matrix, b: Matrix, c: Matrix) -> RootSet:
    """Componentwise quadratic formula over Q; aligned root pair.

    Every component's discriminant must be a perfect rational square,
    otherwise NoRationalRoot (carrying the first offending component).
    """
    if a.domain != Q:
        raise UnsupportedDomain("the quadratic formula is applied over Q")
    a._check_peer(b)
    a._check_peer(c)
    _require_entrywise_nonzero(a)
    plus, minus = [], []
    nonzero_disc = 0
    for i, (ai, bi, ci) in enumerate(zip(a.values, b.values, c.values)):
        disc = bi * bi - 4 * ai * ci
        if disc < 0:
            raise NoRationalRoot(
                f"component {i} has negative discriminant {disc}", component=i
            )
        s = kth_root(Scalar(Q, disc), 2)
        if s is None:
            raise NoRationalRoot(
                f"component {i}: discriminant {disc} is not a rational square",
                component=i,
            )
        s = s.value
        if s != 0:
            nonzero_disc += 1
        plus.append((-bi + s) / (2 * ai))
        minus.append((-bi - s) / (2 * ai))
    r_plus = Matrix(a.shape, Q, plus)
    r_minus = Matrix(a.shape, Q, minus)
    if r_plus == r_minus:
        return RootSet((r_plus,))
    return RootSet((r_plus, r_minus), componentwise_signs=nonzero_disc > 1)


# -- text and JSON forms -----------------------------------------------------

_TERM_RE = re.compile(r"^\s*(\[.*\])\s*(?:(\*\s*x)(?:\^(\d+))?)?\s*$", re.S)


def render_poly(p: MatPoly) -> str:
    """Canonical form: terms ascending by degree, `COEFF * x^K` each."""
    if p.is_zero():
        zero = zeros(p.shape, p.domain)
        if p.ptype is not None:
            return render_super(SuperMatrix(zero, p.ptype))
        return render_matrix(zero)
    parts = []
    for deg, coeff in p.terms:
        if p.ptype is not None:
            lit = render_super(SuperMatrix(coeff, p.ptype))
        else:
            lit = render_matrix(coeff)
        if deg == 0:
            parts.append(lit)
        elif deg == 1:
            parts.append(f"{lit} * x")
        else:
            parts.append(f"{lit} * x^{deg}")
    return " + ".join(parts)


def _split_terms(text):
    """Split on '+' at bracket depth zero."""
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
        elif ch == "+" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def parse_poly(text: str, domain: Domain = Q) -> MatPoly:
    terms = []
    for part in _split_terms(text):
        m = _TERM_RE.match(part)
        if not m:
            raise ParseError(f"bad polynomial term {part.strip()!r}")
        literal, xmark, power = m.groups()
        deg = 0 if xmark is None else (1 if power is None else int(power))
        coeff = parse_super(literal, domain)
        terms.append((deg, coeff if not coeff.ptype.is_plain else coeff.base))
    return MatPoly.from_terms(terms)


def poly_to_json(p: MatPoly) -> dict:
    obj = {
        "shape": {"rows": p.shape.rows, "cols": p.shape.cols},
        "domain": p.domain.code,
        "terms": [
            {"deg": deg, "coeff": matrix_to_json(coeff)} for deg, coeff in p.terms
        ],
    }
    if p.ptype is not None:
        obj["row_cuts"] = list(p.ptype.row_cuts)
        obj["col_cuts"] = list(p.ptype.col_cuts)
    return obj


def poly_from_json(obj) -> MatPoly:
    if isinstance(obj, str):
        obj = json.loads(obj)
    shape = Shape(obj["shape"]["rows"], obj["shape"]["cols"])
    domain = domain_from_code(obj["domain"])
    terms = {t["deg"]: matrix_from_json(t["coeff"]) for t in obj["terms"]}
    ptype = None
    if "row_cuts" in obj or "col_cuts" in obj:
        ptype = PartitionType(shape, obj.get("row_cuts", ()), obj.get("col_cuts", ()))
    return MatPoly(shape, domain, terms, ptype)
