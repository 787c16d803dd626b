"""Built-in regression suites: worked examples, algebraic laws, censuses.

Three suites back the `verify` CLI verb.  `paper-examples` replays a
registry of fixed worked computations bit-exactly; `laws` runs the seeded
sampled algebraic-law checks; `census` runs the counting identities (mask
idempotent counts, ideal orders, modular idempotent counts) against
brute-force enumeration.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import matpoly as mp
from . import structures as st
from .errors import (
    NatProdError,
    NotClosed,
    NotInvertible,
    NotMonicizable,
    SingularLead,
    ZeroDivisorEntry,
)
from .matrix import (
    Matrix,
    Shape,
    SupportMask,
    diagonal,
    divides,
    is_idempotent,
    is_orthogonal,
    is_prime_row,
    main_complement,
    natural_inverse,
    ones,
    support,
    trivial_idempotent_count,
    trivial_idempotents,
    zero_divisor_witness,
    zeros,
)
from .scalars import Mod, Q, Q_PLUS, Scalar, Z, Z_PLUS, dom_inv, dom_mul, is_unit, kth_root
from .supermatrix import (
    PartitionType,
    SuperMatrix,
    parse_super,
    render_super,
    super_inverse,
    super_ones,
)


@dataclass
class CaseResult:
    name: str
    ok: bool
    detail: str = ""


def _row(values, domain=Q):
    return Matrix.from_rows([list(values)], domain)


def _col(values, domain=Q):
    return Matrix.from_rows([[v] for v in values], domain)


def _sq(rows, domain=Q):
    return Matrix.from_rows(rows, domain)


def _expect(actual, expected, what="value"):
    if actual != expected:
        raise AssertionError(f"{what}: expected {expected}, got {actual}")


def _expect_raises(exc_type, fn, what):
    try:
        fn()
    except exc_type:
        return
    except NatProdError as exc:
        raise AssertionError(f"{what}: raised {type(exc).__name__}, expected {exc_type.__name__}")
    raise AssertionError(f"{what}: no error raised, expected {exc_type.__name__}")


# ---------------------------------------------------------------------------
# fixed worked examples
# ---------------------------------------------------------------------------

_CASES = []


def _case(name):
    def register(fn):
        _CASES.append((name, fn))
        return fn

    return register


@_case("scalar-reciprocal-unit")
def _scalar_reciprocal():
    a = Scalar(Q, Fraction(1, 8))
    _expect(dom_mul(a, Scalar(Q, 8)).value, 1, "1/8 * 8")
    _expect(dom_inv(a).value, 8, "inv(1/8)")


@_case("scalar-perfect-power-roots")
def _scalar_roots():
    _expect(kth_root(Scalar(Z, 125), 3).value, 5, "cube root of 125")
    _expect(kth_root(Scalar(Z, 4), 2).value, 2, "square root of 4")


@_case("scalar-sign-units")
def _scalar_sign_units():
    _expect(is_unit(Scalar(Z, -1)), True, "-1 a unit over Z")
    _expect(is_unit(Scalar(Z, 1)), True, "1 a unit over Z")


@_case("square-matrix-addition")
def _square_add():
    a = _sq([[0, 3, -2], [1, 0, 0], [0, 0, 4]])
    b = _sq([[1, 2, 1], [0, 1, 3], [-6, 1, 2]])
    _expect(a + b, _sq([[1, 5, -1], [1, 1, 3], [-6, 1, 6]]), "3x3 sum")


@_case("column-natural-product")
def _column_nproduct():
    x = _col([7, 2, 0, 1, 5])
    y = _col([1, 3, 5, 2, 7])
    _expect(x * y, _col([7, 6, 0, 2, 35]), "5x1 natural product")


@_case("square-natural-vs-usual-product")
def _square_products():
    a = _sq([[6, 1, 2], [0, 3, 4], [2, 1, 0]])
    b = _sq([[3, 0, 1], [2, 1, 0], [0, 1, 2]])
    _expect(a * b, _sq([[18, 0, 2], [0, 3, 0], [0, 1, 0]]), "natural product")
    _expect(a @ b, _sq([[20, 3, 10], [6, 7, 8], [8, 1, 2]]), "usual product")
    if a * b == a @ b:
        raise AssertionError("the two products should differ here")


@_case("usual-product-noncommutative")
def _usual_noncommutative():
    m = _sq([[3, 4], [2, 0]])
    n = _sq([[1, 2], [0, 1]])
    _expect(m @ n, _sq([[3, 10], [2, 4]]), "M.N")
    _expect(n @ m, _sq([[7, 4], [2, 0]]), "N.M")
    _expect(m * n, n * m, "natural product commutes")
    _expect(m * n, _sq([[3, 8], [0, 0]]), "M x_n N")


@_case("entrywise-inverse-4x2")
def _entrywise_inverse():
    a = _sq([[3, 4], [5, 8], [1, 9], [4, 7]])
    b = natural_inverse(a)
    expected = Matrix.from_rows(
        [
            [Fraction(1, 3), Fraction(1, 4)],
            [Fraction(1, 5), Fraction(1, 8)],
            [1, Fraction(1, 9)],
            [Fraction(1, 4), Fraction(1, 7)],
        ],
        Q,
    )
    _expect(b, expected, "entrywise inverse")
    _expect(a * b, ones(a.shape, Q), "a x_n inv(a)")
    _expect(b * a, ones(a.shape, Q), "inv(a) x_n a")


@_case("block-row-idempotent")
def _block_row_idempotent():
    x = Matrix.from_rows(
        [[1, 1, 1], [0, 0, 0], [1, 1, 1], [0, 0, 0], [0, 0, 0]], Z_PLUS
    )
    _expect(is_idempotent(x), True, "x^2 = x")


@_case("mask-census-2x2")
def _mask_census_2x2():
    masks = trivial_idempotents(Shape(2, 2))
    _expect(len(masks), 16, "2x2 mask count")
    for m in masks:
        _expect(is_idempotent(m.to_matrix(Z_PLUS)), True, f"mask {m} idempotent")


@_case("mask-census-2x4-count")
def _mask_census_2x4():
    _expect(trivial_idempotent_count(Shape(2, 4)), 256, "2x4 mask count")
    _expect(len(trivial_idempotents(Shape(2, 4))), 256, "2x4 enumerated")


@_case("main-complement-left-column")
def _main_complement_left():
    p = _sq([[2, 0], [3, 0]])
    _expect(main_complement(p), SupportMask(Shape(2, 2), [0, 1, 0, 1]), "main complement")


@_case("main-complement-extremes")
def _main_complement_extremes():
    z = zeros(Shape(2, 3), Q)
    _expect(main_complement(z), SupportMask(Shape(2, 3), [1] * 6), "zero -> full")
    full = ones(Shape(2, 3), Q)
    _expect(main_complement(full), SupportMask(Shape(2, 3), [0] * 6), "full -> zero")


@_case("column-orthogonality")
def _column_orthogonality():
    x = _col([1, 2, 3, 0, 0, 0])
    y = _col([0, 0, 0, 0, 1, 2])
    _expect(is_orthogonal(x, y), True, "disjoint supports")


@_case("row-orthogonality")
def _row_orthogonality():
    x = _row([0, 4, -5, 0, 7])
    y = _row([1, 0, 0, 8, 0])
    _expect(is_orthogonal(x, y), True, "disjoint supports")


@_case("entrywise-division")
def _entrywise_division():
    x = _row([5, 7, 2, 8], Z)
    y = _row([10, 14, 8, 8], Z)
    _expect(divides(x, y), _row([2, 2, 4, 1], Z), "quotient")
    bad = _row([0, 2, 3, 5, 7, 8], Z)
    tgt = _row([5, 4, 6, 10, 21, 24], Z)
    _expect_raises(ZeroDivisorEntry, lambda: divides(bad, tgt), "zero divisor entry")


@_case("prime-rows")
def _prime_rows():
    _expect(is_prime_row(_row([3, 5, 11, 13], Z)), True, "(3,5,11,13)")
    _expect(is_prime_row(_row([7, 5, 2, 19, 23, 31], Z)), True, "(7,5,2,...)")
    _expect(is_prime_row(_row([4, 5], Z)), False, "(4,5)")


@_case("zero-set-annihilator")
def _zero_set_annihilator():
    a = _row([3, 0, 4], Z_PLUS)
    w = zero_divisor_witness(a)
    _expect(w, _row([0, 1, 0], Z_PLUS), "canonical witness")
    _expect((a * w).is_zero(), True, "a x_n w = 0")
    _expect((a * _row([0, 7, 0], Z_PLUS)).is_zero(), True, "a x_n (0,7,0) = 0")


@_case("super-addition-cellwise")
def _super_addition():
    pt = dict(row_cuts=(2, 4), col_cuts=(2, 4, 6))
    x = SuperMatrix.from_rows(
        [[7 * i + j + 1 for j in range(7)] for i in range(5)], Q, **pt
    )
    y = SuperMatrix.from_rows(
        [[100 + 7 * i + j for j in range(7)] for i in range(5)], Q, **pt
    )
    total = x + y
    expected = SuperMatrix.from_rows(
        [[7 * i + j + 1 + 100 + 7 * i + j for j in range(7)] for i in range(5)], Q, **pt
    )
    _expect(total, expected, "cellwise sums")
    _expect(total.ptype, x.ptype, "partition preserved")


@_case("super-natural-product-3x5")
def _super_nproduct():
    pt = dict(col_cuts=(2, 4))
    x = SuperMatrix.from_rows(
        [[1, 2, 3, 4, 5], [9, 8, 7, 6, 5], [0, 1, 2, 7, 1]], Q, **pt
    )
    y = SuperMatrix.from_rows(
        [[0, 1, 2, 3, 5], [9, 0, 1, 3, 4], [7, 2, 3, 1, 2]], Q, **pt
    )
    expected = SuperMatrix.from_rows(
        [[0, 2, 6, 12, 25], [81, 0, 7, 18, 20], [0, 2, 6, 7, 2]], Q, **pt
    )
    _expect(x * y, expected, "3x5 super natural product")


@_case("super-zero-divisor-6x6")
def _super_zero_divisor():
    pt = dict(row_cuts=(1, 3), col_cuts=(3,))
    x = SuperMatrix.from_rows(
        [
            [7, 8, 0, 9, 4, 2],
            [0, 1, 2, 5, 7, 8],
            [1, 2, 3, 0, 1, 0],
            [5, 7, 0, 9, 2, 0],
            [1, 2, 3, 0, 2, 3],
            [0, 8, 7, 0, 5, 4],
        ],
        Q,
        **pt,
    )
    y = SuperMatrix.from_rows(
        [
            [0, 0, 9, 0, 0, 0],
            [7, 0, 0, 0, 0, 0],
            [0, 0, 0, 6, 0, 8],
            [0, 0, 6, 0, 0, 2],
            [0, 0, 0, 6, 0, 0],
            [5, 0, 0, 7, 0, 0],
        ],
        Q,
        **pt,
    )
    _expect((x * y).is_zero(), True, "6x6 zero divisor")


@_case("super-identity-all-ones")
def _super_identity():
    pt = dict(col_cuts=(2, 4))
    x = SuperMatrix.from_rows(
        [[1, 2, 3, 4, 5], [9, 8, 7, 6, 5], [0, 1, 2, 7, 1]], Q, **pt
    )
    j = super_ones(x.ptype, Q)
    _expect(x * j, x, "x x_n J = x")
    _expect(j * x, x, "J x_n x = x")


@_case("super-inverse-mixed-row")
def _super_inverse_row():
    x = SuperMatrix.from_rows(
        [[Fraction(1, 8), 7, 5, 3, 2, 4, -1]], Q, col_cuts=(1, 3)
    )
    expected = SuperMatrix.from_rows(
        [[8, Fraction(1, 7), Fraction(1, 5), Fraction(1, 3), Fraction(1, 2), Fraction(1, 4), -1]],
        Q,
        col_cuts=(1, 3),
    )
    inv = super_inverse(x)
    _expect(inv, expected, "entrywise inverse row")
    _expect(x * inv, super_ones(x.ptype, Q), "x x_n inv = ones")


@_case("super-inverse-zero-entry")
def _super_inverse_blocked():
    x = SuperMatrix.from_rows(
        [[1, 0, 5, 7, 2, 1, 5, 7, -1, 2]], Q, col_cuts=(2, 5)
    )
    _expect_raises(NotInvertible, lambda: super_inverse(x), "zero entry")


@_case("super-sign-self-inverse")
def _super_self_inverse():
    x = SuperMatrix.from_rows([[1, -1, 1, 1, -1, -1, -1]], Z, col_cuts=(2, 5))
    _expect(x * x, super_ones(x.ptype, Z), "x x_n x = ones")
    _expect(super_inverse(x), x, "x is its own inverse")


@_case("super-literal-round-trip")
def _super_literal():
    text = "[9 0 2 | 0 1 ; 0 1 0 | 5 0 ; 1 0 0 | 2 0]"
    s = parse_super(text, Q)
    _expect(s.shape, Shape(3, 5), "shape")
    _expect(s.ptype.col_cuts, (3,), "column cuts")
    _expect(s.ptype.row_cuts, (), "row cuts")
    _expect(s.base.rows()[0], [9, 0, 2, 0, 1], "first row")
    _expect(parse_super(render_super(s), Q), s, "round trip")


@_case("row-poly-addition")
def _row_poly_add():
    p = mp.MatPoly.from_terms(
        [(0, _row([0, 2, 1, 0])), (1, _row([7, 0, 1, 2])), (3, _row([1, 1, 1, 1])), (5, _row([0, 1, 2, 0]))]
    )
    q = mp.MatPoly.from_terms(
        [
            (0, _row([7, 8, 9, 10])),
            (1, _row([3, 1, 0, 7])),
            (3, _row([3, 0, 1, 4])),
            (4, -_row([4, 2, 3, 4])),
            (5, _row([7, 1, 0, 0])),
            (8, _row([1, 2, 3, 4])),
        ]
    )
    expected = mp.MatPoly.from_terms(
        [
            (0, _row([7, 10, 10, 10])),
            (1, _row([10, 1, 1, 9])),
            (3, _row([4, 1, 2, 5])),
            (4, -_row([4, 2, 3, 4])),
            (5, _row([7, 2, 2, 0])),
            (8, _row([1, 2, 3, 4])),
        ]
    )
    _expect(p + q, expected, "row polynomial sum")


@_case("row-poly-natural-product")
def _row_poly_nproduct():
    p = mp.MatPoly.from_terms(
        [(0, _row([0, 1, 2])), (1, _row([3, 4, 0])), (2, _row([2, 1, 5])), (3, _row([3, 0, 2]))]
    )
    q = mp.MatPoly.from_terms(
        [(0, _row([6, 0, 2])), (1, _row([0, 1, 4])), (2, _row([3, 1, 0])), (4, _row([1, 2, 3]))]
    )
    expected = mp.MatPoly.from_terms(
        [
            (0, _row([0, 0, 4])),
            (1, _row([18, 1, 8])),
            (2, _row([12, 5, 10])),
            (3, _row([27, 5, 24])),
            (4, _row([6, 3, 14])),
            (5, _row([12, 8, 0])),
            (6, _row([2, 2, 15])),
            (7, _row([3, 0, 6])),
        ]
    )
    _expect(p * q, expected, "row polynomial natural product")


@_case("super-square-poly-natural-product")
def _super_poly_nproduct():
    pt = PartitionType(Shape(3, 3), col_cuts=(2,))

    def sup(rows):
        return SuperMatrix(_sq(rows), pt)

    p = mp.MatPoly.from_terms(
        [
            (0, sup([[3, 2, 0], [1, 0, 1], [0, 2, 3]])),
            (1, sup([[7, 5, 1], [0, 1, 2], [0, 0, 3]])),
            (2, sup([[1, 2, 3], [0, 0, 7], [0, 1, 2]])),
            (4, sup([[0, 0, 9], [1, 0, 3], [2, 7, 2]])),
        ]
    )
    q = mp.MatPoly.from_terms(
        [
            (0, sup([[4, 0, 2], [1, 5, 6], [7, 0, 2]])),
            (2, sup([[1, 2, 3], [4, 5, 6], [7, 8, 9]])),
            (3, sup([[0, 3, 1], [2, 1, 0], [3, 4, 5]])),
        ]
    )
    expected = mp.MatPoly.from_terms(
        [
            (0, sup([[12, 0, 0], [1, 0, 6], [0, 0, 6]])),
            (1, sup([[28, 0, 2], [0, 5, 12], [0, 0, 6]])),
            (2, sup([[7, 4, 6], [4, 0, 48], [0, 16, 31]])),
            (3, sup([[7, 16, 3], [2, 5, 12], [0, 8, 42]])),
            (4, sup([[1, 19, 28], [1, 1, 60], [14, 8, 37]])),
            (5, sup([[0, 6, 3], [0, 0, 0], [0, 4, 10]])),
            (6, sup([[0, 0, 27], [4, 0, 18], [14, 56, 18]])),
            (7, sup([[0, 0, 9], [2, 0, 0], [6, 28, 10]])),
        ]
    )
    product = p * q
    _expect(product, expected, "super square polynomial product")
    _expect(product.coeff(0), _sq([[12, 0, 0], [1, 0, 6], [0, 0, 6]]), "constant term")


@_case("square-poly-usual-product")
def _square_poly_uproduct():
    p = mp.MatPoly.from_terms(
        [(0, _sq([[1, 2], [0, 4]])), (1, _sq([[0, 1], [2, 3]])), (2, _sq([[1, 2], [3, 0]]))]
    )
    q = mp.MatPoly.from_terms(
        [(0, _sq([[0, 1], [2, 0]])), (1, _sq([[1, 0], [2, 3]])), (3, _sq([[1, 2], [3, 4]]))]
    )
    expected = mp.MatPoly.from_terms(
        [
            (0, _sq([[4, 1], [8, 0]])),
            (1, _sq([[7, 6], [14, 14]])),
            (2, _sq([[6, 4], [8, 12]])),
            (3, _sq([[12, 16], [15, 16]])),
            (4, _sq([[3, 4], [11, 16]])),
            (5, _sq([[7, 10], [3, 6]])),
        ]
    )
    _expect(p @ q, expected, "square polynomial usual product")


@_case("constant-poly-usual-noncommutative")
def _constant_poly_noncommutative():
    p = mp.MatPoly.constant(_sq([[3, 4], [2, 0]]))
    q = mp.MatPoly.constant(_sq([[1, 2], [0, 1]]))
    if p @ q == q @ p:
        raise AssertionError("usual product should not commute here")


@_case("row-poly-derivative")
def _row_poly_derivative():
    p = mp.MatPoly.from_terms(
        [
            (0, _row([2, 0, 1, 0, 1, 5], Z)),
            (1, _row([3, 2, 1, 0, 0, 0], Z)),
            (2, _row([0, 1, 0, 2, 0, 4], Z)),
            (3, _row([0, -2, -3, 0, 0, 0], Z)),
            (5, _row([8, 0, 7, 0, 1, 0], Z)),
        ]
    )
    expected = mp.MatPoly.from_terms(
        [
            (0, _row([3, 2, 1, 0, 0, 0], Z)),
            (1, _row([0, 2, 0, 4, 0, 8], Z)),
            (2, _row([0, -6, -9, 0, 0, 0], Z)),
            (4, _row([40, 0, 35, 0, 5, 0], Z)),
        ]
    )
    _expect(mp.poly_derivative(p), expected, "row polynomial derivative")


@_case("square-poly-derivative")
def _square_poly_derivative():
    p = mp.MatPoly.from_terms(
        [
            (0, _sq([[3, 0], [1, 2]])),
            (1, _sq([[2, 6], [1, 5]])),
            (2, _sq([[7, 0], [0, 8]])),
            (3, -_sq([[3, 1], [0, 0]])),
            (4, _sq([[8, 1], [0, 1]])),
            (5, -_sq([[0, 4], [-2, 0]])),
        ]
    )
    expected = mp.MatPoly.from_terms(
        [
            (0, _sq([[2, 6], [1, 5]])),
            (1, _sq([[14, 0], [0, 16]])),
            (2, -_sq([[9, 3], [0, 0]])),
            (3, _sq([[32, 4], [0, 4]])),
            (4, -_sq([[0, 20], [-10, 0]])),
        ]
    )
    _expect(mp.poly_derivative(p), expected, "square polynomial derivative")


@_case("row-poly-integral")
def _row_poly_integral():
    p = mp.MatPoly.from_terms(
        [
            (0, _row([1, 2, 3, 4, 5])),
            (1, _row([0, 1, 0, 3, -1])),
            (2, _row([5, 0, 8, 1, 7])),
            (3, _row([1, 2, 0, 4, 5])),
            (4, _row([-2, 1, 4, 3, 0])),
        ]
    )
    half, third, quarter, fifth = (
        Fraction(1, 2),
        Fraction(1, 3),
        Fraction(1, 4),
        Fraction(1, 5),
    )
    expected = mp.MatPoly.from_terms(
        [
            (1, _row([1, 2, 3, 4, 5])),
            (2, _row([0, half, 0, 3 * half, -half])),
            (3, _row([5 * third, 0, 8 * third, third, 7 * third])),
            (4, _row([quarter, 2 * quarter, 0, 1, 5 * quarter])),
            (5, _row([-2 * fifth, fifth, 4 * fifth, 3 * fifth, 0])),
        ]
    )
    _expect(mp.poly_integrate(p), expected, "row polynomial integral")


@_case("integer-poly-integral-not-closed")
def _integral_not_closed():
    terms = [
        (0, [3, 8, 4, 0]),
        (1, [2, 0, 4, 9]),
        (2, [1, 2, 1, 1]),
        (3, [1, 0, 1, 1]),
        (5, [3, 4, 8, 9]),
    ]
    p_int = mp.MatPoly.from_terms([(d, _row(v, Z)) for d, v in terms])
    _expect_raises(NotClosed, lambda: mp.poly_integrate(p_int), "integral over Z")
    p_rat = mp.MatPoly.from_terms([(d, _row(v, Q)) for d, v in terms])
    integral = mp.poly_integrate(p_rat)
    _expect(mp.poly_derivative(integral), p_rat, "derivative of integral over Q")


@_case("poly-degrees")
def _poly_degrees():
    p = mp.MatPoly.from_terms(
        [
            (0, _sq([[3, 0], [-1, 2]])),
            (2, _sq([[1, 0], [0, 2]])),
            (3, _sq([[0, 1], [0, 3]])),
            (5, _sq([[1, 0], [4, 0]])),
            (8, _sq([[1, 4], [0, 0]])),
            (9, _sq([[0, 0], [1, 2]])),
            (10, _sq([[0, 1], [5, 0]])),
        ]
    )
    _expect(mp.poly_degree(p), 10, "degree of the 2x2 example")
    q = mp.MatPoly.from_terms(
        [
            (0, _sq([[3, 1, 2], [0, 1, 5], [0, 0, 1]])),
            (2, _sq([[7, 2, 1], [0, 5, 7], [6, 1, 2]])),
            (4, _sq([[2, 0, 1], [0, 7, 4], [0, 1, 0]])),
            (8, _sq([[2, 1, 5], [6, 7, 8], [0, 1, 2]])),
        ]
    )
    _expect(mp.poly_degree(q), 8, "degree of the 3x3 example")
    _expect(mp.poly_degree(mp.MatPoly.zero(Shape(1, 2), Q)), None, "zero polynomial")


@_case("row-poly-monicize")
def _row_poly_monicize():
    q = mp.MatPoly.from_terms(
        [
            (5, _row([5, 7, 8, -4])),
            (3, _row([1, 2, 3, 0])),
            (1, _row([7, 0, 1, 5])),
            (0, _row([8, 9, 0, 2])),
        ]
    )
    expected = mp.MatPoly.from_terms(
        [
            (5, _row([1, 1, 1, 1])),
            (3, _row([Fraction(1, 5), Fraction(2, 7), Fraction(3, 8), 0])),
            (1, _row([Fraction(7, 5), 0, Fraction(1, 8), Fraction(-5, 4)])),
            (0, _row([Fraction(8, 5), Fraction(9, 7), 0, Fraction(-1, 2)])),
        ]
    )
    _expect(mp.monicize_natural(q), expected, "monic under the natural product")


@_case("row-poly-monicize-blocked")
def _row_poly_monicize_blocked():
    p = mp.MatPoly.from_terms(
        [
            (4, _row([0, 3, 0, 0])),
            (3, _row([1, 2, 3, 4])),
            (1, _row([2, 0, 0, 1])),
            (0, _row([1, 2, 0, 5])),
        ]
    )
    _expect_raises(NotMonicizable, lambda: mp.monicize_natural(p), "zero in the lead")


@_case("square-poly-monicize-usual")
def _square_poly_monicize_usual():
    p = mp.MatPoly.from_terms(
        [
            (5, _sq([[7, 0], [0, 8]])),
            (4, _sq([[1, 8], [7, 5]])),
            (3, _sq([[0, 1], [2, 0]])),
            (2, _sq([[0, 1], [1, 0]])),
            (0, _sq([[1, 0], [2, 5]])),
        ]
    )
    s7, s8 = Fraction(1, 7), Fraction(1, 8)
    expected = mp.MatPoly.from_terms(
        [
            (5, _sq([[1, 0], [0, 1]])),
            (4, _sq([[s7, 8 * s7], [7 * s8, 5 * s8]])),
            (3, _sq([[0, s7], [Fraction(1, 4), 0]])),
            (2, _sq([[0, s7], [s8, 0]])),
            (0, _sq([[s7, 0], [Fraction(1, 4), 5 * s8]])),
        ]
    )
    _expect(mp.monicize_usual(p), expected, "monic under the usual product")


@_case("square-poly-monicize-singular")
def _square_poly_monicize_singular():
    p = mp.MatPoly.from_terms(
        [
            (7, _sq([[3, 0], [1, 0]])),
            (3, _sq([[2, 1], [5, 7]])),
            (2, _sq([[8, 1], [0, 5]])),
            (1, _sq([[18, 7], [0, 2]])),
            (0, _sq([[1, 2], [3, 4]])),
        ]
    )
    _expect_raises(SingularLead, lambda: mp.monicize_usual(p), "singular lead")


@_case("cube-root-equation")
def _cube_root_equation():
    roots = mp.solve_binomial(_row([1, 1, 1]), _row([27, 8, 125]), 3)
    _expect(tuple(roots), (_row([3, 2, 5]),), "cube roots")


@_case("square-root-equation")
def _square_root_equation():
    roots = mp.solve_binomial(_row([1, 1, 1, 1]), _row([4, 9, 25, 4]), 2)
    r = _row([2, 3, 5, 2])
    _expect(tuple(roots), (r, -r), "aligned root pair")
    _expect(roots.componentwise_signs, True, "componentwise flag")


@_case("imaginary-root-rejected")
def _imaginary_root():
    roots = mp.solve_binomial(_row([1, 1, 1, 1]), -_row([4, 9, 25, 4]), 2)
    _expect(len(roots), 0, "no real root")
    if not roots.reason or "NoRationalRoot" not in roots.reason:
        raise AssertionError(f"expected a NoRationalRoot reason, got {roots.reason!r}")


@_case("coincident-quadratic-roots")
def _coincident_quadratic():
    j = _row([1, 1, 1, 1])
    four = _row([4, 4, 4, 4])
    roots = mp.solve_quadratic(j, four, four)
    _expect(tuple(roots), (-_row([2, 2, 2, 2]),), "double root")


@_case("difference-of-squares-quadratic")
def _difference_of_squares():
    j = _row([1, 1, 1, 1, 1])
    zero = zeros(Shape(1, 5), Q)
    roots = mp.solve_quadratic(j, zero, -_row([4, 9, 16, 25, 81]))
    r = _row([2, 3, 4, 5, 9])
    _expect(tuple(roots), (r, -r), "aligned root pair")


@_case("triple-root-evaluation")
def _triple_root_evaluation():
    p = mp.MatPoly.from_terms(
        [
            (3, _row([1, 1, 1])),
            (2, -_row([6, 3, 9])),
            (1, _row([12, 3, 27])),
            (0, -_row([8, 1, 27])),
        ]
    )
    value = mp.poly_evaluate_natural(p, _row([2, 1, 3]))
    _expect(value, zeros(Shape(1, 3), Q), "triple root evaluates to zero")


@_case("row-poly-zero-divisor")
def _row_poly_zero_divisor():
    p = mp.MatPoly.from_terms(
        [
            (0, _row([3, 2, 0, 0, 0])),
            (1, _row([6, 3, 0, 0, 0])),
            (2, _row([7, 0, 0, 0, 0])),
            (4, _row([8, 1, 0, 0, 0])),
        ]
    )
    q = mp.MatPoly.from_terms(
        [
            (0, _row([0, 0, 1, 2, 3])),
            (2, _row([0, 0, 0, 4, 2])),
            (3, _row([0, 0, 0, 1, 4])),
            (4, _row([0, 0, 0, 3, 4])),
            (7, _row([0, 0, 0, 5, 2])),
        ]
    )
    _expect((p * q).is_zero(), True, "disjoint supports annihilate")


@_case("mask-carrier-analysis")
def _mask_carrier_analysis():
    carrier = st.Carrier.masks(Shape(2, 2))
    report = st.analyze(carrier)
    _expect(report.closed, True, "closed under x_n")
    _expect(report.associative, True, "associative")
    _expect(report.commutative, True, "commutative")
    _expect(report.identity, ones(Shape(2, 2), Z_PLUS), "identity J")
    _expect(len(report.idempotents), 16, "every mask idempotent")
    additive = st.analyze(st.Carrier.masks(Shape(2, 2), op=st.ADDITION))
    _expect(additive.closed, False, "masks are not closed under +")


@_case("sign-vector-group")
def _sign_vector_group():
    vectors = [
        Matrix.from_rows([[a], [b], [c]], Z)
        for a in (1, -1)
        for b in (1, -1)
        for c in (1, -1)
    ]
    report = st.analyze(st.Carrier.explicit(vectors))
    _expect(report.closed, True, "closed")
    _expect(report.identity, ones(Shape(3, 1), Z), "identity")
    groups = dict(report.max_subgroups)
    _expect(len(groups[report.identity]), 8, "a group of order 8")


@_case("mask-ideal-orders")
def _mask_ideal_orders():
    carrier = st.Carrier.masks(Shape(2, 4))
    x = Matrix.from_rows([[1, 1, 1, 1], [0, 0, 0, 0]], Z_PLUS)
    _expect(st.ideal_generated(carrier, x).cardinality, 16, "order 16 ideal")
    y = Matrix.from_rows([[1, 1, 1, 0], [1, 1, 1, 0]], Z_PLUS)
    _expect(st.ideal_generated(carrier, y).cardinality, 64, "order 2^6 ideal")
    zero = zeros(Shape(2, 4), Z_PLUS)
    _expect(st.ideal_generated(carrier, zero).members, (zero,), "zero ideal")
    j = ones(Shape(2, 4), Z_PLUS)
    _expect(st.ideal_generated(carrier, j).cardinality, 256, "total ideal")


@_case("sign-pair-smarandache")
def _sign_pair_smarandache():
    j = ones(Shape(3, 1), Z)
    carrier = st.Carrier.explicit([zeros(Shape(3, 1), Z), j, -j, j.scale(2)])
    witness = st.is_smarandache(carrier)
    if witness is None:
        raise AssertionError("expected a subgroup witness")
    _expect(set(witness), {j, -j}, "subgroup of order 2")


@_case("diagonal-support-orthogonal-space")
def _diag_orthogonal_space():
    x = _sq([[3, 0], [0, 5]])
    space = st.orthogonal_space(x)
    _expect(space.mask, SupportMask(Shape(2, 2), [0, 1, 1, 0]), "anti-diagonal mask")
    member = _sq([[0, 4], [7, 0]])
    _expect(space.contains(member), True, "membership")
    _expect((x * member).is_zero(), True, "orthogonality")


@_case("orthogonal-space-extremes")
def _orthogonal_space_extremes():
    z = zeros(Shape(2, 3), Q)
    _expect(st.orthogonal_space(z).mask.is_full(), True, "zero -> everything")
    full = ones(Shape(2, 3), Q)
    _expect(st.orthogonal_space(full).mask.is_zero(), True, "full support -> only zero")


@_case("bottom-row-complement")
def _bottom_row_complement():
    shape = Shape(3, 3)
    bottom = st.MaskSubspace(SupportMask(shape, [0, 0, 0, 0, 0, 0, 1, 1, 1]), Q)
    top = st.subspace_complement(bottom)
    _expect(top.mask, SupportMask(shape, [1, 1, 1, 1, 1, 1, 0, 0, 0]), "complement mask")
    _expect(bottom.dim + top.dim, 9, "dimensions add up")


def _direct_sum_masks():
    shape = Shape(3, 3)
    return [
        st.MaskSubspace(SupportMask(shape, [1, 1, 0, 0, 0, 0, 0, 0, 1]), Q),
        st.MaskSubspace(SupportMask(shape, [0, 0, 1, 0, 1, 0, 0, 0, 0]), Q),
        st.MaskSubspace(SupportMask(shape, [0, 0, 0, 1, 0, 1, 0, 1, 0]), Q),
        st.MaskSubspace(SupportMask(shape, [0, 0, 0, 0, 0, 0, 1, 0, 0]), Q),
    ]


def _pseudo_direct_masks():
    shape = Shape(12, 1)

    def rows(indices):
        return st.MaskSubspace(
            SupportMask(shape, [1 if i in indices else 0 for i in range(12)]), Q
        )

    return [
        rows(range(0, 2)),
        rows(range(1, 4)),
        rows(range(2, 7)),
        rows(range(7, 12)),
    ]


@_case("direct-sum-classification")
def _direct_sum_classification():
    _expect(st.check_sum(_direct_sum_masks()).kind, st.DIRECT, "disjoint cover")


@_case("pseudo-direct-sum-classification")
def _pseudo_direct_classification():
    report = st.check_sum(_pseudo_direct_masks())
    _expect(report.kind, st.PSEUDO_DIRECT, "overlapping cover")
    if not report.overlaps:
        raise AssertionError("expected overlap witnesses")


@_case("cone-semifield-behaviour")
def _cone_semifield():
    report = st.cone_positivity_check(Shape(1, 4), Q_PLUS, samples=200, seed=0)
    _expect(report.positive_products_ok, True, "no zero divisors among positives")
    _expect(report.additive_strictness_ok, True, "strict addition")
    a, b = st.cone_zero_divisor_pair(Shape(1, 3), Z_PLUS)
    _expect(a, _row([3, 0, 4], Z_PLUS), "canonical a")
    _expect(b, _row([0, 7, 0], Z_PLUS), "canonical b")
    _expect((a * b).is_zero(), True, "pair annihilates")


def run_paper_examples():
    """Replay every fixed worked computation; exact equality throughout."""
    results = []
    for name, fn in _CASES:
        try:
            fn()
            results.append(CaseResult(name, True))
        except AssertionError as exc:
            results.append(CaseResult(name, False, str(exc)))
        except NatProdError as exc:
            results.append(CaseResult(name, False, f"{type(exc).__name__}: {exc}"))
    return results


# ---------------------------------------------------------------------------
# seeded samplers
# ---------------------------------------------------------------------------


def rand_fraction(rng: random.Random, lo=-9, hi=9, max_den=9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, max_den))


def rand_matrix(rng: random.Random, shape, domain=Q, lo=-9, hi=9) -> Matrix:
    values = []
    for _ in range(Shape(*shape).size):
        if domain.is_rational:
            v = rand_fraction(rng, lo, hi)
            values.append(abs(v) if domain.is_cone else v)
        else:
            v = rng.randint(lo, hi)
            values.append(abs(v) if domain.is_cone else v)
    return Matrix(Shape(*shape), domain, values)


def rand_shape(rng: random.Random, max_rows=5, max_cols=5) -> Shape:
    return Shape(rng.randint(1, max_rows), rng.randint(1, max_cols))


def rand_poly(rng: random.Random, shape, domain=Q, max_degree=4, lo=-9, hi=9) -> mp.MatPoly:
    terms = {}
    for deg in range(max_degree + 1):
        if rng.random() < 0.6:
            terms[deg] = rand_matrix(rng, shape, domain, lo, hi)
    if not terms:
        terms[0] = rand_matrix(rng, shape, domain, lo, hi)
    return mp.MatPoly(Shape(*shape), domain, terms)


def rand_partition(rng: random.Random, shape) -> PartitionType:
    shape = Shape(*shape)
    row_cuts = [c for c in range(1, shape.rows) if rng.random() < 0.4]
    col_cuts = [c for c in range(1, shape.cols) if rng.random() < 0.4]
    return PartitionType(shape, row_cuts, col_cuts)


# ---------------------------------------------------------------------------
# sampled law suite
# ---------------------------------------------------------------------------


def _law_case(results, name, failures, total, witness=None):
    ok = failures == 0
    detail = f"{total} samples"
    if not ok:
        detail += f", {failures} failures; first: {witness}"
    results.append(CaseResult(name, ok, detail))


def run_laws(seed=0, samples=10000):
    """Seeded random algebraic-law checks; zero failures expected."""
    results = []
    rng = random.Random(seed)

    fails = 0
    witness = None
    for _ in range(samples):
        shape = rand_shape(rng)
        a = rand_matrix(rng, shape)
        b = rand_matrix(rng, shape)
        c = rand_matrix(rng, shape)
        j = ones(shape, Q)
        ok = (
            a * b == b * a
            and (a * b) * c == a * (b * c)
            and a * (b + c) == a * b + a * c
            and a * j == a
        )
        if not ok:
            fails += 1
            witness = witness or (a, b, c)
    _law_case(results, "natural-product-ring-laws", fails, samples, witness)

    poly_samples = max(1, samples // 10)
    fails = 0
    witness = None
    for _ in range(poly_samples):
        shape = rand_shape(rng, 3, 3)
        p = rand_poly(rng, shape)
        q = rand_poly(rng, shape)
        r = rand_poly(rng, shape)
        jconst = mp.MatPoly.constant(ones(shape, Q))
        ok = (
            p * q == q * p
            and (p * q) * r == p * (q * r)
            and p * (q + r) == p * q + p * r
            and p * jconst == p
            and (p + q) + r == p + (q + r)
        )
        if not ok:
            fails += 1
            witness = witness or (p, q)
    _law_case(results, "polynomial-ring-laws", fails, poly_samples, witness)

    diag_samples = max(1, samples // 10)
    fails = 0
    witness = None
    for _ in range(diag_samples):
        n = rng.randint(1, 6)
        a = diagonal([rand_fraction(rng) for _ in range(n)], Q)
        b = diagonal([rand_fraction(rng) for _ in range(n)], Q)
        if a @ b != a * b:
            fails += 1
            witness = witness or (a, b)
    m = diagonal([7, 8, 2, 4], Q)
    n_ = diagonal([1, 2, 3, 4], Q)
    if m @ n_ != m * n_ or m @ n_ != diagonal([7, 16, 6, 16], Q):
        fails += 1
        witness = witness or (m, n_)
    _law_case(results, "diagonal-products-coincide", fails, diag_samples + 1, witness)

    fails = 0
    witness = None
    for _ in range(diag_samples):
        shape = rand_shape(rng)
        pt = rand_partition(rng, shape)
        s = SuperMatrix(rand_matrix(rng, shape), pt)
        t = SuperMatrix(rand_matrix(rng, shape), pt)
        if (s * t).base != s.base * t.base or (s + t).base != s.base + t.base:
            fails += 1
            witness = witness or (s, t)
        if (s * t).ptype != pt or (s + t).ptype != pt:
            fails += 1
            witness = witness or (s, t)
    _law_case(results, "partition-flattening-homomorphism", fails, diag_samples, witness)

    fails = 0
    witness = None
    for _ in range(poly_samples):
        shape = rand_shape(rng, 3, 3)
        p = rand_poly(rng, shape, max_degree=3)
        q = rand_poly(rng, shape, max_degree=3)
        dp, dq = mp.poly_derivative(p), mp.poly_derivative(q)
        if mp.poly_derivative(p * q) != dp * q + p * dq:
            fails += 1
            witness = witness or (p, q)
    _law_case(results, "derivative-leibniz-rule", fails, poly_samples, witness)

    fails = 0
    witness = None
    for _ in range(poly_samples):
        shape = rand_shape(rng, 3, 3)
        p = rand_poly(rng, shape)
        c = rand_matrix(rng, shape)
        if mp.poly_derivative(mp.poly_integrate(p, c)) != p:
            fails += 1
            witness = witness or (p, c)
        p_int = rand_poly(rng, shape, domain=Z)
        d = mp.poly_derivative(p_int)
        if d.domain != Z or any(
            not isinstance(v, int) for _, coeff in d.terms for v in coeff.values
        ):
            fails += 1
            witness = witness or (p_int,)
    _law_case(results, "calculus-closure-and-round-trip", fails, poly_samples, witness)

    cone = st.cone_positivity_check(Shape(2, 3), Q_PLUS, samples=max(1, samples // 10), seed=seed)
    results.append(
        CaseResult(
            "cone-strict-semifield-sampling",
            cone.positive_products_ok and cone.additive_strictness_ok,
            f"{cone.samples} samples",
        )
    )
    return results


# ---------------------------------------------------------------------------
# counting censuses
# ---------------------------------------------------------------------------


def _shapes_up_to(max_size):
    for rows in range(1, max_size + 1):
        for cols in range(1, max_size + 1):
            if rows * cols <= max_size:
                yield Shape(rows, cols)


def run_census():
    """Brute-force counting identities for idempotents and generated ideals."""
    results = []

    ok = True
    detail = []
    for shape in _shapes_up_to(12):
        count = sum(
            1
            for mask in range(1 << shape.size)
            if all(b * b == b for b in SupportMask.from_int(shape, mask).bits)
        )
        by_squaring = sum(
            1
            for mask in range(1 << shape.size)
            if (m := SupportMask.from_int(shape, mask).to_matrix(Z_PLUS)) * m == m
        )
        expected = trivial_idempotent_count(shape)
        if not (count == by_squaring == expected):
            ok = False
            detail.append(f"{shape}: {by_squaring} != {expected}")
    results.append(
        CaseResult("mask-idempotent-census", ok, "; ".join(detail) or "all shapes with <= 12 cells")
    )

    ok = True
    detail = []
    for shape in _shapes_up_to(4):
        carrier = st.Carrier.all_matrices(shape, Mod(6))
        count = len(st.idempotents_in(carrier))
        if count != 4**shape.size:
            ok = False
            detail.append(f"{shape}: {count} != {4 ** shape.size}")
    results.append(
        CaseResult("modular-idempotent-census", ok, "; ".join(detail) or "Z6 shapes with <= 4 cells")
    )

    ok = True
    detail = []
    for rows in (1, 2):
        for cols in (1, 2, 3, 4):
            shape = Shape(rows, cols)
            carrier = st.Carrier.masks(shape)
            for mask_bits in range(1 << shape.size):
                x = SupportMask.from_int(shape, mask_bits).to_matrix(Z_PLUS)
                ideal = st.ideal_generated(carrier, x)
                expected = 1 << support(x).popcount
                if ideal.cardinality != expected:
                    ok = False
                    detail.append(f"{shape} mask {mask_bits}: {ideal.cardinality} != {expected}")
    results.append(
        CaseResult("ideal-order-law", ok, "; ".join(detail[:3]) or "shapes up to 2x4, exhaustive")
    )
    return results


SUITES = {
    "paper-examples": run_paper_examples,
    "laws": run_laws,
    "census": run_census,
}
