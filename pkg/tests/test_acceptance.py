"""Acceptance gate: one test per criterion, exact equality everywhere.

Run with `pytest tests/test_acceptance.py -s` to see one pass line per
criterion; any assertion failure marks the criterion red.
"""

import itertools
import random
import time

import pytest

from conftest import row, sq
from natprod import (
    Carrier,
    DIRECT,
    MaskSubspace,
    MatPoly,
    Matrix,
    Mod,
    NOT_SPANNING,
    NotClosed,
    NotInvertible,
    PSEUDO_DIRECT,
    PartitionType,
    Q,
    Q_PLUS,
    Shape,
    SuperMatrix,
    SupportMask,
    TypeMismatch,
    Z,
    Z_PLUS,
    check_sum,
    cone_positivity_check,
    cone_zero_divisor_pair,
    diagonal,
    ideal_generated,
    idempotents_in,
    natural_inverse,
    ones,
    orthogonal_space,
    poly_derivative,
    poly_integrate,
    subspace_complement,
    super_inverse,
    super_ones,
    support,
)
from natprod.verify import (
    rand_fraction,
    rand_matrix,
    rand_partition,
    rand_poly,
    rand_shape,
    run_laws,
    run_paper_examples,
)


def _ok(number, label):
    print(f"[PASS] criterion {number}: {label}")


def _shapes_with_cells(max_cells):
    for rows in range(1, max_cells + 1):
        for cols in range(1, max_cells + 1):
            if rows * cols <= max_cells:
                yield Shape(rows, cols)


def test_criterion_01_worked_example_regression():
    start = time.perf_counter()
    results = run_paper_examples()
    elapsed = time.perf_counter() - start
    failures = [r for r in results if not r.ok]
    assert not failures, failures
    assert len(results) >= 25
    assert elapsed < 1.0, f"suite took {elapsed:.3f}s"
    _ok(1, f"{len(results)} worked examples replayed bit-exactly in {elapsed:.3f}s")


def test_criterion_02_algebraic_law_suite():
    results = run_laws(seed=0, samples=10_000)
    failures = [r for r in results if not r.ok]
    assert not failures, failures
    _ok(2, "10^4 matrix-law samples and 10^3 polynomial-law samples, zero failures")


def test_criterion_03_diagonal_equivalence():
    rng = random.Random(3)
    for _ in range(1000):
        n = rng.randint(1, 6)
        a = diagonal([rand_fraction(rng) for _ in range(n)], Q)
        b = diagonal([rand_fraction(rng) for _ in range(n)], Q)
        assert a @ b == a * b
    m = diagonal([7, 8, 2, 4], Q)
    n_ = diagonal([1, 2, 3, 4], Q)
    product = m @ n_
    assert product == m * n_ == diagonal([7, 16, 6, 16], Q)
    _ok(3, "usual and natural products agree on 10^3 random diagonals + fixed case")


def test_criterion_04_idempotent_censuses():
    for shape in _shapes_with_cells(12):
        count = len(idempotents_in(Carrier.masks(shape)))
        assert count == 2**shape.size, shape
    for shape in _shapes_with_cells(4):
        count = len(idempotents_in(Carrier.all_matrices(shape, Mod(6))))
        assert count == 4**shape.size, shape
    _ok(4, "mask census 2^(mn) for mn <= 12; Z6 census 4^(mn) for mn <= 4")


def test_criterion_05_ideal_order_law():
    checked = 0
    for rows in (1, 2):
        for cols in (1, 2, 3, 4):
            shape = Shape(rows, cols)
            carrier = Carrier.masks(shape)
            for bits in range(1 << shape.size):
                x = SupportMask.from_int(shape, bits).to_matrix(Z_PLUS)
                ideal = ideal_generated(carrier, x)
                assert ideal.cardinality == 1 << support(x).popcount
                checked += 1
    assert checked == sum(1 << (r * c) for r in (1, 2) for c in (1, 2, 3, 4))
    _ok(5, f"|<x>| = 2^popcount for all {checked} masks of shapes up to 2x4")


def test_criterion_06_inverse_characterization():
    checked = 0
    for rows in (1, 2):
        for cols in (1, 2, 3):
            shape = Shape(rows, cols)
            ptype = PartitionType(
                shape,
                row_cuts=(1,) if rows > 1 else (),
                col_cuts=(1,) if cols > 1 else (),
            )
            for values in itertools.product(range(-3, 4), repeat=shape.size):
                m = Matrix(shape, Z, values)
                expected = all(v in (1, -1) for v in values)
                try:
                    inv = natural_inverse(m)
                    assert expected and m * inv == ones(shape, Z)
                except NotInvertible:
                    assert not expected
                s = SuperMatrix(m, ptype)
                try:
                    sinv = super_inverse(s)
                    assert expected and s * sinv == super_ones(ptype, Z)
                    assert sinv.ptype == ptype
                except NotInvertible:
                    assert not expected
                checked += 1
    _ok(6, f"natural/super inverse iff all entries +-1, {checked} integer matrices")


def test_criterion_07_calculus_closure():
    rng = random.Random(7)
    for _ in range(1000):
        p = rand_poly(rng, rand_shape(rng, 3, 3), domain=Z)
        d = poly_derivative(p)
        assert d.domain == Z
        assert all(isinstance(v, int) for _, c in d.terms for v in c.values)
    terms = [
        (0, [3, 8, 4, 0]),
        (1, [2, 0, 4, 9]),
        (2, [1, 2, 1, 1]),
        (3, [1, 0, 1, 1]),
        (5, [3, 4, 8, 9]),
    ]
    over_z = MatPoly.from_terms([(d, row(v, Z)) for d, v in terms])
    with pytest.raises(NotClosed):
        poly_integrate(over_z)
    over_q = MatPoly.from_terms([(d, row(v, Q)) for d, v in terms])
    assert poly_derivative(poly_integrate(over_q)) == over_q
    for _ in range(1000):
        shape = rand_shape(rng, 3, 3)
        p = rand_poly(rng, shape)
        c = rand_matrix(rng, shape)
        assert poly_derivative(poly_integrate(p, c)) == p
    _ok(7, "integer derivatives closed; integral closed over Q, blocked over Z")


def test_criterion_08_orthogonality_suite():
    # exhaustive at the mask level for every shape with mn <= 10
    for shape in _shapes_with_cells(10):
        size = shape.size
        full = (1 << size) - 1
        for xbits in range(1 << size):
            x = SupportMask.from_int(shape, xbits).to_matrix(Q)
            allowed = orthogonal_space(x).mask.to_int()
            assert allowed == (~xbits) & full
            for ybits in range(1 << size):
                assert ((xbits & ybits) == 0) == ((ybits | allowed) == allowed)
    # the same characterization through matrix arithmetic, sampled over Q
    rng = random.Random(8)
    for _ in range(500):
        shape = rand_shape(rng, 3, 4)
        x = rand_matrix(rng, shape)
        space = orthogonal_space(x)
        y = rand_matrix(rng, shape)
        assert ((x * y).is_zero()) == space.contains(y)
        member = space.sample_member(rng)
        assert (x * member).is_zero()
    # dimension split and cross products
    for _ in range(1000):
        shape = rand_shape(rng, 4, 4)
        w = MaskSubspace(
            SupportMask(shape, [rng.randint(0, 1) for _ in range(shape.size)]), Q
        )
        wp = subspace_complement(w)
        assert w.dim + wp.dim == shape.size
        assert (w.sample_member(rng) * wp.sample_member(rng)).is_zero()
    _ok(8, "orthogonal-space characterization exhaustive (mn <= 10) and sampled")


def test_criterion_09_direct_sum_classifier():
    shape = Shape(3, 3)
    direct = [
        MaskSubspace(SupportMask(shape, [1, 1, 0, 0, 0, 0, 0, 0, 1]), Q),
        MaskSubspace(SupportMask(shape, [0, 0, 1, 0, 1, 0, 0, 0, 0]), Q),
        MaskSubspace(SupportMask(shape, [0, 0, 0, 1, 0, 1, 0, 1, 0]), Q),
        MaskSubspace(SupportMask(shape, [0, 0, 0, 0, 0, 0, 1, 0, 0]), Q),
    ]
    assert check_sum(direct).kind == DIRECT

    column = Shape(12, 1)

    def rows(indices):
        return MaskSubspace(
            SupportMask(column, [1 if i in indices else 0 for i in range(12)]), Q
        )

    pseudo = [rows(range(0, 2)), rows(range(1, 4)), rows(range(2, 7)), rows(range(7, 12))]
    assert check_sum(pseudo).kind == PSEUDO_DIRECT
    assert check_sum(direct[:-1]).kind == NOT_SPANNING
    _ok(9, "direct / pseudo-direct / not-spanning classifications")


def test_criterion_10_partition_contract():
    shape = Shape(2, 3)
    ptypes = [
        PartitionType(shape, row_cuts=r, col_cuts=c)
        for r in ((), (1,))
        for c in ((), (1,), (2,), (1, 2))
    ]
    base_a = sq([[1, 2, 3], [4, 5, 6]])
    base_b = sq([[6, 5, 4], [3, 2, 1]])
    mismatches = 0
    for pa in ptypes:
        for pb in ptypes:
            if pa == pb:
                continue
            s, t = SuperMatrix(base_a, pa), SuperMatrix(base_b, pb)
            with pytest.raises(TypeMismatch):
                s + t
            with pytest.raises(TypeMismatch):
                s * t
            mismatches += 1
    assert mismatches == len(ptypes) * (len(ptypes) - 1)

    rng = random.Random(10)
    for _ in range(10_000):
        shp = rand_shape(rng, 4, 4)
        pt = rand_partition(rng, shp)
        s = SuperMatrix(rand_matrix(rng, shp), pt)
        t = SuperMatrix(rand_matrix(rng, shp), pt)
        assert (s * t).base == s.base * t.base
        assert (s + t).base == s.base + t.base
        assert (s * t).ptype == pt and (s + t).ptype == pt
    _ok(10, "TypeMismatch on every cut disagreement; flattening on 10^4 pairs")


def test_criterion_11_cone_semifield():
    report = cone_positivity_check(Shape(2, 2), Q_PLUS, samples=10_000, seed=11)
    assert report.positive_products_ok
    assert report.additive_strictness_ok
    a, b = cone_zero_divisor_pair(Shape(1, 3), Z_PLUS)
    assert a == row([3, 0, 4], Z_PLUS)
    assert b == row([0, 7, 0], Z_PLUS)
    assert (a * b).is_zero()
    _ok(11, "10^4 strictly positive samples: no zero divisors, strict addition")


def test_criterion_12_constant_only_units_and_idempotents():
    checked = 0
    for rows_ in (1, 2):
        for cols in (1, 2, 3):
            shape = Shape(rows_, cols)
            ptype = PartitionType(shape, col_cuts=(1,) if cols > 1 else ())
            j = MatPoly.from_terms([(0, SuperMatrix(ones(shape, Z), ptype))])
            for values in itertools.product((-1, 0, 1), repeat=shape.size):
                m = Matrix(shape, Z, values)
                p = MatPoly.from_terms([(0, SuperMatrix(m, ptype))])
                assert (p * p == p) == all(v in (0, 1) for v in values)
                is_unit_expected = all(v in (1, -1) for v in values)
                try:
                    inv = MatPoly.from_terms(
                        [(0, SuperMatrix(natural_inverse(m), ptype))]
                    )
                    assert is_unit_expected
                    assert p * inv == j
                except NotInvertible:
                    assert not is_unit_expected
                checked += 1
    rng = random.Random(12)
    tested = 0
    while tested < 1000:
        shape = rand_shape(rng, 2, 3)
        p = rand_poly(rng, shape, domain=Z)
        if (p.degree() or 0) < 1:
            continue
        tested += 1
        jconst = MatPoly.from_terms([(0, ones(shape, Z))])
        square = p * p
        assert square != p
        assert square != jconst
    _ok(12, f"{checked} constant super polynomials classified; 10^3 nonconstant checked")
