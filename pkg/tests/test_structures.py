import pytest

from conftest import row, sq
from natprod import (
    ADDITION,
    Carrier,
    DIRECT,
    MaskSubspace,
    Matrix,
    Mod,
    NOT_SPANNING,
    NotMember,
    PSEUDO_DIRECT,
    Q,
    Q_PLUS,
    Shape,
    SupportMask,
    TooLarge,
    UnsupportedDomain,
    Z,
    Z_PLUS,
    analyze,
    check_sum,
    cone_positivity_check,
    cone_zero_divisor_pair,
    ideal_generated,
    idempotents_in,
    is_ideal,
    is_smarandache,
    is_subsemigroup,
    ones,
    orthogonal_space,
    subspace_complement,
    support,
    zeros,
)
from natprod.verify import rand_matrix


def test_analyze_mod3_pairs():
    report = analyze(Carrier.all_matrices(Shape(1, 2), Mod(3)))
    assert report.closed and report.associative and report.commutative
    assert report.identity == Matrix.from_rows([[1, 1]], Mod(3))
    # oracle: entrywise idempotents of Z_3 are {0, 1}
    expected = sorted(
        (Matrix.from_rows([[a, b]], Mod(3)) for a in (0, 1) for b in (0, 1)),
        key=lambda m: m.values,
    )
    assert list(report.idempotents) == expected
    assert report.associativity_mode == "exhaustive"


def test_analyze_sampled_associativity_mode():
    report = analyze(Carrier.all_matrices(Shape(2, 1), Mod(9)), samples=50)
    assert report.carrier.cardinality() == 81
    assert report.associativity_mode == "sampled(50)"
    assert report.associative


def test_analyze_explicit_not_closed():
    carrier = Carrier.explicit([row([2], Z), row([4], Z)])
    report = analyze(carrier)
    assert not report.closed
    assert report.closure_witness is not None
    a, b = report.closure_witness
    assert a * b not in {row([2], Z), row([4], Z)}


def test_carrier_too_large():
    with pytest.raises(TooLarge):
        Carrier.masks(Shape(5, 5)).elements()
    with pytest.raises(TooLarge):
        analyze(Carrier.all_matrices(Shape(2, 2), Mod(12)))


def test_idempotents_examples():
    # oracle: brute-force squaring over Z_6
    per_entry = sorted(x for x in range(6) if (x * x) % 6 == x)
    assert per_entry == [0, 1, 3, 4]
    singles = idempotents_in(Carrier.all_matrices(Shape(1, 1), Mod(6)))
    assert [m.values[0] for m in singles] == per_entry
    pairs = idempotents_in(Carrier.all_matrices(Shape(1, 2), Mod(6)))
    assert len(pairs) == 16
    masks = idempotents_in(Carrier.masks(Shape(2, 2)))
    assert len(masks) == 16


def test_ideal_examples_and_contracts():
    carrier = Carrier.masks(Shape(2, 4))
    x = Matrix.from_rows([[1, 1, 1, 1], [0, 0, 0, 0]], Z_PLUS)
    ideal = ideal_generated(carrier, x)
    assert ideal.cardinality == 16
    # down-set semantics: exactly the masks supported inside x
    assert all(support(m) <= support(x) for m in ideal.members)
    with pytest.raises(NotMember):
        ideal_generated(carrier, Matrix.from_rows([[2, 0, 0, 0], [0, 0, 0, 0]], Z_PLUS))
    with pytest.raises(UnsupportedDomain):
        ideal_generated(Carrier.masks(Shape(1, 2), op=ADDITION), ones(Shape(1, 2), Z_PLUS))


def test_ideal_is_ideal_and_subsemigroup():
    carrier = Carrier.masks(Shape(1, 2))
    x = Matrix.from_rows([[1, 0]], Z_PLUS)
    ideal = ideal_generated(carrier, x)
    assert is_subsemigroup(carrier, ideal.members)
    assert is_ideal(carrier, ideal.members)
    # a subsemigroup that is not an ideal
    j = ones(Shape(1, 2), Z_PLUS)
    assert is_subsemigroup(carrier, [j])
    assert not is_ideal(carrier, [j])


def test_smarandache_examples():
    j = ones(Shape(3, 1), Z)
    carrier = Carrier.explicit([zeros(Shape(3, 1), Z), j, -j, j.scale(2)])
    witness = is_smarandache(carrier)
    assert witness is not None and set(witness) == {j, -j}

    units = is_smarandache(Carrier.all_matrices(Shape(1, 2), Mod(5)))
    assert units is not None and len(units) == 16
    assert all(all(v != 0 for v in m.values) for m in units)

    assert is_smarandache(Carrier.masks(Shape(1, 2))) is None


def test_smarandache_lifts_from_subsemigroup():
    # if a sub-carrier has a group witness, so does every carrier containing it
    j = ones(Shape(2, 1), Z)
    inner = Carrier.explicit([zeros(Shape(2, 1), Z), j, -j])
    assert is_smarandache(inner) is not None
    outer = Carrier.explicit(
        [zeros(Shape(2, 1), Z), j, -j, j.scale(2), j.scale(3), -j.scale(2)]
    )
    assert is_smarandache(outer) is not None


def test_smarandache_whole_group_uses_proper_subgroup():
    vectors = [
        Matrix.from_rows([[a], [b]], Z) for a in (1, -1) for b in (1, -1)
    ]
    witness = is_smarandache(Carrier.explicit(vectors))
    assert witness is not None
    assert 2 <= len(witness) < 4


def test_orthogonal_space_rejects_modular():
    # 2*3 = 0 mod 6 although both supports are full, so no mask describes
    # the annihilator there
    with pytest.raises(UnsupportedDomain):
        orthogonal_space(Matrix.from_rows([[2]], Mod(6)))


def test_orthogonal_space_examples():
    x = sq([[3, 0], [0, 5]])
    space = orthogonal_space(x)
    assert space.mask == SupportMask(Shape(2, 2), [0, 1, 1, 0])
    assert space.dim == 2
    assert orthogonal_space(zeros(Shape(2, 2), Q)).mask.is_full()
    assert orthogonal_space(ones(Shape(2, 2), Q)).mask.is_zero()


def test_orthogonal_space_membership_characterization(rng):
    for _ in range(60):
        shape = Shape(rng.randint(1, 3), rng.randint(1, 4))
        x = rand_matrix(rng, shape)
        space = orthogonal_space(x)
        for _ in range(20):
            y = rand_matrix(rng, shape)
            assert ((x * y).is_zero()) == space.contains(y)
        # closure under + and scalars within the subspace
        a = space.sample_member(rng)
        b = space.sample_member(rng)
        assert space.contains(a + b)
        assert space.contains(-a)
        assert space.contains(a.scale(7))
        assert (x * (a + b)).is_zero()


def test_subspace_complement_extremes():
    full = MaskSubspace(SupportMask(Shape(2, 2), [1, 1, 1, 1]), Q)
    assert subspace_complement(full).mask.is_zero()
    zero = MaskSubspace(SupportMask(Shape(2, 2), [0, 0, 0, 0]), Q)
    assert subspace_complement(zero).mask.is_full()


def test_subspace_complement_dims(rng):
    for _ in range(100):
        shape = Shape(rng.randint(1, 4), rng.randint(1, 4))
        bits = [rng.randint(0, 1) for _ in range(shape.size)]
        w = MaskSubspace(SupportMask(shape, bits), Q)
        wp = subspace_complement(w)
        assert w.dim + wp.dim == shape.size
        a = w.sample_member(rng)
        b = wp.sample_member(rng)
        assert (a * b).is_zero()


def test_check_sum_trivials():
    full = MaskSubspace(SupportMask(Shape(2, 2), [1, 1, 1, 1]), Q)
    assert check_sum([full]).kind == DIRECT
    half = MaskSubspace(SupportMask(Shape(2, 2), [1, 1, 0, 0]), Q)
    report = check_sum([half])
    assert report.kind == NOT_SPANNING
    assert report.gaps == ((1, 0), (1, 1))
    overlapping = check_sum([full, half])
    assert overlapping.kind == PSEUDO_DIRECT
    assert overlapping.overlaps[0][:2] == (0, 1)


def test_cone_positivity():
    report = cone_positivity_check(Shape(1, 4), Q_PLUS, samples=300, seed=1)
    assert report.positive_products_ok
    assert report.additive_strictness_ok
    a, b = report.zero_divisor_pair
    assert (a * b).is_zero()
    assert cone_zero_divisor_pair(Shape(1, 1), Z_PLUS) is None
    single = cone_positivity_check(Shape(1, 1), Z_PLUS, samples=50)
    assert single.zero_divisor_pair is None
    with pytest.raises(UnsupportedDomain):
        cone_positivity_check(Shape(1, 2), Q)


def test_carrier_explicit_validation():
    with pytest.raises(ValueError):
        Carrier.explicit([])
    with pytest.raises(ValueError):
        Carrier.explicit([row([1], Z), row([1], Z)])
    from natprod import ShapeMismatch

    with pytest.raises(ShapeMismatch):
        Carrier.explicit([row([1], Z), row([1, 2], Z)])


def test_analyze_zero_divisors_reported():
    report = analyze(Carrier.all_matrices(Shape(1, 2), Mod(3)))
    for a, b in report.zero_divisor_pairs:
        assert not a.is_zero() and not b.is_zero()
        assert (a * b).is_zero()
    assert len(report.zero_divisor_pairs) == 8


def test_max_subgroups_are_groups():
    report = analyze(Carrier.all_matrices(Shape(1, 2), Mod(5)))
    for e, members in report.max_subgroups:
        member_set = set(members)
        assert e in member_set
        for a in members:
            assert a * e == a
            assert any(a * b == e for b in members)
            for b in members:
                assert a * b in member_set


def test_report_serialization_deterministic():
    import json

    report = analyze(Carrier.masks(Shape(1, 2)))
    first = json.dumps(report.to_json(), sort_keys=True)
    second = json.dumps(analyze(Carrier.masks(Shape(1, 2))).to_json(), sort_keys=True)
    assert first == second
    assert "idempotent_count" in report.to_json()
    assert report.table()
