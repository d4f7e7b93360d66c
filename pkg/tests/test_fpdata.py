import random
from fractions import Fraction

import pytest

from hamfp import (
    DataError,
    FixedPoint,
    FixedPointData,
    InvalidGeneratorError,
    make_standard_g2,
    morse_pattern,
    point_invariants,
    validate,
)
from conftest import sample_exponents


def replace_weights(data, index, weights):
    points = list(data.points)
    points[index] = FixedPoint(points[index].phi, tuple(weights))
    return FixedPointData(data.n, tuple(points))


def test_standard_dim4_weights(std2):
    assert std2.phis == (-2, -1, 1, 2)
    assert [p.weights for p in std2.points] == [(1, 3), (-1, 3), (-3, 1), (-3, -1)]


def test_standard_n4_weights(std4):
    assert std4.phis == (-3, -2, -1, 1, 2, 3)
    assert std4.points[0].weights == (1, 2, 4, 5)
    assert std4.points[2].weights == (-2, -1, 3, 4)
    assert std4.points[3].weights == (-4, -3, 1, 2)
    # cross-check by direct summation of reciprocal weight products
    total = sum(
        Fraction(1, point_invariants(std4, i).lambda_full) for i in range(6)
    )
    assert total == 0


def test_standard_is_order_insensitive():
    assert make_standard_g2([1, 2]) == make_standard_g2([2, 1])


def test_standard_rejects_bad_exponents():
    with pytest.raises(InvalidGeneratorError):
        make_standard_g2([1, 1])
    with pytest.raises(InvalidGeneratorError):
        make_standard_g2([3])
    # opposite exponents would collide moment values away from the middle
    with pytest.raises(InvalidGeneratorError):
        make_standard_g2([1, -1])


def test_standard_middle_tie_is_valid():
    data = make_standard_g2([2, 0])
    assert data.phis == (-2, 0, 0, 2)
    assert validate(data).passed


def test_structural_errors():
    with pytest.raises(DataError):
        FixedPoint(0, (1, 0))
    with pytest.raises(DataError):
        FixedPointData(3, (FixedPoint(0, (1, 1, 1)),) * 5)
    with pytest.raises(DataError):
        FixedPointData(2, (FixedPoint(0, (1,)),) * 4)


def test_validate_standard_passes(std2):
    report = validate(std2)
    assert report.passed
    assert [c.name for c in report.checks] == [
        "phi-order",
        "morse-index",
        "negation-closure",
        "index-bound",
        "localization-of-one",
    ]


def test_validate_detects_min_point_swap(std2):
    # swapping the weight multisets of P0 and P1 moves a negative count
    tampered = replace_weights(
        replace_weights(std2, 0, std2.points[1].weights),
        1,
        std2.points[0].weights,
    )
    report = validate(tampered)
    assert not report.passed
    assert not report.check("morse-index").passed


def test_validate_detects_weight_replacement(std2):
    # weight 3 at P0 replaced by 4: the reciprocal sum becomes 1/4 - 1/3
    tampered = replace_weights(std2, 0, (1, 4))
    report = validate(tampered)
    assert not report.passed
    assert not report.check("negation-closure").passed
    assert not report.check("localization-of-one").passed
    assert "-1/12" in report.check("localization-of-one").detail


def test_validate_middle_pair_swap_is_invisible(std2):
    # Swapping the weight multisets of the two middle points preserves every
    # quantity these checks see (counts, products, the global multiset), so
    # the report passes; only ring-hypothesis constraints reject such data.
    tampered = replace_weights(
        replace_weights(std2, 1, std2.points[2].weights),
        2,
        std2.points[1].weights,
    )
    assert validate(tampered).passed


def test_validate_detects_disorder(std2):
    points = list(std2.points)
    points[0], points[3] = points[3], points[0]
    report = validate(FixedPointData(2, tuple(points)))
    assert not report.check("phi-order").passed


def test_point_invariants_examples(std2):
    inv0 = point_invariants(std2, 0)
    assert (inv0.gamma, inv0.lambda_full, inv0.lambda_minus, inv0.lambda_plus) == (
        4,
        3,
        1,
        3,
    )
    inv1 = point_invariants(std2, 1)
    assert (inv1.gamma, inv1.lambda_full, inv1.lambda_minus, inv1.lambda_plus) == (
        2,
        -3,
        -1,
        3,
    )
    with pytest.raises(IndexError):
        point_invariants(std2, 4)


def test_minimum_point_has_trivial_negative_product():
    rng = random.Random(5)
    for n in (2, 4, 6):
        data = make_standard_g2(sample_exponents(rng, n))
        assert point_invariants(data, 0).lambda_minus == 1


def test_first_chern_ratio_is_n():
    rng = random.Random(6)
    for n in (2, 4, 6):
        data = make_standard_g2(sample_exponents(rng, n))
        gammas = [point_invariants(data, i).gamma for i in range(n + 2)]
        phis = data.phis
        for i in range(n + 2):
            for j in range(n + 2):
                if phis[i] != phis[j]:
                    ratio = Fraction(gammas[i] - gammas[j], phis[j] - phis[i])
                    assert ratio == n


def test_dim4_gap_identity():
    rng = random.Random(7)
    for _ in range(10):
        data = make_standard_g2(sample_exponents(rng, 2))
        phis = data.phis
        assert phis[3] - phis[2] == phis[1] - phis[0]


def test_negation_closure_of_standard_data():
    rng = random.Random(8)
    for n in (2, 4, 6, 8):
        data = make_standard_g2(sample_exponents(rng, n))
        counts = data.all_weights()
        assert all(counts[w] == counts[-w] for w in counts)
        assert sum(counts.values()) == n * (n + 2)


def test_morse_pattern_values():
    assert morse_pattern(2) == (0, 1, 1, 2)
    assert morse_pattern(4) == (0, 1, 2, 2, 3, 4)


def test_validate_full_pass_for_random_standard_data():
    rng = random.Random(9)
    for n in (2, 4, 6, 8):
        for _ in range(5):
            data = make_standard_g2(sample_exponents(rng, n))
            assert validate(data).passed
