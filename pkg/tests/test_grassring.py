import random
from collections import Counter
from itertools import product

import pytest

from hamfp import (
    FixedPoint,
    FixedPointData,
    IntegralityError,
    basis_images,
    betti,
    build_basis,
    make_standard_g2,
    ordinary_chern,
    pairing_matrix,
    ring_integral,
    ring_labels,
    ring_make,
    ring_mul,
    x_power,
)
from conftest import sample_exponents


def idx_y(n):
    return n // 2


def idx_z(n):
    return n // 2 + 1


def idx_g(n, k):
    return n // 2 + 1 + k


def test_labels():
    assert ring_labels(2) == ("1", "y", "z", "g_1")
    assert ring_labels(4) == ("1", "x", "y", "z", "g_1", "g_2")
    assert ring_labels(6) == ("1", "x", "x^2", "y", "z", "g_1", "g_2", "g_3")


def test_ring_make_rejects_bad_n():
    with pytest.raises(ValueError):
        ring_make(3)
    with pytest.raises(ValueError):
        ring_make(0)


def test_parity_branch_n2():
    table = ring_make(2)
    y, z = table.element(idx_y(2)), table.element(idx_z(2))
    assert ring_mul(table, y, z) == table.element(idx_g(2, 1))
    assert ring_mul(table, y, y).is_zero
    assert ring_mul(table, z, z).is_zero


def test_parity_branch_n4():
    table = ring_make(4)
    y, z = table.element(idx_y(4)), table.element(idx_z(4))
    assert ring_mul(table, y, y) == table.element(idx_g(4, 2))
    assert ring_mul(table, z, z) == table.element(idx_g(4, 2))
    assert ring_mul(table, y, z).is_zero


def test_middle_power_splits():
    for n in (2, 4, 6, 8):
        table = ring_make(n)
        half = n // 2
        expected = table.element(idx_y(n)) + table.element(idx_z(n))
        assert x_power(table, half) == expected
        if half >= 2:
            lhs = ring_mul(table, table.element(1), x_power(table, half - 1))
            assert lhs == expected


def test_unit_element():
    table = ring_make(4)
    for i in range(6):
        e = table.element(i)
        assert ring_mul(table, table.one, e) == e


def test_squares_of_middle_sum():
    table2 = ring_make(2)
    s2 = x_power(table2, 1)
    assert ring_mul(table2, s2, s2) == 2 * table2.element(idx_g(2, 1))
    table4 = ring_make(4)
    s4 = x_power(table4, 2)
    assert ring_mul(table4, s4, s4) == 2 * table4.element(idx_g(4, 2))


def test_products_above_top_degree_vanish():
    table = ring_make(4)
    g1 = table.element(idx_g(4, 1))
    assert ring_mul(table, g1, g1).is_zero
    assert ring_mul(table, table.element(idx_y(4)), g1).is_zero


def test_associativity_all_triples():
    for n in (2, 4, 6, 8):
        table = ring_make(n)
        elements = [table.element(i) for i in range(n + 2)]
        for a, b, c in product(elements, repeat=3):
            lhs = ring_mul(table, ring_mul(table, a, b), c)
            rhs = ring_mul(table, a, ring_mul(table, b, c))
            assert lhs == rhs


def test_commutativity_all_pairs():
    for n in (2, 4, 6):
        table = ring_make(n)
        elements = [table.element(i) for i in range(n + 2)]
        for a, b in product(elements, repeat=2):
            assert ring_mul(table, a, b) == ring_mul(table, b, a)


def test_betti_numbers():
    assert betti(2) == [1, 2, 1]
    assert betti(4) == [1, 1, 2, 1, 1]
    for n in (2, 4, 6, 8):
        assert sum(betti(n)) == n + 2
    with pytest.raises(ValueError):
        betti(5)


def test_betti_matches_basis_degree_pattern():
    rng = random.Random(20)
    for n in (2, 4, 6):
        data = make_standard_g2(sample_exponents(rng, n))
        counts = Counter(build_basis(data).half_degrees)
        assert [counts[k] for k in range(n + 1)] == betti(n)


def test_ordinary_chern_n2(std2):
    table = ring_make(2)
    classes = ordinary_chern(std2, build_basis(std2), table)
    assert classes[0] == 2 * x_power(table, 1)  # 2(y + z)
    assert classes[1] == 4 * table.element(idx_g(2, 1))
    assert str(classes[0]) == "2*y + 2*z"


def test_ordinary_chern_n4(std4):
    table = ring_make(4)
    classes = ordinary_chern(std4, build_basis(std4), table)
    assert classes[0] == 4 * x_power(table, 1)


def test_first_chern_is_n_times_generator():
    rng = random.Random(21)
    for n in (2, 4, 6):
        data = make_standard_g2(sample_exponents(rng, n))
        table = ring_make(n)
        classes = ordinary_chern(data, build_basis(data), table)
        assert classes[0] == n * x_power(table, 1)


def test_top_chern_class_counts_fixed_points():
    rng = random.Random(22)
    for n in (2, 4, 6):
        data = make_standard_g2(sample_exponents(rng, n))
        table = ring_make(n)
        classes = ordinary_chern(data, build_basis(data), table)
        assert classes[-1] == (n + 2) * table.element(idx_g(n, n // 2))
        assert ring_integral(table, classes[-1]) == n + 2


def test_ordinary_chern_rejects_fractional_expansion():
    points = (
        FixedPoint(0, (1, 1)),
        FixedPoint(1, (-2, 3)),
        FixedPoint(2, (-1, 1)),
        FixedPoint(3, (-1, -1)),
    )
    data = FixedPointData(2, points)
    with pytest.raises(IntegralityError):
        ordinary_chern(data, build_basis(data), ring_make(2))


def test_pairing_matches_ring_on_ordinary_images():
    rng = random.Random(23)
    for n in (2, 4, 6):
        data = make_standard_g2(sample_exponents(rng, n))
        basis = build_basis(data)
        matrix = pairing_matrix(data, basis)
        table = ring_make(n)
        images = basis_images(table)
        for i in range(n + 2):
            for j in range(n + 2):
                if basis.rows[i].degree_half + basis.rows[j].degree_half != n:
                    continue
                ring_value = ring_integral(
                    table, ring_mul(table, images[i], images[j])
                )
                assert matrix[i][j] == ring_value


def test_middle_block_invariant_under_y_z_relabeling():
    # the ring has an automorphism swapping y and z; the pairing of the
    # middle images (x^(n/2), z) is unchanged if z is replaced by y
    for n in (2, 4):
        table = ring_make(n)
        mid = x_power(table, n // 2)
        for other in (table.element(idx_y(n)), table.element(idx_z(n))):
            block = [
                [
                    ring_integral(table, ring_mul(table, a, b))
                    for b in (mid, other)
                ]
                for a in (mid, other)
            ]
            if n % 4 == 2:
                assert block == [[2, 1], [1, 0]]
            else:
                assert block == [[2, 1], [1, 1]]
