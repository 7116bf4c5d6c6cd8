"""Root-system construction: counts, pairing table, ordering, rejection paths."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagflow import (
    DomainError,
    build_root_system,
    fund_coords,
    height,
    pairing,
    positive_roots_from_cartan,
    rho,
    rho_pairing,
)

CLASSICAL_COUNTS = [
    ("A", 1, 1), ("A", 2, 3), ("A", 3, 6), ("A", 4, 10), ("A", 5, 15), ("A", 6, 21),
    ("B", 2, 4), ("B", 3, 9), ("B", 4, 16), ("B", 5, 25), ("B", 6, 36),
    ("C", 3, 9), ("C", 4, 16), ("C", 5, 25), ("C", 6, 36),
    ("D", 4, 12), ("D", 5, 20), ("D", 6, 30),
    ("E", 6, 36), ("E", 7, 63), ("E", 8, 120),
    ("F", 4, 24), ("G", 2, 6),
]

TYPES_RANK_LE_6 = [(f, r) for f, r, _ in CLASSICAL_COUNTS if r <= 6]


@pytest.mark.parametrize("family,rank,count", CLASSICAL_COUNTS)
def test_positive_root_count_matches_classical_table(family, rank, count):
    rs = build_root_system(family, rank)
    assert len(rs.positive_roots) == count


@pytest.mark.parametrize("family,rank", TYPES_RANK_LE_6)
def test_cartan_matrix_shape(family, rank):
    rs = build_root_system(family, rank)
    for i in range(rank):
        assert rs.cartan[i][i] == 2
        for j in range(rank):
            if i != j:
                assert rs.cartan[i][j] <= 0


def test_frozen_cartan_data_for_multiply_laced_types():
    b2 = build_root_system("B", 2)
    assert b2.cartan == ((2, -2), (-1, 2))
    assert b2.d == (2, 1)
    g2 = build_root_system("G", 2)
    assert g2.cartan == ((2, -1), (-3, 2))
    assert g2.d == (1, 3)
    assert build_root_system("C", 3).d == (1, 1, 2)
    assert build_root_system("F", 4).d == (2, 2, 1, 1)


@pytest.mark.parametrize("family,rank", TYPES_RANK_LE_6)
def test_simple_roots_pair_as_kronecker_delta(family, rank):
    rs = build_root_system(family, rank)
    for j in range(rank):
        basis = tuple(int(i == j) for i in range(rank))
        idx = rs.positive_roots.index(basis)
        assert rs.pairing_rows[idx] == basis


@pytest.mark.parametrize("family,rank", TYPES_RANK_LE_6)
def test_pairing_rows_are_nonnegative_with_support_of_root(family, rank):
    rs = build_root_system(family, rank)
    for k, row in zip(rs.positive_roots, rs.pairing_rows):
        for kj, rj in zip(k, row):
            assert rj >= 0
            assert (rj > 0) == (kj > 0)


@pytest.mark.parametrize("family,rank", TYPES_RANK_LE_6)
def test_sum_of_positive_roots_is_twice_rho(family, rank):
    rs = build_root_system(family, rank)
    total = tuple(sum(k[i] for k in rs.positive_roots) for i in range(rank))
    assert fund_coords(rs, total) == tuple(Fraction(2) for _ in range(rank))


@pytest.mark.parametrize("family,rank", TYPES_RANK_LE_6)
def test_roots_ordered_by_height_then_lex(family, rank):
    rs = build_root_system(family, rank)
    keys = [(height(k), k) for k in rs.positive_roots]
    assert keys == sorted(keys)


def test_construction_is_deterministic():
    first = positive_roots_from_cartan(build_root_system("F", 4).cartan)
    second = positive_roots_from_cartan(build_root_system("F", 4).cartan)
    assert first == second == build_root_system("F", 4).positive_roots


@pytest.mark.parametrize("family,rank", [
    ("A", 0), ("B", 1), ("C", 2), ("D", 3), ("E", 5), ("E", 9), ("F", 3), ("G", 1),
])
def test_invalid_rank_rejected_with_named_constraint(family, rank):
    with pytest.raises(DomainError, match="rank"):
        build_root_system(family, rank)


def test_unknown_family_rejected():
    with pytest.raises(DomainError, match="family"):
        build_root_system("H", 3)


def test_pairing_rejects_out_of_range_index():
    rs = build_root_system("A", 2)
    with pytest.raises(DomainError, match="out of range"):
        pairing(rs, rho(rs), 3)
    with pytest.raises(DomainError, match="out of range"):
        rho_pairing(rs, -1)


def test_a2_pairing_examples():
    rs = build_root_system("A", 2)
    w1 = (Fraction(1), Fraction(0))
    i_a1 = rs.positive_roots.index((1, 0))
    i_a12 = rs.positive_roots.index((1, 1))
    assert pairing(rs, w1, i_a1) == 1
    assert pairing(rs, w1, i_a12) == 1
    assert pairing(rs, rho(rs), i_a12) == 2


def test_rho_pairing_equals_row_sum():
    rs = build_root_system("G", 2)
    for idx in range(len(rs.positive_roots)):
        assert rho_pairing(rs, idx) == pairing(rs, rho(rs), idx)


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=8)


@given(
    lam=st.tuples(rationals, rationals, rationals),
    mu=st.tuples(rationals, rationals, rationals),
    a=rationals,
    b=rationals,
)
def test_pairing_is_bilinear_in_the_weight(lam, mu, a, b):
    rs = build_root_system("B", 3)
    combo = tuple(a * x + b * y for x, y in zip(lam, mu))
    for idx in range(len(rs.positive_roots)):
        assert pairing(rs, combo, idx) == a * pairing(rs, lam, idx) + b * pairing(rs, mu, idx)


def test_empty_cartan_matrix_has_no_roots():
    assert positive_roots_from_cartan(()) == ()
