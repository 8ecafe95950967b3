import pytest
from hypothesis import given, strategies as st

from mocktheta.partitions import (DomainError, FrobeniusSymbol, Partition, conjugate,
                                  format_partition, frobenius_symbol, is_in_P_nu,
                                  is_in_P_omega, parse_partition, partition_from_json,
                                  partition_to_json, partitions_of, partitions_with_length,
                                  phi_merge, phi_minus, phi_minus_e, phi_minus_o, phi_plus,
                                  phi_plus_e, phi_plus_o, phi_pointwise, phi_split, phi_star)

partitions = st.lists(st.integers(1, 12), min_size=1, max_size=7).map(Partition.sorted)


def test_constructor_rejects_bad_input():
    with pytest.raises(DomainError):
        Partition((2, 3))
    with pytest.raises(DomainError):
        Partition((3, -1))
    with pytest.raises(DomainError):
        Partition((3, 0, 0))


def test_trailing_zero_counts_toward_length():
    lam = Partition((12, 2, 1, 0))
    assert lam.size == 15
    assert lam.length == 4
    assert lam.smallest == 0


@pytest.mark.parametrize("lam, expected", [
    ((6, 4, 3, 3, 2), True),
    ((0,), True),
    ((5, 2), True),
    ((7, 2), False),
    ((3, 3), False),
])
def test_P_omega(lam, expected):
    assert is_in_P_omega(Partition(lam)) is expected


@pytest.mark.parametrize("lam, expected", [
    ((10, 8, 5, 4, 3), True),
    ((12, 8, 4, 2, 0), True),
    ((3, 1), False),
    ((4, 4), False),
])
def test_P_nu(lam, expected):
    assert is_in_P_nu(Partition(lam)) is expected


def test_predicates_reject_empty():
    with pytest.raises(DomainError):
        is_in_P_omega(Partition())
    with pytest.raises(DomainError):
        is_in_P_nu(Partition())


def test_pointwise_examples():
    assert phi_plus_o(Partition((5, 3, 3, 2))) == (7, 5, 5, 3)
    assert phi_minus_o(Partition((8, 7, 5, 5, 3))) == (6, 5, 3, 3, 2)
    assert phi_minus_e(Partition((12, 8, 4, 2))) == (10, 6, 2, 0)
    assert phi_pointwise("plus", Partition((3, 1))) == phi_plus(Partition((3, 1)))
    with pytest.raises(DomainError):
        phi_minus_e(Partition((3, 1)))


def test_split_examples():
    assert phi_split(Partition((8, 8, 4, 3))) == (8, 8, 4, 2, 1)
    assert phi_split(Partition((1,))) == (1, 0)
    with pytest.raises(DomainError):
        phi_split(Partition((4, 2)))


def test_merge_examples():
    assert phi_merge(Partition((10, 8, 7, 7, 5, 4))) == (10, 9, 8, 7, 7)
    assert phi_merge(Partition((1, 1))) == (2,)
    assert phi_merge(Partition((3, 2, 1))) == (3, 3)
    with pytest.raises(DomainError):
        phi_merge(Partition((5,)))


def test_split_takes_leftmost_largest_odd_part():
    # with two copies of the largest odd part only one is split
    assert phi_split(Partition((7, 7, 2))) == (7, 4, 3, 2)


@given(partitions)
def test_plus_minus_inverse(lam):
    if len(lam) == 1 or lam[-2] > lam[-1]:
        assert phi_minus(phi_plus(lam)) == lam
    assert phi_minus_e(phi_plus_e(lam)) == lam
    assert phi_minus_o(phi_plus_o(lam)) == lam


@given(partitions)
def test_pointwise_size_changes(lam):
    ell = len(lam)
    assert phi_plus(lam).size == lam.size + 1
    assert phi_plus_e(lam).size == lam.size + 2 * ell
    assert phi_plus_o(lam).size == lam.size + 2 * ell - 1
    if lam.count(1) <= 1:
        assert phi_star(lam).size == lam.size - ell


@given(partitions)
def test_split_and_merge_preserve_size(lam):
    if any(p % 2 for p in lam):
        split = phi_split(lam)
        assert split.size == lam.size and len(split) == len(lam) + 1
    if len(lam) >= 2:
        assert phi_merge(lam).size == lam.size


def test_split_then_merge_restores_when_halves_are_smallest():
    lam = Partition((8, 6, 5))
    assert phi_split(lam) == (8, 6, 3, 2)
    assert phi_merge(phi_split(lam)) == lam


def test_conjugate_examples():
    assert conjugate(Partition((6, 6, 3, 2))) == (4, 4, 3, 2, 2, 2)
    assert conjugate(Partition((1,))) == (1,)
    assert conjugate(Partition((5,))) == (1, 1, 1, 1, 1)
    with pytest.raises(DomainError):
        conjugate(Partition((2, 0)))


@given(partitions)
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).size == lam.size


def test_frobenius_examples():
    assert frobenius_symbol(Partition((4, 3, 3, 1))) == FrobeniusSymbol((3, 1, 0), (3, 1, 0), 3)
    assert frobenius_symbol(Partition((1,))) == FrobeniusSymbol((0,), (0,), 1)
    assert frobenius_symbol(Partition((2, 2))) == FrobeniusSymbol((1, 0), (1, 0), 2)


def test_frobenius_round_trip_exhaustive():
    for n in range(1, 31):
        for lam in partitions_of(n):
            assert frobenius_symbol(lam).to_partition() == lam


def test_frobenius_rejects_bad_rows():
    with pytest.raises(DomainError):
        FrobeniusSymbol((1, 2), (2, 1), 2)


def test_generators_count():
    # p(10) = 42 and p(30) = 5604
    assert sum(1 for _ in partitions_of(10)) == 42
    assert sum(1 for _ in partitions_of(30)) == 5604
    assert list(partitions_with_length(0, 1)) == []
    assert sorted(partitions_with_length(6, 3)) == [(2, 2, 2), (3, 2, 1), (4, 1, 1)]


@pytest.mark.parametrize("text", ["(6,4,3,3,2)", "6,4,3,3,2", " ( 6, 4,3,3,2 ) "])
def test_parse(text):
    assert parse_partition(text) == (6, 4, 3, 3, 2)


def test_parse_rejects_garbage():
    for bad in ["(a,b)", "3,5", "(1,,2)"]:
        with pytest.raises(DomainError):
            parse_partition(bad)


@given(partitions)
def test_serialization_round_trip(lam):
    assert parse_partition(format_partition(lam)) == lam
    assert partition_from_json(partition_to_json(lam)) == lam
