"""Partition calculus: cell-set oracles, frozen values, exhaustive roundtrips."""

import pytest

from parafock.partitions import (
    FrobeniusForm,
    Partition,
    augment_arms,
    enumerate_partitions,
    enumerate_self_conjugate_in_square,
    frobenius_compose,
    frobenius_decompose,
    hook_condition,
)


# -- independent oracles on explicit cell sets -------------------------------

def cells(lam):
    return {(i, j) for i, row in enumerate(lam) for j in range(row)}


def partition_from_cells(cs):
    rows = {}
    for i, _ in cs:
        rows[i] = rows.get(i, 0) + 1
    return Partition(rows[i] for i in sorted(rows))


def conjugate_oracle(lam):
    return partition_from_cells({(j, i) for i, j in cells(lam)})


def frobenius_oracle(lam):
    cs = cells(lam)
    r = sum(1 for i, j in cs if i == j)
    arms = tuple(sum(1 for (i, j) in cs if i == d and j > d) for d in range(r))
    legs = tuple(sum(1 for (i, j) in cs if j == d and i > d) for d in range(r))
    return r, arms, legs


def all_partitions_up_to(size):
    return list(enumerate_partitions(max_size=size))


# -- frozen examples ----------------------------------------------------------

def test_conjugate_frozen():
    assert Partition([3, 1]).conjugate() == Partition([2, 1, 1])
    assert Partition([2, 1]).conjugate() == Partition([2, 1])
    assert Partition().conjugate() == Partition()


def test_frobenius_frozen():
    f = frobenius_decompose(Partition([3, 1]))
    assert (f.arms, f.legs) == ((2,), (1,))
    f = frobenius_decompose(Partition([3, 2, 1]))
    assert (f.arms, f.legs) == ((2, 0), (2, 0))
    assert frobenius_decompose(Partition()).rank == 0


def test_compose_frozen():
    assert frobenius_compose(FrobeniusForm((2,), (0,))) == Partition([3])
    assert frobenius_compose(FrobeniusForm((2, 1), (1, 0))) == Partition([3, 3])
    assert frobenius_compose(FrobeniusForm((0,), (0,))) == Partition([1])
    assert frobenius_compose(FrobeniusForm((), ())) == Partition()


def test_augment_frozen():
    assert augment_arms(Partition([1]), 2) == Partition([3])
    assert augment_arms(Partition([2, 2]), 1) == Partition([3, 3])
    assert augment_arms(Partition([2, 1]), 0) == Partition([2, 1])
    assert augment_arms(Partition(), 5) == Partition()


def test_self_conjugate_square_frozen():
    assert enumerate_self_conjugate_in_square(1) == [Partition(), Partition([1])]
    assert enumerate_self_conjugate_in_square(2) == [
        Partition(),
        Partition([1]),
        Partition([2, 1]),
        Partition([2, 2]),
    ]


def test_enumerate_partitions_frozen():
    assert list(enumerate_partitions(max_part=2, max_length=2)) == [
        Partition(),
        Partition([1]),
        Partition([2]),
        Partition([1, 1]),
        Partition([2, 1]),
        Partition([2, 2]),
    ]
    assert list(enumerate_partitions(max_part=1, max_length=3)) == [
        Partition(),
        Partition([1]),
        Partition([1, 1]),
        Partition([1, 1, 1]),
    ]
    assert list(enumerate_partitions(max_length=1, max_size=3)) == [
        Partition(),
        Partition([1]),
        Partition([2]),
        Partition([3]),
    ]


def test_hook_condition_frozen():
    assert hook_condition(Partition([5, 1]), 1, 1)
    assert not hook_condition(Partition([2, 2, 2]), 1, 1)
    assert hook_condition(Partition(), 0, 0)
    assert hook_condition(Partition(), 3, 2)


# -- construction and validation ----------------------------------------------

def test_constructor_normalizes_and_validates():
    assert Partition([3, 1, 0, 0]) == Partition([3, 1])
    assert Partition([]) == Partition()
    assert len(Partition([2, 2, 1])) == 3
    assert Partition([4, 2]).size == 6
    with pytest.raises(ValueError):
        Partition([1, 2])
    with pytest.raises(ValueError):
        Partition([2, -1])


def test_frobenius_form_validation():
    with pytest.raises(ValueError):
        FrobeniusForm((1, 1), (1, 0))
    with pytest.raises(ValueError):
        FrobeniusForm((1,), (1, 0))
    with pytest.raises(ValueError):
        FrobeniusForm((-1,), (0,))


def test_augment_rejects_non_self_conjugate():
    with pytest.raises(ValueError):
        augment_arms(Partition([2]), 1)
    with pytest.raises(ValueError):
        augment_arms(Partition([3, 1]), 0)


def test_enumerate_rejects_fully_unbounded():
    with pytest.raises(ValueError):
        list(enumerate_partitions())


# -- oracle agreement and invariants ------------------------------------------

def test_conjugate_matches_cell_transpose_oracle():
    for lam in all_partitions_up_to(10):
        assert lam.conjugate() == conjugate_oracle(lam)


def test_conjugate_is_involutive_and_size_preserving():
    for lam in all_partitions_up_to(12):
        c = lam.conjugate()
        assert c.conjugate() == lam
        assert c.size == lam.size


def test_frobenius_matches_cell_oracle_and_roundtrips():
    for lam in all_partitions_up_to(12):
        f = frobenius_decompose(lam)
        r, arms, legs = frobenius_oracle(lam)
        assert (f.rank, f.arms, f.legs) == (r, arms, legs)
        assert frobenius_compose(f) == lam
        assert lam.size == f.rank + sum(f.arms) + sum(f.legs)


def test_self_conjugate_iff_arms_equal_legs():
    for lam in all_partitions_up_to(12):
        f = frobenius_decompose(lam)
        assert lam.is_self_conjugate() == (f.arms == f.legs)


def test_square_enumeration_counts_and_membership():
    for n in range(1, 9):
        sq = enumerate_self_conjugate_in_square(n)
        assert len(sq) == 2 ** n
        assert len(set(sq)) == 2 ** n
        for mu in sq:
            assert mu.is_self_conjugate()
            assert len(mu) <= n and mu.part(0) <= n


def test_square_enumeration_equals_brute_filter():
    for n in range(1, 6):
        brute = [
            lam
            for lam in enumerate_partitions(max_part=n, max_length=n)
            if lam.is_self_conjugate()
        ]
        assert sorted(brute, key=lambda l: l.parts) == sorted(
            enumerate_self_conjugate_in_square(n), key=lambda l: l.parts
        )


def test_degree_formula_is_integral_in_six_square():
    for mu in enumerate_self_conjugate_in_square(6):
        r = frobenius_decompose(mu).rank
        assert (mu.size + r) % 2 == 0


def test_augment_size_and_self_conjugacy_of_source():
    for n in range(1, 6):
        for mu in enumerate_self_conjugate_in_square(n):
            r = frobenius_decompose(mu).rank
            for p in range(4):
                aug = augment_arms(mu, p)
                assert aug.size == mu.size + p * r
                assert len(aug) <= n
                f = frobenius_decompose(aug)
                assert f.arms == tuple(a + p for a in f.legs)


def test_enumeration_is_graded_unique_and_bounded():
    seen = set()
    prev_size = 0
    for lam in enumerate_partitions(max_part=4, max_length=3, max_size=9):
        assert lam.size >= prev_size
        prev_size = lam.size
        assert lam not in seen
        seen.add(lam)
        assert lam.part(0) <= 4 and len(lam) <= 3 and lam.size <= 9
    # complete against a brute-force filter
    brute = {
        lam
        for lam in enumerate_partitions(max_size=9)
        if lam.part(0) <= 4 and len(lam) <= 3
    }
    assert seen == brute


def test_containment_and_part_access():
    lam = Partition([4, 2, 1])
    assert lam.contains(Partition([2, 2]))
    assert not lam.contains(Partition([5]))
    assert not lam.contains(Partition([1, 1, 1, 1]))
    assert lam.part(0) == 4 and lam.part(3) == 0
    assert lam[1] == 2


def test_json_roundtrip():
    lam = Partition([3, 1])
    assert Partition.from_json(lam.to_json()) == lam
    assert lam.to_json() == [3, 1]
    f = frobenius_decompose(lam)
    assert FrobeniusForm.from_json(f.to_json()) == f
    assert f.to_json() == {"arms": [2], "legs": [1]}
