import pytest

from btstrata.partitions import (
    add_strip,
    bipartition,
    bipartition_contractions,
    bipartition_expansions,
    bipartitions_of,
    format_bipartition,
    parse_bipartition,
    parse_partition,
    partition,
    partitions_of,
    remove_strip,
)

E = ()


def brute_add_strip(t, d):
    """Add boxes one at a time, tracking columns used; independent of interleaving."""
    results = set()

    def rec(shape, left, used_cols):
        if left == 0:
            results.add(partition(shape))
            return
        rows = list(shape) + [0]
        for r, length in enumerate(rows):
            col = length  # the new box lands in this column
            if r > 0 and rows[r - 1] <= length:
                continue
            if col in used_cols:
                continue
            new = list(rows)
            new[r] += 1
            rec(tuple(x for x in new if x), left - 1, used_cols | {col})

    rec(tuple(t), d, frozenset())
    return results


def test_partition_normalizes():
    assert partition((0, 1, 3, 0)) == (3, 1)
    with pytest.raises(ValueError):
        partition((-1,))


def test_add_strip_examples():
    assert add_strip((3, 1), 1) == {(4, 1), (3, 2), (3, 1, 1)}
    assert add_strip(E, 2) == {(2,)}
    assert add_strip((1,), 1) == {(2,), (1, 1)}
    assert add_strip((2, 1), 0) == {(2, 1)}


def test_remove_strip_examples():
    assert remove_strip((2,), 1) == {(1,)}
    assert remove_strip((1, 1), 2) == set()
    assert remove_strip((3, 1), 1) == {(2, 1), (3,)}
    assert remove_strip(E, 1) == set()
    assert remove_strip(E, 0) == {E}


def test_bipartition_expansions_examples():
    assert bipartition_expansions((E, (1,)), 1) == {((1,), (1,)), (E, (2,)), (E, (1, 1))}
    assert bipartition_expansions((E, E), 0) == {(E, E)}
    assert bipartition_expansions((E, E), 1) == {((1,), E), (E, (1,))}


def test_bipartition_contractions_examples():
    assert bipartition_contractions(((1,), (1,)), 1) == {(E, (1,)), ((1,), E)}
    assert bipartition_contractions((E, E), 1) == set()
    assert bipartition_contractions((E, (1,)), 1) == {(E, E)}


@pytest.mark.parametrize("n", range(7))
def test_add_strip_matches_box_by_box(n):
    for t in partitions_of(n):
        for d in range(4):
            assert add_strip(t, d) == brute_add_strip(t, d)


def test_strip_duality_exhaustive():
    for n in range(9):
        for t in partitions_of(n):
            for d in range(5):
                up = add_strip(t, d)
                for u in up:
                    assert sum(u) == n + d
                    assert list(u) == sorted(u, reverse=True) and all(u)
                    assert t in remove_strip(u, d)
                for u in remove_strip(t, d):
                    assert t in add_strip(u, d)


def test_add_one_box_count():
    for n in range(9):
        for t in partitions_of(n):
            assert len(add_strip(t, 1)) == len(set(t)) + 1


def test_partition_counts():
    # p(n) for n = 0..10
    assert [sum(1 for _ in partitions_of(n)) for n in range(11)] == [
        1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]
    # bipartitions of n: coefficients of prod 1/(1-x^k)^2
    assert [sum(1 for _ in bipartitions_of(n)) for n in range(7)] == [1, 2, 5, 10, 20, 36, 65]


def test_text_forms():
    assert parse_partition("(3,1)") == (3, 1)
    assert parse_partition("()") == ()
    assert parse_bipartition("((3,1),(2))") == ((3, 1), (2,))
    assert parse_bipartition("((),())") == ((), ())
    b = bipartition((1, 2), ())
    assert parse_bipartition(format_bipartition(b)) == b
    with pytest.raises(ValueError):
        parse_partition("(1,3)")
