import math
from collections import Counter

from hypothesis import given, settings, strategies as st

from qhorder.partitions import (
    Partition,
    add_horizontal_2_strips,
    horizontal_2_strip_additions,
    partitions_of,
    symmetric_character_degree,
    symmetric_character_value,
)


def test_partitions_of_counts():
    counts = [len(partitions_of(n)) for n in range(11)]
    assert counts == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partitions_of_ordering():
    parts6 = [p.parts for p in partitions_of(6)]
    assert parts6[0] == (6,)
    assert parts6[-1] == (1,) * 6
    assert parts6 == sorted(parts6, reverse=True)  # decreasing lex
    assert parts6[4] == (3, 3)
    assert parts6[3] == (4, 1, 1)
    parts4 = [p.parts for p in partitions_of(4)]
    assert parts4 == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


def test_character_values_known():
    # trivial and sign rows
    for lam in partitions_of(5):
        pass
    for n in range(1, 7):
        for cycles in [p.parts for p in partitions_of(n)]:
            assert symmetric_character_value(Partition((n,)), cycles) == 1
            parity = (-1) ** (n - len(cycles))
            assert symmetric_character_value(Partition((1,) * n), cycles) == parity
    # standard character of S4 on (2,1,1) classes: chi_(3,1) is natural minus trivial
    assert symmetric_character_value(Partition((3, 1)), (2, 1, 1)) == 1
    assert symmetric_character_value(Partition((3, 1)), (4,)) == -1
    assert symmetric_character_value(Partition((2, 2)), (2, 2)) == 2
    assert symmetric_character_value(Partition((3, 3)), (3, 3)) == 2
    assert symmetric_character_value(Partition((4, 2)), (3, 3)) == 0
    assert symmetric_character_degree(Partition((3, 3))) == 5
    assert symmetric_character_degree(Partition((2, 2, 1, 1))) == 9
    assert symmetric_character_degree(Partition(())) == 1


def test_degree_squares_sum_to_factorial():
    for n in range(8):
        total = sum(symmetric_character_degree(p) ** 2 for p in partitions_of(n))
        assert total == math.factorial(n)


def test_column_orthogonality_s5():
    # sum over labels of chi(c)^2 weighted equals |centralizer| on the diagonal
    labels = partitions_of(5)
    types = [p.parts for p in partitions_of(5)]

    def centralizer_size(cycles):
        mult = Counter(cycles)
        size = 1
        for length, count in mult.items():
            size *= (length ** count) * math.factorial(count)
        return size

    for c in types:
        for c2 in types:
            dot = sum(
                symmetric_character_value(lam, c) * symmetric_character_value(lam, c2)
                for lam in labels
            )
            assert dot == (centralizer_size(c) if c == c2 else 0)


def test_horizontal_strips_examples():
    assert {p.parts for p in horizontal_2_strip_additions(Partition((2,)))} == {
        (4,), (3, 1), (2, 2)
    }
    assert {p.parts for p in horizontal_2_strip_additions(Partition((1, 1)))} == {
        (3, 1), (2, 1, 1)
    }
    assert {p.parts for p in horizontal_2_strip_additions(Partition(()))} == {(2,)}


def test_iterated_strips_multiplicities():
    # two steps from the empty partition: everything reachable by two dominoes
    two = add_horizontal_2_strips(Partition(()), 2)
    assert two == Counter({(4,): 1, (3, 1): 1, (2, 2): 1})
    # multiplicities can exceed one after two steps
    deep = add_horizontal_2_strips(Partition((1,)), 2)
    assert deep[(3, 2)] == 2


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 8), st.integers(0, 8))
def test_strip_addition_is_shape_valid(n, idx):
    plist = partitions_of(n)
    lam = plist[idx % len(plist)]
    for mu in horizontal_2_strip_additions(lam):
        assert mu.n == n + 2
        padded = list(lam.parts) + [0] * (len(mu.parts) - len(lam.parts))
        assert all(m >= l for m, l in zip(mu.parts, padded))
        # no two added cells share a column
        assert all(mu.parts[t + 1] <= (lam.parts[t] if t < len(lam.parts) else 0)
                   for t in range(len(mu.parts) - 1))
