"""Integer partitions, symmetric group character values, horizontal strips.

Character values are computed by iterated border-strip removal on first-column
hook encodings (beta sets), which keeps everything in exact integers.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts; () is the empty partition."""

    parts: tuple[int, ...]

    def __post_init__(self):
        assert all(p > 0 for p in self.parts)
        assert all(a >= b for a, b in zip(self.parts, self.parts[1:]))

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __str__(self):
        return "(" + ",".join(str(p) for p in self.parts) + ")" if self.parts else "()"

    def as_list(self) -> list[int]:
        return list(self.parts)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in decreasing lexicographic order: (n) first, (1^n) last."""
    assert n >= 0

    def gen(remaining: int, cap: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(cap, remaining), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return [Partition(p) for p in gen(n, n)]


def _beta_set(parts: tuple[int, ...]) -> tuple[int, ...]:
    """First-column hook lengths: beta_i = part_i + (k-1-i), strictly decreasing."""
    k = len(parts)
    return tuple(parts[i] + (k - 1 - i) for i in range(k))


@lru_cache(maxsize=None)
def _mn_recurse(beta: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    if not cycles:
        return 1
    length = cycles[0]
    rest = cycles[1:]
    present = set(beta)
    total = 0
    for idx, b in enumerate(beta):
        target = b - length
        if target < 0 or target in present:
            continue
        # removing the strip hops over every beta value strictly between target and b
        hops = sum(1 for c in beta if target < c < b)
        new_beta = tuple(sorted(set(beta) - {b} | {target}, reverse=True))
        sign = -1 if hops % 2 else 1
        total += sign * _mn_recurse(new_beta, rest)
    return total


def symmetric_character_value(label: Partition, cycle_type: tuple[int, ...]) -> int:
    """Value of the irreducible symmetric group character for `label` on a class.

    `cycle_type` lists cycle lengths (any order, fixed points included) of a
    permutation of the same underlying n.
    """
    assert label.n == sum(cycle_type)
    cycles = tuple(sorted(cycle_type, reverse=True))
    return _mn_recurse(_beta_set(label.parts), cycles)


def symmetric_character_degree(label: Partition) -> int:
    return symmetric_character_value(label, (1,) * label.n)


def horizontal_2_strip_additions(label: Partition) -> list[Partition]:
    """All partitions obtained by adding a horizontal strip of two cells."""
    base = list(label.parts)
    k = len(base)
    padded = base + [0, 0]
    results = []
    seen = set()
    for i in range(k + 2):
        for j in range(i, k + 2):
            inc = [0] * (k + 2)
            if i == j:
                inc[i] = 2
            else:
                inc[i] = 1
                inc[j] = 1
            cand = [padded[t] + inc[t] for t in range(k + 2)]
            if any(cand[t] < cand[t + 1] for t in range(k + 1)):
                continue
            # horizontal strip: result row t+1 may not reach past original row t
            if any(cand[t + 1] > padded[t] for t in range(k + 1)):
                continue
            parts = tuple(p for p in cand if p > 0)
            if parts not in seen:
                seen.add(parts)
                results.append(Partition(parts))
    return results


def add_horizontal_2_strips(label: Partition, steps: int) -> Counter:
    """Iterate 2-cell horizontal strip additions, tracking multiplicities.

    Returns a Counter mapping part tuples of |label| + 2*steps to counts.
    """
    current: Counter = Counter({label.parts: 1})
    for _ in range(steps):
        nxt: Counter = Counter()
        for parts, mult in current.items():
            for bigger in horizontal_2_strip_additions(Partition(parts)):
                nxt[bigger.parts] += mult
        current = nxt
    return current
