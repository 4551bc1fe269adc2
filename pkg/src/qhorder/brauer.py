"""Chord-diagram monoid on 2n nodes and the orders on its partition labels.

Diagrams are perfect matchings of n northern and n southern nodes.  Stacking
two diagrams and deleting the closed middle loops gives the monoid product
together with the loop count that drives the scalar twist.  Block labels are
pairs (class index, partition); the one-step order comes from an induced
permutation character over an explicit stabilizer of permutation pairs, and
its transitive closure has a closed form by repeated two-cell horizontal
strip additions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import InternalConsistencyError
from .partitions import Partition, add_horizontal_2_strips, partitions_of, symmetric_character_value
from .permgroups import Perm
from .relations import (
    Label,
    OrderRelation,
    assert_partial_order,
    refines,
    transitive_closure,
)


@dataclass(frozen=True)
class BrauerDiagram:
    """Perfect matching on 2n nodes: northern 0..n-1, southern n..2n-1."""

    n: int
    partner: tuple[int, ...]

    def __post_init__(self):
        if len(self.partner) != 2 * self.n:
            raise ValueError("partner array must cover all 2n nodes")
        for x, y in enumerate(self.partner):
            if not 0 <= y < 2 * self.n or y == x or self.partner[y] != x:
                raise ValueError("partner array is not a fixed-point-free involution")

    @staticmethod
    def from_pairs(n: int, pairs) -> "BrauerDiagram":
        partner = [-1] * (2 * n)
        for x, y in pairs:
            partner[x] = y
            partner[y] = x
        return BrauerDiagram(n, tuple(partner))

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """The matching as a sorted tuple of (low, high) node pairs."""
        return tuple(
            sorted((x, y) for x, y in enumerate(self.partner) if x < y)
        )

    def propagating_lines(self) -> int:
        """Number of edges joining a northern node to a southern node."""
        return sum(1 for x in range(self.n) if self.partner[x] >= self.n)

    def reflect(self) -> "BrauerDiagram":
        """Flip about the horizontal axis, swapping northern and southern rows."""
        n = self.n

        def flip(x: int) -> int:
            return (x + n) % (2 * n)

        return BrauerDiagram(n, tuple(flip(self.partner[flip(x)]) for x in range(2 * n)))


@dataclass(frozen=True)
class ComposeResult:
    """Product diagram together with the number of deleted middle loops."""

    diagram: BrauerDiagram
    cycles: int


def compose(top: BrauerDiagram, bottom: BrauerDiagram) -> ComposeResult:
    """Stack `top` above `bottom`, trace the glued rows, count closed loops.

    The three-row node model uses indices 0..n-1 for the result's northern
    row, n..2n-1 for the glued middle row, and 2n..3n-1 for the result's
    southern row.  Components are found by union-find; a component without a
    top or bottom endpoint is a closed middle loop.
    """
    if top.n != bottom.n:
        raise ValueError("diagrams must have equal degree")
    n = top.n
    parent = list(range(3 * n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x: int, y: int) -> None:
        parent[find(x)] = find(y)

    for x in range(2 * n):
        if x < top.partner[x]:
            union(x, top.partner[x])
    for x in range(2 * n):
        if x < bottom.partner[x]:
            union(x + n, bottom.partner[x] + n)

    endpoints: dict[int, list[int]] = {}
    for x in itertools.chain(range(n), range(2 * n, 3 * n)):
        endpoints.setdefault(find(x), []).append(x)

    partner = [-1] * (2 * n)
    for pair in endpoints.values():
        if len(pair) != 2:
            raise InternalConsistencyError("path with endpoint count other than two")
        a, b = (x if x < n else x - n for x in pair)
        partner[a] = b
        partner[b] = a

    roots = {find(x) for x in range(3 * n)}
    cycles = len(roots) - len(endpoints)
    return ComposeResult(BrauerDiagram(n, tuple(partner)), cycles)


def all_diagrams(n: int) -> list[BrauerDiagram]:
    """Every perfect matching on 2n nodes, in a deterministic order."""

    def matchings(nodes: tuple[int, ...]):
        if not nodes:
            yield ()
            return
        first, rest = nodes[0], nodes[1:]
        for k, other in enumerate(rest):
            remaining = rest[:k] + rest[k + 1 :]
            for tail in matchings(remaining):
                yield ((first, other),) + tail

    return [BrauerDiagram.from_pairs(n, pairs) for pairs in matchings(tuple(range(2 * n)))]


def class_count(n: int) -> int:
    """Number of two-sided ideal classes: one per possible line count."""
    return n // 2 + 1


def lines_in_class(n: int, i: int) -> int:
    """Propagating line count of class i, smallest class first."""
    d = n // 2
    if not 1 <= i <= d + 1:
        raise ValueError("class index out of range")
    return n - 2 * (d - i + 1)


def class_idempotent(n: int, i: int) -> BrauerDiagram:
    """Idempotent with leftmost vertical lines and right-packed neighbour arcs."""
    lines = lines_in_class(n, i)
    partner = [0] * (2 * n)
    for q in range(lines):
        partner[q] = n + q
        partner[n + q] = q
    for base in range(lines, n, 2):
        partner[base], partner[base + 1] = base + 1, base
        partner[n + base], partner[n + base + 1] = n + base + 1, n + base
    return BrauerDiagram(n, tuple(partner))


def identity_diagram(n: int) -> BrauerDiagram:
    return class_idempotent(n, n // 2 + 1)


def j_class_index(diagram: BrauerDiagram) -> int:
    """Class index recovered from the propagating line count."""
    n = diagram.n
    lines = diagram.propagating_lines()
    if (n - lines) % 2:
        raise InternalConsistencyError("line count must match degree parity")
    return n // 2 - (n - lines) // 2 + 1


def perm_to_diagram(sigma: Perm, n: int, i: int) -> BrauerDiagram:
    """Unit diagram of class i with line q rising to node sigma(q)."""
    lines = lines_in_class(n, i)
    if sigma.degree != lines:
        raise ValueError("permutation degree must equal the class line count")
    partner = list(class_idempotent(n, i).partner)
    for q in range(lines):
        partner[n + q] = sigma(q)
        partner[sigma(q)] = n + q
    return BrauerDiagram(n, tuple(partner))


def diagram_to_perm(diagram: BrauerDiagram, i: int) -> Perm:
    """Inverse of perm_to_diagram; rejects diagrams that are not class-i units."""
    n = diagram.n
    lines = lines_in_class(n, i)
    reference = class_idempotent(n, i)
    for x in range(lines, n):
        if diagram.partner[x] != reference.partner[x]:
            raise ValueError("diagram does not have the unit arc pattern")
    images = tuple(diagram.partner[n + q] for q in range(lines))
    if sorted(images) != list(range(lines)):
        raise ValueError("diagram lines do not permute the leftmost columns")
    return Perm(images)


def unit_diagrams(n: int, i: int) -> list[BrauerDiagram]:
    """All unit diagrams of class i: fixed arcs, lines on the leftmost columns."""
    lines = lines_in_class(n, i)
    return [
        perm_to_diagram(Perm(images), n, i)
        for images in itertools.permutations(range(lines))
    ]


def _paired_point_shuffles(ni: int, nj: int) -> list[Perm]:
    """Permutations of {0..ni-1} fixing 0..nj-1 and preserving the trailing pairs.

    The trailing 2(ni-nj)/2 points are grouped into consecutive pairs; each
    member permutes whole pairs and may flip within pairs, so the collection
    forms the full pair-flip wreath of order 2^k k! for k pairs.
    """
    k = (ni - nj) // 2
    members = []
    for block_perm in itertools.permutations(range(k)):
        for flips in itertools.product((0, 1), repeat=k):
            images = list(range(ni))
            for b in range(k):
                u, v = nj + 2 * block_perm[b], nj + 2 * block_perm[b] + 1
                if flips[b]:
                    u, v = v, u
                images[nj + 2 * b], images[nj + 2 * b + 1] = u, v
            members.append(Perm(tuple(images)))
    return members


@lru_cache(maxsize=None)
def pair_stabilizer(n: int, i: int, j: int) -> tuple[tuple[Perm, Perm], ...]:
    """Permutation pairs fixing the class-j idempotent under two-sided units.

    Elements are pairs (big, small) with big on the class-i points and small
    on the class-j points: big restricts to small on the leading points and
    shuffles the trailing paired points arbitrarily.  The order is
    (lines_j)! * 2^k * k! for k = i - j.
    """
    if not 1 <= j < i <= n // 2 + 1:
        raise ValueError("need nested classes j < i")
    ni, nj = lines_in_class(n, i), lines_in_class(n, j)
    shuffles = _paired_point_shuffles(ni, nj)
    pairs = []
    for small_images in itertools.permutations(range(nj)):
        small = Perm(small_images)
        for w in shuffles:
            big = Perm(small_images + tuple(w(x) for x in range(nj, ni)))
            pairs.append((big, small))
    pairs.sort(key=lambda p: (p[0].images, p[1].images))
    return tuple(pairs)


def induced_pair_multiplicity(n: int, i: int, j: int, lam_a: Partition, lam_b: Partition) -> int:
    """Multiplicity of an outer product character in the stabilizer induction.

    Computes the inner product of the class-i times class-j character pair
    against the permutation character induced from the pair stabilizer; the
    result is certified to be a non-negative integer.
    """
    stab = pair_stabilizer(n, i, j)
    total = 0
    for big, small in stab:
        total += symmetric_character_value(lam_a, big.cycle_type()) * symmetric_character_value(
            lam_b, small.cycle_type()
        )
    mult, rem = divmod(total, len(stab))
    if rem or mult < 0:
        raise InternalConsistencyError(
            f"multiplicity {total}/{len(stab)} is not a non-negative integer"
        )
    return mult


def sqsubset(n: int, a: tuple[int, Partition], b: tuple[int, Partition]) -> bool:
    """One-step relation on (class, partition) labels via induced characters."""
    (i, lam_a), (j, lam_b) = a, b
    if a == b:
        return True
    if not j < i:
        return False
    return induced_pair_multiplicity(n, i, j, lam_a, lam_b) > 0


def unlhd(n: int, a: tuple[int, Partition], b: tuple[int, Partition]) -> bool:
    """Closed form of the coarse order: iterated horizontal two-strip growth."""
    (i, lam_a), (j, lam_b) = a, b
    if a == b:
        return True
    if not j < i:
        return False
    return add_horizontal_2_strips(lam_b, i - j)[lam_a.parts] > 0


def brauer_labels(n: int) -> tuple[list[Label], dict[Label, Partition]]:
    """Labels (i, r) with r indexing partitions of the class line count."""
    labels: list[Label] = []
    partition_of: dict[Label, Partition] = {}
    for i in range(1, class_count(n) + 1):
        for r, lam in enumerate(partitions_of(lines_in_class(n, i)), start=1):
            label = Label(i, r)
            labels.append(label)
            partition_of[label] = lam
    return labels, partition_of


def build_brauer_order(n: int, delta) -> OrderRelation:
    """All three order matrices on the degree-n diagram algebra labels.

    The scale parameter must be a nonzero exact rational; the relations do
    not depend on it (every twist scalar is a nonzero power), and it is only
    recorded in the result metadata.
    """
    if n < 1:
        raise ValueError("degree must be positive")
    delta = Fraction(delta)
    if delta == 0:
        raise ValueError("scale parameter must be nonzero")
    labels, partition_of = brauer_labels(n)
    size = len(labels)

    def pair(label: Label) -> tuple[int, Partition]:
        return (label.i, partition_of[label])

    sq = [[sqsubset(n, pair(la), pair(lb)) for lb in labels] for la in labels]
    closure = transitive_closure(sq)
    closed_form = [[unlhd(n, pair(la), pair(lb)) for lb in labels] for la in labels]
    if closure != closed_form:
        raise InternalConsistencyError("closure disagrees with the strip-growth form")
    assert_partial_order(closed_form, labels)
    leq = [
        [a == b or labels[b].i < labels[a].i for b in range(size)]
        for a in range(size)
    ]
    assert_partial_order(leq, labels)
    if not refines(closed_form, leq):
        raise InternalConsistencyError("coarse order fails to refine the block order")
    meta = {
        "family": "brauer",
        "degree": n,
        "delta": str(delta),
        "partitions": {label: partition_of[label].as_list() for label in labels},
        "label_counts": [len(partitions_of(lines_in_class(n, i))) for i in range(1, class_count(n) + 1)],
    }
    return OrderRelation(labels, sq, closed_form, leq, survives=[True] * size, meta=meta)
