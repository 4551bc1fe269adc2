"""Label types and partial-order matrices shared by both algebra families."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import InternalConsistencyError


@dataclass(frozen=True, order=True)
class Label:
    """Simple-module label: block index i and character position r, both 1-based."""

    i: int
    r: int


@dataclass
class OrderRelation:
    """Three relations on a common label list, as dense boolean matrices.

    `sq` is the one-step generating relation, `unlhd` its reflexive-transitive
    closure, and `leq` the block-comparison order that `unlhd` refines.
    """

    labels: list[Any]
    sq: list[list[bool]]
    unlhd: list[list[bool]]
    leq: list[list[bool]]
    survives: list[bool] | None = None
    meta: dict = field(default_factory=dict)

    @property
    def size(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        return self.labels.index(label)


def transitive_closure(matrix: list[list[bool]]) -> list[list[bool]]:
    """Reflexive-transitive closure by Warshall's algorithm."""
    n = len(matrix)
    closed = [row[:] for row in matrix]
    for a in range(n):
        closed[a][a] = True
    for k in range(n):
        row_k = closed[k]
        for a in range(n):
            if closed[a][k]:
                row_a = closed[a]
                for b in range(n):
                    if row_k[b]:
                        row_a[b] = True
    return closed


def assert_partial_order(matrix: list[list[bool]], labels: list[Any]) -> None:
    """Reflexivity, antisymmetry, transitivity; raises on violation."""
    n = len(matrix)
    for a in range(n):
        if not matrix[a][a]:
            raise InternalConsistencyError(f"order not reflexive at {labels[a]}")
    for a in range(n):
        for b in range(n):
            if a != b and matrix[a][b] and matrix[b][a]:
                raise InternalConsistencyError(
                    f"order not antisymmetric on {labels[a]}, {labels[b]}"
                )
    for a in range(n):
        for b in range(n):
            if not matrix[a][b]:
                continue
            for c in range(n):
                if matrix[b][c] and not matrix[a][c]:
                    raise InternalConsistencyError(
                        f"order not transitive via {labels[a]}, {labels[b]}, {labels[c]}"
                    )


def refines(coarser: list[list[bool]], finer: list[list[bool]]) -> bool:
    """True if every related pair of the first matrix is related in the second."""
    return all(
        not coarser[a][b] or finer[a][b]
        for a in range(len(coarser))
        for b in range(len(coarser))
    )


def restrict_relation(rel: OrderRelation, keep: list[int]) -> OrderRelation:
    """The relation induced on a subset of label positions."""
    labels = [rel.labels[a] for a in keep]

    def cut(matrix):
        return [[matrix[a][b] for b in keep] for a in keep]

    survives = [rel.survives[a] for a in keep] if rel.survives is not None else None
    return OrderRelation(
        labels,
        cut(rel.sq),
        cut(rel.unlhd),
        cut(rel.leq),
        survives=survives,
        meta=dict(rel.meta, restricted=True),
    )
