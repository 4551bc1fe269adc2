"""Brute-force validation layer: literal products in small twisted algebras.

Everything the fast path derives through character theory is recomputed here
from first principles: ideals by closure under composition, block idempotents
as explicit sums, the one-step criterion by multiplying every candidate
morphism between two idempotents, survival by an honest product with the
inner-diagonal sum.  Scope is deliberately tiny so nothing needs to be clever.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Any

from .bisetcat import BisetCategory, CatalogObject, GoursatSubgroup, kappa, star_compose
from .brauer import (
    all_diagrams,
    brauer_labels,
    build_brauer_order,
    class_count,
    class_idempotent,
    compose,
    identity_diagram,
    j_class_index,
    lines_in_class,
    perm_to_diagram,
)
from .catalog import build_category, builtin_group
from .errors import InternalConsistencyError
from .partitions import Partition, symmetric_character_value
from .permgroups import (
    Perm,
    Section,
    all_subgroups,
    are_isomorphic,
    direct_product,
    quotient_group,
)
from .relations import Label

ORACLE_MAX_GROUP_ORDER = 6
ORACLE_MAX_DEGREE = 4

_ZERO = Fraction(0)
_ONE = Fraction(1)


class OracleMismatch(InternalConsistencyError):
    """A disagreement between the oracle and the fast path, with evidence."""

    def __init__(self, message: str, counterexample: dict):
        super().__init__(message)
        self.counterexample = counterexample


# ------------------------------------------------------------------ elements


@dataclass(frozen=True)
class TwistedAlgebraElement:
    """Exact-rational combination of basis morphisms; no zero coefficients."""

    coeffs: tuple[tuple[int, Fraction], ...]

    @staticmethod
    def from_dict(data: dict[int, Fraction]) -> "TwistedAlgebraElement":
        return TwistedAlgebraElement(tuple(sorted((m, q) for m, q in data.items() if q)))

    @staticmethod
    def basis(m: int, coefficient: Fraction = _ONE) -> "TwistedAlgebraElement":
        return TwistedAlgebraElement.from_dict({m: Fraction(coefficient)})

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coeffs)

    def support(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs


ZERO_ELEMENT = TwistedAlgebraElement(())


def add(x: TwistedAlgebraElement, y: TwistedAlgebraElement) -> TwistedAlgebraElement:
    acc = x.as_dict()
    for m, q in y.coeffs:
        acc[m] = acc.get(m, _ZERO) + q
    return TwistedAlgebraElement.from_dict(acc)


def scale(q, x: TwistedAlgebraElement) -> TwistedAlgebraElement:
    q = Fraction(q)
    if not q:
        return ZERO_ELEMENT
    return TwistedAlgebraElement(tuple((m, q * c) for m, c in x.coeffs))


def multiply(
    table: "MorphismTable", x: TwistedAlgebraElement, y: TwistedAlgebraElement
) -> TwistedAlgebraElement:
    """Product in the twisted algebra; non-composable pairs contribute zero."""
    comp = table.compose_map
    acc: dict[int, Fraction] = {}
    for a, ca in x.coeffs:
        for b, cb in y.coeffs:
            hit = comp.get((a, b))
            if hit is None:
                continue
            c, twist = hit
            acc[c] = acc.get(c, _ZERO) + ca * cb * twist
    return TwistedAlgebraElement.from_dict(acc)


# --------------------------------------------------------------- the tables


@dataclass
class MorphismTable:
    """Indexed morphism basis of one small twisted algebra.

    `compose_map` sends a composable index pair to (product index, twist
    scalar); non-composable pairs are absent.  `anchors` lists the block
    idempotent morphisms in block order, `gamma` the local unit-group basis
    around each anchor, and `position` recovers an index from a morphism.
    """

    kind: str
    morphisms: list[Any]
    position: dict[Any, int]
    compose_map: dict[tuple[int, int], tuple[int, Fraction]]
    units: tuple[int, ...]
    anchors: tuple[int, ...]
    labels: list[Label]
    gamma: list[list[int]]
    category: BisetCategory | None = None
    degree: int | None = None
    delta: Fraction | None = None
    gamma_perms: list[list[Perm]] | None = None
    partition_of: dict[Label, Partition] | None = None

    @property
    def size(self) -> int:
        return len(self.morphisms)

    @property
    def blocks(self) -> int:
        return len(self.anchors)


def morphism_display(table: MorphismTable, m: int) -> str:
    mor = table.morphisms[m]
    if table.kind == "biset":
        pairs = ",".join(f"({g},{h})" for g, h in sorted(mor.pairs))
        return f"{mor.i + 1}<-{mor.j + 1}:{{{pairs}}}"
    return "pairs " + str(mor.pairs())


def enumerate_all_morphisms(objects: list[CatalogObject]) -> MorphismTable:
    """Index every pair-subgroup morphism over a tiny catalog."""
    for obj in objects:
        if obj.group.order > ORACLE_MAX_GROUP_ORDER:
            raise ValueError(
                f"oracle scope is limited to groups of order {ORACLE_MAX_GROUP_ORDER}, "
                f"got {obj.name!r} of order {obj.group.order}"
            )
    category = build_category(objects)
    n = category.n
    morphisms: list[GoursatSubgroup] = []
    position: dict[GoursatSubgroup, int] = {}
    for i in range(n):
        for j in range(n):
            D = direct_product(category.group(i), category.group(j))
            for sub in all_subgroups(D.group):
                mor = GoursatSubgroup(i, j, frozenset(D.unpair(x) for x in sub.members))
                position[mor] = len(morphisms)
                morphisms.append(mor)
    comp: dict[tuple[int, int], tuple[int, Fraction]] = {}
    for a, left in enumerate(morphisms):
        middle = category.group(left.j).order
        for b, right in enumerate(morphisms):
            if right.i != left.j:
                continue
            comp[(a, b)] = (position[star_compose(left, right)], kappa(left, right, middle))
    anchors = tuple(
        position[GoursatSubgroup(i, i, frozenset((g, g) for g in range(category.group(i).order)))]
        for i in range(n)
    )
    gamma = [
        [
            position[
                GoursatSubgroup(
                    i, i, frozenset((hom(g), g) for g in range(category.group(i).order))
                )
            ]
            for hom in category.aut_homs[i]
        ]
        for i in range(n)
    ]
    return MorphismTable(
        kind="biset",
        morphisms=morphisms,
        position=position,
        compose_map=comp,
        units=anchors,
        anchors=anchors,
        labels=list(category.labels),
        gamma=gamma,
        category=category,
    )


def enumerate_brauer_morphisms(n: int, delta=1) -> MorphismTable:
    """Index every degree-n chord diagram with composition and loop scalars."""
    if not 1 <= n <= ORACLE_MAX_DEGREE:
        raise ValueError(f"oracle scope is limited to degrees 1..{ORACLE_MAX_DEGREE}")
    delta = Fraction(delta)
    if delta == 0:
        raise ValueError("scale parameter must be nonzero")
    diagrams = all_diagrams(n)
    position = {diagram: pos for pos, diagram in enumerate(diagrams)}
    comp: dict[tuple[int, int], tuple[int, Fraction]] = {}
    for a, top in enumerate(diagrams):
        for b, bottom in enumerate(diagrams):
            result = compose(top, bottom)
            comp[(a, b)] = (position[result.diagram], delta**result.cycles)
    blocks = class_count(n)
    anchors = tuple(position[class_idempotent(n, i)] for i in range(1, blocks + 1))
    gamma_perms = [
        [Perm(images) for images in sorted(permutations(range(lines_in_class(n, i))))]
        for i in range(1, blocks + 1)
    ]
    gamma = [
        [position[perm_to_diagram(sigma, n, i)] for sigma in gamma_perms[i - 1]]
        for i in range(1, blocks + 1)
    ]
    labels, partition_of = brauer_labels(n)
    return MorphismTable(
        kind="brauer",
        morphisms=diagrams,
        position=position,
        compose_map=comp,
        units=(position[identity_diagram(n)],),
        anchors=anchors,
        labels=labels,
        gamma=gamma,
        degree=n,
        delta=delta,
        gamma_perms=gamma_perms,
        partition_of=partition_of,
    )


# ----------------------------------------------------------------- J-classes


@dataclass(frozen=True)
class JClassData:
    """J-classes with their containment order, from literal ideal closure."""

    classes: tuple[frozenset[int], ...]
    leq: tuple[tuple[bool, ...], ...]
    class_of: tuple[int, ...]


def two_sided_ideal(table: MorphismTable, s: int) -> frozenset[int]:
    """Indices reachable as x*s*y; the categorical units make this contain s."""
    comp = table.compose_map
    size = table.size
    lefts = {comp[(x, s)][0] for x in range(size) if (x, s) in comp}
    out: set[int] = set()
    for m in lefts:
        out.update(comp[(m, y)][0] for y in range(size) if (m, y) in comp)
    return frozenset(out)


def green_j_classes(table: MorphismTable) -> JClassData:
    """Partition the basis into J-classes by comparing literal ideals."""
    ideals = [two_sided_ideal(table, s) for s in range(table.size)]
    reps: list[int] = []
    members: list[list[int]] = []
    class_of = [0] * table.size
    for s in range(table.size):
        for k, rep in enumerate(reps):
            if ideals[rep] == ideals[s]:
                class_of[s] = k
                members[k].append(s)
                break
        else:
            class_of[s] = len(reps)
            reps.append(s)
            members.append([s])
    leq = tuple(tuple(ideals[a] <= ideals[b] for b in reps) for a in reps)
    return JClassData(tuple(frozenset(c) for c in members), leq, tuple(class_of))


def j_data(table: MorphismTable) -> JClassData:
    cached = getattr(table, "_jdata", None)
    if cached is None:
        cached = green_j_classes(table)
        table._jdata = cached
    return cached


def block_positions(table: MorphismTable) -> tuple[int, ...]:
    """1-based block position of every morphism, anchored at the idempotents."""
    cached = getattr(table, "_block_of", None)
    if cached is not None:
        return cached
    jd = j_data(table)
    pos_of_class: dict[int, int] = {}
    for p, anchor in enumerate(table.anchors, start=1):
        k = jd.class_of[anchor]
        if k in pos_of_class:
            raise InternalConsistencyError("two anchors share a J-class")
        pos_of_class[k] = p
    if len(pos_of_class) != len(jd.classes):
        raise InternalConsistencyError("a J-class contains no anchor")
    for k1, p1 in pos_of_class.items():
        for k2, p2 in pos_of_class.items():
            if jd.leq[k1][k2] and p1 > p2:
                raise InternalConsistencyError("block order does not refine ideal containment")
    block_of = tuple(pos_of_class[jd.class_of[m]] for m in range(table.size))
    table._block_of = block_of
    return block_of


def blocks_strictly_below(table: MorphismTable, lower: int, upper: int) -> bool:
    """Strict ideal containment between the blocks at two 1-based positions."""
    jd = j_data(table)
    ka = jd.class_of[table.anchors[lower - 1]]
    kb = jd.class_of[table.anchors[upper - 1]]
    return ka != kb and jd.leq[ka][kb]


# -------------------------------------------------------------- ideal filter


@dataclass(frozen=True)
class IdealFilter:
    """The span of every J-class at or below a cutoff block position."""

    cutoff: int
    member: frozenset[int]

    def contains_morphism(self, m: int) -> bool:
        return m in self.member

    def contains(self, element: TwistedAlgebraElement) -> bool:
        return all(m in self.member for m, _ in element.coeffs)


def ideal_filter(table: MorphismTable, cutoff: int) -> IdealFilter:
    block_of = block_positions(table)
    return IdealFilter(cutoff, frozenset(m for m in range(table.size) if block_of[m] <= cutoff))


def reduce_mod(element: TwistedAlgebraElement, fil: IdealFilter) -> TwistedAlgebraElement:
    """Truncate away every coefficient supported inside the filter."""
    return TwistedAlgebraElement(tuple((m, q) for m, q in element.coeffs if m not in fil.member))


def verify_filtration(table: MorphismTable) -> int:
    """Check that the cutoff ideals nest and absorb products on both sides."""
    checks = 0
    comp = table.compose_map
    previous: frozenset[int] = frozenset()
    for cutoff in range(table.blocks + 1):
        fil = ideal_filter(table, cutoff)
        if not previous <= fil.member:
            raise InternalConsistencyError(
                f"cutoff {cutoff} ideal does not contain its predecessor"
            )
        for m in fil.member:
            for x in range(table.size):
                for key in ((x, m), (m, x)):
                    hit = comp.get(key)
                    if hit is not None:
                        checks += 1
                        if hit[0] not in fil.member:
                            raise InternalConsistencyError(
                                f"cutoff {cutoff} ideal is not two-sided "
                                f"at {morphism_display(table, m)}"
                            )
        previous = fil.member
    if previous != frozenset(range(table.size)):
        raise InternalConsistencyError("top cutoff ideal misses part of the basis")
    return checks


# ------------------------------------------------------------- verification


def primed_idempotent(table: MorphismTable, m: int) -> TwistedAlgebraElement:
    """Rescale an idempotent morphism so it squares to itself in the algebra."""
    target, twist = table.compose_map[(m, m)]
    if target != m:
        raise InternalConsistencyError(f"{morphism_display(table, m)} is not idempotent")
    return TwistedAlgebraElement.basis(m, 1 / twist)


def one_element(table: MorphismTable) -> TwistedAlgebraElement:
    """The algebra identity: the sum of the rescaled categorical units."""
    total = ZERO_ELEMENT
    for u in table.units:
        total = add(total, primed_idempotent(table, u))
    return total


def verify_table(table: MorphismTable) -> int:
    """Associativity, the twist 2-cocycle identity, and unit neutrality."""
    comp = table.compose_map
    rights: dict[int, list[tuple[int, int, Fraction]]] = defaultdict(list)
    for (b, c), (bc, q2) in comp.items():
        rights[b].append((c, bc, q2))
    triples = 0
    for (a, b), (ab, q1) in comp.items():
        for c, bc, q2 in rights[b]:
            left = comp.get((ab, c))
            right = comp.get((a, bc))
            if left is None or right is None:
                raise InternalConsistencyError("composability is not associative")
            if left[0] != right[0]:
                raise InternalConsistencyError(
                    f"composition is not associative at {morphism_display(table, a)}, "
                    f"{morphism_display(table, b)}, {morphism_display(table, c)}"
                )
            if q1 * left[1] != q2 * right[1]:
                raise InternalConsistencyError(
                    f"twist cocycle identity fails at {morphism_display(table, a)}, "
                    f"{morphism_display(table, b)}, {morphism_display(table, c)}"
                )
            triples += 1
    one = one_element(table)
    for m in range(table.size):
        basis = TwistedAlgebraElement.basis(m)
        if multiply(table, one, basis) != basis or multiply(table, basis, one) != basis:
            raise InternalConsistencyError(f"unit fails at {morphism_display(table, m)}")
    return triples


def verify_green_classes(table: MorphismTable) -> int:
    """Match the literal J-data against the structural characterizations."""
    block_of = block_positions(table)
    jd = j_data(table)
    checks = 0
    if table.kind == "brauer":
        for m, diagram in enumerate(table.morphisms):
            if block_of[m] != j_class_index(diagram):
                raise InternalConsistencyError(
                    f"line-count class mismatch at {morphism_display(table, m)}"
                )
            checks += 1
    else:
        cat = table.category
        for m, mor in enumerate(table.morphisms):
            _, _, p2, k2, _ = mor.quintuple()
            section = Section(cat.group(mor.j), tuple(sorted(p2)), tuple(sorted(k2)))
            through, _ = quotient_group(section)
            if not are_isomorphic(through, cat.group(block_of[m] - 1)):
                raise InternalConsistencyError(
                    f"through-group mismatch at {morphism_display(table, m)}"
                )
            checks += 1
    anchor_pos = [block_of[next(iter(members))] for members in jd.classes]
    for k1 in range(len(jd.classes)):
        for k2 in range(len(jd.classes)):
            if table.kind == "brauer":
                expected = anchor_pos[k1] <= anchor_pos[k2]
            else:
                expected = table.category.j_leq(anchor_pos[k1] - 1, anchor_pos[k2] - 1)
            if jd.leq[k1][k2] != expected:
                raise InternalConsistencyError(
                    f"ideal containment disagrees with the structural order "
                    f"between blocks {anchor_pos[k1]} and {anchor_pos[k2]}"
                )
            checks += 1
    return checks


def block_idempotent(table: MorphismTable, label: Label) -> TwistedAlgebraElement:
    """Central idempotent cutting out one label's block, verified by squaring."""
    cache = getattr(table, "_fcache", None)
    if cache is None:
        cache = {}
        table._fcache = cache
    if label in cache:
        return cache[label]
    p = label.i
    terms: dict[int, Fraction] = {}
    if table.kind == "biset":
        cat = table.category
        A = cat.aut[p - 1]
        chars = cat.aut_table[p - 1]
        row = cat.label_rows[p - 1][label.r - 1]
        lead = Fraction(cat.group(p - 1).order * chars.degrees[row], A.order)
        for k, m in enumerate(table.gamma[p - 1]):
            value = chars.value(row, A.inv[k])
            if not value.is_rational():
                raise InternalConsistencyError("oracle scope requires rational characters")
            if value.rational_part():
                terms[m] = lead * value.rational_part()
    else:
        lam = table.partition_of[label]
        lines = lines_in_class(table.degree, p)
        lead = Fraction(symmetric_character_value(lam, (1,) * lines), factorial(lines))
        lead = lead * table.delta ** (p - class_count(table.degree))
        for sigma, m in zip(table.gamma_perms[p - 1], table.gamma[p - 1]):
            value = symmetric_character_value(lam, sigma.inverse().cycle_type())
            if value:
                terms[m] = lead * value
    f = TwistedAlgebraElement.from_dict(terms)
    if multiply(table, f, f) != f:
        raise InternalConsistencyError(f"block idempotent for {label} fails to square")
    cache[label] = f
    return f


def verify_block_idempotents(table: MorphismTable) -> int:
    """Orthogonality, centrality, and completeness inside each block."""
    checks = 0
    for p in range(1, table.blocks + 1):
        block_labels = [label for label in table.labels if label.i == p]
        parts = [block_idempotent(table, label) for label in block_labels]
        for x, fx in enumerate(parts):
            for y, fy in enumerate(parts):
                if x != y:
                    if not multiply(table, fx, fy).is_zero():
                        raise InternalConsistencyError(
                            f"block idempotents {block_labels[x]} and "
                            f"{block_labels[y]} overlap"
                        )
                    checks += 1
        total = ZERO_ELEMENT
        for fx in parts:
            total = add(total, fx)
        if total != primed_idempotent(table, table.anchors[p - 1]):
            raise InternalConsistencyError(f"block {p} idempotents do not sum to the unit")
        checks += 1
        for fx in parts:
            for m in table.gamma[p - 1]:
                basis = TwistedAlgebraElement.basis(m)
                if multiply(table, fx, basis) != multiply(table, basis, fx):
                    raise InternalConsistencyError(
                        f"a block idempotent at block {p} is not central"
                    )
                checks += 1
    return checks


# -------------------------------------------------------------- the criterion


def criterion_both_sides(table: MorphismTable, a: Label, b: Label) -> tuple[bool, bool]:
    """Evaluate the one-step product criterion literally, from both sides.

    The first component multiplies the upper idempotent, a candidate morphism,
    and the lower idempotent, then truncates below the lower block; the second
    swaps the outer factors.  The two must always agree.
    """
    if not blocks_strictly_below(table, b.i, a.i):
        raise ValueError("the second label's block must sit strictly below the first's")
    fa = block_idempotent(table, a)
    fb = block_idempotent(table, b)
    inside = ideal_filter(table, b.i)
    below = ideal_filter(table, b.i - 1)
    forward = backward = False
    for t in sorted(inside.member):
        basis = TwistedAlgebraElement.basis(t)
        if not forward:
            product = multiply(table, fa, multiply(table, basis, fb))
            if not reduce_mod(product, below).is_zero():
                forward = True
        if not backward:
            product = multiply(table, fb, multiply(table, basis, fa))
            if not reduce_mod(product, below).is_zero():
                backward = True
        if forward and backward:
            break
    return forward, backward


def oracle_sq_matrix(table: MorphismTable) -> list[list[bool]]:
    """The one-step matrix recomputed by literal products."""
    labels = table.labels
    size = len(labels)
    out = [[False] * size for _ in range(size)]
    for x, la in enumerate(labels):
        for y, lb in enumerate(labels):
            if x == y:
                out[x][y] = True
                continue
            if not blocks_strictly_below(table, lb.i, la.i):
                continue
            forward, backward = criterion_both_sides(table, la, lb)
            if forward != backward:
                raise OracleMismatch(
                    f"the two sides of the criterion disagree at {la}, {lb}",
                    {"labels": [[la.i, la.r], [lb.i, lb.r]], "sides": [forward, backward]},
                )
            out[x][y] = forward
    return out


# ------------------------------------------------------------------ survival


def epsilon_element(table: MorphismTable, p: int) -> TwistedAlgebraElement:
    """Sum of conjugation graphs at a block, one term per group element."""
    if table.kind != "biset":
        raise ValueError("the survival product is only defined for group catalogs")
    G = table.category.group(p - 1)
    terms: dict[int, Fraction] = {}
    for g in range(G.order):
        graph = GoursatSubgroup(
            p - 1, p - 1, frozenset((G.conjugate(g, x), x) for x in range(G.order))
        )
        m = table.position[graph]
        terms[m] = terms.get(m, _ZERO) + 1
    return TwistedAlgebraElement.from_dict(terms)


def epsilon_product_check(table: MorphismTable, label: Label) -> bool:
    """Whether the survival product with the block idempotent is nonzero."""
    f = block_idempotent(table, label)
    eps = epsilon_element(table, label.i)
    left = multiply(table, eps, f)
    right = multiply(table, f, eps)
    if left.is_zero() != right.is_zero():
        raise InternalConsistencyError(f"survival product is one-sided at {label}")
    return not left.is_zero()


# ----------------------------------------------------------------- the suite

_SUITE_CATALOGS = [["1"], ["1", "C2"], ["1", "C2", "C3"], ["1", "C2", "C3", "S3"]]
_SUITE_DEGREES = [1, 2, 3, 4]
_SUITE_DELTAS = [Fraction(1), Fraction(7)]


def _compare_one_step(table: MorphismTable, production: list[list[bool]]) -> dict:
    mine = oracle_sq_matrix(table)
    for x, la in enumerate(table.labels):
        for y, lb in enumerate(table.labels):
            if mine[x][y] != production[x][y]:
                raise OracleMismatch(
                    f"one-step disagreement at {la}, {lb}",
                    {
                        "labels": [[la.i, la.r], [lb.i, lb.r]],
                        "oracle": mine[x][y],
                        "production": production[x][y],
                    },
                )
    return {"labels": len(table.labels)}


def _compare_survival(table: MorphismTable) -> dict:
    for label in table.labels:
        mine = epsilon_product_check(table, label)
        expected = table.category.epsilon_survives(label)
        if mine != expected:
            raise OracleMismatch(
                f"survival disagreement at {label}",
                {"label": [label.i, label.r], "oracle": mine, "production": expected},
            )
    return {"labels": len(table.labels)}


def run_small_suite() -> dict:
    """Run the whole battery at full supported scope; JSON-ready report."""
    checks: list[dict] = []

    def attempt(name: str, instance: str, fn):
        entry: dict = {"check": name, "instance": instance}
        try:
            detail = fn()
        except (InternalConsistencyError, AssertionError) as exc:
            entry["status"] = "fail"
            entry["detail"] = str(exc)
            counterexample = getattr(exc, "counterexample", None)
            if counterexample is not None:
                entry["counterexample"] = counterexample
        else:
            entry["status"] = "pass"
            if detail is not None:
                entry["detail"] = detail
        checks.append(entry)

    for names in _SUITE_CATALOGS:
        instance = "biset:" + "+".join(names)
        objects = [CatalogObject(name, builtin_group(name)) for name in names]
        table = enumerate_all_morphisms(objects)
        production = table.category.build_order()
        attempt("compose-table", instance, lambda t=table: {"triples": verify_table(t)})
        attempt("green-classes", instance, lambda t=table: {"checks": verify_green_classes(t)})
        attempt("ideal-filtration", instance, lambda t=table: {"checks": verify_filtration(t)})
        attempt(
            "block-idempotents", instance, lambda t=table: {"checks": verify_block_idempotents(t)}
        )
        attempt(
            "one-step-matrix", instance, lambda t=table, sq=production.sq: _compare_one_step(t, sq)
        )
        attempt("survival", instance, lambda t=table: _compare_survival(t))
    for n in _SUITE_DEGREES:
        for delta in _SUITE_DELTAS:
            instance = f"brauer:n={n},delta={delta}"
            table = enumerate_brauer_morphisms(n, delta)
            production = build_brauer_order(n, delta)
            attempt("compose-table", instance, lambda t=table: {"triples": verify_table(t)})
            attempt(
                "green-classes", instance, lambda t=table: {"checks": verify_green_classes(t)}
            )
            attempt(
                "ideal-filtration", instance, lambda t=table: {"checks": verify_filtration(t)}
            )
            attempt(
                "block-idempotents",
                instance,
                lambda t=table: {"checks": verify_block_idempotents(t)},
            )
            attempt(
                "one-step-matrix",
                instance,
                lambda t=table, sq=production.sq: _compare_one_step(t, sq),
            )
    passed = all(entry["status"] == "pass" for entry in checks)
    return {"suite": "small", "passed": passed, "checks": checks}
