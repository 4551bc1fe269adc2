"""The category of subgroup-morphisms over a section-closed group catalog.

Morphisms between catalog objects G_i and G_j are subgroups of G_i x G_j,
stored as explicit pair sets.  Composition is relational composition; the
rational weight attached to a composable pair is the normalized overlap of
the middle kernels.  On top of this the module builds the two partial orders
on simple-module labels: the block-comparison order and the coarser order
generated by connecting-morphism orbits whose permutation modules contain a
given pair of characters.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .chartables import (
    CharacterTable,
    character_table,
    conjugate_row_index,
    kernel_contains,
)
from .cyclotomic import CycValue
from .errors import CatalogError, InternalConsistencyError
from .permgroups import (
    CayleyGroup,
    DirectProduct,
    GroupHom,
    Section,
    Subgroup,
    all_subgroups,
    are_isomorphic,
    automorphism_group,
    direct_product,
    isomorphisms,
    quotient_cosets,
    quotient_group,
    sections_of,
)
from .relations import Label, OrderRelation, assert_partial_order, refines, restrict_relation, transitive_closure


@dataclass(frozen=True)
class CatalogObject:
    name: str
    group: CayleyGroup


@dataclass(frozen=True)
class GoursatSubgroup:
    """A morphism from object j to object i: a subgroup of G_i x G_j as pairs."""

    i: int
    j: int
    pairs: frozenset[tuple[int, int]]

    def key(self) -> tuple:
        return tuple(sorted(self.pairs))

    def transpose(self) -> "GoursatSubgroup":
        return GoursatSubgroup(self.j, self.i, frozenset((h, g) for g, h in self.pairs))

    def is_subgroup(self, Gi: CayleyGroup, Gj: CayleyGroup) -> bool:
        if (0, 0) not in self.pairs:
            return False
        for g1, h1 in self.pairs:
            if (Gi.inv[g1], Gj.inv[h1]) not in self.pairs:
                return False
            for g2, h2 in self.pairs:
                if (Gi.mul[g1][g2], Gj.mul[h1][h2]) not in self.pairs:
                    return False
        return True

    def quintuple(self):
        """(p1, k1, p2, k2, fibers) with fibers mapping h in p2 to its g-set."""
        p1 = frozenset(g for g, _ in self.pairs)
        p2 = frozenset(h for _, h in self.pairs)
        k1 = frozenset(g for g, h in self.pairs if h == 0)
        k2 = frozenset(h for g, h in self.pairs if g == 0)
        fibers: dict[int, frozenset[int]] = {}
        for h in p2:
            fibers[h] = frozenset(g for g, hh in self.pairs if hh == h)
        return p1, k1, p2, k2, fibers


def star_compose(L: GoursatSubgroup, M: GoursatSubgroup) -> GoursatSubgroup:
    """Relational composite: pairs (g, k) joined through a shared middle h."""
    assert L.j == M.i, "morphisms not composable"
    by_mid: dict[int, list[int]] = {}
    for g, h in L.pairs:
        by_mid.setdefault(h, []).append(g)
    out = set()
    for h, k in M.pairs:
        for g in by_mid.get(h, ()):
            out.add((g, k))
    return GoursatSubgroup(L.i, M.j, frozenset(out))


def kappa(L: GoursatSubgroup, M: GoursatSubgroup, middle_order: int) -> Fraction:
    """Normalized middle-kernel overlap attached to a composable pair."""
    assert L.j == M.i
    k2_L = {h for g, h in L.pairs if g == 0}
    k1_M = {g for g, h in M.pairs if h == 0}
    return Fraction(len(k2_L & k1_M), middle_order)


def delta_morphism(i: int, images: tuple[int, ...]) -> GoursatSubgroup:
    """Graph of an automorphism of G_i, as an endo-morphism of object i."""
    return GoursatSubgroup(i, i, frozenset((images[g], g) for g in range(len(images))))


def act_morphism(
    L: GoursatSubgroup, alpha: tuple[int, ...], beta: tuple[int, ...]
) -> GoursatSubgroup:
    """Apply automorphisms (alpha, beta) of (G_i, G_j) componentwise."""
    return GoursatSubgroup(L.i, L.j, frozenset((alpha[g], beta[h]) for g, h in L.pairs))


@dataclass
class _SectionRecord:
    section: Section
    quotient: CayleyGroup
    cosets: list[tuple[int, ...]]
    coset_of: dict[int, int]
    target_obj: int  # catalog object isomorphic to the quotient


class BisetCategory:
    """Caches and order computations over a validated object catalog."""

    def __init__(self, objects: list[CatalogObject], label_order_fn=None):
        self.objects = objects
        self.n = len(objects)
        self._label_order_fn = label_order_fn
        self._validate_objects()
        self._classify_sections()
        self._prepare_characters()
        self._products: dict[tuple[int, int], DirectProduct] = {}
        self._iso_cache: dict[tuple[int, int], list[GroupHom]] = {}
        self._orbit_cache: dict[tuple[int, int], list[tuple[GoursatSubgroup, Subgroup]]] = {}

    # -------------------------------------------------------------- validation

    def _validate_objects(self):
        if not self.objects:
            raise CatalogError("catalog is empty")
        orders = [obj.group.order for obj in self.objects]
        if orders != sorted(orders):
            raise CatalogError(f"objects must be sorted by group order, got {orders}")
        for a in range(self.n):
            for b in range(a + 1, self.n):
                if are_isomorphic(self.objects[a].group, self.objects[b].group):
                    raise CatalogError(
                        f"objects {self.objects[a].name!r} and {self.objects[b].name!r} are isomorphic"
                    )

    def _classify_sections(self):
        self.subgroups: list[list[Subgroup]] = []
        self.section_records: list[list[_SectionRecord]] = []
        self.subquotients: list[frozenset[int]] = []
        for idx, obj in enumerate(self.objects):
            subs = all_subgroups(obj.group)
            self.subgroups.append(subs)
            records = []
            reachable = set()
            for section in sections_of(obj.group, subs):
                quotient, _ = quotient_group(section)
                target = self._find_object_isomorphic(quotient)
                if target is None:
                    raise CatalogError(
                        f"catalog is not section-closed: object {obj.name!r} has a "
                        f"section with quotient of order {quotient.order} matching no object"
                    )
                cosets, coset_of = quotient_cosets(section)
                records.append(_SectionRecord(section, quotient, cosets, coset_of, target))
                reachable.add(target)
            self.section_records.append(records)
            self.subquotients.append(frozenset(reachable))

    def _find_object_isomorphic(self, group: CayleyGroup) -> int | None:
        for idx, obj in enumerate(self.objects):
            if obj.group.order == group.order and are_isomorphic(obj.group, group):
                return idx
        return None

    def _prepare_characters(self):
        self.aut: list[CayleyGroup] = []
        self.aut_homs: list[list[GroupHom]] = []
        self.inner: list[Subgroup] = []
        self.aut_table: list[CharacterTable] = []
        self.label_rows: list[list[int]] = []
        for obj in self.objects:
            A, homs, inner = automorphism_group(obj.group)
            table = character_table(A)
            self.aut.append(A)
            self.aut_homs.append(homs)
            self.inner.append(inner)
            self.aut_table.append(table)
            if self._label_order_fn is not None:
                rows = self._label_order_fn(obj.group, table, inner)
                assert sorted(rows) == list(range(table.count))
            else:
                rows = list(range(table.count))
            self.label_rows.append(rows)
        self.labels: list[Label] = []
        self.label_index: dict[Label, int] = {}
        for i in range(self.n):
            for r in range(len(self.label_rows[i])):
                label = Label(i + 1, r + 1)
                self.label_index[label] = len(self.labels)
                self.labels.append(label)

    # ---------------------------------------------------------------- queries

    def group(self, i: int) -> CayleyGroup:
        return self.objects[i].group

    def strict_below(self, j: int, i: int) -> bool:
        """True if object j sits strictly below object i in the block order."""
        return i != j and j in self.subquotients[i]

    def j_leq(self, j: int, i: int) -> bool:
        return i == j or self.strict_below(j, i)

    def product(self, i: int, j: int) -> DirectProduct:
        key = (i, j)
        if key not in self._products:
            self._products[key] = direct_product(self.aut[i], self.aut[j])
        return self._products[key]

    def row_of_label(self, label: Label) -> int:
        """Character-table row behind a display label."""
        return self.label_rows[label.i - 1][label.r - 1]

    # ----------------------------------------------------- connecting morphisms

    def _isos_for(self, i: int, record_pos: int) -> list[GroupHom]:
        key = (i, record_pos)
        if key not in self._iso_cache:
            rec = self.section_records[i][record_pos]
            model = self.objects[rec.target_obj].group
            self._iso_cache[key] = isomorphisms(model, rec.quotient)
        return self._iso_cache[key]

    def connecting_morphisms(self, i: int, j: int) -> list[GoursatSubgroup]:
        """All class-j morphisms linking the class-i and class-j blocks.

        These are the subgroups of G_i x G_j projecting onto all of G_j with
        trivial right kernel and left section quotient isomorphic to G_j.
        """
        Gj = self.group(j)
        out = []
        for pos, rec in enumerate(self.section_records[i]):
            if rec.target_obj != j:
                continue
            for eta in self._isos_for(i, pos):
                pairs = frozenset(
                    (g, h) for h in range(Gj.order) for g in rec.cosets[eta(h)]
                )
                out.append(GoursatSubgroup(i, j, pairs))
        out.sort(key=lambda m: m.key())
        if len({m.pairs for m in out}) != len(out):
            raise InternalConsistencyError("duplicate connecting morphisms")
        return out

    def orbits_of_morphisms(
        self, i: int, j: int, morphisms: list[GoursatSubgroup]
    ) -> list[tuple[GoursatSubgroup, Subgroup]]:
        """Orbits of the automorphism pair action, with full stabilizers."""
        D = self.product(i, j)
        index = {m.pairs: pos for pos, m in enumerate(morphisms)}
        homs_i = [h.images for h in self.aut_homs[i]]
        homs_j = [h.images for h in self.aut_homs[j]]
        unseen = set(range(len(morphisms)))
        result = []
        while unseen:
            seed = min(unseen, key=lambda pos: morphisms[pos].key())
            orbit = {seed}
            frontier = [seed]
            while frontier:
                pos = frontier.pop()
                current = morphisms[pos]
                for alpha in homs_i:
                    moved = act_morphism(current, alpha, homs_j[0])
                    target = index.get(moved.pairs)
                    if target is None:
                        raise InternalConsistencyError("orbit left the morphism set")
                    if target not in orbit:
                        orbit.add(target)
                        frontier.append(target)
                for beta in homs_j:
                    moved = act_morphism(current, homs_i[0], beta)
                    target = index.get(moved.pairs)
                    if target is None:
                        raise InternalConsistencyError("orbit left the morphism set")
                    if target not in orbit:
                        orbit.add(target)
                        frontier.append(target)
            unseen -= orbit
            rep = min((morphisms[pos] for pos in orbit), key=lambda m: m.key())
            stab_members = []
            for a in range(self.aut[i].order):
                alpha = homs_i[a]
                for b in range(self.aut[j].order):
                    if act_morphism(rep, alpha, homs_j[b]).pairs == rep.pairs:
                        stab_members.append(D.pair(a, b))
            stab = Subgroup(D.group, tuple(sorted(stab_members)))
            if len(orbit) * stab.order != D.group.order:
                raise InternalConsistencyError("orbit-stabilizer mismatch")
            result.append((rep, stab))
        result.sort(key=lambda t: t[0].key())
        return result

    def connecting_orbits(self, i: int, j: int) -> list[tuple[GoursatSubgroup, Subgroup]]:
        key = (i, j)
        if key not in self._orbit_cache:
            self._orbit_cache[key] = self.orbits_of_morphisms(
                i, j, self.connecting_morphisms(i, j)
            )
        return self._orbit_cache[key]

    def orbit_decompositions(self, i: int, j: int) -> list[dict[tuple[int, int], int]]:
        """Constituent multiplicities of each connecting orbit's permutation
        character, keyed by display label pair (r, s); zeros omitted."""
        out = []
        for _, stab in self.connecting_orbits(i, j):
            mults: dict[tuple[int, int], int] = {}
            for r, row_r in enumerate(self.label_rows[i]):
                for s, row_s in enumerate(self.label_rows[j]):
                    m = self._pair_multiplicity(i, j, stab, row_r, row_s)
                    if m:
                        mults[(r + 1, s + 1)] = m
            out.append(mults)
        return out

    # ------------------------------------------------------------ the criterion

    def _pair_multiplicity(
        self, i: int, j: int, stab: Subgroup, row_i: int, row_j: int, mirrored: bool = False
    ) -> int:
        """Multiplicity of the character pair in the permutation module on the
        orbit, computed as a certified average over the stabilizer."""
        D = self.product(i, j)
        ti, tj = self.aut_table[i], self.aut_table[j]
        total = CycValue.zero(1)
        for m in stab.members:
            x, y = D.unpair(m)
            total = total + ti.value(row_i, x) * tj.value(row_j, y).conjugate()
        if not total.is_rational():
            raise InternalConsistencyError("irrational orbit multiplicity")
        q = total.rational_part() / stab.order
        if q.denominator != 1 or q < 0:
            raise InternalConsistencyError(f"orbit multiplicity {q} not a non-negative integer")
        return int(q)

    def sqsubset(self, a: Label, b: Label) -> bool:
        """One-step relation: block descent plus a shared orbit constituent."""
        if a == b:
            return True
        i, j = a.i - 1, b.i - 1
        if not self.strict_below(j, i):
            return False
        row_a = self.row_of_label(a)
        row_b = self.row_of_label(b)
        return any(
            self._pair_multiplicity(i, j, stab, row_a, row_b) > 0
            for _, stab in self.connecting_orbits(i, j)
        )

    def sq_matrix(self, jobs: int = 1) -> list[list[bool]]:
        size = len(self.labels)
        sq = [[a == b for b in range(size)] for a in range(size)]
        pairs = [
            (i, j)
            for i in range(self.n)
            for j in range(self.n)
            if self.strict_below(j, i)
        ]

        def work(pair):
            i, j = pair
            orbits = self.connecting_orbits(i, j)
            hits = []
            for r in range(len(self.label_rows[i])):
                row_r = self.label_rows[i][r]
                for s in range(len(self.label_rows[j])):
                    row_s = self.label_rows[j][s]
                    if any(
                        self._pair_multiplicity(i, j, stab, row_r, row_s) > 0
                        for _, stab in orbits
                    ):
                        hits.append((r, s))
            return i, j, hits

        if jobs > 1:
            with ThreadPoolExecutor(max_workers=jobs) as pool:
                results = list(pool.map(work, pairs))
        else:
            results = [work(p) for p in pairs]
        for i, j, hits in results:
            for r, s in hits:
                a = self.label_index[Label(i + 1, r + 1)]
                b = self.label_index[Label(j + 1, s + 1)]
                sq[a][b] = True
        return sq

    def mirrored_sq_matrix(self) -> list[list[bool]]:
        """The same relation evaluated through transposed morphisms.

        Exercises the dual side of the criterion; must agree with sq_matrix.
        """
        size = len(self.labels)
        sq = [[a == b for b in range(size)] for a in range(size)]
        for i in range(self.n):
            for j in range(self.n):
                if not self.strict_below(j, i):
                    continue
                transposed = sorted(
                    (m.transpose() for m in self.connecting_morphisms(i, j)),
                    key=lambda m: m.key(),
                )
                orbits = self.orbits_of_morphisms(j, i, transposed)
                for r in range(len(self.label_rows[i])):
                    row_r = self.label_rows[i][r]
                    for s in range(len(self.label_rows[j])):
                        row_s = self.label_rows[j][s]
                        hit = any(
                            self._pair_multiplicity(j, i, stab, row_s, row_r) > 0
                            for _, stab in orbits
                        )
                        if hit:
                            a = self.label_index[Label(i + 1, r + 1)]
                            b = self.label_index[Label(j + 1, s + 1)]
                            sq[a][b] = True
        return sq

    # ------------------------------------------------------------- the orders

    def build_order(self, jobs: int = 1) -> OrderRelation:
        sq = self.sq_matrix(jobs=jobs)
        unlhd = transitive_closure(sq)
        assert_partial_order(unlhd, self.labels)
        size = len(self.labels)
        leq = [[False] * size for _ in range(size)]
        for a, la in enumerate(self.labels):
            for b, lb in enumerate(self.labels):
                leq[a][b] = a == b or self.strict_below(lb.i - 1, la.i - 1)
        assert_partial_order(leq, self.labels)
        if not refines(unlhd, leq):
            raise InternalConsistencyError("coarse order fails to refine the block order")
        survives = [self.epsilon_survives(l) for l in self.labels]
        meta = {
            "objects": [obj.name for obj in self.objects],
            "label_counts": [len(rows) for rows in self.label_rows],
        }
        return OrderRelation(list(self.labels), sq, unlhd, leq, survives=survives, meta=meta)

    def epsilon_survives(self, label: Label) -> bool:
        """Whether the label survives condensation by the inner-sum idempotent.

        Holds exactly when the inner automorphisms lie in the character kernel.
        """
        i = label.i - 1
        return kernel_contains(
            self.aut_table[i], self.row_of_label(label), self.inner[i].members
        )

    def char_degree(self, label: Label) -> int:
        return self.aut_table[label.i - 1].degrees[self.row_of_label(label)]

    def dual_label(self, label: Label) -> Label:
        """Label of the complex-conjugate character in the same block."""
        i = label.i - 1
        conj_row = conjugate_row_index(self.aut_table[i], self.row_of_label(label))
        return Label(label.i, self.label_rows[i].index(conj_row) + 1)


def condensed_order(rel: OrderRelation) -> OrderRelation:
    """Restriction of the relation to the surviving labels."""
    assert rel.survives is not None
    keep = [a for a in range(rel.size) if rel.survives[a]]
    return restrict_relation(rel, keep)


def verify_condensation_monotonic(rel: OrderRelation) -> dict:
    """Check that survival is upward-closed for the coarse order.

    A coarse-order violation is an implementation bug and raises; the report
    lists every block-order violation, which can genuinely occur.
    """
    assert rel.survives is not None
    unlhd_violations = []
    leq_violations = []
    for a in range(rel.size):
        for b in range(rel.size):
            if a == b:
                continue
            if rel.survives[a] and not rel.survives[b]:
                if rel.unlhd[a][b]:
                    unlhd_violations.append((rel.labels[a], rel.labels[b]))
                if rel.leq[a][b]:
                    leq_violations.append((rel.labels[a], rel.labels[b]))
    if unlhd_violations:
        raise InternalConsistencyError(
            f"survival is not monotone for the coarse order: {unlhd_violations}"
        )
    return {
        "unlhd_violations": [],
        "leq_violations": leq_violations,
    }
