"""Finite groups with explicit multiplication tables.

Groups are stored as Cayley tables over element indices 0..n-1 with the
identity at index 0.  Elements usually come from an underlying permutation
representation, which is kept around for naming and for cycle-type queries.
All arithmetic is exact integer index manipulation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce


@dataclass(frozen=True)
class Perm:
    """A permutation of {0..degree-1}, stored by its image tuple."""

    images: tuple[int, ...]

    def __post_init__(self):
        assert sorted(self.images) == list(range(len(self.images))), self.images

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        # (p * q)(x) = p(q(x)): right factor acts first.
        assert self.degree == other.degree
        return Perm(tuple(self.images[y] for y in other.images))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for x, y in enumerate(self.images):
            inv[y] = x
        return Perm(tuple(inv))

    @staticmethod
    def identity(degree: int) -> "Perm":
        return Perm(tuple(range(degree)))

    @staticmethod
    def from_cycles(degree: int, cycles: list[tuple[int, ...]]) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for k, x in enumerate(cyc):
                images[x] = cyc[(k + 1) % len(cyc)]
        return Perm(tuple(images))

    def cycle_type(self) -> tuple[int, ...]:
        """Cycle lengths in weakly decreasing order, fixed points included."""
        seen = [False] * self.degree
        lengths = []
        for x in range(self.degree):
            if seen[x]:
                continue
            length = 0
            y = x
            while not seen[y]:
                seen[y] = True
                y = self.images[y]
                length += 1
            lengths.append(length)
        return tuple(sorted(lengths, reverse=True))

    def order(self) -> int:
        return reduce(_lcm, self.cycle_type(), 1)

    def cycles_string(self) -> str:
        """1-based disjoint cycle notation, 'e' for the identity."""
        seen = [False] * self.degree
        parts = []
        for x in range(self.degree):
            if seen[x] or self.images[x] == x:
                seen[x] = True
                continue
            cyc = []
            y = x
            while not seen[y]:
                seen[y] = True
                cyc.append(y + 1)
                y = self.images[y]
            parts.append("(" + ",".join(str(v) for v in cyc) + ")")
        return "".join(parts) if parts else "e"


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a * b // gcd(a, b)


@dataclass
class CayleyGroup:
    """A finite group given by its full multiplication table.

    Index 0 is always the identity.  `mul[a][b]` is the index of the product
    a*b, `inv[a]` the index of the inverse.
    """

    order: int
    mul: list[list[int]]
    inv: list[int]
    element_names: list[str]
    element_orders: list[int]
    perms: list[Perm] | None = None
    name: str = ""

    def __post_init__(self):
        assert self.order >= 1
        assert all(self.mul[0][b] == b and self.mul[b][0] == b for b in range(self.order))

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        result = 0
        while k:
            if k & 1:
                result = self.mul[result][a]
            a = self.mul[a][a]
            k >>= 1
        return result

    def conjugate(self, g: int, x: int) -> int:
        """g * x * g^-1."""
        return self.mul[self.mul[g][x]][self.inv[g]]

    def center(self) -> list[int]:
        return [
            z
            for z in range(self.order)
            if all(self.mul[z][g] == self.mul[g][z] for g in range(self.order))
        ]

    def exponent(self) -> int:
        return reduce(_lcm, self.element_orders, 1)

    def describe(self, g: int) -> str:
        return self.element_names[g]


@dataclass(frozen=True)
class Subgroup:
    """A subgroup of a CayleyGroup, stored as a sorted member index tuple."""

    parent: CayleyGroup
    members: tuple[int, ...]

    def __post_init__(self):
        assert self.members == tuple(sorted(self.members))
        assert self.members[0] == 0

    @property
    def order(self) -> int:
        return len(self.members)

    def contains(self, g: int) -> bool:
        return g in self._member_set()

    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def is_normal_in(self, other: "Subgroup") -> bool:
        """True if this subgroup is normalized by every member of `other`."""
        mine = self._member_set()
        G = self.parent
        return all(G.conjugate(p, k) in mine for p in other.members for k in self.members)


@dataclass(frozen=True)
class Section:
    """A pair K <| P of subgroups of a common parent group."""

    parent: CayleyGroup
    p: tuple[int, ...]
    k: tuple[int, ...]

    def __post_init__(self):
        assert set(self.k) <= set(self.p)

    def subgroup_p(self) -> Subgroup:
        return Subgroup(self.parent, self.p)

    def subgroup_k(self) -> Subgroup:
        return Subgroup(self.parent, self.k)


@dataclass(frozen=True)
class GroupHom:
    """A homomorphism between CayleyGroups, stored by its image tuple."""

    source: CayleyGroup
    target: CayleyGroup
    images: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.images[g]

    def is_homomorphism(self) -> bool:
        s, t = self.source, self.target
        f = self.images
        return all(
            f[s.mul[a][b]] == t.mul[f[a]][f[b]] for a in range(s.order) for b in range(s.order)
        )

    def is_isomorphism(self) -> bool:
        return (
            self.source.order == self.target.order
            and len(set(self.images)) == self.source.order
            and self.is_homomorphism()
        )

    def kernel_members(self) -> tuple[int, ...]:
        return tuple(g for g in range(self.source.order) if self.images[g] == 0)

    def compose(self, inner: "GroupHom") -> "GroupHom":
        """self o inner (apply `inner` first)."""
        assert inner.target is self.source or inner.target.order == self.source.order
        return GroupHom(inner.source, self.target, tuple(self.images[x] for x in inner.images))

    def inverse(self) -> "GroupHom":
        assert self.is_isomorphism()
        inv = [0] * self.source.order
        for g, h in enumerate(self.images):
            inv[h] = g
        return GroupHom(self.target, self.source, tuple(inv))


class GroupTooLargeError(Exception):
    pass


def group_from_generators(
    generators: list[Perm],
    name: str = "",
    max_size: int = 10000,
) -> CayleyGroup:
    """Closure of a permutation generating set into a CayleyGroup.

    Enumeration order is breadth-first from the identity with the generators
    applied in the given order, so indexing is deterministic.
    """
    assert generators, "need at least one generator (use the identity for the trivial group)"
    degree = generators[0].degree
    assert all(p.degree == degree for p in generators)
    identity = Perm.identity(degree)
    elements = [identity]
    index = {identity.images: 0}
    queue = [identity]
    while queue:
        current = queue.pop(0)
        for g in generators:
            nxt = current * g
            if nxt.images not in index:
                if len(elements) >= max_size:
                    raise GroupTooLargeError(f"closure exceeded {max_size} elements")
                index[nxt.images] = len(elements)
                elements.append(nxt)
                queue.append(nxt)
    n = len(elements)
    mul = [[index[(elements[a] * elements[b]).images] for b in range(n)] for a in range(n)]
    inv = [index[p.inverse().images] for p in elements]
    orders = [p.order() for p in elements]
    names = [p.cycles_string() for p in elements]
    return CayleyGroup(n, mul, inv, names, orders, perms=elements, name=name)


def trivial_group(name: str = "1") -> CayleyGroup:
    return group_from_generators([Perm.identity(1)], name=name)


def subgroup_closure(parent: CayleyGroup, gens: list[int]) -> Subgroup:
    """Subgroup generated by the given element indices."""
    members = {0}
    queue = [0]
    while queue:
        a = queue.pop()
        for g in gens:
            b = parent.mul[a][g]
            if b not in members:
                members.add(b)
                queue.append(b)
    return Subgroup(parent, tuple(sorted(members)))


def all_subgroups(G: CayleyGroup) -> list[Subgroup]:
    """Every subgroup, by layered closure starting from the cyclic ones.

    Deterministic output: sorted by (order, member tuple).
    """
    cyclic = {subgroup_closure(G, [g]).members for g in range(G.order)}
    known: set[tuple[int, ...]] = set(cyclic)
    frontier = set(cyclic)
    while frontier:
        fresh: set[tuple[int, ...]] = set()
        for members in frontier:
            have = set(members)
            for g in range(G.order):
                if g in have:
                    continue
                grown = subgroup_closure(G, list(members) + [g]).members
                if grown not in known:
                    fresh.add(grown)
        known |= fresh
        frontier = fresh
    return [Subgroup(G, m) for m in sorted(known, key=lambda m: (len(m), m))]


def quotient_cosets(section: Section) -> tuple[list[tuple[int, ...]], dict[int, int]]:
    """Cosets gK for g in P, identity coset first then by minimal member.

    Returns (list of member tuples, map from P-member to coset index).
    """
    G = section.parent
    kset = list(section.k)
    seen: dict[int, int] = {}
    cosets: list[tuple[int, ...]] = []
    for g in sorted(section.p):
        if g in seen:
            continue
        members = tuple(sorted(G.mul[g][k] for k in kset))
        idx = len(cosets)
        cosets.append(members)
        for m in members:
            seen[m] = idx
    assert cosets[0][0] == 0  # identity coset is K itself
    return cosets, seen


def subgroup_as_group(sub: Subgroup, name: str = "") -> tuple[CayleyGroup, GroupHom]:
    """Re-index a subgroup as its own CayleyGroup.

    Returns the group plus the embedding into the parent.
    """
    parent = sub.parent
    members = list(sub.members)
    pos = {m: i for i, m in enumerate(members)}
    n = len(members)
    mul = [[pos[parent.mul[a][b]] for b in members] for a in members]
    inv = [pos[parent.inv[a]] for a in members]
    names = [parent.element_names[a] for a in members]
    orders = [parent.element_orders[a] for a in members]
    perms = [parent.perms[a] for a in members] if parent.perms else None
    group = CayleyGroup(n, mul, inv, names, orders, perms=perms, name=name)
    return group, GroupHom(group, parent, tuple(members))


def quotient_group(section: Section, name: str = "") -> tuple[CayleyGroup, GroupHom]:
    """The quotient P/K of a section, with the projection hom from P.

    The projection's source is P re-indexed as its own group.
    """
    assert section.subgroup_k().is_normal_in(section.subgroup_p())
    cosets, coset_of = quotient_cosets(section)
    G = section.parent
    reps = [c[0] for c in cosets]
    n = len(cosets)
    mul = [[coset_of[G.mul[a][b]] for b in reps] for a in reps]
    inv = [coset_of[G.inv[a]] for a in reps]
    names = [G.element_names[a] + "K" if i else "K" for i, a in enumerate(reps)]
    orders = []
    for q in range(n):
        k, acc = 1, q
        while acc != 0:
            acc = mul[acc][q]
            k += 1
        orders.append(k)
    quotient = CayleyGroup(n, mul, inv, names, orders, name=name)
    p_group, embed = subgroup_as_group(section.subgroup_p())
    proj = GroupHom(p_group, quotient, tuple(coset_of[embed(i)] for i in range(p_group.order)))
    return quotient, proj


def _greedy_generators(G: CayleyGroup) -> list[int]:
    gens: list[int] = []
    closed = {0}
    while len(closed) < G.order:
        g = min(x for x in range(G.order) if x not in closed)
        gens.append(g)
        closed = set(subgroup_closure(G, gens).members)
    return gens


def _extend_hom(
    G: CayleyGroup, H: CayleyGroup, gens: list[int], gen_images: list[int]
) -> tuple[int, ...] | None:
    """Grow a generator assignment to a full hom image tuple, or None on conflict."""
    images: dict[int, int] = {0: 0}
    for g, h in zip(gens, gen_images):
        if images.get(g, h) != h:
            return None
        images[g] = h
    queue = list(images)
    while queue:
        a = queue.pop()
        for g, h in zip(gens, gen_images):
            b = G.mul[a][g]
            y = H.mul[images[a]][h]
            if b in images:
                if images[b] != y:
                    return None
            else:
                images[b] = y
                queue.append(b)
    if len(images) != G.order:
        return None  # gens do not generate G; caller guarantees they do
    return tuple(images[g] for g in range(G.order))


def isomorphisms(G: CayleyGroup, H: CayleyGroup) -> list[GroupHom]:
    """All isomorphisms G -> H by order-profile-pruned backtracking."""
    if G.order != H.order or sorted(G.element_orders) != sorted(H.element_orders):
        return []
    gens = _greedy_generators(G) if G.order > 1 else []
    if not gens:
        return [GroupHom(G, H, (0,))]
    by_order: dict[int, list[int]] = {}
    for h in range(H.order):
        by_order.setdefault(H.element_orders[h], []).append(h)
    found: list[GroupHom] = []

    def recurse(k: int, chosen: list[int]):
        if k == len(gens):
            images = _extend_hom(G, H, gens, chosen)
            if images is not None and len(set(images)) == G.order:
                found.append(GroupHom(G, H, images))
            return
        for h in by_order.get(G.element_orders[gens[k]], []):
            partial = _partial_consistent(G, H, gens[: k + 1], chosen + [h])
            if partial:
                recurse(k + 1, chosen + [h])

    recurse(0, [])
    return found


def _partial_consistent(G, H, gens, gen_images) -> bool:
    """Check the subgroup generated so far maps consistently (cheap prune)."""
    images: dict[int, int] = {0: 0}
    queue = [0]
    while queue:
        a = queue.pop()
        for g, h in zip(gens, gen_images):
            b = G.mul[a][g]
            y = H.mul[images[a]][h]
            if b in images:
                if images[b] != y:
                    return False
            else:
                images[b] = y
                queue.append(b)
    return len(set(images.values())) == len(images)


def are_isomorphic(G: CayleyGroup, H: CayleyGroup) -> bool:
    if G.order != H.order or sorted(G.element_orders) != sorted(H.element_orders):
        return False
    gens = _greedy_generators(G) if G.order > 1 else []
    if not gens:
        return True
    by_order: dict[int, list[int]] = {}
    for h in range(H.order):
        by_order.setdefault(H.element_orders[h], []).append(h)

    def recurse(k: int, chosen: list[int]) -> bool:
        if k == len(gens):
            images = _extend_hom(G, H, gens, chosen)
            return images is not None and len(set(images)) == G.order
        for h in by_order.get(G.element_orders[gens[k]], []):
            if _partial_consistent(G, H, gens[: k + 1], chosen + [h]):
                if recurse(k + 1, chosen + [h]):
                    return True
        return False

    return recurse(0, [])


def automorphism_group(G: CayleyGroup, name: str = "") -> tuple[CayleyGroup, list[GroupHom], Subgroup]:
    """(Aut(G) as a CayleyGroup, its elements as homs, the inner subgroup).

    Automorphism k of the returned group acts on G through homs[k]; the
    `perms` field carries the same action, so subgroup machinery applies.
    """
    autos = isomorphisms(G, G)
    identity_images = tuple(range(G.order))
    keyed = sorted(a.images for a in autos)
    keyed.remove(identity_images)
    ordered = [identity_images] + keyed
    pos = {img: i for i, img in enumerate(ordered)}
    n = len(ordered)
    mul = [
        [pos[tuple(a[b[x]] for x in range(G.order))] for b in ordered]
        for a in ordered
    ]
    inv = []
    for img in ordered:
        back = [0] * G.order
        for x, y in enumerate(img):
            back[y] = x
        inv.append(pos[tuple(back)])
    perms = [Perm(img) for img in ordered]
    orders = [p.order() for p in perms]
    names = [f"aut{idx}" for idx in range(n)]
    A = CayleyGroup(n, mul, inv, names, orders, perms=perms, name=name or f"Aut({G.name})")
    homs = [GroupHom(G, G, img) for img in ordered]
    inner_indices = sorted(
        {pos[tuple(G.conjugate(g, x) for x in range(G.order))] for g in range(G.order)}
    )
    inner = Subgroup(A, tuple(inner_indices))
    return A, homs, inner


@dataclass(frozen=True)
class DirectProduct:
    """G x H with pairing (g, h) -> g*|H| + h and the four structure homs."""

    group: CayleyGroup
    left: CayleyGroup
    right: CayleyGroup
    p1: GroupHom = field(repr=False)
    p2: GroupHom = field(repr=False)
    e1: GroupHom = field(repr=False)
    e2: GroupHom = field(repr=False)

    def pair(self, g: int, h: int) -> int:
        return g * self.right.order + h

    def unpair(self, x: int) -> tuple[int, int]:
        return divmod(x, self.right.order)


def direct_product(G: CayleyGroup, H: CayleyGroup, name: str = "") -> DirectProduct:
    nG, nH = G.order, H.order
    n = nG * nH
    mul = [[0] * n for _ in range(n)]
    for g1 in range(nG):
        for h1 in range(nH):
            a = g1 * nH + h1
            row = mul[a]
            grow = G.mul[g1]
            hrow = H.mul[h1]
            for g2 in range(nG):
                base = grow[g2] * nH
                off = g2 * nH
                for h2 in range(nH):
                    row[off + h2] = base + hrow[h2]
    inv = [G.inv[a // nH] * nH + H.inv[a % nH] for a in range(n)]
    names = [f"({G.element_names[a // nH]},{H.element_names[a % nH]})" for a in range(n)]
    orders = [_lcm(G.element_orders[a // nH], H.element_orders[a % nH]) for a in range(n)]
    P = CayleyGroup(n, mul, inv, names, orders, name=name or f"{G.name}x{H.name}")
    p1 = GroupHom(P, G, tuple(a // nH for a in range(n)))
    p2 = GroupHom(P, H, tuple(a % nH for a in range(n)))
    e1 = GroupHom(G, P, tuple(g * nH for g in range(nG)))
    e2 = GroupHom(H, P, tuple(range(nH)))
    return DirectProduct(P, G, H, p1, p2, e1, e2)


def sections_of(G: CayleyGroup, subgroups: list[Subgroup] | None = None) -> list[Section]:
    """All sections K <| P <= G, deterministically ordered."""
    subs = subgroups if subgroups is not None else all_subgroups(G)
    result = []
    for P in subs:
        pset = set(P.members)
        for K in subs:
            if not set(K.members) <= pset:
                continue
            if K.is_normal_in(P):
                result.append(Section(G, P.members, K.members))
    result.sort(key=lambda s: (len(s.p), s.p, len(s.k), s.k))
    return result


@dataclass
class SectionWithIsos:
    """A section P/K of some group together with all isos from a fixed model."""

    section: Section
    quotient: CayleyGroup
    cosets: list[tuple[int, ...]]
    coset_of: dict[int, int]
    isos: list[GroupHom]  # model group -> quotient


def sections_with_quotient_iso(
    G: CayleyGroup,
    model: CayleyGroup,
    subgroups: list[Subgroup] | None = None,
) -> list[SectionWithIsos]:
    """All sections of G whose quotient is isomorphic to `model`, with every iso."""
    out = []
    for section in sections_of(G, subgroups):
        if len(section.p) != len(section.k) * model.order:
            continue
        if not section.subgroup_k().is_normal_in(section.subgroup_p()):
            continue
        quotient, _ = quotient_group(section)
        isos = isomorphisms(model, quotient)
        if isos:
            cosets, coset_of = quotient_cosets(section)
            out.append(SectionWithIsos(section, quotient, cosets, coset_of, isos))
    return out
