"""Goursat morphisms, orbit criterion, and the nine-object catalog orders."""

import itertools
import random
from fractions import Fraction

import pytest

from qhorder.bisetcat import (
    BisetCategory,
    CatalogObject,
    GoursatSubgroup,
    condensed_order,
    kappa,
    star_compose,
    verify_condensation_monotonic,
)
from qhorder.catalog import (
    build_category,
    builtin_group,
    load_catalog_data,
    load_catalog_path,
    s4_family_objects,
)
from qhorder.errors import CatalogError
from qhorder.permgroups import CayleyGroup
from qhorder.relations import Label

# Expected one-step matrix on the nine-object catalog, frozen from an
# independent recomputation.  Each key (j, s) maps to the set of labels
# (i, r) one step above it, diagonal included.
EXPECTED_ONE_STEP = {
    (1, 1): {(1, 1), (2, 1), (3, 1), (4, 1), (5, 1), (5, 3), (6, 1), (6, 3),
             (7, 1), (7, 3), (7, 5), (8, 1), (8, 3), (8, 4), (9, 1), (9, 3), (9, 4)},
    (2, 1): {(2, 1), (4, 1), (5, 1), (5, 3), (6, 1), (6, 3),
             (7, 1), (7, 3), (7, 5), (8, 1), (8, 3), (9, 1), (9, 3), (9, 4)},
    (3, 1): {(3, 1), (6, 1), (8, 1), (8, 4), (9, 1), (9, 4)},
    (3, 2): {(3, 2), (6, 2), (8, 2), (8, 5), (9, 2), (9, 5)},
    (4, 1): {(4, 1), (7, 1), (9, 1), (9, 3)},
    (4, 2): {(4, 2), (7, 2), (9, 5)},
    (5, 1): {(5, 1), (7, 1), (7, 3), (8, 1), (9, 1), (9, 3)},
    (5, 2): {(5, 2), (7, 3), (7, 5), (8, 2), (9, 1), (9, 2), (9, 3), (9, 4)},
    (5, 3): {(5, 3), (7, 1), (7, 3), (7, 5), (8, 3), (9, 1), (9, 3), (9, 4)},
    (6, 1): {(6, 1), (9, 1), (9, 4)},
    (6, 2): {(6, 2), (9, 2), (9, 5)},
    (6, 3): {(6, 3), (9, 3), (9, 4), (9, 5)},
    (7, 1): {(7, 1), (9, 1), (9, 3)},
    (7, 2): {(7, 2), (9, 5)},
    (7, 3): {(7, 3), (9, 1), (9, 3)},
    (7, 4): {(7, 4), (9, 5)},
    (7, 5): {(7, 5), (9, 2), (9, 3), (9, 4)},
    (8, 1): {(8, 1), (9, 1)},
    (8, 2): {(8, 2), (9, 2)},
    (8, 3): {(8, 3), (9, 3)},
    (8, 4): {(8, 4), (9, 4)},
    (8, 5): {(8, 5), (9, 5)},
    (9, 1): {(9, 1)},
    (9, 2): {(9, 2)},
    (9, 3): {(9, 3)},
    (9, 4): {(9, 4)},
    (9, 5): {(9, 5)},
}

EXPECTED_SURVIVORS = {
    (1, 1), (2, 1), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (5, 2), (5, 3),
    (6, 1), (7, 1), (7, 3), (8, 1), (8, 2), (9, 1),
}


@pytest.fixture(scope="module")
def family():
    return build_category(s4_family_objects())


@pytest.fixture(scope="module")
def family_order(family):
    return family.build_order()


def _matrix_as_rows(labels, matrix):
    rows = {(lb.i, lb.r): set() for lb in labels}
    for a, la in enumerate(labels):
        for b, lb in enumerate(labels):
            if matrix[a][b]:
                rows[(lb.i, lb.r)].add((la.i, la.r))
    return rows


def test_label_layout(family):
    assert len(family.labels) == 27
    counts = [len(rows) for rows in family.label_rows]
    assert counts == [1, 1, 2, 2, 3, 3, 5, 5, 5]
    assert family.labels[0] == Label(1, 1)
    assert family.labels[-1] == Label(9, 5)


def test_one_step_matrix_matches_frozen_table(family_order):
    assert _matrix_as_rows(family_order.labels, family_order.sq) == EXPECTED_ONE_STEP


def test_no_block_descent_between_the_two_smallest_cyclic_objects(family):
    # the one extra cell sometimes claimed here would need the order-2 cyclic
    # group to be a subquotient of the order-3 one, which fails both ways
    assert not family.strict_below(1, 2)
    assert not family.strict_below(2, 1)
    assert (3, 1) not in EXPECTED_ONE_STEP[(2, 1)]


def test_survivor_pattern(family_order):
    got = {
        (lb.i, lb.r)
        for lb, alive in zip(family_order.labels, family_order.survives)
        if alive
    }
    assert got == EXPECTED_SURVIVORS


def test_mirrored_matrix_agrees(family, family_order):
    assert family.mirrored_sq_matrix() == family_order.sq


def test_self_duality_on_family(family, family_order):
    for label in family.labels:
        assert family.dual_label(label) == label


def test_duality_invariance_with_irrational_block():
    objects = [
        CatalogObject("1", builtin_group("1")),
        CatalogObject("C5", builtin_group("C5")),
    ]
    cat = build_category(objects)
    rel = cat.build_order()
    duals = [cat.dual_label(lb) for lb in rel.labels]
    assert sorted(duals) == sorted(rel.labels)
    assert any(d != lb for d, lb in zip(duals, rel.labels))
    pos = {lb: a for a, lb in enumerate(rel.labels)}
    for a, la in enumerate(rel.labels):
        for b, lb in enumerate(rel.labels):
            da, db = pos[duals[a]], pos[duals[b]]
            assert rel.sq[a][b] == rel.sq[da][db]
            assert rel.unlhd[a][b] == rel.unlhd[da][db]
    report = verify_condensation_monotonic(rel)
    assert report["unlhd_violations"] == []


ALL_C2_PAIR_SUBGROUPS = {
    (0, 0): [frozenset({(0, 0)})],
    (0, 1): [frozenset({(0, 0)}), frozenset({(0, 0), (0, 1)})],
    (1, 0): [frozenset({(0, 0)}), frozenset({(0, 0), (1, 0)})],
    (1, 1): [
        frozenset({(0, 0)}),
        frozenset({(0, 0), (1, 0)}),
        frozenset({(0, 0), (0, 1)}),
        frozenset({(0, 0), (1, 1)}),
        frozenset({(0, 0), (1, 0), (0, 1), (1, 1)}),
    ],
}


def _cocycle_identity_holds(L, M, N, middle_orders):
    oj, ok = middle_orders
    left = kappa(L, M, oj) * kappa(star_compose(L, M), N, ok)
    right = kappa(M, N, ok) * kappa(L, star_compose(M, N), oj)
    return left == right


def test_kappa_cocycle_exhaustive_on_two_object_catalog():
    orders = {0: 1, 1: 2}
    morphisms = [
        GoursatSubgroup(i, j, pairs)
        for (i, j), choices in ALL_C2_PAIR_SUBGROUPS.items()
        for pairs in choices
    ]
    assert len(morphisms) == 10
    checked = 0
    for L, M, N in itertools.product(morphisms, repeat=3):
        if L.j != M.i or M.j != N.i:
            continue
        assert _cocycle_identity_holds(L, M, N, (orders[L.j], orders[M.j]))
        checked += 1
    assert checked > 100


def _closed_pair_subgroup(Gi, Gj, i, j, gens):
    members = {(0, 0)} | set(gens)
    frontier = list(members)
    while frontier:
        g1, h1 = frontier.pop()
        for g2, h2 in list(members):
            prod = (Gi.mul[g1][g2], Gj.mul[h1][h2])
            if prod not in members:
                members.add(prod)
                frontier.append(prod)
    return GoursatSubgroup(i, j, frozenset(members))


def test_kappa_cocycle_on_random_triples(family):
    rng = random.Random(20250823)
    groups = [family.group(i) for i in range(9)]
    for _ in range(1000):
        chain = [rng.randrange(9) for _ in range(4)]
        morphs = []
        for i, j in zip(chain, chain[1:]):
            Gi, Gj = groups[i], groups[j]
            count = 1 if Gi.order * Gj.order > 64 else rng.randrange(1, 3)
            gens = [
                (rng.randrange(Gi.order), rng.randrange(Gj.order))
                for _ in range(count)
            ]
            morphs.append(_closed_pair_subgroup(Gi, Gj, i, j, gens))
        L, M, N = morphs
        assert _cocycle_identity_holds(
            L, M, N, (groups[L.j].order, groups[M.j].order)
        )
        value = kappa(L, M, groups[L.j].order)
        assert isinstance(value, Fraction) and 0 < value <= 1


def test_kappa_cocycle_on_connecting_chains(family):
    top = family.connecting_morphisms(8, 5)[:4]
    mid = family.connecting_morphisms(5, 1)[:4]
    bottom = family.connecting_morphisms(1, 0)
    assert bottom
    for L, M, N in itertools.product(top, mid, bottom):
        assert _cocycle_identity_holds(
            L, M, N, (family.group(5).order, family.group(1).order)
        )


def test_connecting_morphism_quintuples(family):
    for i, j in [(8, 5), (5, 1), (6, 3), (4, 1)]:
        Gi, Gj = family.group(i), family.group(j)
        morphisms = family.connecting_morphisms(i, j)
        assert morphisms
        for m in morphisms:
            assert m.is_subgroup(Gi, Gj)
            p1, k1, p2, k2, fibers = m.quintuple()
            assert p2 == frozenset(range(Gj.order))
            assert k2 == frozenset({0})
            assert len(m.pairs) == len(k1) * Gj.order
            assert all(len(f) == len(k1) for f in fibers.values())


def test_connecting_orbits_top_pair(family):
    morphisms = family.connecting_morphisms(8, 5)
    assert len(morphisms) == 30
    orbits = family.connecting_orbits(8, 5)
    assert len(orbits) == 2
    assert sorted(stab.order for _, stab in orbits) == [6, 24]


def test_orbit_decompositions_top_pair(family):
    by_stab = {
        stab.order: mults
        for (_, stab), mults in zip(
            family.connecting_orbits(8, 5), family.orbit_decompositions(8, 5)
        )
    }
    assert by_stab[6] == {
        (1, 1): 1, (2, 2): 1, (4, 1): 1, (5, 2): 1,
        (3, 3): 1, (4, 3): 1, (5, 3): 1,
    }
    assert by_stab[24] == {(1, 1): 1, (2, 2): 1, (3, 3): 1}
    degrees_i = [family.char_degree(Label(9, r)) for r in range(1, 6)]
    degrees_j = [family.char_degree(Label(6, s)) for s in range(1, 4)]
    for stab_order, mults in by_stab.items():
        total = sum(
            mult * degrees_i[r - 1] * degrees_j[s - 1]
            for (r, s), mult in mults.items()
        )
        assert total == (24 * 6) // stab_order


def test_one_step_implies_block_descent(family, family_order):
    labels = family_order.labels
    for a, la in enumerate(labels):
        for b, lb in enumerate(labels):
            if family_order.sq[a][b] and la != lb:
                assert family.strict_below(lb.i - 1, la.i - 1)


def test_non_transitive_triple(family_order):
    idx = family_order.index
    assert family_order.sq[idx(Label(9, 2))][idx(Label(7, 5))]
    assert family_order.sq[idx(Label(7, 5))][idx(Label(1, 1))]
    assert not family_order.sq[idx(Label(9, 2))][idx(Label(1, 1))]
    assert family_order.unlhd[idx(Label(9, 2))][idx(Label(1, 1))]


def test_alternating_block_over_smallest_cyclic_block(family_order):
    idx = family_order.index
    expected = {(1, 1), (4, 1), (2, 2), (5, 2)}
    for r in range(1, 6):
        for s in range(1, 3):
            one_step = family_order.sq[idx(Label(8, r))][idx(Label(3, s))]
            closed = family_order.unlhd[idx(Label(8, r))][idx(Label(3, s))]
            assert one_step == closed == ((r, s) in expected)
            assert family_order.leq[idx(Label(8, r))][idx(Label(3, s))]


def test_condensed_restriction_pairs(family_order):
    cond = condensed_order(family_order)
    assert len(cond.labels) == 15
    idx = cond.index
    related = {
        (r, s)
        for (r, a) in [(1, Label(8, 1)), (2, Label(8, 2))]
        for (s, b) in [(1, Label(3, 1)), (2, Label(3, 2))]
        if cond.unlhd[idx(a)][idx(b)]
    }
    assert related == {(1, 1), (2, 2)}
    for a in (Label(8, 1), Label(8, 2)):
        for b in (Label(3, 1), Label(3, 2)):
            assert cond.leq[idx(a)][idx(b)]


def test_condensation_monotonicity_report(family_order):
    report = verify_condensation_monotonic(family_order)
    assert report["unlhd_violations"] == []
    assert (Label(9, 1), Label(8, 3)) in report["leq_violations"]


def test_catalog_validation_rejects_bad_inputs():
    with pytest.raises(CatalogError):
        build_category(load_catalog_data({"groups": ["1", "C3", "S3"]}))
    with pytest.raises(CatalogError):
        BisetCategory(
            [
                CatalogObject("S4", builtin_group("S4")),
                CatalogObject("1", builtin_group("1")),
            ]
        )
    with pytest.raises(CatalogError):
        build_category(
            [
                CatalogObject("1", builtin_group("1")),
                CatalogObject("C2", builtin_group("C2")),
                CatalogObject("C2bis", builtin_group("C2")),
            ]
        )
    with pytest.raises(CatalogError):
        load_catalog_data({"wrong": []})
    with pytest.raises(CatalogError):
        load_catalog_data({"groups": ["Q8"]})


def test_catalog_loading():
    objects = load_catalog_path("builtin:s4family")
    assert [obj.name for obj in objects] == [
        "1", "C2", "C3", "C4", "V4", "S3", "D8", "A4", "S4"
    ]
    custom = load_catalog_data(
        {
            "groups": [
                "1",
                {"name": "flip", "generators": [[1, 0]]},
            ]
        }
    )
    assert [obj.group.order for obj in custom] == [1, 2]


def _relabeled(group: CayleyGroup, seed: int) -> CayleyGroup:
    rng = random.Random(seed)
    fwd = [0] + rng.sample(range(1, group.order), group.order - 1)
    back = [0] * group.order
    for old, new in enumerate(fwd):
        back[new] = old
    mul = [
        [fwd[group.mul[back[a]][back[b]]] for b in range(group.order)]
        for a in range(group.order)
    ]
    inv = [fwd[group.inv[back[a]]] for a in range(group.order)]
    names = [group.element_names[back[a]] for a in range(group.order)]
    orders = [group.element_orders[back[a]] for a in range(group.order)]
    return CayleyGroup(group.order, mul, inv, names, orders, None, group.name)


@pytest.mark.parametrize("names", [["1", "C2", "C3", "S3"], ["1", "C2", "C4", "V4", "D8"]])
def test_order_is_independent_of_element_labelling(names):
    base = build_category(
        [CatalogObject(n, builtin_group(n)) for n in names]
    ).build_order()
    shuffled = build_category(
        [
            CatalogObject(n, _relabeled(builtin_group(n), seed=31 + k))
            for k, n in enumerate(names)
        ]
    ).build_order()
    assert base.labels == shuffled.labels
    assert base.sq == shuffled.sq
    assert base.unlhd == shuffled.unlhd
    assert base.leq == shuffled.leq
    assert base.survives == shuffled.survives
