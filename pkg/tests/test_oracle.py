"""Literal small-scale algebra products against the character-theoretic path."""

from fractions import Fraction

import pytest

from qhorder.bisetcat import CatalogObject, GoursatSubgroup
from qhorder.brauer import build_brauer_order
from qhorder.catalog import builtin_group, s4_family_objects
from qhorder.errors import InternalConsistencyError
from qhorder.oracle import (
    IdealFilter,
    OracleMismatch,
    TwistedAlgebraElement,
    ZERO_ELEMENT,
    add,
    block_idempotent,
    block_positions,
    blocks_strictly_below,
    criterion_both_sides,
    enumerate_all_morphisms,
    enumerate_brauer_morphisms,
    epsilon_element,
    epsilon_product_check,
    green_j_classes,
    ideal_filter,
    multiply,
    one_element,
    oracle_sq_matrix,
    primed_idempotent,
    reduce_mod,
    scale,
    two_sided_ideal,
    verify_block_idempotents,
    verify_filtration,
    verify_green_classes,
    verify_table,
    _compare_one_step,
)
from qhorder.relations import Label


def _objects(names):
    return [CatalogObject(name, builtin_group(name)) for name in names]


@pytest.fixture(scope="module")
def c2_table():
    return enumerate_all_morphisms(_objects(["1", "C2"]))


@pytest.fixture(scope="module")
def c3_table():
    return enumerate_all_morphisms(_objects(["1", "C2", "C3"]))


@pytest.fixture(scope="module")
def brauer3():
    return enumerate_brauer_morphisms(3, 7)


@pytest.fixture(scope="module")
def brauer4():
    return enumerate_brauer_morphisms(4, 1)


# ----------------------------------------------------------------- elements


def test_element_construction_drops_zeros():
    elem = TwistedAlgebraElement.from_dict({3: Fraction(0), 1: Fraction(2, 3)})
    assert elem.coeffs == ((1, Fraction(2, 3)),)
    assert elem.support() == (1,)
    assert not elem.is_zero()
    assert ZERO_ELEMENT.is_zero()


def test_element_arithmetic():
    x = TwistedAlgebraElement.from_dict({0: Fraction(1), 2: Fraction(-1, 2)})
    y = TwistedAlgebraElement.from_dict({2: Fraction(1, 2), 5: Fraction(3)})
    assert add(x, y).as_dict() == {0: Fraction(1), 5: Fraction(3)}
    assert scale(2, x).as_dict() == {0: Fraction(2), 2: Fraction(-1)}
    assert scale(0, x) == ZERO_ELEMENT


# ------------------------------------------------------------ morphism tables


def test_trivial_catalog_is_a_single_idempotent():
    table = enumerate_all_morphisms(_objects(["1"]))
    assert table.size == 1
    assert table.units == table.anchors == (0,)
    assert len(green_j_classes(table).classes) == 1
    assert oracle_sq_matrix(table) == [[True]]


def test_two_object_catalog_has_ten_morphisms(c2_table):
    assert c2_table.size == 10
    slots = {}
    for mor in c2_table.morphisms:
        slots[(mor.i, mor.j)] = slots.get((mor.i, mor.j), 0) + 1
    assert slots == {(0, 0): 1, (0, 1): 2, (1, 0): 2, (1, 1): 5}


def test_scope_guards():
    with pytest.raises(ValueError):
        enumerate_all_morphisms(s4_family_objects())
    with pytest.raises(ValueError):
        enumerate_brauer_morphisms(5)
    with pytest.raises(ValueError):
        enumerate_brauer_morphisms(3, 0)


def test_composition_closed_and_associative(c2_table, c3_table):
    assert verify_table(c2_table) == 338
    assert verify_table(c3_table) > 0


def test_brauer_tables_verify_exhaustively(brauer3):
    assert verify_table(brauer3) == 15**3
    small = enumerate_brauer_morphisms(2, Fraction(3, 2))
    assert verify_table(small) == 27


def test_unit_element_is_the_primed_unit_sum(c3_table, brauer3):
    one = one_element(c3_table)
    assert one.support() == tuple(sorted(c3_table.units))
    spot = add(TwistedAlgebraElement.basis(5), TwistedAlgebraElement.basis(11, Fraction(7, 3)))
    assert multiply(c3_table, one, spot) == spot
    assert multiply(c3_table, spot, one) == spot
    assert one_element(brauer3).as_dict() == {brauer3.units[0]: Fraction(1)}


# ----------------------------------------------------------------- J-classes


def test_ideals_by_closure_in_the_two_object_catalog(c2_table):
    diagonal = c2_table.anchors[1]
    assert len(two_sided_ideal(c2_table, diagonal)) == 10
    assert len(two_sided_ideal(c2_table, c2_table.anchors[0])) == 9
    jd = green_j_classes(c2_table)
    assert sorted(len(c) for c in jd.classes) == [1, 9]
    assert jd.classes[jd.class_of[diagonal]] == frozenset({diagonal})


def test_green_classes_match_section_structure(c3_table):
    jd = green_j_classes(c3_table)
    assert sorted(len(c) for c in jd.classes) == [1, 2, 25]
    assert verify_green_classes(c3_table) == c3_table.size + len(jd.classes) ** 2
    assert blocks_strictly_below(c3_table, 1, 3)
    assert blocks_strictly_below(c3_table, 1, 2)
    assert not blocks_strictly_below(c3_table, 2, 3)
    assert not blocks_strictly_below(c3_table, 3, 2)
    assert not blocks_strictly_below(c3_table, 3, 3)


def test_green_classes_are_line_counts(brauer4):
    jd = green_j_classes(brauer4)
    assert sorted(len(c) for c in jd.classes) == [9, 24, 72]
    assert verify_green_classes(brauer4) == brauer4.size + len(jd.classes) ** 2
    positions = block_positions(brauer4)
    assert positions[brauer4.anchors[0]] == 1
    assert positions[brauer4.units[0]] == 3


def test_ideal_filters_nest_and_absorb(c3_table, brauer4):
    assert [len(ideal_filter(c3_table, c).member) for c in range(4)] == [0, 25, 26, 28]
    assert [len(ideal_filter(brauer4, c).member) for c in range(4)] == [0, 9, 81, 105]
    assert verify_filtration(c3_table) > 0
    assert verify_filtration(brauer4) > 0


def test_filter_membership_and_truncation(brauer3):
    low = ideal_filter(brauer3, 1)
    lines1 = next(m for m in range(brauer3.size) if block_positions(brauer3)[m] == 1)
    elem = TwistedAlgebraElement.basis(lines1)
    assert low.contains_morphism(lines1)
    assert low.contains(elem)
    assert reduce_mod(elem, low).is_zero()
    assert reduce_mod(elem, ideal_filter(brauer3, 0)) == elem
    assert not IdealFilter(0, frozenset()).contains(elem)


# ------------------------------------------------------------- idempotents


def test_block_idempotents_on_small_automorphism_groups(c3_table):
    assert block_idempotent(c3_table, Label(1, 1)) == primed_idempotent(
        c3_table, c3_table.anchors[0]
    )
    assert block_idempotent(c3_table, Label(2, 1)) == primed_idempotent(
        c3_table, c3_table.anchors[1]
    )
    twisted = block_idempotent(c3_table, Label(3, 2))
    assert set(twisted.support()) == set(c3_table.gamma[2])
    assert verify_block_idempotents(c3_table) == 11


def test_sign_isotypic_idempotent_for_two_lines(brauer4):
    f = block_idempotent(brauer4, Label(2, 2))
    identity2, swapped = brauer4.gamma[1]
    assert f.as_dict() == {identity2: Fraction(1, 2), swapped: Fraction(-1, 2)}
    scaled = enumerate_brauer_morphisms(4, 7)
    g = block_idempotent(scaled, Label(2, 2))
    assert g.as_dict() == {identity2: Fraction(1, 14), swapped: Fraction(-1, 14)}


def test_block_idempotents_complete_and_central(brauer4):
    assert verify_block_idempotents(brauer4) > 0


# ------------------------------------------------------------- the criterion


def test_criterion_sides_always_agree(c3_table):
    for la in c3_table.labels:
        for lb in c3_table.labels:
            if la != lb and blocks_strictly_below(c3_table, lb.i, la.i):
                forward, backward = criterion_both_sides(c3_table, la, lb)
                assert forward == backward
    assert criterion_both_sides(c3_table, Label(3, 1), Label(1, 1)) == (True, True)
    assert criterion_both_sides(c3_table, Label(3, 2), Label(1, 1)) == (False, False)
    with pytest.raises(ValueError):
        criterion_both_sides(c3_table, Label(2, 1), Label(3, 1))


def test_one_step_matrix_matches_production_biset(c2_table, c3_table):
    assert oracle_sq_matrix(c2_table) == [[True, False], [True, True]]
    assert oracle_sq_matrix(c2_table) == c2_table.category.build_order().sq
    expected = [
        [True, False, False, False],
        [True, True, False, False],
        [True, False, True, False],
        [False, False, False, True],
    ]
    mine = oracle_sq_matrix(c3_table)
    assert mine == expected
    assert mine == c3_table.category.build_order().sq


def test_one_step_matrix_matches_production_brauer(brauer3, brauer4):
    assert oracle_sq_matrix(brauer3) == build_brauer_order(3, 7).sq
    assert oracle_sq_matrix(brauer4) == build_brauer_order(4, 1).sq
    scaled = enumerate_brauer_morphisms(3, Fraction(3, 2))
    assert oracle_sq_matrix(scaled) == oracle_sq_matrix(brauer3)


def test_mismatch_reports_carry_counterexamples(c2_table):
    doctored = [[True, True], [True, True]]
    with pytest.raises(OracleMismatch) as info:
        _compare_one_step(c2_table, doctored)
    assert info.value.counterexample == {
        "labels": [[1, 1], [2, 1]],
        "oracle": False,
        "production": True,
    }


# ------------------------------------------------------------------ survival


def test_survival_products(c2_table, c3_table):
    eps = epsilon_element(c2_table, 2)
    assert eps.as_dict() == {c2_table.anchors[1]: Fraction(2)}
    for table in (c2_table, c3_table):
        for label in table.labels:
            assert epsilon_product_check(table, label)
            assert table.category.epsilon_survives(label)
    with pytest.raises(ValueError):
        epsilon_element(enumerate_brauer_morphisms(2), 1)


def test_nonabelian_blocks_can_lose_labels():
    table = enumerate_all_morphisms(_objects(["1", "C2", "C3", "S3"]))
    results = {
        (label.i, label.r): epsilon_product_check(table, label) for label in table.labels
    }
    assert results == {
        (1, 1): True,
        (2, 1): True,
        (3, 1): True,
        (3, 2): True,
        (4, 1): True,
        (4, 2): False,
        (4, 3): False,
    }
    for label in table.labels:
        assert results[(label.i, label.r)] == table.category.epsilon_survives(label)
    assert oracle_sq_matrix(table) == table.category.build_order().sq
