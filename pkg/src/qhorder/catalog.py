"""Builtin group catalogs, JSON catalog loading, display label conventions."""

from __future__ import annotations

import json

from .bisetcat import BisetCategory, CatalogObject
from .chartables import CharacterTable
from .errors import CatalogError
from .permgroups import (
    CayleyGroup,
    Perm,
    Subgroup,
    are_isomorphic,
    group_from_generators,
    trivial_group,
)

BUILTIN_FAMILY = ["1", "C2", "C3", "C4", "V4", "S3", "D8", "A4", "S4"]


def builtin_group(name: str) -> CayleyGroup:
    if name == "1":
        return trivial_group()
    if name == "C2":
        return group_from_generators([Perm.from_cycles(2, [(0, 1)])], name="C2")
    if name == "C3":
        return group_from_generators([Perm.from_cycles(3, [(0, 1, 2)])], name="C3")
    if name == "C4":
        return group_from_generators([Perm.from_cycles(4, [(0, 1, 2, 3)])], name="C4")
    if name == "V4":
        return group_from_generators(
            [Perm.from_cycles(4, [(0, 1), (2, 3)]), Perm.from_cycles(4, [(0, 2), (1, 3)])],
            name="V4",
        )
    if name == "S3":
        return group_from_generators(
            [Perm.from_cycles(3, [(0, 1, 2)]), Perm.from_cycles(3, [(0, 1)])], name="S3"
        )
    if name == "D8":
        return group_from_generators(
            [Perm.from_cycles(4, [(0, 1, 2, 3)]), Perm.from_cycles(4, [(0, 2)])], name="D8"
        )
    if name == "A4":
        return group_from_generators(
            [Perm.from_cycles(4, [(0, 1, 2)]), Perm.from_cycles(4, [(0, 1), (2, 3)])],
            name="A4",
        )
    if name == "S4":
        return group_from_generators(
            [Perm.from_cycles(4, [(0, 1, 2, 3)]), Perm.from_cycles(4, [(0, 1)])], name="S4"
        )
    if name == "C5":
        return group_from_generators([Perm.from_cycles(5, [(0, 1, 2, 3, 4)])], name="C5")
    raise CatalogError(f"unknown builtin group {name!r}")


def s4_family_objects() -> list[CatalogObject]:
    """The nine-object section-closed catalog headed by S4."""
    return [CatalogObject(name, builtin_group(name)) for name in BUILTIN_FAMILY]


def load_catalog_data(data: dict) -> list[CatalogObject]:
    """Parse {"groups": [...]} where entries are builtin names or
    {"name": ..., "generators": [image-array, ...]} permutation presentations."""
    if not isinstance(data, dict) or "groups" not in data:
        raise CatalogError('catalog JSON must be an object with a "groups" list')
    objects = []
    for entry in data["groups"]:
        if isinstance(entry, str):
            objects.append(CatalogObject(entry, builtin_group(entry)))
        elif isinstance(entry, dict):
            name = entry.get("name")
            gens = entry.get("generators")
            if not name or not isinstance(gens, list) or not gens:
                raise CatalogError(f"bad custom group entry: {entry!r}")
            perms = [Perm(tuple(img)) for img in gens]
            objects.append(CatalogObject(name, group_from_generators(perms, name=name)))
        else:
            raise CatalogError(f"bad catalog entry: {entry!r}")
    objects.sort(key=lambda obj: obj.group.order)  # stable: ties keep input order
    return objects


def load_catalog_path(path: str) -> list[CatalogObject]:
    if path == "builtin:s4family":
        return s4_family_objects()
    with open(path, "r", encoding="utf-8") as fh:
        return load_catalog_data(json.load(fh))


# --------------------------------------------------------- label conventions


_FAMILY_MODELS: list[tuple[str, CayleyGroup]] | None = None


def _family_models() -> list[tuple[str, CayleyGroup]]:
    global _FAMILY_MODELS
    if _FAMILY_MODELS is None:
        _FAMILY_MODELS = [(name, builtin_group(name)) for name in BUILTIN_FAMILY]
    return _FAMILY_MODELS


def _trivial_row(table: CharacterTable) -> int:
    return next(r for r in range(table.count) if all(v == 1 for v in table.rows[r]))


def conventional_label_order(
    group: CayleyGroup, table: CharacterTable, inner: Subgroup
) -> list[int]:
    """Display order of automorphism characters for catalog objects.

    Objects isomorphic to a member of the builtin family get that family's
    published ordering, characterized structurally; anything else keeps the
    canonical table order.
    """
    matched = next(
        (
            name
            for name, model in _family_models()
            if model.order == group.order and are_isomorphic(model, group)
        ),
        None,
    )
    if matched is None:
        return list(range(table.count))
    if matched in ("1", "C2"):
        return [0]
    if matched in ("C3", "C4"):
        t = _trivial_row(table)
        return [t, 1 - t]
    if matched in ("V4", "S3"):
        t = _trivial_row(table)
        deg2 = next(r for r in range(3) if table.degrees[r] == 2)
        sgn = next(r for r in range(3) if r not in (t, deg2))
        return [t, sgn, deg2]
    if matched == "D8":
        t = _trivial_row(table)
        deg2 = next(r for r in range(5) if table.degrees[r] == 2)
        linears = [r for r in range(5) if table.degrees[r] == 1 and r != t]
        A = table.group

        def kernel_members(r):
            return [g for g in range(A.order) if table.value(r, g) == 1]

        cyclic_kernel = next(
            r for r in linears if any(A.element_orders[g] == 4 for g in kernel_members(r))
        )
        inner_set = set(inner.members)
        inner_kernel = next(r for r in linears if set(kernel_members(r)) == inner_set)
        remaining = next(r for r in linears if r not in (cyclic_kernel, inner_kernel))
        return [t, cyclic_kernel, inner_kernel, remaining, deg2]
    if matched in ("A4", "S4"):
        t = _trivial_row(table)
        sgn = next(r for r in range(5) if table.degrees[r] == 1 and r != t)
        deg2 = next(r for r in range(5) if table.degrees[r] == 2)
        deg3 = [r for r in range(5) if table.degrees[r] == 3]
        # the reflection class of the automorphism group: order-2 elements, size 6
        refl = next(
            l
            for l in range(table.classes.count)
            if table.classes.sizes[l] == 6
            and table.group.element_orders[table.classes.representatives[l]] == 2
        )
        natural = next(r for r in deg3 if table.rows[r][refl] == 1)
        twisted = next(r for r in deg3 if r != natural)
        return [t, sgn, deg2, natural, twisted]
    raise CatalogError(f"no label convention for {matched!r}")


def build_category(objects: list[CatalogObject]) -> BisetCategory:
    return BisetCategory(objects, label_order_fn=conventional_label_order)
