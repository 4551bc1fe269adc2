"""JSON payloads, CSV, and fixed-width table rendering for order relations."""

from __future__ import annotations

from .bisetcat import BisetCategory, condensed_order, verify_condensation_monotonic
from .catalog import builtin_group
from .chartables import character_table
from .partitions import Partition, symmetric_character_value
from .relations import Label, OrderRelation


def _matrix_01(matrix: list[list[bool]]) -> list[list[int]]:
    return [[1 if cell else 0 for cell in row] for row in matrix]


def _label_refs(labels: list[Label]) -> list[list[int]]:
    return [[label.i, label.r] for label in labels]


def biset_payload(category: BisetCategory, rel: OrderRelation) -> dict:
    """The full serializable result for a group-catalog order computation."""
    names = rel.meta["objects"]
    labels = [
        {
            "i": label.i,
            "r": label.r,
            "group": names[label.i - 1],
            "char_degree": category.char_degree(label),
            "survives": bool(rel.survives[pos]),
        }
        for pos, label in enumerate(rel.labels)
    ]
    report = verify_condensation_monotonic(rel)
    condensed = condensed_order(rel)
    return {
        "family": "biset",
        "objects": list(names),
        "labels": labels,
        "sq": _matrix_01(rel.sq),
        "unlhd": _matrix_01(rel.unlhd),
        "leq": _matrix_01(rel.leq),
        "surviving": _label_refs(condensed.labels),
        "condensed": {
            "labels": _label_refs(condensed.labels),
            "sq": _matrix_01(condensed.sq),
            "unlhd": _matrix_01(condensed.unlhd),
            "leq": _matrix_01(condensed.leq),
        },
        "monotonicity": {
            "unlhd_violations": [
                [[a.i, a.r], [b.i, b.r]] for a, b in report["unlhd_violations"]
            ],
            "leq_violations": [
                [[a.i, a.r], [b.i, b.r]] for a, b in report["leq_violations"]
            ],
        },
    }


def _witness_for_degree_six(rel: OrderRelation) -> dict:
    """The documented broken-transitivity triple on the 19-label relation."""
    partitions = rel.meta["partitions"]
    steps = {}
    for role, label in (("upper", Label(4, 5)), ("middle", Label(3, 2)), ("lower", Label(2, 1))):
        steps[role] = {"label": [label.i, label.r], "partition": list(partitions[label])}
    a = rel.index(Label(4, 5))
    m = rel.index(Label(3, 2))
    b = rel.index(Label(2, 1))
    steps["one_step"] = [bool(rel.sq[a][m]), bool(rel.sq[m][b]), bool(rel.sq[a][b])]
    steps["closure"] = bool(rel.unlhd[a][b])
    return steps


def brauer_payload(rel: OrderRelation) -> dict:
    """The full serializable result for a diagram-algebra order computation."""
    partitions = rel.meta["partitions"]
    labels = []
    for pos, label in enumerate(rel.labels):
        parts = list(partitions[label])
        lam = Partition(tuple(parts))
        labels.append(
            {
                "i": label.i,
                "r": label.r,
                "partition": parts,
                "char_degree": symmetric_character_value(lam, (1,) * lam.n),
                "survives": bool(rel.survives[pos]),
            }
        )
    payload = {
        "family": "brauer",
        "degree": rel.meta["degree"],
        "delta": rel.meta["delta"],
        "labels": labels,
        "sq": _matrix_01(rel.sq),
        "unlhd": _matrix_01(rel.unlhd),
        "leq": _matrix_01(rel.leq),
        "surviving": _label_refs(rel.labels),
    }
    if rel.meta["degree"] == 6:
        payload["non_transitive_witness"] = _witness_for_degree_six(rel)
    return payload


def relation_csv(payload: dict) -> str:
    """Full label cross product, one row per ordered pair."""
    lines = ["from_i,from_r,to_i,to_r,sq,unlhd,leq"]
    labels = payload["labels"]
    sq, unlhd, leq = payload["sq"], payload["unlhd"], payload["leq"]
    for a, la in enumerate(labels):
        for b, lb in enumerate(labels):
            lines.append(
                f"{la['i']},{la['r']},{lb['i']},{lb['r']},{sq[a][b]},{unlhd[a][b]},{leq[a][b]}"
            )
    return "\n".join(lines) + "\n"


def _column_texts(payload: dict) -> tuple[list[str], list[str]]:
    tops, bottoms = [], []
    for label in payload["labels"]:
        tops.append(label.get("group") or str(label["i"]))
        bottoms.append(f"{label['r']}{'*' if label['survives'] else ' '}")
    return tops, bottoms


def relation_table(payload: dict) -> str:
    """Fixed-width grid of the one-step relation.

    Rows are the lower labels, columns the upper labels, a 1 meaning the
    column label sits one step above the row label; '*' marks labels that
    survive condensation.
    """
    tops, bottoms = _column_texts(payload)
    width = max(2, max(len(t) for t in tops), max(len(b) for b in bottoms)) + 1
    stub = max(len(t) + len(b) + 1 for t, b in zip(tops, bottoms))
    sq = payload["sq"]
    size = len(payload["labels"])
    lines = [
        "one-step relation (rows: lower label, columns: upper label; '*' = survives)",
        "",
        " " * stub + " |" + "".join(t.rjust(width) for t in tops),
        " " * stub + " |" + "".join(b.rjust(width) for b in bottoms),
        "-" * stub + "-+" + "-" * (width * size),
    ]
    for y in range(size):
        head = f"{tops[y]} {bottoms[y]}".rjust(stub)
        cells = "".join(("1" if sq[x][y] else ".").rjust(width) for x in range(size))
        lines.append(head + " |" + cells)
    if payload["family"] == "brauer":
        lines.append("")
        for label in payload["labels"]:
            parts = ",".join(str(p) for p in label["partition"])
            lines.append(f"label ({label['i']},{label['r']}) carries partition ({parts})")
    return "\n".join(lines) + "\n"


def char_table_payload(name: str) -> dict:
    """A group's character table with exact cyclotomic coordinates."""
    group = builtin_group(name)
    table = character_table(group)
    classes = [
        {
            "size": size,
            "representative": group.element_names[rep],
            "element_order": group.element_orders[rep],
        }
        for size, rep in zip(table.classes.sizes, table.classes.representatives)
    ]
    rows = [
        [[str(q) for q in value.promote(table.conductor).coords] for value in row]
        for row in table.rows
    ]
    return {
        "group": name,
        "order": group.order,
        "conductor": table.conductor,
        "degrees": list(table.degrees),
        "classes": classes,
        "rows": rows,
    }
