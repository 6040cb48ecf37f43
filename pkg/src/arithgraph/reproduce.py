"""Reproduction checks against the golden tables shipped with the package.

Each table id maps to a list of named checks comparing freshly computed
enumerations/transform outputs to the data under data/golden/.  A report is a
list of CheckResult rows; the CLI renders one PASS/FAIL line per row.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib.resources import files
from math import comb

from .errors import UnknownTable
from .structures import (
    ArithStructure,
    d_from_r,
    enumerate_certified,
    r1_histogram,
)
from .graphs import make_graph
from .transforms import cycle_to_wheel_divisor, zn_orbit

TABLE_IDS = (
    "c3-table",
    "w3-from-c3",
    "w3-167",
    "star-counts",
    "cycle-counts",
    "path-counts",
    "r1-examples",
    "orbit-example",
)


@dataclass(frozen=True)
class CheckResult:
    table: str
    name: str
    passed: bool
    detail: str = ""


def _golden(name: str) -> dict:
    path = files("arithgraph").joinpath(f"data/golden/{name}.json")
    return json.loads(path.read_text(encoding="utf-8"))


def _check_c3_table() -> list[CheckResult]:
    golden = _golden("c3_table")
    table = enumerate_certified("cycle", 3)
    by_class: dict[tuple[int, ...], int] = {}
    for s in table.structures:
        key = tuple(sorted(s.d, reverse=True))
        by_class[key] = by_class.get(key, 0) + 1
    out = []
    for row in golden["rows"]:
        d, r, count = tuple(row["d"]), tuple(row["r"]), row["count"]
        key = tuple(sorted(d, reverse=True))
        present = ArithStructure(d, r) in table.structures
        out.append(
            CheckResult(
                "c3-table",
                f"class d~{d} size {count}",
                present and by_class.get(key) == count,
                f"observed size {by_class.get(key)}",
            )
        )
    out.append(
        CheckResult(
            "c3-table",
            f"total {golden['total']}",
            len(table) == golden["total"] and len(by_class) == len(golden["rows"]),
            f"observed {len(table)} structures in {len(by_class)} classes",
        )
    )
    return out


def _check_w3_from_c3() -> list[CheckResult]:
    golden = _golden("w3_from_c3")
    out = []
    for row in golden["rows"]:
        got = cycle_to_wheel_divisor(row["cycle_d"], row["cycle_r"])
        want = ArithStructure(tuple(row["d"]), tuple(row["r"]))
        out.append(
            CheckResult(
                "w3-from-c3",
                f"{tuple(row['cycle_d'])} -> d={want.d}",
                got == want,
                f"got d={got.d}, r={got.r}",
            )
        )
    return out


def _check_w3_167() -> list[CheckResult]:
    golden = _golden("w3_167")
    table = enumerate_certified("wheel", 3)
    known = set(table.structures)
    from itertools import permutations

    expanded: set[ArithStructure] = set()
    rows_ok = []
    for row in golden["rows"]:
        d, r = tuple(row["d"]), tuple(row["r"])
        orbit = {
            ArithStructure(tuple(d[i] for i in p), tuple(r[i] for i in p))
            for p in permutations(range(4))
        }
        rows_ok.append(
            CheckResult(
                "w3-167",
                f"orbit of d={d} (size {row['count']})",
                len(orbit) == row["count"] and orbit <= known,
                f"orbit size {len(orbit)}, all present: {orbit <= known}",
            )
        )
        expanded |= orbit
    lo, hi = golden["lower_bound"], golden["upper_bound"]
    rows_ok.append(
        CheckResult(
            "w3-167",
            f"{lo} tabulated structures, bracket {lo} <= |set| <= {hi}",
            len(expanded) == lo and lo <= len(table) <= hi,
            f"expanded {len(expanded)}, enumerated {len(table)}",
        )
    )
    return rows_ok


def _check_counts(table_id: str, golden_name: str, family: str) -> list[CheckResult]:
    golden = _golden(golden_name)
    out = []
    for n_str, want in golden["counts"].items():
        n = int(n_str)
        got = len(enumerate_certified(family, n))
        out.append(
            CheckResult(
                table_id, f"{family}:{n} count {want}", got == want, f"observed {got}"
            )
        )
    return out


def _check_cycle_counts() -> list[CheckResult]:
    out = _check_counts("cycle-counts", "cycle_counts", "cycle")
    # unit-entry refinement for one representative size
    n = 4
    hist = r1_histogram(enumerate_certified("cycle", n))
    want = {k: comb(2 * n - k - 1, n - k) for k in range(1, n + 1)}
    out.append(
        CheckResult(
            "cycle-counts",
            f"cycle:{n} unit-entry histogram",
            hist == want,
            f"observed {hist}",
        )
    )
    return out


def _check_r1_examples() -> list[CheckResult]:
    golden = _golden("r1_examples")
    out = []
    for row in golden["vectors"]:
        n, r = row["n"], tuple(row["r"])
        wheel = make_graph("wheel", n)
        out.append(
            CheckResult(
                "r1-examples",
                f"wheel:{n} r={r}",
                d_from_r(wheel.adjacency, r) is not None,
                "verifies" if d_from_r(wheel.adjacency, r) else "does not verify",
            )
        )
    hist = r1_histogram(enumerate_certified("wheel", 3))
    want = golden["w3_structures_with_four_units"]
    out.append(
        CheckResult(
            "r1-examples",
            f"wheel:3 structures with four unit entries = {want}",
            hist.get(4, 0) == want,
            f"observed {hist.get(4, 0)}",
        )
    )
    return out


def _check_orbit_example() -> list[CheckResult]:
    golden = _golden("orbit_example")
    got = zn_orbit(golden["n"], tuple(golden["r"]))
    want = tuple(sorted(tuple(v) for v in golden["orbit"]))
    return [
        CheckResult(
            "orbit-example",
            f"orbit of {tuple(golden['r'])}",
            got == want,
            f"got {got}",
        )
    ]


_CHECKS = {
    "c3-table": _check_c3_table,
    "w3-from-c3": _check_w3_from_c3,
    "w3-167": _check_w3_167,
    "star-counts": lambda: _check_counts("star-counts", "star_counts", "star"),
    "cycle-counts": _check_cycle_counts,
    "path-counts": lambda: _check_counts("path-counts", "path_counts", "path"),
    "r1-examples": _check_r1_examples,
    "orbit-example": _check_orbit_example,
}


def reproduce(table_id: str) -> list[CheckResult]:
    """Run the reproduction checks for one golden table."""
    try:
        runner = _CHECKS[table_id]
    except KeyError:
        raise UnknownTable(
            f"unknown table {table_id!r}; available: {', '.join(TABLE_IDS)}"
        ) from None
    return runner()


def render_report(results: list[CheckResult]) -> str:
    lines = []
    for res in results:
        tag = "PASS" if res.passed else "FAIL"
        detail = f"  ({res.detail})" if res.detail else ""
        lines.append(f"{tag}  {res.table}: {res.name}{detail}")
    failed = sum(1 for r in results if not r.passed)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines)
