"""Map-level reports and their JSON, CSV and plain-text renderings.

All three renderings are deterministic: rows follow the P, Q, R class order
and floats are printed with ``repr`` so a JSON report parses back to equal
values.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, replace
from typing import Iterable, Sequence

from .flag_tracer import build_flag_complex, trace_class
from .hyperbolic_metrics import mirror_length
from .patterns import INFINITE, MapType, PatternReport, as_map_type, reports_from_table
from .presentations import DEFAULT_BUDGET, Presentation, enumerate_cosets
from .surface_families import genus_from_order

CSV_HEADER = ("family", "m", "n", "class", "link", "index", "pattern", "count", "length")


@dataclass(frozen=True)
class MapReport:
    family: str
    map_type: MapType
    group_order: int | None
    genus: int | None
    mirrors: tuple[PatternReport, ...]

    def to_dict(self) -> dict:
        return {
            "family": self.family,
            "type": [self.map_type.m, self.map_type.n],
            "group_order": self.group_order,
            "genus": self.genus,
            "mirrors": [
                {
                    "class": r.reflection_class,
                    "link": r.link,
                    "index": "inf" if not r.finite else int(r.link_index),
                    "pattern": r.notation,
                    "count": r.mirror_count,
                    "length": r.length,
                }
                for r in self.mirrors
            ],
        }

    @classmethod
    def from_dict(cls, d: dict) -> MapReport:
        mirrors = tuple(
            PatternReport(
                x["class"],
                x["link"],
                INFINITE if x["index"] == "inf" else int(x["index"]),
                x.get("count"),
                x.get("length"),
            )
            for x in d["mirrors"]
        )
        m, n = d["type"]
        return cls(d["family"], MapType(m, n), d.get("group_order"), d.get("genus"), mirrors)


def to_json(reports: Sequence[MapReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2) + "\n"


def from_json(text: str) -> list[MapReport]:
    data = json.loads(text)
    if isinstance(data, dict):
        data = [data]
    return [MapReport.from_dict(d) for d in data]


def _cell(x) -> str:
    return "" if x is None else repr(x) if isinstance(x, float) else str(x)


def to_csv(reports: Sequence[MapReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for rep in reports:
        for r in rep.mirrors:
            index = "inf" if not r.finite else int(r.link_index)
            w.writerow(
                [rep.family, rep.map_type.m, rep.map_type.n, r.reflection_class, r.link,
                 index, r.notation, _cell(r.mirror_count), _cell(r.length)]
            )
    return buf.getvalue()


def to_text(reports: Sequence[MapReport]) -> str:
    lines = []
    for rep in reports:
        head = f"{rep.family}  type {rep.map_type}"
        if rep.group_order is not None:
            head += f"  |Aut| = {rep.group_order}"
        if rep.genus is not None:
            head += f"  genus {rep.genus}"
        lines.append(head)
        for r in rep.mirrors:
            row = f"  {r.reflection_class}  {r.notation:<14}"
            if r.mirror_count is not None:
                row += f"  mirrors {r.mirror_count:<5}"
            if r.length is not None:
                row += f"  length {r.length:.10f}"
            lines.append(row.rstrip())
    return "\n".join(lines) + "\n"


RENDERERS = {"table": to_text, "csv": to_csv, "json": to_json}


def render(reports: Sequence[MapReport], fmt: str) -> str:
    try:
        return RENDERERS[fmt](reports)
    except KeyError:
        raise ValueError(f"unknown output format {fmt!r}") from None


def with_lengths(reports: Iterable[PatternReport], t: MapType) -> list[PatternReport]:
    """Attach hyperbolic mirror lengths when the type is hyperbolic."""
    reports = list(reports)
    if t.curvature != "hyperbolic":
        return reports
    return [
        replace(r, length=mirror_length(r.link, int(r.link_index), t)) if r.finite else r
        for r in reports
    ]


def build_map_report(
    name: str,
    p: Presentation,
    t: MapType | tuple[int, int],
    budget: int = DEFAULT_BUDGET,
    strategy: str = "hlt",
    mirror_counts: bool = True,
) -> MapReport:
    """Enumerate, read off link indices, and optionally count mirrors by tracing."""
    t = as_map_type(t)
    table = enumerate_cosets(p, (), budget, strategy)
    if table.index == 1:
        return MapReport(name, t, 1, None, ())
    reports = reports_from_table(table, t)
    if mirror_counts:
        c = build_flag_complex(p, t, budget, strategy)
        counts = {cls: trace_class(c, cls).mirror_count for cls in "PQR"}
        reports = [replace(r, mirror_count=counts[r.reflection_class]) for r in reports]
    return MapReport(
        name, t, table.index, genus_from_order(t, table.index), tuple(with_lengths(reports, t))
    )
