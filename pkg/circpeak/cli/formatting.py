import csv
import io
import json

from circpeak.core.types import CountTable
from circpeak.counting.closed_forms import CoeffTriangle
from circpeak.counting.paths import LatticePath, PathStep
from circpeak.utils.utils import format_rational, format_set

TABLE_FORMATS = ("text", "csv", "json")


def table_as_text(table: CountTable) -> str:
    """Entries grouped by |S|, in the layout of the published table."""
    lines = [f"cp_{table.n}(S)"]
    size = None
    for elements, count in table.sorted_items():
        if len(elements) != size:
            size = len(elements)
            lines.append(f"|S| = {size}")
        lines.append(f"  {format_set(elements)}  {count}")
    return "\n".join(lines)


def table_as_csv(table: CountTable) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["n", "S", "count"])
    for elements, count in table.sorted_items():
        writer.writerow([table.n, " ".join(str(e) for e in elements), count])
    return buffer.getvalue().rstrip("\n")


def table_as_json(table: CountTable) -> str:
    # counts are strings so consumers with fixed-width integers lose nothing
    payload = {
        "n": table.n,
        "entries": [{"set": list(elements), "count": str(count)} for elements, count in table.sorted_items()],
    }
    return json.dumps(payload, indent=2)


def format_table(table: CountTable, fmt: str = "text") -> str:
    if fmt == "csv":
        return table_as_csv(table)
    if fmt == "json":
        return table_as_json(table)
    return table_as_text(table)


def triangle_as_text(triangle: CoeffTriangle) -> str:
    cells = {(k, i): format_rational(value) for k, i, value in triangle.cells()}
    width = max((len(text) for text in cells.values()), default=1)
    label_width = len(f"k={triangle.k_max}")
    lines = []
    for k in sorted(triangle.rows):
        row = [cells[(k, i)].rjust(width) for i in range(triangle.first_index, triangle.first_index + len(triangle.row(k)))]
        lines.append(f"k={k}".ljust(label_width) + "  " + " ".join(row))
    return "\n".join(lines)


def triangle_as_csv(triangle: CoeffTriangle) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["k", "i", "value"])
    for k, i, value in triangle.cells():
        writer.writerow([k, i, format_rational(value)])
    return buffer.getvalue().rstrip("\n")


def triangle_as_json(triangle: CoeffTriangle) -> str:
    payload = {
        "kind": triangle.kind,
        "values": {f"{k},{i}": format_rational(value) for k, i, value in triangle.cells()},
    }
    return json.dumps(payload, indent=2)


def format_triangle(triangle: CoeffTriangle, fmt: str = "text") -> str:
    if fmt == "csv":
        return triangle_as_csv(triangle)
    if fmt == "json":
        return triangle_as_json(triangle)
    return triangle_as_text(triangle)


def format_path(p: LatticePath, steps: list[PathStep]) -> str:
    """HRH  H@0=2 R@0=2 H@1=4  -> 16"""
    total = steps[-1].running if steps else 1
    parts = [str(p)]
    if steps:
        parts.append(" ".join(f"{s.step}@{s.height}={s.weight}" for s in steps))
    parts.append(f"-> {total}")
    return "  ".join(parts)
