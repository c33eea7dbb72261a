import csv
import io
from importlib.resources import files
from pathlib import Path

from circpeak.exceptions import ParseError

GoldenTable = dict[int, dict[tuple[int, ...], int]]


def parse_table_csv(text: str) -> GoldenTable:
    """Reads `n,S,count` rows, S as space-separated integers (empty for the empty set)."""
    table: GoldenTable = {}
    reader = csv.DictReader(io.StringIO(text))
    for line, row in enumerate(reader, start=2):
        try:
            n = int(row["n"])
            elements = tuple(sorted(int(e) for e in (row["S"] or "").split()))
            count = int(row["count"])
        except (KeyError, TypeError, ValueError):
            raise ParseError(value=row, message=f"Bad fixture row on line {line}: {row}")
        table.setdefault(n, {})[elements] = count
    return table


def load_golden_table(path: str | Path | None = None) -> GoldenTable:
    """The published values of cp_n(S), 3 <= n <= 8; a path overrides the shipped fixture."""
    if path is None:
        text = files("circpeak").joinpath("data/golden_table.csv").read_text(encoding="utf-8")
    else:
        text = Path(path).read_text(encoding="utf-8")
    return parse_table_csv(text)
