"""OEIS b-files, JSON array dumps, table rendering and stripped-dump lookup."""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .engine import OutputArray, Row
from .sequence import describe

__all__ = [
    "export_bfile",
    "parse_bfile",
    "array_to_json",
    "array_from_json",
    "render_table",
    "parse_table",
    "StrippedParseError",
    "OeisStrippedIndex",
    "lookup_stripped",
]


def export_bfile(terms, offset: int = 1) -> str:
    return "".join(f"{offset + i} {t}\n" for i, t in enumerate(terms))


def parse_bfile(text: str) -> tuple[list[int], int]:
    """Return ``(terms, offset)``; comment and blank lines are skipped."""
    terms, offset = [], None
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"b-file line {lineno}: expected 'index value'")
        index, value = int(parts[0]), int(parts[1])
        if offset is None:
            offset = index
        elif index != offset + len(terms):
            raise ValueError(f"b-file line {lineno}: index {index} out of sequence")
        terms.append(value)
    return terms, 1 if offset is None else offset


def array_to_json(array: OutputArray, width_cap: int = 1000, indent=None) -> str:
    """Serialize with integers as decimal strings.

    Rows no wider than ``width_cap`` are fully expanded. Wider rows keep
    their explicit part and carry the tail as ``{"value", "length"}`` in the
    parallel ``plateau`` list.
    """
    rows, plateaus = [], []
    for row in array.rows:
        if row.width <= width_cap:
            rows.append([str(v) for v in row.values()])
            plateaus.append(None)
        else:
            rows.append([str(v) for v in row.explicit])
            plateaus.append({"value": str(row.plateau_value), "length": row.plateau_len})
    doc = {
        "spec": describe(array.spec) if array.spec is not None else None,
        "y": [str(v) for v in array.y],
        "rows": rows,
        "plateau": plateaus,
        "W": [str(w) for w in array.row_sums()],
    }
    return json.dumps(doc, indent=indent)


def array_from_json(text: str) -> OutputArray:
    from .cli import parse_spec

    doc = json.loads(text)
    y = [int(v) for v in doc["y"]]
    plateaus = doc.get("plateau") or [None] * len(doc["rows"])
    rows = []
    for n, (values, tail) in enumerate(zip(doc["rows"], plateaus), start=1):
        values = [int(v) for v in values]
        if tail is not None:
            values += [int(tail["value"])] * int(tail["length"])
        split = 1 if n == 1 else y[n - 2] + 1
        rows.append(Row.from_values(values, split))
    array = OutputArray(parse_spec(doc["spec"]) if doc.get("spec") else None, tuple(y), tuple(rows))
    if [str(w) for w in array.row_sums()] != doc["W"]:
        raise ValueError("row sums in JSON do not match the rows")
    return array


def render_table(array: OutputArray) -> str:
    """One line per row: ``n: explicit values [value x length]``."""
    lines = []
    for n, row in enumerate(array.rows, start=1):
        text = f"{n}: " + " ".join(map(str, row.explicit))
        if row.plateau_len:
            text += f" [{row.plateau_value} x {row.plateau_len}]"
        lines.append(text)
    return "\n".join(lines) + "\n"


_TABLE_LINE = re.compile(r"^(\d+):((?: \d+)+)(?: \[(\d+) x (\d+)\])?$")


def parse_table(text: str) -> list[list[int]]:
    """Inverse of :func:`render_table`, returning plateau-expanded rows."""
    out = []
    for line in text.splitlines():
        m = _TABLE_LINE.match(line.strip())
        if not m:
            raise ValueError(f"bad table line: {line!r}")
        values = [int(v) for v in m.group(2).split()]
        if m.group(3):
            values += [int(m.group(3))] * int(m.group(4))
        out.append(values)
    return out


class StrippedParseError(ValueError):
    pass


_STRIPPED_LINE = re.compile(r"^(A\d{6,})\s+,((?:-?\d+,)*)\s*$")


@dataclass
class OeisStrippedIndex:
    entries: dict[str, list[int]] = field(default_factory=dict)

    @classmethod
    def parse(cls, text: str) -> OeisStrippedIndex:
        """Read lines of the form ``A000108 ,1,1,2,5,14,``; ``#`` lines are comments."""
        entries = {}
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line.strip() or line.startswith("#"):
                continue
            m = _STRIPPED_LINE.match(line.rstrip("\n"))
            if not m:
                raise StrippedParseError(f"line {lineno}: not a stripped-dump entry: {line[:60]!r}")
            entries[m.group(1)] = [int(t) for t in m.group(2).split(",") if t]
        return cls(entries)

    @classmethod
    def load(cls, path) -> OeisStrippedIndex:
        path = Path(path)
        if path.suffix == ".gz":
            import gzip

            with gzip.open(path, "rt", encoding="utf-8") as fh:
                return cls.parse(fh.read())
        return cls.parse(path.read_text(encoding="utf-8"))


def lookup_stripped(index: OeisStrippedIndex, prefix, min_match: int = 8, max_start: int = 3) -> list[str]:
    """A-numbers whose terms contain ``prefix`` starting at one of the first
    ``max_start`` positions."""
    prefix = list(prefix)
    if len(prefix) < min_match:
        raise ValueError(f"need at least {min_match} terms to search, got {len(prefix)}")
    m = len(prefix)
    hits = []
    for anum, terms in index.entries.items():
        if any(terms[s:s + m] == prefix for s in range(max_start)):
            hits.append(anum)
    return sorted(hits)
