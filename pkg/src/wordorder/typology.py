"""Dominant-order tables in the ``language_id,dominant_order`` CSV schema."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from importlib import resources
from pathlib import Path
from typing import Iterable, TextIO

HEADER = ("language_id", "dominant_order")
ORDER_TOKENS = ("SOV", "SVO", "VSO", "VOS", "OVS", "OSV", "NONE")
POSITION_CLASS = {
    "VSO": "initial",
    "VOS": "initial",
    "SVO": "medial",
    "OVS": "medial",
    "SOV": "final",
    "OSV": "final",
    "NONE": "none",
}
FIXTURE_NAME = "wals_synthetic.csv"


class TypologyParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class LanguageRecord:
    language_id: str
    dominant_order: str

    def __post_init__(self):
        if self.dominant_order not in ORDER_TOKENS:
            raise ValueError(f"unknown dominant order {self.dominant_order!r}")


@dataclass(frozen=True)
class TypologySummary:
    n1: int = 0
    n2: int = 0
    n3: int = 0
    none_count: int = 0
    total: int = 0

    @property
    def none_share(self) -> float:
        return self.none_count / self.total if self.total else 0.0

    def to_dict(self) -> dict[str, int]:
        return asdict(self)

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_csv(self) -> str:
        d = self.to_dict()
        return ",".join(d) + "\n" + ",".join(str(v) for v in d.values()) + "\n"


def parse_language_table(stream: TextIO | str) -> list[LanguageRecord]:
    """Parse and validate a table; an empty input yields no records."""
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    reader = csv.reader(stream)
    records = []
    for row in reader:
        line = reader.line_num
        if line == 1:
            if tuple(c.strip().lstrip("﻿") for c in row) != HEADER:
                raise TypologyParseError(f"expected header {','.join(HEADER)!r}, got {','.join(row)!r}", line)
            continue
        if not row:
            continue
        if len(row) != 2:
            raise TypologyParseError(f"expected 2 fields, got {len(row)}", line)
        language_id, order = (c.strip() for c in row)
        if not language_id:
            raise TypologyParseError("empty language_id", line)
        if order not in ORDER_TOKENS:
            raise TypologyParseError(f"unknown dominant order {order!r}", line)
        records.append(LanguageRecord(language_id, order))
    return records


def read_language_table(path: str | Path) -> list[LanguageRecord]:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_language_table(fh)


def serialize(records: Iterable[LanguageRecord]) -> str:
    """Canonical form: header, rows sorted by language_id, LF endings."""
    lines = [",".join(HEADER)]
    lines += [f"{r.language_id},{r.dominant_order}" for r in sorted(records, key=lambda r: r.language_id)]
    return "\n".join(lines) + "\n"


def classify_verb_position(order: str) -> str:
    try:
        return POSITION_CLASS[order]
    except KeyError:
        raise ValueError(f"unknown dominant order {order!r}") from None


def summarize(records: Iterable[LanguageRecord]) -> TypologySummary:
    counts = {"initial": 0, "medial": 0, "final": 0, "none": 0}
    for r in records:
        counts[classify_verb_position(r.dominant_order)] += 1
    return TypologySummary(
        n1=counts["initial"],
        n2=counts["medial"],
        n3=counts["final"],
        none_count=counts["none"],
        total=sum(counts.values()),
    )


def fixture_path() -> Path:
    """Bundled synthetic table whose aggregates match the reported world sample."""
    return Path(str(resources.files("wordorder") / "data" / FIXTURE_NAME))
