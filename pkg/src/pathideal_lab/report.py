"""Verification records and their CSV / JSON / Markdown renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from typing import Any

FIELDS = ("check", "n", "t", "s", "engine", "formula", "oracle", "match", "ms")


@dataclass
class CheckRecord:
    check: str
    n: int
    t: int | None = None
    s: int | None = None
    engine: Any = None
    formula: Any = None
    oracle: Any = None
    match: bool = False
    ms: int = 0

    @classmethod
    def compare(cls, check: str, n: int, t=None, s=None, *, engine=None, formula=None,
                oracle=None, ms: int = 0) -> CheckRecord:
        """Build a record whose match flag says all non-null values agree exactly."""
        present = [v for v in (engine, formula, oracle) if v is not None]
        match = len(present) >= 2 and all(v == present[0] for v in present)
        return cls(check, n, t, s, engine, formula, oracle, match, ms)

    def sort_key(self) -> tuple:
        return (self.check, self.n, self.t or 0, self.s or 0)


@dataclass
class VerificationReport:
    records: list[CheckRecord] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.records.sort(key=CheckRecord.sort_key)

    @property
    def ok(self) -> bool:
        return all(r.match for r in self.records)

    def mismatches(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.match]

    def to_json(self) -> str:
        return json.dumps([asdict(r) for r in self.records], indent=1) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(FIELDS)
        for r in self.records:
            row = asdict(r)
            writer.writerow(["" if row[f] is None else _cell(row[f]) for f in FIELDS])
        return buf.getvalue()

    def to_markdown(self) -> str:
        lines = ["| " + " | ".join(FIELDS) + " |", "|" + "---|" * len(FIELDS)]
        for r in self.records:
            row = asdict(r)
            cells = ["" if row[f] is None else _cell(row[f]) for f in FIELDS]
            lines.append("| " + " | ".join(c.replace("|", "\\|") for c in cells) + " |")
        total = len(self.records)
        bad = len(self.mismatches())
        lines.append("")
        lines.append(f"{total} checks, {bad} mismatches")
        return "\n".join(lines) + "\n"

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "md":
            return self.to_markdown()
        raise ValueError(f"unknown format {fmt!r}")


def _cell(v: Any) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)
