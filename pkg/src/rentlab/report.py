"""Stage report accumulator, emitted as operation/column/rows_affected CSV."""

from __future__ import annotations

from dataclasses import dataclass, field

from .tabular import Table


@dataclass
class ReportEntry:
    operation: str
    column: str
    rows_affected: int
    flags: str = ""


@dataclass
class StageReport:
    entries: list[ReportEntry] = field(default_factory=list)

    def add(self, operation: str, column: str, rows_affected: int, flags: str = "") -> None:
        self.entries.append(ReportEntry(operation, column, rows_affected, flags))

    def to_table(self) -> Table:
        return Table.from_dict(
            {
                "operation": ("text", [e.operation for e in self.entries]),
                "column": ("text", [e.column for e in self.entries]),
                "rows_affected": ("integer", [e.rows_affected for e in self.entries]),
                "flags": ("text", [e.flags for e in self.entries]),
            }
        )
