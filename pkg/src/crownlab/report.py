"""Machine-readable report documents emitted by the command line front end.

A document carries tabular rows (strings only; list-valued fields use comma
joined canonical strings) plus a list of verification results.  The JSON
rendering expands known list-valued columns into arrays and is validated by
the schema shipped in docs/report.schema.json; the TSV rendering is exactly
invertible via parse_tsv.  Every field except timing_s is deterministic for
a fixed command line and seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = "1"
LIST_COLUMNS = {"extremal", "minuscule", "spectrum"}


@dataclass(frozen=True)
class CheckResult:
    name: str
    status: str  # 'pass' | 'fail' | 'warn'
    measured: str
    tolerance: str

    def __post_init__(self):
        if self.status not in ("pass", "fail", "warn"):
            raise ValueError(f"bad status {self.status!r}")


@dataclass
class ReportDocument:
    command: list[str]
    columns: list[str] = field(default_factory=list)
    rows: list[dict] = field(default_factory=list)
    checks: list[CheckResult] = field(default_factory=list)
    timing_s: float = 0.0
    schema_version: str = SCHEMA_VERSION

    @property
    def failed(self) -> bool:
        return any(c.status == "fail" for c in self.checks)

    def add_row(self, **kv):
        row = {k: str(v) for k, v in kv.items()}
        for k in row:
            if k not in self.columns:
                self.columns.append(k)
        self.rows.append(row)

    def to_json(self) -> str:
        def expand(row):
            out = {}
            for k in self.columns:
                v = row.get(k, "")
                if k in LIST_COLUMNS:
                    out[k] = [x for x in v.split(",") if x] if v else []
                else:
                    out[k] = v
            return out

        doc = {
            "schema_version": self.schema_version,
            "command": self.command,
            "columns": self.columns,
            "rows": [expand(r) for r in self.rows],
            "verification": [
                {
                    "name": c.name,
                    "status": c.status,
                    "measured": c.measured,
                    "tolerance": c.tolerance,
                }
                for c in self.checks
            ],
            "timing_s": self.timing_s,
        }
        return json.dumps(doc, indent=2)

    def to_tsv(self) -> str:
        lines = [f"# schema_version\t{self.schema_version}"]
        lines.append("# command\t" + "\t".join(self.command))
        if self.columns:
            lines.append("\t".join(self.columns))
            for r in self.rows:
                lines.append("\t".join(r.get(k, "") for k in self.columns))
        if self.checks:
            lines.append("# verification\tname\tstatus\tmeasured\ttolerance")
            for c in self.checks:
                lines.append(f"{c.name}\t{c.status}\t{c.measured}\t{c.tolerance}")
        lines.append(f"# timing_s\t{self.timing_s!r}")
        return "\n".join(lines) + "\n"

    def to_human(self) -> str:
        out = []
        if self.rows:
            widths = {
                k: max(len(k), *(len(r.get(k, "")) for r in self.rows))
                for k in self.columns
            }
            out.append("  ".join(k.ljust(widths[k]) for k in self.columns))
            out.append("  ".join("-" * widths[k] for k in self.columns))
            for r in self.rows:
                out.append(
                    "  ".join(r.get(k, "").ljust(widths[k]) for k in self.columns)
                )
        if self.checks:
            if out:
                out.append("")
            for c in self.checks:
                out.append(
                    f"[{c.status.upper():4s}] {c.name}: measured {c.measured}"
                    f" (tolerance {c.tolerance})"
                )
            npass = sum(1 for c in self.checks if c.status == "pass")
            out.append(f"{npass}/{len(self.checks)} checks passed")
        out.append(f"(completed in {self.timing_s:.2f}s)")
        return "\n".join(out) + "\n"

    def emit(self, fmt: str) -> str:
        if fmt == "json":
            return self.to_json()
        if fmt == "tsv":
            return self.to_tsv()
        if fmt == "human":
            return self.to_human()
        raise ValueError(f"unknown format {fmt!r}")


def parse_tsv(text: str) -> ReportDocument:
    """Exact inverse of ReportDocument.to_tsv."""
    doc = ReportDocument(command=[])
    mode = "rows"
    for line in text.splitlines():
        if not line:
            continue
        cells = line.split("\t")
        if cells[0] == "# schema_version":
            doc.schema_version = cells[1]
        elif cells[0] == "# command":
            doc.command = cells[1:]
        elif cells[0] == "# verification":
            mode = "checks"
        elif cells[0] == "# timing_s":
            doc.timing_s = float(cells[1])
        elif mode == "rows" and not doc.columns:
            doc.columns = cells
        elif mode == "rows":
            doc.rows.append(dict(zip(doc.columns, cells)))
        else:
            doc.checks.append(CheckResult(cells[0], cells[1], cells[2], cells[3]))
    return doc
