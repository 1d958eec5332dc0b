"""
Report Rendering
Text, JSON and CSV forms of genus results; JSON keeps a stable field order and writes big integers as strings
"""

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from genus.published_tables import PublishedRow


# JSON key order; do not reorder, reports are diffed byte for byte
REPORT_FIELDS = (
    "group", "display", "order", "triple", "genus", "exactness", "method",
    "witness", "note", "published", "timing", "engine",
)

CSV_COLUMNS = ("n", "family", "triple", "genus")


@dataclass
class Report:
    group: str
    display: str
    order: int
    triple: str
    genus: int
    exactness: str
    method: str
    witness: Optional[Dict[str, str]] = None
    note: Optional[str] = None
    published: Optional[Dict[str, str]] = None
    timing: float = 0.0
    engine: Dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_result(cls, realization, result, engine: Dict[str, Any], timing: float = 0.0,
                    published_row: Optional[PublishedRow] = None) -> "Report":
        witness = None
        if result.witness is not None:
            witness = {
                "provenance": result.witness.provenance,
                "x": realization.encode(result.witness.x),
                "y": realization.encode(result.witness.y),
            }
        published = None
        if published_row is not None:
            published = {"triple": str(published_row.triple), "genus": str(published_row.genus), "source": published_row.source}
        return cls(
            group=str(result.spec),
            display=result.spec.display,
            order=result.order,
            triple=str(result.triple),
            genus=result.genus,
            exactness=result.exactness,
            method=result.method,
            witness=witness,
            note=result.note,
            published=published,
            timing=round(timing, 3),
            engine=dict(engine),
        )

    def to_dict(self) -> Dict[str, Any]:
        values = {name: getattr(self, name) for name in REPORT_FIELDS}
        values["order"] = str(self.order)
        values["genus"] = str(self.genus)
        return values

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Report":
        values = {name: data.get(name) for name in REPORT_FIELDS}
        values["order"] = int(values["order"])
        values["genus"] = int(values["genus"])
        values["timing"] = float(values["timing"] or 0.0)
        values["engine"] = dict(values["engine"] or {})
        return cls(**values)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    @property
    def published_matches(self) -> Optional[bool]:
        if self.published is None:
            return None
        return self.published["triple"] == self.triple and self.published["genus"] == str(self.genus)


def render_json(reports: List[Report]) -> str:
    if len(reports) == 1:
        return reports[0].to_json()
    return json.dumps([r.to_dict() for r in reports], indent=2, ensure_ascii=False)


def _csv_key(report: Report):
    family = report.group.rstrip("0123456789")
    n = report.group[len(family):]
    return n, family


def render_csv(reports: List[Report]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for report in reports:
        n, family = _csv_key(report)
        writer.writerow([n, family, report.triple, report.genus])
    return buffer.getvalue()


def render_text(report: Report) -> str:
    lines = [
        f"Group:     {report.display} (order {report.order})",
        f"Triple:    {report.triple}",
        f"Genus:     {report.genus} ({report.exactness})",
        f"Method:    {report.method}",
    ]
    if report.note:
        lines.append(f"Note:      {report.note}")
    if report.witness:
        lines.append(f"x:         {report.witness['x']}")
        lines.append(f"y:         {report.witness['y']}")
    if report.published:
        lines.append(f"Published: {report.published['triple']} genus {report.published['genus']} ({report.published['source']})")
    lines.append(f"Time:      {report.timing:.3f}s")
    return "\n".join(lines)


def render_table_text(reports: List[Report]) -> str:
    """One row per group; published values alongside where they exist."""
    header = f"{'Group':<8} {'Order':>12} {'Triple':<12} {'Genus':>12} {'Published':<24} Flag"
    rows = [header, "-" * len(header)]
    for report in reports:
        expected = "not published"
        if report.published:
            expected = f"{report.published['triple']} {report.published['genus']}"
        rows.append(
            f"{report.display:<8} {report.order:>12} {report.triple:<12} {report.genus:>12} "
            f"{expected:<24} {report.exactness}"
        )
    return "\n".join(rows)
