"""
Report assembly: pydantic models for verification runs, JSON and markdown
rendering, and the pandas tables behind radius-table, coeff-bounds and
growth-table.
"""
import json
import logging
import math
import os
from typing import Any, Dict, Iterable, List, Literal, Optional, Union

import pandas as pd
from pydantic import BaseModel, Field

logger = logging.getLogger(__name__)

# A printed decimal further than this (or the item tolerance) from the
# computed value is listed as a discrepancy.
PRINTED_TOL = 1e-5
TABLE_FORMATS = ("csv", "md", "json")

Value = Optional[Union[bool, float]]


class ReportItem(BaseModel):
    name: str
    section: str = ""
    paper_value: Value = None
    computed_value: Value = None
    tolerance: float = 0.0
    status: Literal["pass", "fail", "skip"]
    runtime_ms: float = 0.0
    printed_value: Optional[float] = None
    note: str = ""

    @property
    def flagged(self) -> bool:
        """Whether a printed decimal disagrees with the computed value."""
        if self.printed_value is None or not isinstance(self.computed_value, float):
            return False
        return abs(self.printed_value - self.computed_value) > max(self.tolerance, PRINTED_TOL)


class ReportMeta(BaseModel):
    series_order: int
    grid_n: int
    seed: int
    version: str


class VerificationReport(BaseModel):
    meta: ReportMeta
    items: List[ReportItem] = Field(default_factory=list)

    @classmethod
    def from_results(cls, meta: ReportMeta, results: Iterable[Dict[str, Any]]) -> "VerificationReport":
        """
        Build a report from verifier results, items sorted by name.

        A verifier that aborted contributes a failed item carrying its error.
        """
        items = []
        for result in results:
            items.extend(ReportItem(**item) for item in result.get("items", []))
            if result.get("error"):
                items.append(
                    ReportItem(
                        name=f"{result.get('verifier', 'verifier')}.aborted",
                        status="fail",
                        note=result["error"],
                    )
                )
        return cls(meta=meta, items=sorted(items, key=lambda item: item.name))

    @property
    def ok(self) -> bool:
        return all(item.status != "fail" for item in self.items)

    def counts(self) -> Dict[str, int]:
        counts = {"pass": 0, "fail": 0, "skip": 0}
        for item in self.items:
            counts[item.status] += 1
        return counts

    def discrepancies(self) -> List[ReportItem]:
        return [item for item in self.items if item.flagged]


def _finite(value: Any) -> Any:
    """Replace non-finite floats by strings so the JSON stays standard."""
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {key: _finite(v) for key, v in value.items()}
    if isinstance(value, list):
        return [_finite(v) for v in value]
    return value


def to_json(report: VerificationReport) -> str:
    """
    Deterministic JSON: items sorted by name, runtimes left out, floats in
    shortest round-trip form (at most 17 significant digits).
    """
    data = report.model_dump(exclude={"items": {"__all__": {"runtime_ms"}}})
    data["summary"] = {**report.counts(), "ok": report.ok, "flagged": [item.name for item in report.discrepancies()]}
    return json.dumps(_finite(data), indent=2, sort_keys=True, allow_nan=False) + "\n"


def _cell(value: Any) -> Any:
    if isinstance(value, float):
        return f"{value:.17g}"
    return "" if value is None else value


def to_markdown(report: VerificationReport) -> str:
    """Markdown report, one table per section, discrepancies listed last; runtimes are left out."""
    counts = report.counts()
    lines = [
        "# Verification report",
        "",
        f"series order {report.meta.series_order}, grid {report.meta.grid_n}, seed {report.meta.seed}, version {report.meta.version}",
        "",
        f"**{counts['pass']} passed, {counts['fail']} failed, {counts['skip']} skipped**",
        "",
    ]
    frame = pd.DataFrame([item.model_dump() for item in report.items])
    if frame.empty:
        return "\n".join(lines)
    for section, group in frame.groupby("section", sort=True):
        lines += [f"## {section or 'other'}", ""]
        table = group[["name", "paper_value", "computed_value", "tolerance", "status", "printed_value", "note"]]
        table = table.rename(columns={"paper_value": "reference", "computed_value": "computed", "printed_value": "printed"})
        lines += [table.map(_cell).to_markdown(index=False), ""]

    flagged = report.discrepancies()
    if flagged:
        lines += ["## Printed values that do not reproduce", ""]
        for item in flagged:
            lines.append(f"- `{item.name}`: printed {item.printed_value:.10g}, computed {item.computed_value:.17g}")
        lines.append("")
    return "\n".join(lines)


def write_report(report: VerificationReport, out_dir: str, formats: Iterable[str] = ("json", "md")) -> List[str]:
    """
    Write report.json and/or report.md into ``out_dir``.

    Returns:
        Paths written
    """
    os.makedirs(out_dir, exist_ok=True)
    renderers = {"json": to_json, "md": to_markdown}
    paths = []
    for fmt in formats:
        if fmt not in renderers:
            continue
        path = os.path.join(out_dir, f"report.{fmt}")
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(renderers[fmt](report))
        logger.info("wrote %s", path)
        paths.append(path)
    return paths


# Tables


def radius_table(results: Iterable[Any]) -> pd.DataFrame:
    """Rows of RadiusResult: name, closed_form, numeric, residual, sharp_contact."""
    return pd.DataFrame(
        [
            {
                "name": result.name,
                "closed_form": result.closed_form,
                "numeric": result.numeric,
                "residual": result.residual,
                "sharp_contact": (result.sharp_witness or {}).get("contact_z"),
            }
            for result in results
        ]
    )


def coeff_bounds_table(
    searches: Iterable[Any],
    printed: Dict[str, float],
    witness: Optional[Dict[str, Any]] = None,
) -> pd.DataFrame:
    """
    Bound against search-attained value per functional; the a5 row also
    carries the formula value at the cited witness and whether that witness
    comes from a function of positive real part.
    """
    rows = []
    for search in searches:
        row = {
            "functional": search.target,
            "bound": search.bound,
            "printed_bound": printed.get(search.target, search.bound),
            "attained": search.attained,
            "gap": search.bound - search.attained,
            "within_bound": search.attained <= search.bound + 1e-9,
            "seed": search.seed,
            "evaluations": search.evaluations,
            "witness_value": None,
            "witness_caratheodory": None,
        }
        if witness is not None and search.target == "a5":
            row["witness_value"] = witness["abs_a5"]
            row["witness_caratheodory"] = witness["caratheodory"]
        rows.append(row)
    return pd.DataFrame(rows)


def items_frame(report: VerificationReport) -> pd.DataFrame:
    """Report items as a table, runtimes left out."""
    columns = [name for name in ReportItem.model_fields if name != "runtime_ms"]
    return pd.DataFrame([item.model_dump(exclude={"runtime_ms"}) for item in report.items], columns=columns)


def growth_frame(rows: List[Dict[str, float]]) -> pd.DataFrame:
    return pd.DataFrame(rows, columns=["radius", "lower", "upper", "rotation"])


def render_table(frame: pd.DataFrame, fmt: str = "csv") -> str:
    """
    Render a table as CSV, markdown or JSON records.

    Raises:
        ValueError: unknown format
    """
    if fmt == "csv":
        return frame.to_csv(index=False, float_format="%.17g", lineterminator="\n")
    if fmt == "md":
        return frame.to_markdown(index=False, floatfmt=".12g") + "\n"
    if fmt == "json":
        records = frame.astype(object).where(frame.notna(), None).to_dict(orient="records")
        return json.dumps(_finite(records), indent=2, allow_nan=False) + "\n"
    raise ValueError(f"unknown table format {fmt!r}; expected one of {TABLE_FORMATS}")
