"""JSON and CSV emitters for verification results."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from pathlib import Path
from typing import Iterable

from .verify import STATUSES, VerificationReport

__all__ = ["SCHEMA_VERSION", "suite_document", "dump_json", "read_json", "results_csv"]

SCHEMA_VERSION = 1


def suite_document(
    corpus: str,
    groups: list[dict],
    reports: Iterable[VerificationReport],
    seed: int,
    timing: bool = True,
) -> dict:
    """The report document; everything except ``timing`` is run-independent."""
    reports = sorted(reports, key=VerificationReport.sort_key)
    counts = Counter(r.status for r in reports)
    doc = {
        "schema_version": SCHEMA_VERSION,
        "corpus": corpus,
        "seed": seed,
        "summary": {
            "groups": len(groups),
            "reports": len(reports),
            "by_status": {s: counts.get(s, 0) for s in STATUSES},
        },
        "groups": sorted(groups, key=lambda g: (g["order"], g["spec"])),
        "results": [r.to_dict() for r in reports],
    }
    if timing:
        doc["timing"] = {
            "total_seconds": round(sum(r.timing for r in reports), 6),
            "per_report": [
                {"group": r.group_name, "check_id": r.check_id, "p": r.p,
                 "pi": None if r.pi is None else list(r.pi), "seconds": round(r.timing, 6)}
                for r in reports
            ],
        }
    return doc


def dump_json(doc: dict, path: str | Path | None = None) -> str:
    text = json.dumps(doc, indent=1, sort_keys=True) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def read_json(path: str | Path) -> dict:
    """Load a report, keeping only the known top-level fields."""
    doc = json.loads(Path(path).read_text())
    known = {"schema_version", "corpus", "seed", "summary", "groups", "results", "timing"}
    return {k: v for k, v in doc.items() if k in known}


def results_csv(reports: Iterable[VerificationReport], path: str | Path | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["group", "order", "check_id", "p", "pi", "status", "hypothesis", "witnesses"])
    for r in sorted(reports, key=VerificationReport.sort_key):
        w.writerow([r.group_name, r.group_order, r.check_id, "" if r.p is None else r.p,
                    "" if r.pi is None else " ".join(map(str, r.pi)), r.status,
                    r.hypothesis or "", len(r.witnesses)])
    text = buf.getvalue()
    if path is not None:
        Path(path).write_text(text)
    return text
