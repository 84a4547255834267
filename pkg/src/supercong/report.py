"""Report records and their JSON-lines / CSV encodings.

All numbers are written as decimal strings (``"p/q"`` for non-integral
rationals) so nothing is lost to native numeric ranges.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass
from fractions import Fraction
from itertools import groupby
from typing import Iterable, Mapping

from .arith import Residue
from .identities import IdentitySpec
from .outcome import CheckOutcome

FIELDS = ("check", "instance", "modulus", "lhs", "rhs", "pass")


@dataclass(frozen=True)
class ReportRecord:
    check: str
    instance: str
    modulus: str
    lhs: str
    rhs: str
    passed: bool

    def as_row(self) -> dict:
        d = asdict(self)
        d["pass"] = d.pop("passed")
        return d


def render_value(value) -> str:
    if value is None:
        return ""
    if isinstance(value, Residue):
        return str(value.value)
    if isinstance(value, Fraction):
        return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    return str(value)


def to_record(outcome: CheckOutcome) -> ReportRecord:
    lhs, rhs = render_value(outcome.lhs), render_value(outcome.rhs)
    if outcome.error is not None:
        lhs, rhs = "error", outcome.error
    return ReportRecord(outcome.check, outcome.instance_str, outcome.modulus, lhs, rhs, outcome.passed)


def build_records(outcomes: Iterable[CheckOutcome], identities: Mapping[str, IdentitySpec]) -> list[ReportRecord]:
    """One record per instance, except that specs with ``summary_by`` get one
    count record per value of that parameter (lhs = passed, rhs = total),
    followed by full records for any failing instances."""
    records = []
    for check, group in groupby(outcomes, key=lambda o: o.check):
        spec = identities.get(check)
        key = spec.summary_by if spec is not None else None
        if key is None:
            records.extend(to_record(o) for o in group)
            continue
        group = sorted(group, key=lambda o: (dict(o.instance)[key], o.sort_key()))
        for value, sub in groupby(group, key=lambda o: dict(o.instance)[key]):
            sub = list(sub)
            passed = sum(o.passed for o in sub)
            records.append(ReportRecord(check, f"{key}={value}", "count", str(passed), str(len(sub)),
                                        passed == len(sub)))
            records.extend(to_record(o) for o in sub if not o.passed)
    return records


def dumps_json(records: Iterable[ReportRecord]) -> str:
    return "".join(json.dumps(r.as_row()) + "\n" for r in records)


def dumps_csv(records: Iterable[ReportRecord]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\r\n")
    writer.writeheader()
    for r in records:
        row = r.as_row()
        row["pass"] = "true" if row["pass"] else "false"
        writer.writerow(row)
    return buf.getvalue()


def _from_row(row: Mapping) -> ReportRecord:
    passed = row["pass"]
    if isinstance(passed, str):
        if passed not in ("true", "false"):
            raise ValueError(f"bad pass value {passed!r}")
        passed = passed == "true"
    return ReportRecord(row["check"], row["instance"], row["modulus"], row["lhs"], row["rhs"], passed)


def loads_json(text: str) -> list[ReportRecord]:
    out = []
    for line in text.splitlines():
        if line.strip():
            row = json.loads(line)
            if tuple(row) != FIELDS:
                raise ValueError(f"unexpected fields {list(row)}")
            out.append(_from_row(row))
    return out


def loads_csv(text: str) -> list[ReportRecord]:
    reader = csv.DictReader(io.StringIO(text, newline=""))
    if tuple(reader.fieldnames or ()) != FIELDS:
        raise ValueError(f"unexpected header {reader.fieldnames}")
    return [_from_row(row) for row in reader]
