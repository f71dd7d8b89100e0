"""Verification reports and their serialized forms.

Reports are deterministic: rationals serialize as canonical "p/q" strings,
JSON keys are sorted, case order is fixed by the suite, and wall-clock timing
is kept out of the serialized artifact (it is printed to the console instead)
so that identical configurations produce byte-identical output.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

PASS = "pass"
FAIL = "fail"
RECORDED = "recorded"


@dataclass
class ClaimResult:
    """Outcome of one claim: asserted claims pass or fail, recorded claims
    never fail the run and carry their finding in ``witness``."""

    name: str
    status: str
    residual: Optional[str] = None
    witness: Optional[dict] = None


@dataclass
class CaseReport:
    family: str
    group: str
    subgroup_l: Optional[tuple[int, ...]]
    subgroup_h: Optional[tuple[int, ...]]
    subgroup_k: Optional[tuple[int, ...]]
    convention: str
    claims: list[ClaimResult] = field(default_factory=list)
    elapsed_s: float = 0.0  # console only, never serialized

    def case_dict(self) -> dict:
        return {
            "family": self.family,
            "group": self.group,
            "subgroup_L": list(self.subgroup_l) if self.subgroup_l is not None else None,
            "subgroup_H": list(self.subgroup_h) if self.subgroup_h is not None else None,
            "subgroup_K": list(self.subgroup_k) if self.subgroup_k is not None else None,
            "convention": self.convention,
            "claims": [
                {
                    "name": claim.name,
                    "status": claim.status,
                    "residual": claim.residual,
                    "witness": claim.witness,
                }
                for claim in self.claims
            ],
        }


def rational_str(value: Fraction) -> str:
    return str(Fraction(value))


def summarize(cases: Sequence[CaseReport]) -> dict[str, int]:
    counts = {PASS: 0, FAIL: 0, RECORDED: 0}
    for case in cases:
        for claim in case.claims:
            counts[claim.status] += 1
    return counts


def exit_status(cases: Sequence[CaseReport]) -> int:
    return 1 if any(
        claim.status == FAIL for case in cases for claim in case.claims
    ) else 0


def report_to_json(cases: Sequence[CaseReport], config: dict) -> str:
    payload = {
        "config": config,
        "cases": [case.case_dict() for case in cases],
        "summary": summarize(cases),
    }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def report_to_csv(cases: Sequence[CaseReport]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(
        [
            "family",
            "group",
            "subgroup_L",
            "subgroup_H",
            "subgroup_K",
            "convention",
            "claim",
            "status",
            "residual",
            "witness",
        ]
    )
    for case in cases:
        for claim in case.claims:
            writer.writerow(
                [
                    case.family,
                    case.group,
                    _elements_str(case.subgroup_l),
                    _elements_str(case.subgroup_h),
                    _elements_str(case.subgroup_k),
                    case.convention,
                    claim.name,
                    claim.status,
                    claim.residual if claim.residual is not None else "",
                    json.dumps(claim.witness, sort_keys=True)
                    if claim.witness is not None
                    else "",
                ]
            )
    return buffer.getvalue()


def _elements_str(elements: Optional[tuple[int, ...]]) -> str:
    if elements is None:
        return ""
    return " ".join(map(str, elements))
