"""Result records shared by the verifiers, plus their JSON rendering."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Any

import numpy as np

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not_applicable"
UNRESOLVED = "unresolved"
INCONCLUSIVE = "inconclusive"

_RELATIONS = ("<=", ">=", "==")


@dataclass
class BoundReport:
    """Outcome of checking one inequality (or identity) on one instance.

    ``slack`` is oriented so that a non-negative value means the relation
    holds exactly; the check passes when ``slack >= -tol``.
    """

    name: str
    lhs: float | None = None
    relation: str = "<="
    rhs: float | None = None
    tol: float = 0.0
    status: str = PASS
    slack: float | None = None
    note: str = ""
    witnesses: dict[str, Any] = field(default_factory=dict)
    parts: list[BoundReport] = field(default_factory=list)

    @property
    def applicable(self) -> bool:
        return self.status != NOT_APPLICABLE

    @property
    def passed(self) -> bool:
        return self.status == PASS

    @property
    def failed(self) -> bool:
        return self.status == FAIL

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {
            "name": self.name,
            "status": self.status,
            "applicable": self.applicable,
            "pass": self.passed,
            "lhs": self.lhs,
            "relation": self.relation,
            "rhs": self.rhs,
            "slack": self.slack,
            "tol": self.tol,
        }
        if self.note:
            out["note"] = self.note
        if self.witnesses:
            out["witnesses"] = self.witnesses
        if self.parts:
            out["parts"] = [p.to_dict() for p in self.parts]
        return out


def compare(name: str, lhs: float, relation: str, rhs: float, tol: float, note: str = "", **witnesses) -> BoundReport:
    if relation not in _RELATIONS:
        raise ValueError(f"unknown relation {relation!r}")
    lhs, rhs = float(lhs), float(rhs)
    if relation == "<=":
        slack = rhs - lhs
    elif relation == ">=":
        slack = lhs - rhs
    else:
        slack = -abs(lhs - rhs)
    status = PASS if slack >= -tol else FAIL
    return BoundReport(name, lhs, relation, rhs, tol, status, slack, note, dict(witnesses))


def flag(name: str, ok: bool, note: str = "", **witnesses) -> BoundReport:
    """A yes/no check with no numeric sides (e.g. an equivalence)."""
    return BoundReport(name, relation="==", status=PASS if ok else FAIL, note=note, witnesses=dict(witnesses))


def not_applicable(name: str, reason: str, **witnesses) -> BoundReport:
    return BoundReport(name, status=NOT_APPLICABLE, note=reason, witnesses=dict(witnesses))


def combine(name: str, parts: list[BoundReport], note: str = "", **witnesses) -> BoundReport:
    """Aggregate sub-checks; reports the tightest applicable part as lhs/rhs."""
    applicable = [p for p in parts if p.applicable]
    if not applicable:
        return BoundReport(name, status=NOT_APPLICABLE, note=note or "no applicable parts", parts=parts, witnesses=dict(witnesses))
    if any(p.failed for p in applicable):
        status = FAIL
    elif any(p.status == UNRESOLVED for p in applicable):
        status = UNRESOLVED
    elif any(p.status == INCONCLUSIVE for p in applicable):
        status = INCONCLUSIVE
    else:
        status = PASS
    numeric = [p for p in applicable if p.slack is not None]
    if numeric:
        worst = min(numeric, key=lambda p: p.slack)
        lhs, rel, rhs, slack, tol = worst.lhs, worst.relation, worst.rhs, worst.slack, worst.tol
    else:
        lhs = rhs = slack = None
        rel, tol = "==", 0.0
    return BoundReport(name, lhs, rel, rhs, tol, status, slack, note, dict(witnesses), parts)


def summarize(reports) -> dict[str, int]:
    counts = {PASS: 0, FAIL: 0, NOT_APPLICABLE: 0, UNRESOLVED: 0, INCONCLUSIVE: 0}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    return counts


def _round(x: float) -> float | None:
    if math.isnan(x) or math.isinf(x):
        return None
    return float(f"{x:.15g}")


def jsonable(obj):
    """Convert reports, numpy values and sets to JSON-ready data, floats at 15 digits."""
    if hasattr(obj, "to_dict"):
        return jsonable(obj.to_dict())
    if isinstance(obj, dict):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, (set, frozenset)):
        return sorted(jsonable(v) for v in obj)
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return _round(float(obj))
    return obj


def dumps(obj, indent: int | None = 2) -> str:
    return json.dumps(jsonable(obj), indent=indent, sort_keys=False)
