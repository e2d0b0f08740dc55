"""Verification reports: itemized checks with stable, sortable ids."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "skipped", "limitation")


@dataclass
class Check:
    id: str
    anchor: str
    status: str
    witness: list = field(default_factory=list)
    wall_time: float = 0.0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    def to_dict(self) -> dict:
        return {"id": self.id, "anchor": self.anchor, "status": self.status, "witness": list(self.witness)}


class Report:
    """A named list of checks; output order is always sorted by check id."""

    def __init__(self, suite: str, entry: str = "", degree=None):
        self.suite = suite
        self.entry = entry
        self.degree = degree
        self.checks: list[Check] = []

    def add(self, id: str, anchor: str, ok, witness=None, wall_time: float = 0.0) -> Check:
        if isinstance(ok, str):
            status = ok
        else:
            status = "pass" if ok else "fail"
        if witness is None:
            witness = []
        elif isinstance(witness, str):
            witness = [witness]
        else:
            witness = [str(w) for w in witness]
        chk = Check(id, anchor, status, witness, wall_time)
        self.checks.append(chk)
        return chk

    def run(self, id: str, anchor: str, fn) -> Check:
        """Time ``fn``; it returns ``ok`` or ``(ok, witness)``."""
        t0 = time.perf_counter()
        res = fn()
        dt = time.perf_counter() - t0
        if isinstance(res, tuple):
            ok, witness = res
        else:
            ok, witness = res, None
        return self.add(id, anchor, ok, witness, dt)

    def extend(self, other: "Report", prefix: str = "") -> "Report":
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.anchor, c.status, list(c.witness), c.wall_time))
        return self

    @property
    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.sorted() if c.status == "fail"]

    def status_of(self, id: str) -> str:
        for c in self.checks:
            if c.id == id:
                return c.status
        raise KeyError(id)

    def sorted(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.id)

    # serialization ----------------------------------------------------------------
    def to_dict(self) -> dict:
        return {
            "entry": self.entry,
            "suite": self.suite,
            "degree": self.degree,
            "checks": [c.to_dict() for c in self.sorted()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        data = json.loads(text)
        rep = cls(data["suite"], data.get("entry", ""), data.get("degree"))
        for c in data["checks"]:
            rep.checks.append(Check(c["id"], c["anchor"], c["status"], list(c.get("witness") or [])))
        return rep

    def to_text(self, timing: bool = False) -> str:
        lines = [f"entry: {self.entry}  suite: {self.suite}  degree: {self.degree}"]
        for c in self.sorted():
            t = f"  [{c.wall_time:.3f}s]" if timing else ""
            lines.append(f"{c.status.upper():10} {c.id}  ({c.anchor}){t}")
            for w in c.witness:
                lines.append(f"           witness: {w}")
        counts = {s: sum(1 for c in self.checks if c.status == s) for s in STATUSES}
        lines.append(", ".join(f"{k}={v}" for k, v in counts.items()))
        return "\n".join(lines)

    def __repr__(self):
        return f"Report({self.suite!r}, {len(self.checks)} checks, ok={self.ok})"
