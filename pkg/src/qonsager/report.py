"""Check records and reports shared by the verification layers and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass
class Check:
    name: str        # stable path-like identifier, e.g. "hexagon/T-conj/E1"
    ref: str         # the identity or property this check certifies
    status: str      # "pass" | "fail"
    detail: str = "" # nonempty exactly when status == "fail"
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.status == "pass"


@dataclass
class Report:
    suite: str
    config: dict = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, ref: str, ok: bool, detail: str = "",
            elapsed: float = 0.0) -> Check:
        check = Check(name=name, ref=ref, status="pass" if ok else "fail",
                      detail=detail if not ok else "", elapsed=elapsed)
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def summary(self) -> dict:
        return {"total": len(self.checks), "passed": self.passed, "failed": self.failed}

    def sorted_checks(self) -> list[Check]:
        return sorted(self.checks, key=lambda c: c.name)

    def to_json(self, timestamp: str | None = None) -> str:
        payload = {
            "suite": self.suite,
            "config": self.config,
            "checks": [{"name": c.name, "ref": c.ref, "status": c.status,
                        "detail": c.detail} for c in self.sorted_checks()],
            "summary": self.summary(),
        }
        if timestamp is not None:
            payload["timestamp"] = timestamp
        return json.dumps(payload, indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"suite: {self.suite}"]
        for key, value in self.config.items():
            lines.append(f"  {key} = {value}")
        for c in self.sorted_checks():
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"{mark} {c.name}  [{c.ref}]  ({c.elapsed * 1000:.1f} ms)")
            if c.detail:
                lines.append(f"     {c.detail}")
        s = self.summary()
        lines.append(f"{s['passed']}/{s['total']} checks passed, {s['failed']} failed")
        return "\n".join(lines)
