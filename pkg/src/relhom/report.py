"""Validation reports shared by every verification routine."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Report:
    """Outcome of a named check: ``ok`` plus human-readable failures."""

    name: str
    ok: bool = True
    failures: list[str] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    children: list["Report"] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, message: str) -> None:
        self.ok = False
        self.failures.append(message)

    def add(self, child: "Report") -> "Report":
        self.children.append(child)
        if not child.ok:
            self.ok = False
        return child

    def all_failures(self) -> list[str]:
        """Own failures followed by those of every child, depth first."""
        out = list(self.failures)
        for c in self.children:
            out += c.all_failures()
        return out

    def to_dict(self) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "ok": self.ok}
        if self.failures:
            out["failures"] = list(self.failures)
        if self.details:
            out["details"] = self.details
        if self.children:
            out["checks"] = [c.to_dict() for c in self.children]
        return out

    def __str__(self) -> str:
        status = "pass" if self.ok else "FAIL"
        lines = [f"{self.name}: {status}"]
        lines += [f"  - {f}" for f in self.failures[:20]]
        if len(self.failures) > 20:
            lines.append(f"  ... {len(self.failures) - 20} more")
        for c in self.children:
            lines += ["  " + ln for ln in str(c).splitlines()]
        return "\n".join(lines)
