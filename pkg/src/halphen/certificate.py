"""Pass/fail certificates shared by the verification routines and the CLI."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Any

from . import __version__

__all__ = ["Certificate", "canonical_json"]


def canonical_json(data: Any) -> str:
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False)


@dataclass
class Certificate:
    command: str
    inputs: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    data: dict = field(default_factory=dict)
    started: float = field(default_factory=time.perf_counter)
    elapsed: float | None = None

    def check(self, name: str, passed: bool, witness: Any = None) -> bool:
        entry = {"name": name, "passed": bool(passed)}
        if witness is not None and not passed:
            entry["witness"] = witness
        self.checks.append(entry)
        return bool(passed)

    def merge(self, other: "Certificate", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(dict(c, name=prefix + c["name"]))
        self.data.update(other.data)

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def failures(self) -> list:
        return [c for c in self.checks if not c["passed"]]

    def finish(self) -> "Certificate":
        self.elapsed = time.perf_counter() - self.started
        return self

    def to_dict(self, timing: bool = True) -> dict:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "passed": self.passed,
            "checks": self.checks,
            "data": self.data,
            "version": __version__,
        }
        if timing and self.elapsed is not None:
            out["seconds"] = round(self.elapsed, 3)
        return out

    def to_json(self, timing: bool = True) -> str:
        return canonical_json(self.to_dict(timing))
