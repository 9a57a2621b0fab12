"""Run reports emitted by the command line interface."""

__all__ = ["Check", "RunReport", "verdict_check"]

import json
from dataclasses import dataclass, field
from typing import Any

from .const import EXIT_FAILED, EXIT_INDETERMINATE, EXIT_INPUT_ERROR, EXIT_OK
from .models import Verdict

_STATUS = {True: "PASS", False: "FAIL", None: "INDETERMINATE"}


@dataclass(frozen=True)
class Check:
    """One named check; ``passed`` is None when the outcome is undecided."""

    name: str
    passed: bool | None
    detail: str = ""

    @property
    def status(self) -> str:
        """Printable status word."""
        return _STATUS[self.passed]

    def to_dict(self) -> dict[str, Any]:
        """Return the check as a dictionary."""
        return {"name": self.name, "status": self.status, "detail": self.detail}


def verdict_check(name: str, verdict: Verdict, detail: str = "") -> Check:
    """Check whose outcome follows a search verdict."""
    passed = {
        Verdict.VERIFIED: True,
        Verdict.REFUTED: False,
        Verdict.INDETERMINATE: None,
    }[verdict]
    return Check(name, passed, detail or str(verdict))


@dataclass(frozen=True)
class RunReport:
    """Checks and data produced by one command."""

    command: str
    checks: tuple[Check, ...] = ()
    payload: dict[str, Any] = field(default_factory=dict)
    error: str | None = None

    @property
    def exit_code(self) -> int:
        """Process exit status.

        Input errors win, then any failed check, then any undecided check.
        """
        if self.error is not None:
            return EXIT_INPUT_ERROR
        outcomes = {c.passed for c in self.checks}
        if False in outcomes:
            return EXIT_FAILED
        if None in outcomes:
            return EXIT_INDETERMINATE
        return EXIT_OK

    def to_dict(self) -> dict[str, Any]:
        """Return the report as a dictionary."""
        return {
            "command": self.command,
            "exit_code": self.exit_code,
            "error": self.error,
            "checks": [c.to_dict() for c in self.checks],
            "payload": self.payload,
        }

    def render_json(self) -> str:
        """Machine readable rendering with sorted keys."""
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    def render_text(self) -> str:
        """Structured plain-text rendering."""
        lines = [f"command: {self.command}"]
        if self.error is not None:
            lines.append(f"error: {self.error}")
        for check in self.checks:
            line = f"[{check.status}] {check.name}"
            if check.detail:
                line += f": {check.detail}"
            lines.append(line)
        for key in sorted(self.payload):
            lines.append(_render_value(key, self.payload[key], 0))
        lines.append(f"exit: {self.exit_code}")
        return "\n".join(lines)


def _scalar(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "yes" if value else "no"
    return str(value)


def _render_value(key: str, value: Any, depth: int) -> str:
    indent = "  " * depth
    if isinstance(value, dict):
        if not value:
            return f"{indent}{key}: {{}}"
        inner = [_render_value(str(k), value[k], depth + 1) for k in sorted(value)]
        return "\n".join([f"{indent}{key}:", *inner])
    if isinstance(value, list):
        if all(not isinstance(v, dict | list) for v in value):
            return f"{indent}{key}: [{', '.join(_scalar(v) for v in value)}]"
        inner = [_render_value(f"- {n}", v, depth + 1) for n, v in enumerate(value)]
        return "\n".join([f"{indent}{key}:", *inner])
    return f"{indent}{key}: {_scalar(value)}"
