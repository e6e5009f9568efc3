"""
Data models for rook_orbits reports and runs.
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import Any, Optional

from rook_orbits.constants import (
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    STATUS_FAIL,
    STATUS_FLAG,
    STATUS_PASS,
    STATUS_SKIP,
)


class Status(str, Enum):
    """Outcome of a single check."""
    PASS = STATUS_PASS
    FLAG = STATUS_FLAG      # reproduced with a recorded discrepancy
    FAIL = STATUS_FAIL
    SKIP = STATUS_SKIP


@dataclass
class CheckResult:
    """
    One verified statement.

    Attributes:
        name: Short identifier, e.g. 'case 5' or 'row 17'
        status: Outcome
        message: Human-readable summary
        detail: JSON-safe supporting data (residuals, minors, witnesses)
    """
    name: str
    status: Status
    message: str = ''
    detail: dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL

    def to_json(self) -> dict[str, Any]:
        return {
            'name': self.name,
            'status': self.status.value,
            'message': self.message,
            'detail': self.detail,
        }


@dataclass
class Report:
    """
    The outcome of one command.

    Attributes:
        title: Heading of the report
        command: The command that produced it, e.g. 'g2 verify'
        checks: Individual check results
        data: Command output that is not a check (listings, certificates)
    """
    title: str
    command: str = ''
    checks: list[CheckResult] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    def extend(self, other: 'Report') -> None:
        """Append the checks of another report, prefixing their names."""
        for check in other.checks:
            self.checks.append(CheckResult(
                name=f"{other.title}: {check.name}" if other.title else check.name,
                status=check.status,
                message=check.message,
                detail=check.detail,
            ))

    def count(self, status: Status) -> int:
        return sum(1 for check in self.checks if check.status is status)

    @property
    def failed(self) -> bool:
        return any(check.failed for check in self.checks)

    @property
    def exit_code(self) -> int:
        """0 unless some check failed."""
        return 1 if self.failed else 0

    def to_json(self) -> dict[str, Any]:
        return {
            'title': self.title,
            'command': self.command,
            'checks': [check.to_json() for check in self.checks],
            'data': self.data,
            'summary': {status.value: self.count(status) for status in Status},
        }


@dataclass
class RunConfig:
    """
    Settings of one CLI invocation.

    Attributes:
        command: Top-level command ('roots', 'g2', 'f4', ...)
        action: Sub-action ('verify', 'certify', ...), empty if none
        system: Root system kind such as 'A3', 'G2', 'F4'
        seed: Master seed for all sampling
        samples: Samples per check
        output: 'text' or 'json'
        data_file: Explicit F4 data path, or None
        report_file: Write the report here instead of stdout
        options: Command-specific options (case index, placement, form, ...)
    """
    command: str
    action: str = ''
    system: str = 'F4'
    seed: int = DEFAULT_SEED
    samples: int = DEFAULT_SAMPLES
    output: str = 'text'
    data_file: Optional[Path] = None
    report_file: Optional[Path] = None
    options: dict[str, Any] = field(default_factory=dict)
