"""
Report output in text and JSON.
"""

import io
import json
import logging
from pathlib import Path
from typing import IO, Optional

from rook_orbits import __version__
from rook_orbits.constants import OUTPUT_FORMATS, REPORT_SCHEMA_VERSION
from rook_orbits.models import Report, Status

logger = logging.getLogger(__name__)


class ReportWriter:
    """
    Writes reports to a stream or a file.

    JSON output is deterministic: sorted keys, two-space indent, every
    rational already a "p/q" string. Text output is a header, one line per
    check and a summary footer.

    Attributes:
        fmt: 'text' or 'json'
    """

    def __init__(self, fmt: str = 'text'):
        if fmt not in OUTPUT_FORMATS:
            raise ValueError(f"Unknown output format {fmt!r}; expected one of {', '.join(OUTPUT_FORMATS)}")
        self.fmt = fmt

    def write(self, report: Report, stream: IO[str]) -> None:
        if self.fmt == 'json':
            self._write_json(report, stream)
        else:
            self._write_header(report, stream)
            self._write_checks(report, stream)
            self._write_data(report, stream)
            self._write_footer(report, stream)

    def write_file(self, report: Report, filename: str | Path) -> Path:
        filepath = Path(filename)
        with filepath.open('w', encoding='utf-8') as f:
            self.write(report, f)
        logger.info(f"Report written: {filepath}")
        return filepath

    def render(self, report: Report) -> str:
        """The report as a string."""
        buffer = io.StringIO()
        self.write(report, buffer)
        return buffer.getvalue()

    def _write_json(self, report: Report, stream: IO[str]) -> None:
        document = {
            'schema': REPORT_SCHEMA_VERSION,
            'version': __version__,
            **report.to_json(),
        }
        stream.write(json.dumps(document, sort_keys=True, indent=2))
        stream.write('\n')

    def _write_header(self, report: Report, stream: IO[str]) -> None:
        stream.write(f"# {report.title}\n")
        if report.command:
            stream.write(f"# command: {report.command}\n")

    def _write_checks(self, report: Report, stream: IO[str]) -> None:
        width = max((len(check.name) for check in report.checks), default=0)
        for check in report.checks:
            line = f"{check.status.value:<4}  {check.name:<{width}}"
            if check.message:
                line += f"  {check.message}"
            stream.write(line.rstrip() + '\n')

    def _write_data(self, report: Report, stream: IO[str]) -> None:
        listing: Optional[list] = report.data.get('listing')
        if listing:
            for item in listing:
                stream.write(f"{item}\n")

    def _write_footer(self, report: Report, stream: IO[str]) -> None:
        counts = ', '.join(f"{report.count(status)} {status.value}" for status in Status)
        stream.write(f"# {len(report.checks)} checks: {counts}\n")
