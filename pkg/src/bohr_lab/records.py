"""Flat output records and their CSV / JSON encodings."""
from __future__ import annotations

import csv
import io
import json
import logging
import os
import tempfile
from dataclasses import asdict, dataclass, fields
from pathlib import Path

from .solver import RadiusResult

__all__ = [
    "OutputRecord",
    "CSV_HEADER",
    "FORMATS",
    "format_number",
    "records_to_csv",
    "records_to_json",
    "parse_csv",
    "encode",
    "write_records",
    "read_config",
]

log = logging.getLogger(__name__)

FORMATS = ("csv", "json")


@dataclass(frozen=True)
class OutputRecord:
    functional: str
    m: float
    root: float
    residual: float
    bracket_width: float

    @classmethod
    def from_result(cls, res: RadiusResult) -> "OutputRecord":
        return cls(res.kind.value, res.m.m, res.root, res.residual, res.bracket_width)


CSV_HEADER = tuple(f.name for f in fields(OutputRecord))


def format_number(x: float) -> str:
    """Six significant digits, locale independent."""
    return format(x, ".6g")


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for rec in records:
        writer.writerow([rec.functional] + [format_number(getattr(rec, k)) for k in CSV_HEADER[1:]])
    return buf.getvalue()


def records_to_json(records) -> str:
    return json.dumps([asdict(rec) for rec in records], indent=2) + "\n"


def parse_csv(text: str) -> list[OutputRecord]:
    reader = csv.reader(io.StringIO(text))
    header = next(reader)
    if tuple(header) != CSV_HEADER:
        raise ValueError(f"unexpected CSV header {header!r}")
    return [OutputRecord(row[0], *map(float, row[1:])) for row in reader if row]


def encode(records, fmt: str) -> str:
    if fmt == "csv":
        return records_to_csv(records)
    if fmt == "json":
        return records_to_json(records)
    raise ValueError(f"unknown format {fmt!r}; expected csv or json")


def write_records(path, records, fmt: str) -> None:
    """Write atomically, so a failed run never leaves a partial file behind."""
    path = Path(path)
    text = encode(records, fmt)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


CONFIG_KEYS = {"tolerance": float, "steps": int, "format": str}


def read_config(path) -> dict:
    """Parse a ``key = value`` file.

    Blank lines and ``#`` comments are skipped.  Unknown keys are logged and
    ignored; malformed lines and bad values raise ``ValueError``.
    """
    out = {}
    for lineno, raw in enumerate(Path(path).read_text().splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise ValueError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, value = key.strip().lower().replace("-", "_"), value.strip()
        if key not in CONFIG_KEYS:
            log.warning("%s:%d: unknown config key %r ignored", path, lineno, key)
            continue
        try:
            out[key] = CONFIG_KEYS[key](value)
        except ValueError:
            raise ValueError(f"{path}:{lineno}: bad value for {key}: {value!r}") from None
    if "format" in out and out["format"] not in FORMATS:
        raise ValueError(f"{path}: format must be csv or json, got {out['format']!r}")
    return out
