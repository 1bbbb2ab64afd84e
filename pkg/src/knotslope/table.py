"""Knot tables: one ``name: X(..) X(..) [key=value ...] # comment`` entry per line.

The optional bracketed block carries expected values used as a regression
check: ``alternating`` (0/1), ``crossings``, ``sigma``, ``det`` and ``jones``
(a Laurent polynomial in t written without spaces).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Any

from .diagram import PDCode, parse_pd
from .errors import DuplicateName, KnotError
from .laurent import LaurentPolynomial

BUNDLED_TABLE = "knots10.txt"

_EXPECTED = re.compile(r"\[([^\]]*)\]\s*$")
_INT_KEYS = ("crossings", "sigma", "det")


@dataclass(frozen=True)
class TableEntry:
    name: str
    text: str
    line: int
    code: PDCode | None
    expected: dict[str, Any] = field(default_factory=dict)
    error: str | None = None


def parse_expected(block: str) -> dict[str, Any]:
    out: dict[str, Any] = {}
    for item in block.split():
        key, sep, value = item.partition("=")
        if not sep:
            raise KnotError(f"expected value {item!r} is not key=value")
        if key in _INT_KEYS:
            out[key] = int(value)
        elif key == "alternating":
            out[key] = value in ("1", "true", "True", "Y")
        elif key == "jones":
            out[key] = LaurentPolynomial.parse(value, "t")
        else:
            raise KnotError(f"unknown expected key {key!r}")
    return out


def format_expected(expected: dict[str, Any]) -> str:
    parts = []
    for key, value in expected.items():
        if key == "alternating":
            value = int(bool(value))
        elif key == "jones":
            value = str(value).replace(" ", "")
        parts.append(f"{key}={value}")
    return "[" + " ".join(parts) + "]"


def parse_table(text: str) -> list[TableEntry]:
    """Entries in file order.  Lines that fail to parse become entries carrying an error.

    Raises DuplicateName when a name repeats.
    """
    entries: list[TableEntry] = []
    seen: dict[str, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        name, sep, body = line.partition(":")
        name = name.strip()
        if not sep or not name or "(" in name:
            entries.append(TableEntry(f"line{lineno}", line, lineno, None,
                                      error=f"line {lineno}: missing 'name:' prefix"))
            continue
        if name in seen:
            raise DuplicateName(f"line {lineno}: name {name!r} already used on line {seen[name]}")
        seen[name] = lineno
        expected: dict[str, Any] = {}
        code = None
        error = None
        try:
            m = _EXPECTED.search(body)
            if m:
                expected = parse_expected(m.group(1))
                body = body[:m.start()]
            code = PDCode(parse_pd(body).crossings, name)
        except (KnotError, ValueError) as exc:
            error = f"line {lineno}: {type(exc).__name__}: {exc}"
        entries.append(TableEntry(name, body.strip(), lineno, code, expected, error))
    return entries


def load_table(path: str | Path) -> list[TableEntry]:
    """Read a table file; OSError and UnicodeDecodeError propagate to the caller."""
    return parse_table(Path(path).read_text(encoding="utf-8"))


def bundled_table_path() -> Path:
    return Path(str(resources.files("knotslope") / "data" / BUNDLED_TABLE))


def load_bundled_table() -> list[TableEntry]:
    return load_table(bundled_table_path())
