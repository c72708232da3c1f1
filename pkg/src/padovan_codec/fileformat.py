"""Line-oriented text format for coded messages.

::

    PADOVANC v1 m=<m>
    d,b1,b2,b3,b4,b6,b7,b8,b9      (m**2 lines)

UTF-8, LF line endings, every line terminated, no trailing blank line.
Integers are plain base-10 so determinants of any size survive intact.
"""

from __future__ import annotations

import re

from .alphabet import MODULUS
from .codec import CodedMessage, CodedRow
from .errors import (
    EntryRangeError,
    FieldCountError,
    FieldSyntaxError,
    FormatError,
    HeaderError,
    RowCountError,
)

__all__ = ["MAGIC", "serialize", "parse"]

MAGIC = "PADOVANC v1"
_HEADER = re.compile(r"PADOVANC v1 m=([1-9][0-9]*)")
_INT = re.compile(r"0|-?[1-9][0-9]*")


def serialize(coded: CodedMessage) -> bytes:
    if len(coded.rows) != coded.m * coded.m:
        raise RowCountError(f"m={coded.m} needs {coded.m ** 2} rows, got {len(coded.rows)}")
    lines = [f"{MAGIC} m={coded.m}"]
    lines += [",".join(str(v) for v in row.as_list()) for row in coded.rows]
    return ("\n".join(lines) + "\n").encode("utf-8")


def parse(data: bytes) -> CodedMessage:
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise FormatError(f"coded file is not UTF-8: {exc}") from None
    if not text.endswith("\n"):
        raise FormatError("coded file must end with a newline")
    lines = text[:-1].split("\n")

    header = _HEADER.fullmatch(lines[0])
    if header is None:
        raise HeaderError(f"bad header {lines[0]!r}, expected '{MAGIC} m=<m>'")
    m = int(header.group(1))

    body = lines[1:]
    if len(body) != m * m:
        raise RowCountError(f"m={m} needs {m * m} rows, got {len(body)}")

    rows = []
    for lineno, line in enumerate(body, 2):
        fields = line.split(",")
        if len(fields) != 9:
            raise FieldCountError(f"line {lineno}: expected 9 fields, got {len(fields)}")
        for f in fields:
            if not _INT.fullmatch(f):
                raise FieldSyntaxError(f"line {lineno}: {f!r} is not an integer")
        d, *disclosed = map(int, fields)
        for v in disclosed:
            if not 0 <= v < MODULUS:
                raise EntryRangeError(
                    f"line {lineno}: disclosed entry {v} outside [0, {MODULUS - 1}]"
                )
        rows.append(CodedRow(d, tuple(disclosed)))
    return CodedMessage(m, tuple(rows))
