"""Command-line front end: ``encode``, ``decode`` and ``inspect``.

Exit status is 0 on success, 1 for unreadable or malformed input, 2 when
the block arithmetic fails (singular system, inexact or out-of-range
centre).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .alphabet import key_for_block_count
from .codec import decode_message, encode_message
from .core import minor22
from .errors import CodecError, InputError
from .fileformat import parse, serialize

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CODEC = 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="padovan-codec", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    enc = sub.add_parser("encode", help="plaintext file -> coded file")
    enc.add_argument("--input", required=True, type=Path)
    enc.add_argument("--output", required=True, type=Path)

    dec = sub.add_parser("decode", help="coded file -> plaintext file")
    dec.add_argument("--input", required=True, type=Path)
    dec.add_argument("--output", required=True, type=Path)

    ins = sub.add_parser("inspect", help="summarise a coded file")
    ins.add_argument("--input", required=True, type=Path)
    return parser


def read_plaintext(path: Path) -> str:
    """Read a message file; line breaks act as word separators."""
    text = path.read_bytes().decode("utf-8")
    lines = text.splitlines()
    while lines and not lines[-1]:
        lines.pop()
    return " ".join(lines)


def _encode(args) -> None:
    try:
        text = read_plaintext(args.input)
    except UnicodeDecodeError as exc:
        raise InputError(f"{args.input}: not UTF-8 ({exc})") from None
    args.output.write_bytes(serialize(encode_message(text)))


def _decode(args) -> None:
    coded = parse(args.input.read_bytes())
    args.output.write_text(decode_message(coded) + "\n", encoding="utf-8")


def _inspect(args) -> None:
    coded = parse(args.input.read_bytes())
    print(f"m={coded.m}")
    print(f"n={key_for_block_count(coded.m).n}")
    for i, row in enumerate(coded.rows, 1):
        minor = minor22(row.with_center(0))
        if minor:
            status = "ok"
        elif len(set(row.disclosed)) == 1:
            status = "uniform"
        else:
            status = "zero"
        print(f"row {i}: d={row.d} minor22={minor} {status}")


_COMMANDS = {"encode": _encode, "decode": _decode, "inspect": _inspect}


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    try:
        _COMMANDS[args.command](args)
    except CodecError as exc:
        print(f"error: corrupt or undecodable data: {exc}", file=sys.stderr)
        return EXIT_CODEC
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
