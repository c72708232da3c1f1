"""Turning text into a 3m x 3m message matrix and cutting it into 3x3 blocks."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Sequence

from .alphabet import MODULUS, PAD, SEPARATOR, encode_char, key_for_block_count
from .core import Matrix3, minor22
from .errors import RemediationError, TextError

__all__ = [
    "MessageMatrix",
    "Block",
    "normalize_text",
    "canonical_text",
    "build_matrix",
    "split_blocks",
    "reassemble",
    "ensure_minor_condition",
    "is_uniform",
    "blocks_decodable",
]

_WORDS = re.compile(r"[A-Za-z]+(?: [A-Za-z]+)*")


@dataclass(frozen=True)
class MessageMatrix:
    m: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        entries = tuple(tuple(r) for r in self.entries)
        size = 3 * self.m
        if self.m < 1 or len(entries) != size or any(len(r) != size for r in entries):
            raise ValueError(f"message matrix must be {size}x{size}")
        if any(not 0 <= v < MODULUS for r in entries for v in r):
            raise ValueError(f"message matrix entries must lie in [0, {MODULUS - 1}]")
        object.__setattr__(self, "entries", entries)

    @property
    def size(self) -> int:
        return 3 * self.m


@dataclass(frozen=True)
class Block:
    index: int  # 1-based, row-major tile order
    cells: Matrix3


def normalize_text(raw: str) -> str:
    """Uppercase and replace each inter-word space with ``,``.

    Only ASCII letters separated by single spaces are accepted.
    """
    if not isinstance(raw, str) or not _WORDS.fullmatch(raw):
        raise TextError(
            "text must be ASCII letters with single spaces between words, "
            f"got {raw!r}"
        )
    return raw.upper().replace(" ", SEPARATOR)


def canonical_text(raw: str) -> str:
    """What a roundtrip through the codec gives back for ``raw``."""
    return normalize_text(raw).replace(SEPARATOR, " ")


def _block_count(length: int) -> int:
    m = max(1, math.isqrt(-(-length // 9)))
    while 9 * m * m < length:
        m += 1
    return m


def build_matrix(symbols: Sequence[str]) -> MessageMatrix:
    """Fill the smallest 3m x 3m matrix row-major, padding the tail with ``0``."""
    symbols = list(symbols)
    if not symbols:
        raise TextError("cannot build a message matrix from an empty sequence")
    m = _block_count(len(symbols))
    key = key_for_block_count(m)
    size = 3 * m
    padded = symbols + [PAD] * (size * size - len(symbols))
    values = [encode_char(s, key) for s in padded]
    return MessageMatrix(m, tuple(tuple(values[r * size:(r + 1) * size]) for r in range(size)))


def split_blocks(M: MessageMatrix) -> list[Block]:
    blocks = []
    for tr in range(M.m):
        for tc in range(M.m):
            rows = tuple(tuple(M.entries[3 * tr + i][3 * tc:3 * tc + 3]) for i in range(3))
            blocks.append(Block(len(blocks) + 1, Matrix3(rows)))
    return blocks


def reassemble(blocks: Sequence[Block | Matrix3], m: int) -> MessageMatrix:
    """Inverse of :func:`split_blocks`."""
    if len(blocks) != m * m:
        raise ValueError(f"need {m * m} blocks for m={m}, got {len(blocks)}")
    size = 3 * m
    grid = [[0] * size for _ in range(size)]
    for k, b in enumerate(blocks):
        cells = b.cells if isinstance(b, Block) else b
        tr, tc = divmod(k, m)
        for i in range(3):
            for j in range(3):
                grid[3 * tr + i][3 * tc + j] = cells.rows[i][j]
    return MessageMatrix(m, tuple(map(tuple, grid)))


def is_uniform(cells: Matrix3) -> bool:
    """True when all nine entries are equal (e.g. a block of pure padding)."""
    return len(set(cells.flat())) == 1


def blocks_decodable(M: MessageMatrix, allow_uniform: bool = False) -> bool:
    """Every block has a nonzero centre minor, or is uniform if that is allowed."""
    return all(
        minor22(b.cells) != 0 or (allow_uniform and is_uniform(b.cells))
        for b in split_blocks(M)
    )


def _scan_layout(values: list[int], m: int, strict_only: bool) -> tuple[bool, bool]:
    """(strictly decodable, decodable allowing uniform blocks) for a flat layout."""
    size = 3 * m
    strict = True
    for tr in range(m):
        for tc in range(m):
            top = 3 * tr * size + 3 * tc
            bottom = top + 2 * size
            if values[top] * values[bottom + 2] != values[top + 2] * values[bottom]:
                continue
            if strict_only:
                return False, False
            strict = False
            cells = values[top:top + 3] + values[top + size:top + size + 3] + values[bottom:bottom + 3]
            if cells.count(cells[0]) != 9:
                return False, False
    return strict, True


def ensure_minor_condition(symbols: Sequence[str]) -> tuple[str, MessageMatrix]:
    """Prepend ``0`` one at a time until every block has a nonzero centre minor.

    At most 9*(m+1)**2 symbols are prepended, m being the block count of
    the unmodified message.  Blocks made entirely of padding always have a
    zero minor, so many message lengths admit no such layout at all.  When
    no strict layout exists within the cap, the shortest prefix whose only
    zero-minor blocks are uniform is used instead; the decoder restores
    those without solving for the centre.
    """
    symbols = "".join(symbols)
    if not symbols:
        raise TextError("cannot build a message matrix from an empty sequence")
    cap = 9 * (_block_count(len(symbols)) + 1) ** 2
    encoded: dict[int, tuple[int, list[int]]] = {}
    fallback = None
    for k in range(cap + 1):
        m = _block_count(len(symbols) + k)
        if m not in encoded:
            key = key_for_block_count(m)
            encoded[m] = (encode_char(PAD, key), [encode_char(c, key) for c in symbols])
        pad, body = encoded[m]
        values = [pad] * k + body
        values += [pad] * (9 * m * m - len(values))
        strict, relaxed = _scan_layout(values, m, strict_only=fallback is not None)
        if strict:
            fallback = k
            break
        if relaxed and fallback is None:
            fallback = k
    if fallback is None:
        raise RemediationError(
            f"no decodable layout found after prepending up to {cap} pad symbols"
        )
    candidate = PAD * fallback + symbols
    return candidate, build_matrix(candidate)
