"""Block encoding and decoding.

A block B travels as ``(det B, b1, b2, b3, b4, b6, b7, b8, b9)``.  The
receiver forms the partial product E = Q**n B without the unknown centre
b5, which leaves det(E + b5 * q_col2 e_col2) = det B linear in b5, and
solves for it.  Because det(Q**n) = 1 the root is the same one obtained
from expanding det B directly; :func:`oracle_center` does exactly that
and serves as an independent check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .alphabet import MODULUS, PAD, SEPARATOR, decode_value, key_for_block_count
from .blocking import (
    Block,
    ensure_minor_condition,
    is_uniform,
    normalize_text,
    reassemble,
    split_blocks,
)
from .core import Matrix3, det3, minor22, q_power
from .errors import (
    CenterRangeError,
    CodecError,
    MinorConditionError,
    NonIntegerSolutionError,
    ShapeError,
    SingularSystemError,
    SymbolError,
)

__all__ = [
    "CodedRow",
    "CodedMessage",
    "PartialE",
    "DISCLOSED_LABELS",
    "encode_block",
    "partial_e",
    "center_equation",
    "solve_center",
    "decode_block",
    "oracle_center",
    "encode_message",
    "decode_message",
]

DISCLOSED_LABELS = (1, 2, 3, 4, 6, 7, 8, 9)


@dataclass(frozen=True)
class CodedRow:
    d: int
    disclosed: tuple[int, ...]

    def __post_init__(self):
        disclosed = tuple(self.disclosed)
        if len(disclosed) != 8:
            raise ValueError(f"a coded row discloses 8 entries, got {len(disclosed)}")
        for v in disclosed:
            if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < MODULUS:
                raise SymbolError(f"disclosed entry {v!r} outside [0, {MODULUS - 1}]")
        if isinstance(self.d, bool) or not isinstance(self.d, int):
            raise TypeError(f"determinant must be an int, got {self.d!r}")
        object.__setattr__(self, "disclosed", disclosed)

    def b(self, k: int) -> int:
        """Disclosed entry by its row-major label; label 5 is withheld."""
        if k == 5:
            raise KeyError("the centre entry b5 is not transmitted")
        return self.disclosed[DISCLOSED_LABELS.index(k)]

    def with_center(self, x: int) -> Matrix3:
        v = list(self.disclosed)
        return Matrix3.from_labels(v[:4] + [x] + v[4:])

    def as_list(self) -> list[int]:
        return [self.d, *self.disclosed]


@dataclass(frozen=True)
class CodedMessage:
    m: int
    rows: tuple[CodedRow, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))


class PartialE(NamedTuple):
    """Q**n B with the b5 terms dropped from the middle column."""

    e1: int
    e2: int
    e3: int
    e4: int
    e5: int
    e6: int
    e7: int
    e8: int
    e9: int


def encode_block(block: Block | Matrix3) -> CodedRow:
    B = block.cells if isinstance(block, Block) else block
    if minor22(B) == 0 and not is_uniform(B):
        raise MinorConditionError(
            f"block {B.tolist()} has zero centre minor; its centre cannot be recovered"
        )
    return CodedRow(det3(B), tuple(B.label(k) for k in DISCLOSED_LABELS))


def partial_e(Qn: Matrix3, row: CodedRow) -> PartialE:
    q1, q2, q3, q4, q5, q6, q7, q8, q9 = Qn.flat()
    b1, b2, b3, b4, b6, b7, b8, b9 = row.disclosed
    return PartialE(
        e1=q1 * b1 + q2 * b4 + q3 * b7,
        e2=q1 * b2 + q3 * b8,
        e3=q1 * b3 + q2 * b6 + q3 * b9,
        e4=q4 * b1 + q5 * b4 + q6 * b7,
        e5=q4 * b2 + q6 * b8,
        e6=q4 * b3 + q5 * b6 + q6 * b9,
        e7=q7 * b1 + q8 * b4 + q9 * b7,
        e8=q7 * b2 + q9 * b8,
        e9=q7 * b3 + q8 * b6 + q9 * b9,
    )


def center_equation(Qn: Matrix3, E: PartialE) -> tuple[int, int]:
    """(coefficient, constant) of the decode equation ``d = coefficient*x + constant``.

    This is det(Q**n B) expanded along its middle column, whose entries are
    e2 + q2*x, e5 + q5*x, e8 + q8*x.
    """
    q2, q5, q8 = Qn[1, 2], Qn[2, 2], Qn[3, 2]
    c2 = E.e6 * E.e7 - E.e4 * E.e9
    c5 = E.e1 * E.e9 - E.e7 * E.e3
    c8 = E.e3 * E.e4 - E.e1 * E.e6
    return q2 * c2 + q5 * c5 + q8 * c8, E.e2 * c2 + E.e5 * c5 + E.e8 * c8


def _exact_root(coefficient: int, constant: int, d: int) -> int:
    if coefficient == 0:
        raise SingularSystemError("centre coefficient is zero; b5 is undetermined")
    x, r = divmod(d - constant, coefficient)
    if r:
        raise NonIntegerSolutionError(
            f"{d} = {coefficient}*x + {constant} has no integer solution; row is corrupt"
        )
    return x


def solve_center(Qn: Matrix3, E: PartialE, d: int) -> int:
    coefficient, constant = center_equation(Qn, E)
    return _exact_root(coefficient, constant, d)


def oracle_center(row: CodedRow) -> int:
    """Centre entry from det B = b5*(b1*b9 - b3*b7) + det(B with b5 = 0)."""
    return _exact_root(minor22(row.with_center(0)), det3(row.with_center(0)), row.d)


def decode_block(row: CodedRow, Qn: Matrix3, index: int = 1) -> Block:
    try:
        x = solve_center(Qn, partial_e(Qn, row), row.d)
    except SingularSystemError:
        # a uniform block has determinant 0 and its centre equals its neighbours
        if len(set(row.disclosed)) == 1 and row.d == 0:
            x = row.disclosed[0]
        else:
            raise
    if not 0 <= x < MODULUS:
        raise CenterRangeError(f"recovered centre {x} outside [0, {MODULUS - 1}]")
    B = row.with_center(x)
    if det3(B) != row.d:
        raise CodecError(f"reconstructed block has det {det3(B)}, expected {row.d}")
    return Block(index, B)


def encode_message(text: str) -> CodedMessage:
    symbols, M = ensure_minor_condition(normalize_text(text))
    return CodedMessage(M.m, tuple(encode_block(b) for b in split_blocks(M)))


def decode_blocks(coded: CodedMessage) -> list[Block]:
    m = coded.m
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ShapeError(f"block count must be a positive int, got {m!r}")
    if len(coded.rows) != m * m:
        raise ShapeError(f"m={m} needs {m * m} rows, got {len(coded.rows)}")
    Qn = q_power(key_for_block_count(m).n)
    return [decode_block(row, Qn, i) for i, row in enumerate(coded.rows, 1)]


def decode_message(coded: CodedMessage) -> str:
    """Recover the canonical text: padding dropped, separators back to spaces."""
    blocks = decode_blocks(coded)
    M = reassemble(blocks, coded.m)
    key = key_for_block_count(coded.m)
    symbols = "".join(decode_value(v, key) for r in M.entries for v in r)
    return symbols.replace(PAD, "").replace(SEPARATOR, " ")
