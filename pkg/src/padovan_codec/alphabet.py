"""The keyed 28-symbol alphabet.

Symbols are ``A``..``Z``, ``,`` (word separator) and ``0`` (padding).
A key with shift ``n`` maps the symbol at offset ``k`` to ``(n + k) % 28``.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .errors import SymbolError

SYMBOLS = string.ascii_uppercase + ",0"
SEPARATOR = ","
PAD = "0"
MODULUS = len(SYMBOLS)

_OFFSET = {s: k for k, s in enumerate(SYMBOLS)}

assert MODULUS == 28


@dataclass(frozen=True)
class AlphabetKey:
    n: int

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"key shift must be a positive int, got {self.n!r}")

    @property
    def shift_residue(self) -> int:
        return self.n % MODULUS


def key_for_block_count(m: int) -> AlphabetKey:
    """Key for a 3m x 3m message: n = 4 when m == 1, else m**2."""
    if isinstance(m, bool) or not isinstance(m, int) or m < 1:
        raise ValueError(f"block count m must be a positive int, got {m!r}")
    return AlphabetKey(4 if m == 1 else m * m)


def encode_char(c: str, key: AlphabetKey) -> int:
    try:
        offset = _OFFSET[c]
    except (KeyError, TypeError):
        raise SymbolError(f"symbol {c!r} is not in the alphabet") from None
    return (key.n + offset) % MODULUS


def decode_value(v: int, key: AlphabetKey) -> str:
    if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < MODULUS:
        raise SymbolError(f"value {v!r} is outside [0, {MODULUS - 1}]")
    return SYMBOLS[(v - key.n) % MODULUS]
