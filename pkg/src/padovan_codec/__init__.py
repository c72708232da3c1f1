"""Padovan Q-matrix block codec.

A message is laid out in a 3m x 3m matrix over a keyed 28-symbol
alphabet, cut into 3x3 blocks, and each block is sent as its determinant
plus its eight non-centre entries.  The decoder recovers every centre
through Q**n, the n-th power of the Padovan companion matrix.
"""

from .alphabet import AlphabetKey, decode_value, encode_char, key_for_block_count
from .blocking import (
    Block,
    MessageMatrix,
    build_matrix,
    canonical_text,
    ensure_minor_condition,
    normalize_text,
    reassemble,
    split_blocks,
)
from .codec import (
    CodedMessage,
    CodedRow,
    PartialE,
    center_equation,
    decode_block,
    decode_message,
    encode_block,
    encode_message,
    oracle_center,
    partial_e,
    solve_center,
)
from .core import Matrix3, det3, minor22, padovan, q_matrix, q_power, q_power_closed_form
from .errors import *  # noqa: F401,F403
from .fileformat import parse, serialize

__version__ = "0.1.0"
