"""
Whole messages and the zero-minor fix
=====================================

Text is uppercased, spaces become commas, the symbols fill a 3m x 3m
matrix, and every 3x3 tile is coded separately.  A tile whose centre
minor is zero cannot be decoded, so padding is prepended until the
layout works.
"""

from padovan_codec import (
    build_matrix,
    decode_message,
    encode_message,
    ensure_minor_condition,
    minor22,
    normalize_text,
    split_blocks,
)

message = "Hello to be the best do your best"
coded = encode_message(message)
print("m =", coded.m)
for row in coded.rows:
    print(row.as_list())
print(decode_message(coded))

# "ALA JENAN" fills a single block whose centre minor vanishes
symbols = normalize_text("ALA JENAN")
[block] = split_blocks(build_matrix(symbols))
print(block.cells.tolist(), "minor:", minor22(block.cells))

fixed, M = ensure_minor_condition(symbols)
print("after remediation:", fixed)
print("minors:", [minor22(b.cells) for b in split_blocks(M)])
print(decode_message(encode_message("ALA JENAN")))
