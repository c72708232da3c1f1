"""
Corrupted rows and the on-disk format
=====================================

The determinant acts as a checksum: altering a disclosed entry usually
makes the centre equation unsolvable over the integers, or pushes the
centre out of the alphabet.
"""

from padovan_codec import CodedRow, decode_block, encode_message, parse, q_power, serialize
from padovan_codec.errors import CodecError

Q4 = q_power(4)
good = CodedRow(2208, (11, 8, 15, 15, 3, 4, 15, 4))
for k in range(8):
    values = list(good.disclosed)
    values[k] += 1
    try:
        block = decode_block(CodedRow(good.d, tuple(values)), Q4)
        print(k, "decoded to centre", block.cells[2, 2], "(det still", good.d, ")")
    except CodecError as exc:
        print(k, type(exc).__name__)

# The file format is plain text with one row per block
data = serialize(encode_message("hello ala"))
print(data.decode(), end="")
print(parse(data) == encode_message("hello ala"))
