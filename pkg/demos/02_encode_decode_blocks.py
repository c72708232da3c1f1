"""
Encoding and decoding a single block
====================================

A 3x3 block travels as its determinant plus the eight entries around the
centre.  The receiver rebuilds the centre from a linear equation obtained
through Q**n.
"""

from padovan_codec import (
    Matrix3,
    center_equation,
    decode_block,
    encode_block,
    oracle_center,
    partial_e,
    q_power,
)

# "HEL / LO, / ALA" as alphabet values with shift n = 4
B = Matrix3(((11, 8, 15), (15, 18, 3), (4, 15, 4)))
row = encode_block(B)
print("coded row:", row.as_list())  # [2208, 11, 8, 15, 15, 3, 4, 15, 4]

Q4 = q_power(4)
E = partial_e(Q4, row)
print("partial E:", tuple(E))

coefficient, constant = center_equation(Q4, E)
print(f"{row.d} = {constant} + ({coefficient}) * x")

restored = decode_block(row, Q4)
print("restored block:", restored.cells.tolist())

# Since det(Q**n) = 1, expanding det B directly gives the same centre.
print("direct expansion gives", oracle_center(row))
