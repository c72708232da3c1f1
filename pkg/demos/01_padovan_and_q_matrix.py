"""
Padovan numbers and the Q-matrix
================================

The Padovan companion matrix Q raised to the n-th power is filled with
Padovan numbers, and its determinant stays 1 for every n.
"""

from padovan_codec import det3, padovan, q_matrix, q_power, q_power_closed_form

# The first terms: 0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, ...
print([padovan(k) for k in range(21)])

# Q itself, and its determinant
Q = q_matrix()
print(Q.tolist(), det3(Q))

# Q**4 is the key matrix for messages with one or two blocks per side
print(q_power(4).tolist())

# Repeated squaring agrees with the Padovan closed form, even for big n
n = 300
Qn = q_power(n)
print(Qn == q_power_closed_form(n), det3(Qn))
print("largest entry of Q**300 has", len(str(max(Qn.flat()))), "digits")
