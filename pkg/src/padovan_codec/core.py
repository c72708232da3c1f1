"""Exact integer arithmetic for the Padovan sequence and its Q-matrix.

Everything here works on Python ints, so Q**n never overflows no matter
how large n gets.  Matrix positions are 1-based to match the q1..q9 /
b1..b9 row-major labels used throughout the codec.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Matrix3",
    "padovan",
    "q_matrix",
    "q_power",
    "q_power_closed_form",
    "det3",
    "minor22",
]


@dataclass(frozen=True)
class Matrix3:
    """Immutable 3x3 matrix of unbounded integers.

    ``M[r, c]`` indexes with 1-based row/column, ``M.label(k)`` returns the
    k-th entry in row-major order (k = 1..9).
    """

    rows: tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Matrix3 needs exactly 3 rows of 3 entries")
        for r in rows:
            for v in r:
                if isinstance(v, bool) or not isinstance(v, int):
                    raise TypeError(f"Matrix3 entries must be int, got {v!r}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_labels(cls, values: Sequence[int]) -> "Matrix3":
        """Build from nine row-major values (b1..b9)."""
        if len(values) != 9:
            raise ValueError(f"expected 9 values, got {len(values)}")
        v = list(values)
        return cls((tuple(v[0:3]), tuple(v[3:6]), tuple(v[6:9])))

    @classmethod
    def identity(cls) -> "Matrix3":
        return cls(((1, 0, 0), (0, 1, 0), (0, 0, 1)))

    def __getitem__(self, pos: tuple[int, int]) -> int:
        r, c = pos
        if not (1 <= r <= 3 and 1 <= c <= 3):
            raise IndexError(f"position {pos} outside 1..3")
        return self.rows[r - 1][c - 1]

    def label(self, k: int) -> int:
        if not 1 <= k <= 9:
            raise IndexError(f"label {k} outside 1..9")
        return self.rows[(k - 1) // 3][(k - 1) % 3]

    def flat(self) -> tuple[int, ...]:
        return tuple(v for r in self.rows for v in r)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __matmul__(self, other: "Matrix3") -> "Matrix3":
        if not isinstance(other, Matrix3):
            return NotImplemented
        a, b = self.rows, other.rows
        return Matrix3(tuple(
            tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j]
                  for j in range(3))
            for i in range(3)
        ))

    def __iter__(self):
        return iter(self.rows)


# Grown on demand; index k holds P_k.
_PADOVAN = [0, 0, 1]


def padovan(k: int) -> int:
    """Return P_k with P_0 = P_1 = 0, P_2 = 1, P_k = P_{k-2} + P_{k-3}."""
    if isinstance(k, bool) or not isinstance(k, int):
        raise TypeError("padovan index must be an int")
    if k < 0:
        raise ValueError(f"padovan index must be >= 0, got {k}")
    seq = _PADOVAN
    while len(seq) <= k:
        seq.append(seq[-2] + seq[-3])
    return seq[k]


def q_matrix() -> Matrix3:
    """The companion matrix of the Padovan recurrence."""
    return Matrix3(((0, 1, 0), (0, 0, 1), (1, 1, 0)))


def q_power(n: int) -> Matrix3:
    """Q**n by repeated squaring."""
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError("exponent must be an int")
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    result = None
    base = q_matrix()
    while n:
        if n & 1:
            result = base if result is None else result @ base
        n >>= 1
        if n:
            base = base @ base
    return result


def q_power_closed_form(n: int) -> Matrix3:
    """Q**n written out from Padovan numbers; used as a cross-check."""
    if n < 1:
        raise ValueError(f"exponent must be >= 1, got {n}")
    p = padovan
    return Matrix3((
        (p(n - 1), p(n + 1), p(n)),
        (p(n), p(n + 2), p(n + 1)),
        (p(n + 1), p(n + 3), p(n + 2)),
    ))


def det3(m: Matrix3 | Iterable[Iterable[int]]) -> int:
    """Determinant by cofactor expansion along the first row."""
    (a, b, c), (d, e, f), (g, h, i) = m
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def minor22(m: Matrix3 | Iterable[Iterable[int]]) -> int:
    """Minor of the centre entry: b1*b9 - b3*b7."""
    (a, _, c), _, (g, _, i) = m
    return a * i - c * g
