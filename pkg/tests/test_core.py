import random

import pytest
from hypothesis import given, strategies as st

from padovan_codec.core import (
    Matrix3,
    det3,
    minor22,
    padovan,
    q_matrix,
    q_power,
    q_power_closed_form,
)

from oracles import brute_det, naive_padovan, naive_q_power

PAPER_LISTING = [0, 0, 1, 0, 1, 1, 1, 2, 2, 3, 4, 5, 7, 9, 12, 16, 21, 28, 37, 49, 65]


@pytest.mark.parametrize("k,expected", [(0, 0), (12, 7), (20, 65)])
def test_padovan_examples(k, expected):
    assert padovan(k) == expected


def test_padovan_matches_listing():
    assert [padovan(k) for k in range(len(PAPER_LISTING))] == PAPER_LISTING


def test_padovan_matches_naive_recursion():
    assert [padovan(k) for k in range(30)] == [naive_padovan(k) for k in range(30)]


def test_padovan_recurrence():
    for k in range(3, 501):
        assert padovan(k) == padovan(k - 2) + padovan(k - 3)


def test_padovan_rejects_negative():
    with pytest.raises(ValueError):
        padovan(-1)


def test_padovan_large_index_is_exact():
    # grows past 64 bits well before k = 500
    assert padovan(500).bit_length() > 64
    assert padovan(500) == padovan(498) + padovan(497)


def test_q_matrix():
    Q = q_matrix()
    assert Q.tolist() == [[0, 1, 0], [0, 0, 1], [1, 1, 0]]
    assert det3(Q) == 1
    assert tuple(sum(r) for r in Q) == (1, 1, 2)


def test_q_power_small():
    assert q_power(1) == q_matrix()
    assert q_power(4).tolist() == [[0, 1, 1], [1, 1, 1], [1, 2, 1]]
    assert q_power(7)[3, 2] == 4 == padovan(10)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 7, 8, 13, 31])
def test_q_power_vs_iterated_product(n):
    assert q_power(n).tolist() == naive_q_power(n)


@pytest.mark.parametrize("n", [0, -3])
def test_q_power_rejects_nonpositive(n):
    with pytest.raises(ValueError):
        q_power(n)


def test_q_power_closed_form_and_unit_det():
    for n in range(1, 201):
        Qn = q_power(n)
        assert Qn == q_power_closed_form(n)
        assert det3(Qn) == 1


@given(st.integers(1, 60), st.integers(1, 60))
def test_q_power_additive(a, b):
    assert q_power(a + b) == q_power(a) @ q_power(b)


def test_det3_examples():
    assert det3(q_matrix()) == 1
    assert det3(Matrix3(((11, 8, 15), (15, 18, 3), (4, 15, 4)))) == 2208
    assert det3(Matrix3.identity()) == 1


def test_det3_vs_permutation_sum():
    rng = random.Random(1234)
    for _ in range(1000):
        rows = [[rng.randint(-100, 100) for _ in range(3)] for _ in range(3)]
        assert det3(Matrix3(rows)) == brute_det(rows)


def test_minor22_examples():
    assert minor22(Matrix3(((11, 8, 15), (15, 18, 3), (4, 15, 4)))) == -16
    assert minor22(Matrix3.identity()) == 1
    assert minor22(Matrix3(((4, 15, 4), (26, 13, 8), (17, 4, 17)))) == 0


def test_matrix3_indexing_is_one_based():
    M = Matrix3.from_labels(range(1, 10))
    assert M[1, 1] == 1 and M[2, 2] == 5 and M[3, 3] == 9
    assert [M.label(k) for k in range(1, 10)] == list(range(1, 10))
    with pytest.raises(IndexError):
        M[0, 1]


def test_matrix3_rejects_bad_shape_and_types():
    with pytest.raises(ValueError):
        Matrix3(((1, 2), (3, 4)))
    with pytest.raises(TypeError):
        Matrix3(((1.0, 0, 0), (0, 1, 0), (0, 0, 1)))
