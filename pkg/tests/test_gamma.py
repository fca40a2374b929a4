import random

import pytest
from hypothesis import given, strategies as st

from _oracles import det_leibniz
from threshdist.exactpoly import IntPolynomial as P, X
from threshdist.gamma import (
    closed_form_sign,
    enumerate_index_sequences,
    gamma_enumerated,
    gamma_table,
    gamma_value,
    is_admissible,
    p_closed_form,
    p_tridiag_recurrence,
)

Z = X + 2
Y = X + 1


def tridiag_matrix(a, x, y):
    """The n-by-n tridiagonal matrix written out entry by entry."""
    n = len(a)
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        odd = i % 2 == 0  # 1-based odd row
        m[i][i] = a[i] if odd else -a[i]
        if i + 1 < n:
            m[i][i + 1] = -y if odd else -x
        if i > 0:
            m[i][i - 1] = y if odd else x
    m[0][0] += x
    return m


def test_index_sets_from_text():
    assert enumerate_index_sequences(7, 4) == [(2, 3, 4, 5), (2, 3, 4, 7), (2, 3, 6, 7), (2, 5, 6, 7), (4, 5, 6, 7)]
    assert enumerate_index_sequences(6, 4) == [(1, 2, 3, 4), (1, 2, 3, 6), (1, 2, 5, 6), (1, 4, 5, 6), (3, 4, 5, 6)]
    assert enumerate_index_sequences(5, 0) == [()]
    assert enumerate_index_sequences(3, 5) == []


def test_index_sets_end_with_parity_of_n():
    assert all(t[-1] % 2 == 1 for l in range(1, 8) for t in enumerate_index_sequences(7, l))
    assert all(t[-1] % 2 == 0 for l in range(1, 7) for t in enumerate_index_sequences(6, l))


@pytest.mark.parametrize("n", range(1, 13))
def test_counts_and_parity(n):
    for l in range(n + 1):
        seqs = enumerate_index_sequences(n, l)
        assert all(is_admissible(t, n) for t in seqs)
        assert gamma_value([1] * n, l) == len(seqs)


def test_gamma_examples():
    assert gamma_value([1] * 7, 4) == 5
    assert gamma_value([3, 4, 1, 2], 0) == 1
    # I(4,2) = {(1,2), (1,4), (3,4)}
    assert enumerate_index_sequences(4, 2) == [(1, 2), (1, 4), (3, 4)]
    assert gamma_value([3, 4, 1, 2], 2) == 3 * 4 + 3 * 2 + 1 * 2 == 20
    assert gamma_value([3, 4, 1, 2], 9) == 0


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=10), st.data())
def test_dp_matches_enumeration(a, data):
    l = data.draw(st.integers(0, len(a)))
    assert gamma_value(a, l) == gamma_enumerated(a, l)


def test_gamma_table():
    t = gamma_table([3, 4, 1, 2])
    assert t.values == (1, 6, 20, 8, 24)
    assert t.to_json()["values"] == ["1", "6", "20", "8", "24"]


def test_tridiag_small():
    assert p_tridiag_recurrence([5], X, 0) == X + 5
    assert p_tridiag_recurrence([1, 2], 3, 2) == -2
    # (1,1,1,1) at x = y = 1 against a permutation expansion
    assert p_tridiag_recurrence([1, 1, 1, 1], 1, 1) == det_leibniz(tridiag_matrix([1, 1, 1, 1], 1, 1)) == -2


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6), st.integers(-4, 4), st.integers(-4, 4))
def test_tridiag_matches_permutation_expansion(a, x, y):
    assert p_tridiag_recurrence(a, x, y) == det_leibniz(tridiag_matrix(a, x, y))


def test_closed_form_n3_expansion():
    a1, a2, a3 = 1, 2, 3
    expected = Z ** 2 * Y + Z * Y * (a1 + a3) - Z * (a2 * a3) - a1 * a2 * a3
    assert p_closed_form([a1, a2, a3], Z, Y) == expected


def test_closed_form_n4_sign_conventions():
    a1, a2, a3, a4 = 2, 3, 5, 7
    a = [a1, a2, a3, a4]
    g = [gamma_value(a, l) for l in range(5)]
    det = p_tridiag_recurrence(a, Z, Y)
    # weights (-1)**(1-k) instead of (-1)**(m-k): the negated determinant
    flipped = (-g[4] + Z * Y * g[2] - Z ** 2 * Y ** 2 * g[0]) + Z * (-g[3] + Z * Y * g[1])
    assert flipped == -det
    # the same expansion with the constant term's sign flipped
    flipped_const = (Z ** 2 * Y ** 2 - Z ** 2 * Y * (a2 + a4) - Z * Y * (a1 * a2 + a1 * a4 + a3 * a4)
             + Z * (a2 * a3 * a4) - a1 * a2 * a3 * a4)
    assert p_closed_form(a, Z, Y) == det
    assert det - flipped_const == 2 * a1 * a2 * a3 * a4


def test_closed_form_n1():
    assert p_closed_form([7], X, Y) == X + 7


@pytest.mark.parametrize("n", range(1, 11))
def test_closed_form_vs_determinant(n):
    rng = random.Random(1000 + n)
    for _ in range(25):
        a = [rng.randint(-9, 9) for _ in range(n)]
        assert p_closed_form(a, Z, Y) == closed_form_sign(n) * p_tridiag_recurrence(a, Z, Y)
        z = P([rng.randint(-3, 3) for _ in range(3)])
        y = P([rng.randint(-3, 3) for _ in range(2)])
        assert p_closed_form(a, z, y) == closed_form_sign(n) * p_tridiag_recurrence(a, z, y)


def test_sign_constant_frozen():
    assert {closed_form_sign(n) for n in range(1, 40)} == {1}
