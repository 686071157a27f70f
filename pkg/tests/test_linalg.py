from fractions import Fraction

import pytest

from nsvertex.linalg import inertia, inertia_with_witness, kernel_basis, rank, row_reduce
from nsvertex.scalars import Scalar, rational


def s(x):
    return Scalar.of(x)


def test_kernel_of_rank_one_matrix_with_radicals():
    m = [[s(1), Scalar.root(2)], [Scalar.root(2), s(2)]]
    assert rank(m) == 1
    ker = kernel_basis(m)
    assert len(ker) == 1
    v = ker[0]
    for row in m:
        assert sum((row[j] * v[j] for j in range(2)), s(0)) == s(0)


def test_kernel_of_invertible_matrix_is_trivial():
    m = [[s(2), s(1)], [s(1), s(1)]]
    assert kernel_basis(m) == []
    assert rank(m) == 2


def test_row_reduce_pivots():
    m = [[s(0), s(1), s(2)], [s(0), s(2), s(4)]]
    rows, pivots = row_reduce(m)
    assert pivots == [1]
    assert rows[0] == [s(0), s(1), s(2)]


def test_inertia_diagonal():
    m = [[s(3), s(0), s(0)], [s(0), s(-2), s(0)], [s(0), s(0), s(0)]]
    assert inertia(m) == (1, 1, 1)


def test_inertia_hyperbolic_block():
    m = [[s(0), s(1)], [s(1), s(0)]]
    pos, zero, neg, w = inertia_with_witness(m)
    assert (pos, zero, neg) == (1, 0, 1)
    val = sum(w[i] * Fraction(1) * w[j] * m[i][j].as_fraction()
              for i in range(2) for j in range(2))
    assert val < 0


def test_inertia_witness_on_indefinite_gram():
    m = [[s(1), s(2)], [s(2), s(1)]]
    pos, zero, neg, w = inertia_with_witness(m)
    assert (pos, zero, neg) == (1, 0, 1)
    val = sum(w[i] * w[j] * m[i][j].as_fraction() for i in range(2) for j in range(2))
    assert val < 0


def test_inertia_positive_definite_has_no_witness():
    m = [[s(2), s(1)], [s(1), s(2)]]
    pos, zero, neg, w = inertia_with_witness(m)
    assert (pos, zero, neg) == (2, 0, 0)
    assert w is None


def test_inertia_rejects_radicals():
    with pytest.raises(ValueError):
        inertia([[Scalar.root(2)]])


def test_inertia_zero_matrix():
    m = [[s(0), s(0)], [s(0), s(0)]]
    assert inertia(m) == (0, 2, 0)


def test_inertia_matches_elimination_on_random_symmetric():
    import random

    rng = random.Random(7)
    for _ in range(25):
        n = rng.randint(1, 5)
        raw = [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(n)]
        m = [[s(raw[i][j] + raw[j][i]) for j in range(n)] for i in range(n)]
        pos, zero, neg, w = inertia_with_witness(m)
        assert pos + zero + neg == n
        assert pos + neg == rank(m)
        if w is not None:
            val = sum(w[i] * w[j] * m[i][j].as_fraction()
                      for i in range(n) for j in range(n))
            assert val < 0
        else:
            assert neg == 0
