import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from flipk.fgab import FgAbGroup
from flipk.intlin import (IntMatrix, cokernel, det, elementary_divisors, flip_matrix,
                          inverse, kernel, kernel_basis, snf, solve)


def M(rows, cols=None):
    return IntMatrix.from_rows(rows, cols)


@st.composite
def matrices(draw, max_dim=6, bound=50):
    r = draw(st.integers(0, max_dim))
    c = draw(st.integers(0, max_dim))
    entries = draw(st.lists(st.integers(-bound, bound), min_size=r * c, max_size=r * c))
    return IntMatrix(r, c, tuple(entries))


def unimodular(rng, n, steps=8):
    data = IntMatrix.identity(n).tolist()
    for _ in range(steps):
        i, j = rng.sample(range(n), 2) if n > 1 else (0, 0)
        if i != j:
            k = rng.randint(-3, 3)
            data[i] = [x + k * y for x, y in zip(data[i], data[j])]
    return M(data, n)


def test_matrix_basics():
    m = M([[1, 2, 3], [4, 5, 6]])
    assert m.shape == (2, 3)
    assert m[1, 2] == 6
    assert m.T.tolist() == [[1, 4], [2, 5], [3, 6]]
    assert (m @ m.T).tolist() == [[14, 32], [32, 77]]
    assert m.apply([1, 0, -1]) == [-2, -2]
    with pytest.raises(ValueError):
        IntMatrix(2, 2, (1, 2, 3))
    with pytest.raises(TypeError):
        IntMatrix(1, 1, (True,))
    assert IntMatrix.zeros(0, 3).shape == (0, 3)


def test_big_integers_survive():
    big = 10**40 + 7
    m = M([[big, 0], [0, big * 3]])
    assert elementary_divisors(m) == (big, 3 * big)
    assert det(m) == 3 * big * big


@pytest.mark.parametrize("rows", [
    [[2, 1], [1, 1]], [[0, 3, 1], [4, 1, 0], [2, 2, 5]], [[5]], [[0, 0], [0, 0]],
])
def test_det_matches_sympy(rows):
    assert det(M(rows)) == Matrix(rows).det()


def test_snf_identity():
    res = snf(IntMatrix.identity(2))
    assert res.s == IntMatrix.identity(2)


@pytest.mark.parametrize("n, expected", [(3, (3, 3)), (2, (1, 4)), (1, (1, 1)), (4, (2, 8))])
def test_flip_matrix_divisors(n, expected):
    res = snf(flip_matrix(n))
    assert res.s == IntMatrix.diagonal(expected)
    assert elementary_divisors(flip_matrix(n)) == expected


def test_flip_matrix_values():
    assert flip_matrix(1).tolist() == [[-1, 0], [-1, 1]]
    assert flip_matrix(2).tolist() == [[-2, 1], [-2, 3]]
    assert flip_matrix(3).tolist() == [[-3, 3], [-3, 6]]
    with pytest.raises(ValueError):
        flip_matrix(0)


def test_elementary_divisors_keep_units_and_zeros():
    assert elementary_divisors(IntMatrix.zeros(2, 2)) == (0, 0)
    assert elementary_divisors(M([[2, 0, 0], [0, 0, 0]])) == (2, 0)
    assert elementary_divisors(IntMatrix.zeros(3, 0)) == ()


def test_snf_is_deterministic():
    m = M([[6, 4, 2], [8, 10, -2], [3, 3, 3]])
    assert snf(m) == snf(m)


@settings(max_examples=300, deadline=None)
@given(matrices())
def test_snf_contracts(m):
    res = snf(m)
    assert res.u @ m @ res.v == res.s
    assert abs(det(res.u)) == 1 and abs(det(res.v)) == 1
    assert res.s.is_diagonal()
    d = res.divisors
    assert all(x >= 0 for x in d)
    for x, y in zip(d, d[1:]):
        assert (x == 0 and y == 0) or (x != 0 and y % x == 0)


@settings(max_examples=200, deadline=None)
@given(matrices(max_dim=5, bound=30))
def test_snf_agrees_with_sympy(m):
    # independent implementation: sympy's invariant factors (nonzero part)
    ours = [d for d in elementary_divisors(m) if d]
    if m.rows and m.cols:
        theirs = [abs(int(x)) for x in invariant_factors(Matrix(m.tolist()), domain=ZZ)]
        theirs = [x for x in theirs if x]
    else:
        theirs = []
    assert ours == theirs


@settings(max_examples=200, deadline=None)
@given(matrices(max_dim=5))
def test_det_is_product_of_divisors(m):
    if m.rows == m.cols and det(m):
        prod = 1
        for d in elementary_divisors(m):
            prod *= d
        assert prod == abs(det(m))


@pytest.mark.parametrize("seed", range(10))
def test_cokernel_basis_independence(seed):
    rng = random.Random(seed)
    r, c = rng.randint(1, 4), rng.randint(1, 4)
    m = IntMatrix(r, c, tuple(rng.randint(-9, 9) for _ in range(r * c)))
    p, q = unimodular(rng, c), unimodular(rng, r)
    g = cokernel(m).group
    assert cokernel(m @ p).group == g
    assert cokernel(q @ m).group == g


def test_cokernel_examples():
    assert cokernel(flip_matrix(3)).group == FgAbGroup(0, (3, 3))
    assert cokernel(flip_matrix(2)).group == FgAbGroup(0, (4,))
    assert cokernel(IntMatrix.zeros(2, 2)).group == FgAbGroup(2)
    assert cokernel(flip_matrix(1)).group == FgAbGroup()


def test_cokernel_base_change_round_trip():
    m = M([[2, 4, 4], [-6, 6, 12], [10, -4, -16]])
    ck = cokernel(m)
    # canonical generator j has coordinates e_j
    for j in range(ck.group.ngens):
        e = [int(i == j) for i in range(ck.group.ngens)]
        assert ck.coordinates(ck.from_canonical.column(j)) == e
    # relations map to zero
    for j in range(m.cols):
        assert ck.coordinates(m.column(j)) == [0] * ck.group.ngens


def test_kernel():
    for n in range(1, 20):
        assert kernel(flip_matrix(n)) == FgAbGroup()
    assert kernel(IntMatrix.zeros(2, 2)) == FgAbGroup(2)
    assert kernel(IntMatrix.identity(3)) == FgAbGroup()
    m = M([[1, 2, 3], [2, 4, 6]])
    kb = kernel_basis(m)
    assert kb.cols == 2
    assert (m @ kb) == IntMatrix.zeros(2, 2)


def test_solve_and_inverse():
    m = M([[2, 0], [0, 3]])
    assert solve(m, [4, 9]) == [2, 3]
    assert solve(m, [1, 0]) is None
    u = M([[2, 1], [1, 1]])
    assert inverse(u) @ u == IntMatrix.identity(2)
    with pytest.raises(ValueError):
        inverse(m)
