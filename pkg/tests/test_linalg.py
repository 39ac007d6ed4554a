import random
from fractions import Fraction
from itertools import permutations

import pytest

from orthorep.fields import GF, QQ
from orthorep.linalg import (Matrix, column_space, det, intersect_row_spaces,
                             inverse, kron_solve_axa, left_nullspace,
                             matrices_over, nullspace, rank, row_space,
                             solve_right, vectors_over)


def rnd(rng, n, m=None):
    m = m or n
    return Matrix(QQ, [[Fraction(rng.randint(-5, 5)) for _ in range(m)]
                       for _ in range(n)])


def test_shapes_and_empty():
    e = Matrix(QQ, [], ncols=4)
    assert e.nrows == 0 and e.ncols == 4
    t = e.transpose()
    assert t.nrows == 4 and t.ncols == 0
    assert row_space(e).nrows == 0


def test_det_against_permutation_expansion():
    rng = random.Random(1)
    for _ in range(20):
        m = rnd(rng, 3)
        # independent oracle: Leibniz expansion over all 6 permutations
        total = Fraction(0)
        for perm in permutations(range(3)):
            sign = 1
            for i in range(3):
                for j in range(i + 1, 3):
                    if perm[i] > perm[j]:
                        sign = -sign
            term = Fraction(sign)
            for i in range(3):
                term *= m.rows[i][perm[i]]
            total += term
        assert det(m) == total


def test_inverse_and_solve():
    rng = random.Random(2)
    for _ in range(20):
        m = rnd(rng, 3)
        inv = inverse(m)
        if det(m) == 0:
            assert inv is None
            continue
        assert m @ inv == Matrix.identity(QQ, 3)
        b = rnd(rng, 3, 2)
        x = solve_right(m, b)
        assert m @ x == b


def test_solve_detects_inconsistency():
    a = Matrix(QQ, [[1, 0], [1, 0]])
    b = Matrix(QQ, [[1], [2]])
    assert solve_right(a, b) is None


def test_nullspace_property():
    rng = random.Random(3)
    for _ in range(20):
        m = rnd(rng, 3, 4)
        ns = nullspace(m)
        assert ns.nrows == 4 - rank(m)
        for row in ns.rows:
            assert (m @ Matrix.column_vector(QQ, row)).is_zero()
        lns = left_nullspace(m)
        for row in lns.rows:
            assert (Matrix.row_vector(QQ, row) @ m).is_zero()


def test_rref_canonical_row_space():
    a = Matrix(QQ, [[2, 4], [1, 2]])
    b = Matrix(QQ, [[1, 2]])
    assert row_space(a) == row_space(b)
    assert rank(a) == 1


def test_intersection_oracle():
    rng = random.Random(4)
    for _ in range(25):
        u = row_space(rnd(rng, 2, 4))
        w = row_space(rnd(rng, 2, 4))
        inter = intersect_row_spaces(u, w)
        # containment in both
        for row in inter.rows:
            assert rank(u.vstack(Matrix.row_vector(QQ, row))) == u.nrows
            assert rank(w.vstack(Matrix.row_vector(QQ, row))) == w.nrows
        # dimension formula dim(U) + dim(W) = dim(U+W) + dim(U meet W)
        summed = rank(u.vstack(w))
        assert u.nrows + w.nrows == summed + inter.nrows


def test_quasi_inverse_solver():
    rng = random.Random(5)
    for _ in range(25):
        a = rnd(rng, 3)
        x = kron_solve_axa(a)
        assert x is not None
        assert a @ x @ a == a


def test_finite_field_matrices():
    g2 = GF(2)
    all16 = list(matrices_over(g2, 2, 2))
    assert len(all16) == 16
    assert len(set(all16)) == 16
    assert len(list(vectors_over(GF(3), 2))) == 9
    assert len(list(vectors_over(GF(3), 2, include_zero=False))) == 8


def test_column_space():
    a = Matrix(QQ, [[1, 1], [0, 0]])
    assert column_space(a) == Matrix(QQ, [[1, 0]])


def test_gf_linear_algebra():
    g3 = GF(3)
    m = Matrix(g3, [[1, 2], [2, 1]])
    inv = inverse(m)
    assert inv is not None
    assert m @ inv == Matrix.identity(g3, 2)
    singular = Matrix(g3, [[1, 2], [2, 4 % 3]])
    assert inverse(singular) is None
