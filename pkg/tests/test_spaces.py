import random
from fractions import Fraction

import pytest

from orthorep.errors import Isotropic, NotInvertibleGram, NotOrthosymmetric
from orthorep.fields import GF, QQ
from orthorep.linalg import Matrix, inverse
from orthorep.spaces import (Subspace, adjoint, all_subspaces, fact9_check,
                             image, is_closed, kernel, ortho_projection,
                             orthogonal, subspaces_orthogonal_to_each_other,
                             validate_space)


def q2():
    return validate_space(QQ, 2, Matrix.identity(QQ, 2))


def q3():
    return validate_space(QQ, 3, Matrix.identity(QQ, 3))


def q2w():
    return validate_space(QQ, 2, Matrix.diagonal(QQ, [1, 2]))


def span(field, dim, *rows):
    return Subspace.from_vectors(field, dim, list(rows))


# ------------------------------------------------------------- validation

def test_q2_dot_valid():
    q2()


def test_gf3_square_valid():
    validate_space(GF(3), 2, Matrix.identity(GF(3), 2))


def test_gf5_square_isotropic_witness():
    with pytest.raises(Isotropic) as ex:
        validate_space(GF(5), 2, Matrix.identity(GF(5), 2))
    assert tuple(x.code for x in ex.value.vector) == (1, 2)


def test_gf2_square_isotropic():
    with pytest.raises(Isotropic):
        validate_space(GF(2), 2, Matrix.identity(GF(2), 2))


def test_singular_gram_rejected():
    with pytest.raises(NotInvertibleGram):
        validate_space(QQ, 2, Matrix(QQ, [[1, 1], [1, 1]]))


def test_non_hermitian_rejected():
    with pytest.raises(NotOrthosymmetric):
        validate_space(QQ, 2, Matrix(QQ, [[1, 1], [0, 1]]))


def test_indefinite_rational_rejected():
    with pytest.raises(Isotropic) as ex:
        validate_space(QQ, 2, Matrix.diagonal(QQ, [1, -1]))
    assert ex.value.vector is not None  # an explicit isotropic vector


def test_negative_definite_accepted():
    validate_space(QQ, 2, Matrix.diagonal(QQ, [-1, -2]))


def test_hermitian_space_over_gf9():
    f = GF(3, 2)
    validate_space(f, 1, Matrix.identity(f, 1), sigma="frobenius")


# -------------------------------------------------------------- orthogonal

def test_orthogonal_examples():
    v = q2()
    assert orthogonal(v, span(QQ, 2, [1, 0])) == span(QQ, 2, [0, 1])
    assert orthogonal(v, v.full()) == v.zero_subspace()
    w = q2w()
    assert orthogonal(w, span(QQ, 2, [1, 0])) == span(QQ, 2, [0, 1])
    assert orthogonal(w, span(QQ, 2, [1, 1])) == span(QQ, 2, [2, -1])


def test_double_perp_identity():
    rng = random.Random(7)
    v = q3()
    for _ in range(30):
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(3)]
                for _ in range(rng.randint(0, 3))]
        u = Subspace(QQ, 3, Matrix(QQ, rows, ncols=3))
        assert orthogonal(v, orthogonal(v, u)) == u
        assert is_closed(v, u)
        assert u.dim() + orthogonal(v, u).dim() == 3


def test_orthogonal_order_reversing():
    v = q3()
    u1 = span(QQ, 3, [1, 0, 0])
    u2 = span(QQ, 3, [1, 0, 0], [0, 1, 0])
    assert u2.contains(u1)
    assert orthogonal(v, u1).contains(orthogonal(v, u2))


# ------------------------------------------------------------- projections

def test_projection_examples():
    v = q2()
    assert ortho_projection(v, span(QQ, 2, [1, 0])) == Matrix.unit(QQ, 2, 0, 0)
    half = Fraction(1, 2)
    assert ortho_projection(v, span(QQ, 2, [1, 1])) == \
        Matrix(QQ, [[half, half], [half, half]])
    assert ortho_projection(v, v.zero_subspace()).is_zero()


def test_projection_properties():
    rng = random.Random(8)
    for space in (q2(), q2w(), q3()):
        for _ in range(20):
            rows = [[Fraction(rng.randint(-3, 3)) for _ in range(space.dim)]
                    for _ in range(rng.randint(0, space.dim))]
            u = Subspace(QQ, space.dim, Matrix(QQ, rows, ncols=space.dim))
            p = ortho_projection(space, u)
            assert p @ p == p
            assert adjoint(space, p) == p
            assert image(p) == u
            assert kernel(p) == orthogonal(space, u)
            q = ortho_projection(space, orthogonal(space, u))
            assert p + q == Matrix.identity(QQ, space.dim)


# ----------------------------------------------------------------- adjoint

def test_adjoint_examples():
    v = q2()
    assert adjoint(v, Matrix.unit(QQ, 2, 0, 1)) == Matrix.unit(QQ, 2, 1, 0)
    w = q2w()
    assert adjoint(w, Matrix.unit(QQ, 2, 0, 1)) == \
        Matrix.unit(QQ, 2, 1, 0).scale(Fraction(1, 2))
    assert adjoint(v, Matrix.identity(QQ, 2)) == Matrix.identity(QQ, 2)


def test_adjoint_defining_identity_on_basis():
    for space in (q2(), q2w(), q3()):
        rng = random.Random(9)
        m = Matrix(QQ, [[Fraction(rng.randint(-4, 4))
                         for _ in range(space.dim)]
                        for _ in range(space.dim)])
        ms = adjoint(space, m)
        n = space.dim
        for i in range(n):
            for j in range(n):
                x = tuple(QQ.one if k == i else QQ.zero for k in range(n))
                y = tuple(QQ.one if k == j else QQ.zero for k in range(n))
                mx = tuple((m @ Matrix.column_vector(QQ, x)).column(0))
                msy = tuple((ms @ Matrix.column_vector(QQ, y)).column(0))
                assert space.form(mx, y) == space.form(x, msy)


def test_adjoint_is_involutive_antihomomorphism():
    rng = random.Random(10)
    for space in (q2(), q2w(), q3()):
        for _ in range(100):
            a = Matrix(QQ, [[Fraction(rng.randint(-4, 4))
                             for _ in range(space.dim)]
                            for _ in range(space.dim)])
            b = Matrix(QQ, [[Fraction(rng.randint(-4, 4))
                             for _ in range(space.dim)]
                            for _ in range(space.dim)])
            assert adjoint(space, adjoint(space, a)) == a
            assert adjoint(space, a @ b) == adjoint(space, b) @ adjoint(space, a)
            assert adjoint(space, a + b) == adjoint(space, a) + adjoint(space, b)


def test_hermitian_adjoint_over_gf9():
    f = GF(3, 2)
    space = validate_space(f, 1, Matrix.identity(f, 1), sigma="frobenius")
    sig = f.sigma("frobenius")
    for a in f.elements():
        m = Matrix(f, [[a]])
        assert adjoint(space, m) == Matrix(f, [[sig(a)]])


# ------------------------------------------------------------------- fact 9

def test_fact9_examples():
    v = q2()
    a, b = fact9_check(v, Matrix.unit(QQ, 2, 0, 0))
    assert a and b
    a, b = fact9_check(v, Matrix(QQ, [[1, 1], [0, 0]]))
    assert not a and not b


def test_fact9_random_idempotents_coincide():
    rng = random.Random(11)
    for space in (q2(), q3()):
        n = space.dim
        for _ in range(100):
            while True:
                s = Matrix(QQ, [[Fraction(rng.randint(-4, 4))
                                 for _ in range(n)] for _ in range(n)])
                if inverse(s) is not None:
                    break
            d = Matrix.diagonal(QQ, [rng.randint(0, 1) for _ in range(n)])
            phi = s @ d @ inverse(s)
            assert phi @ phi == phi
            a, b = fact9_check(space, phi)
            assert a == b


# -------------------------------------------------------------- enumeration

def test_subspace_counts():
    assert len(all_subspaces(GF(2), 2)) == 5
    assert len(all_subspaces(GF(3), 2)) == 6
    assert len(all_subspaces(GF(3), 3)) == 28


def test_subspace_membership_and_ops():
    u = span(QQ, 3, [1, 0, 0], [0, 1, 0])
    w = span(QQ, 3, [0, 1, 0], [0, 0, 1])
    inter = u.intersect(w)
    assert inter == span(QQ, 3, [0, 1, 0])
    assert u.add(w).dim() == 3
    assert u.contains_vector((Fraction(2), Fraction(3), Fraction(0)))
    assert not u.contains_vector((0, 0, 1))


def test_orthogonality_of_subspaces():
    v = q3()
    u = span(QQ, 3, [1, 0, 0])
    w = span(QQ, 3, [0, 1, 0])
    assert subspaces_orthogonal_to_each_other(v, u, w)
    assert not subspaces_orthogonal_to_each_other(v, u, u)
