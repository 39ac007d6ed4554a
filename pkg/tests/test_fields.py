from fractions import Fraction

import pytest

from orthorep.fields import (GF, QQ, field_from_json, field_to_json,
                             scalar_from_json, scalar_to_json)


@pytest.mark.parametrize("p,k", [(2, 1), (3, 1), (5, 1), (2, 2), (3, 2),
                                 (2, 3)])
def test_field_axioms_exhaustive(p, k):
    f = GF(p, k)
    xs = f.elements()
    assert len(xs) == p ** k
    for a in xs:
        assert a + f.zero == a
        assert a * f.one == a
        assert a + (-a) == f.zero
        if a != f.zero:
            assert a * a.inverse() == f.one
        for b in xs:
            assert a + b == b + a
            assert a * b == b * a
            for c in xs:
                assert (a + b) + c == a + (b + c)
                assert (a * b) * c == a * (b * c)
                assert a * (b + c) == a * b + a * c


def test_frobenius_is_order_two_involution():
    f = GF(3, 2)
    sig = f.sigma("frobenius")
    for a in f.elements():
        assert sig(sig(a)) == a
        # the norm lands in the prime subfield
        assert (a * sig(a)).code < 3


def test_frobenius_needs_even_degree():
    with pytest.raises(ValueError):
        GF(3, 1).sigma("frobenius")
    with pytest.raises(ValueError):
        GF(2, 3).sigma("frobenius")


def test_prime_required():
    with pytest.raises(ValueError):
        GF(4)
    with pytest.raises(ValueError):
        GF(6)


def test_gf_interning():
    assert GF(3) is GF(3)
    assert GF(2, 2) == GF(2, 2)


def test_rational_field():
    assert QQ.elem("3/5") == Fraction(3, 5)
    assert QQ.zero == 0 and QQ.one == 1
    assert QQ.elements() is None


def test_scalar_json_roundtrip():
    assert scalar_to_json(Fraction(-7, 3)) == "-7/3"
    assert scalar_from_json(QQ, "-7/3") == Fraction(-7, 3)
    f = GF(9 // 3, 2)
    x = f.elem(5)
    assert scalar_from_json(f, scalar_to_json(x)) == x


def test_field_json_roundtrip():
    assert field_from_json("Q") == QQ
    assert field_to_json(QQ) == "Q"
    assert field_from_json({"p": 3, "k": 2}) == GF(3, 2)
    assert field_to_json(GF(5)) == {"p": 5, "k": 1}
