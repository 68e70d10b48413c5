import math
import random
from fractions import Fraction

import pytest

from wildrep.cyclo12 import (
    I, I_SQRT3, SQRT3, ZETA, ZETA3, ZETA4, Cyclo12, chi_frob, constants, sqrt,
)
from wildrep.errors import DivisionByZero, InvalidArgument


def _random(rng: random.Random) -> Cyclo12:
    return Cyclo12([Fraction(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(4)])


@pytest.fixture
def triples():
    rng = random.Random(12)
    return [(_random(rng), _random(rng), _random(rng)) for _ in range(100)]


def test_defining_relations():
    assert I * I == -1
    assert I_SQRT3 * I_SQRT3 == -3
    assert SQRT3 * SQRT3 == 3
    assert ZETA ** 4 == ZETA ** 2 - 1
    assert ZETA ** 12 == 1
    assert ZETA ** 6 == -1


def test_constants():
    c = constants()
    assert c.zeta3 ** 3 == 1 and c.zeta3 != 1
    assert c.zeta4 ** 2 == -1
    assert c.sqrt3 ** 2 == 3
    assert c.zeta3 == (I_SQRT3 - 1) / 2
    assert c.i_sqrt3 == c.i * c.sqrt3


def test_conj():
    assert I_SQRT3.conj() == -I_SQRT3
    assert ZETA3.conj() == ZETA3 ** 2
    assert ZETA3.conj() == ZETA3.inv()
    assert SQRT3.conj() == SQRT3


def test_galois():
    assert ZETA.galois(5) == ZETA ** 5
    assert I_SQRT3.galois(5) == -I_SQRT3
    assert I_SQRT3.galois(7) == I_SQRT3
    with pytest.raises(InvalidArgument):
        ZETA.galois(3)


def test_ring_axioms(triples):
    for a, b, c in triples:
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a + b == b + a
        assert a * b == b * a


def test_inverse(triples):
    for a, _, _ in triples:
        if a:
            assert a * a.inv() == 1
            assert a / a == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        Cyclo12().inv()
    with pytest.raises(ZeroDivisionError):
        I / 0


def test_conj_matches_embedding(triples):
    for a, _, _ in triples:
        assert a.conj().conj() == a
        assert abs(a.conj().embed() - a.embed().conjugate()) < 1e-9


def test_embedding_is_multiplicative(triples):
    for a, b, _ in triples:
        assert abs((a * b).embed() - a.embed() * b.embed()) < 1e-9


def test_embed():
    assert Cyclo12.rational(1).approx() == (1.0, 0.0)
    re, im = I_SQRT3.approx()
    assert re == 0.0 and math.isclose(im, math.sqrt(3))
    re, im = ZETA3.approx()
    assert math.isclose(re, -0.5) and math.isclose(im, math.sqrt(3) / 2)
    assert (-I_SQRT3).approx()[1] < 0


@pytest.mark.parametrize('n', range(1, 9))
def test_chi_frob_norm(n):
    chi = chi_frob(n)
    assert chi * chi.conj() == 3 ** n


def test_chi_frob():
    assert chi_frob(1) == I_SQRT3
    assert chi_frob(1).coords == (-1, 0, 2, 0)
    assert chi_frob(2) == -3
    assert chi_frob(4) == 9
    for n in (2, 4, 6):
        assert chi_frob(n) == (-3) ** (n // 2)
    with pytest.raises(InvalidArgument):
        chi_frob(0)


def test_sqrt():
    assert sqrt(-12) == 2 * I_SQRT3
    assert sqrt(9) == 3
    assert sqrt(-4) == 2 * I
    assert sqrt(Fraction(3, 4)) == SQRT3 / 2
    assert sqrt(0) == 0
    assert sqrt(2) is None
    for q in (-12, 9, -4, 27, -27):
        assert sqrt(q) ** 2 == q


def test_rational_hash_and_str():
    assert hash(Cyclo12.rational(5)) == hash(Fraction(5))
    assert Cyclo12.rational(-3).is_rational()
    assert Cyclo12.rational(Fraction(1, 2)).to_rational() == Fraction(1, 2)
    assert str(I_SQRT3) == '-1 + 2*z^2'
    assert ZETA4.exact() == ('0', '0', '0', '1')
    with pytest.raises(InvalidArgument):
        I.to_rational()


def test_norm(triples):
    assert I_SQRT3.norm() == 9
    assert ZETA.norm() == 1
    assert Cyclo12.rational(Fraction(-2, 3)).norm() == Fraction(16, 81)
    for a, b, _ in triples:
        assert (a * b).norm() == a.norm() * b.norm()
        if a:
            assert a.inv().norm() == 1 / a.norm()
