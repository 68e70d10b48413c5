import random
from fractions import Fraction

import pytest

from tests.conftest import model
from wildrep.errors import InvalidArgument, SingularModelError
from wildrep.models import Reduction
from wildrep.weierstrass import (
    III, III_STAR, INFINITY, I0_STAR, IV, Kodaira, complete_square, invariants,
    potentially_good, tate_algorithm, val3,
)


def test_val3():
    assert val3(9) == 2
    assert val3(1) == 0
    assert val3(Fraction(2, 27)) == -3
    assert val3(-54) == 3
    assert val3(0) == INFINITY


def test_invariants_running_example(wild_model):
    inv = invariants(wild_model)
    assert val3(inv.delta) == 7
    assert inv.j == 0


def test_invariants_good_example():
    inv = invariants(model(0, 0, 0, -1, 0))
    assert inv.delta == 64
    assert inv.j == 1728


def test_singular():
    with pytest.raises(SingularModelError):
        model(0, 0, 0, 0, 0)
    with pytest.raises(SingularModelError):
        model(0, 1, 0, 0, 0)  # node y² = x³ + x²
    with pytest.raises(InvalidArgument):
        model(0, 0, 0, 0, 9, n=0)


def test_discriminant_identity():
    rng = random.Random(5)
    checked = 0
    while checked < 100:
        ainvs = [rng.randint(-6, 6) for _ in range(5)]
        try:
            inv = invariants(model(*ainvs))
        except SingularModelError:
            continue
        assert 1728 * inv.delta == inv.c4 ** 3 - inv.c6 ** 2
        assert inv.j * inv.delta == inv.c4 ** 3
        checked += 1


def test_potentially_good():
    inv = invariants(model(0, 0, 0, 0, 9))
    assert potentially_good(inv)
    assert potentially_good(invariants(model(0, 0, 0, -1, 0)))
    assert not potentially_good(invariants(model(1, 0, 0, 0, 3)))


def test_transforms_preserve_discriminant():
    m = model(1, -1, 3, 2, 5)
    moved = m.rst_transform(2, Fraction(1, 2), -3)
    assert moved.invariants.delta == m.invariants.delta
    assert moved.invariants.j == m.invariants.j
    scaled = m.scaled(3)
    assert scaled.invariants.delta == m.invariants.delta / 3 ** 12
    assert scaled.invariants.j == m.invariants.j


def test_complete_square():
    m = model(1, 0, 1, 0, 3)
    short = complete_square(m)
    inv = m.invariants
    assert short.a1 == short.a3 == 0
    assert short.a2 == inv.b2 / 4
    assert short.a4 == inv.b4 / 2
    assert short.a6 == inv.b6 / 4
    assert short.invariants.delta == inv.delta


def test_integral_model():
    m = model(0, 0, 0, 0, Fraction(1, 3))
    integral = m.integral_model()
    assert integral.is_integral()
    assert integral.a6 == 243


def test_kodaira_symbols():
    assert str(Kodaira('I', 3)) == 'I3'
    assert str(I0_STAR) == 'I0*'
    assert Kodaira.parse('I2*') == Kodaira('I*', 2)
    assert Kodaira.parse('IV*') == Kodaira('IV*')
    with pytest.raises(InvalidArgument):
        Kodaira.parse('V')


def test_tate_regression(regression_case):
    ld = tate_algorithm(model(*regression_case['a_invariants']))
    assert str(ld.kodaira) == regression_case['kodaira']
    assert ld.v_delta_min == regression_case['v_delta_min']
    assert ld.conductor_exponent == regression_case['conductor_exponent']
    assert ld.reduction == regression_case['reduction']
    assert ld.minimal_model.is_integral()


def test_tate_running_example(wild_model):
    ld = tate_algorithm(wild_model)
    assert ld.kodaira == IV
    assert ld.v_delta_min == 7
    assert ld.reduction == Reduction.ADDITIVE
    assert ld.potentially_good


def test_tate_nonminimal_model():
    ld, ld_1 = tate_algorithm(model(0, 0, 0, 0, 729)), tate_algorithm(model(0, 0, 0, 0, 1))
    assert ld.kodaira == ld_1.kodaira == III
    assert ld.v_delta_min == ld_1.v_delta_min == 3


def test_tate_idempotent(regression_case):
    ld = tate_algorithm(model(*regression_case['a_invariants']))
    assert tate_algorithm(ld.minimal_model) == ld


@pytest.mark.parametrize('u', [Fraction(1, 3), 3, 2, Fraction(5, 9)])
def test_tate_scale_invariant(regression_case, u):
    m = model(*regression_case['a_invariants'])
    ld, scaled = tate_algorithm(m), tate_algorithm(m.scaled(u))
    assert (scaled.kodaira, scaled.v_delta_min, scaled.reduction) == \
        (ld.kodaira, ld.v_delta_min, ld.reduction)


def test_tate_good_reduction():
    ld = tate_algorithm(model(0, 0, 0, -1, 0))
    assert ld.reduction == Reduction.GOOD
    assert ld.v_delta_min == 0
    assert str(ld.kodaira) == 'I0'


def test_corpus_valuation_constraints(additive_corpus):
    assert len(additive_corpus) >= 200
    for m, ld in additive_corpus:
        assert ld.reduction == Reduction.ADDITIVE, m
        assert ld.v_delta_min <= 13, m
        if ld.kodaira == I0_STAR:
            assert ld.v_delta_min == 6, m
        if ld.kodaira == III:
            assert ld.v_delta_min == 3, m
        if ld.kodaira == III_STAR:
            assert ld.v_delta_min == 9, m


def test_corpus_idempotent(additive_corpus):
    for m, ld in additive_corpus:
        again = tate_algorithm(ld.minimal_model)
        assert (again.kodaira, again.v_delta_min) == (ld.kodaira, ld.v_delta_min), m
