import math
import random

import pytest

from tests.conftest import model
from wildrep import counting
from wildrep.counting import (
    ReducedCurve, count_points, count_sys_solutions, count_sys_solutions_raw, frobenius_trace,
    sys_solution_formula, trace_sigma_frob,
)
from wildrep.errors import CapacityExceeded, InvalidArgument, SingularModelError
from wildrep.settings import _Settings

X3_MINUS_X = ReducedCurve(0, -1, 0)


def _expected_trace(n):
    """Eigenvalues (±i√3)ⁿ."""
    if n % 2:
        return 0
    return 2 * 3 ** (n // 2) * (1 if n % 4 == 0 else -1)


def test_count_points_examples():
    assert count_points(X3_MINUS_X, 1) == 4
    assert count_points(X3_MINUS_X, 2) == 16
    assert count_points(X3_MINUS_X, 3) == 28


def test_count_points_capacity(monkeypatch):
    with pytest.raises(CapacityExceeded):
        count_points(X3_MINUS_X, 9)
    monkeypatch.setattr(counting, 'settings', _Settings(MAX_COUNT_DEGREE=2))
    with pytest.raises(CapacityExceeded):
        count_points(X3_MINUS_X, 3)


def test_frobenius_trace_examples():
    assert frobenius_trace(X3_MINUS_X, 1).a_n == 0
    assert frobenius_trace(X3_MINUS_X, 2).a_n == -6
    assert frobenius_trace(X3_MINUS_X, 3).a_n == 0
    assert frobenius_trace(X3_MINUS_X, 4).a_n == 18
    trace = frobenius_trace(X3_MINUS_X, 6)
    assert trace.a_n == -54
    assert trace.point_count == 3 ** 6 + 1 + 54
    assert trace.q == 729


@pytest.mark.parametrize('n', range(1, 7))
def test_trace_matches_enumeration(n):
    trace = frobenius_trace(X3_MINUS_X, n)
    assert trace.point_count == count_points(X3_MINUS_X, n)
    assert trace.a_n == _expected_trace(n)


def test_trace_random_curves():
    rng = random.Random(7)
    curves = []
    while len(curves) < 10:
        c = ReducedCurve(rng.randrange(3), rng.randrange(3), rng.randrange(3))
        if c.is_smooth():
            curves.append(c)
    for c in curves:
        for n in range(1, 5):
            trace = frobenius_trace(c, n)
            assert trace.point_count == count_points(c, n)
            assert abs(trace.a_n) <= 2 * math.sqrt(3 ** n)


def test_singular_reduction():
    cusp = ReducedCurve(0, 0, 0)
    assert not cusp.is_smooth()
    with pytest.raises(SingularModelError):
        frobenius_trace(cusp, 1)


def test_from_model():
    assert ReducedCurve.from_model(model(0, 0, 0, -1, 0)) == X3_MINUS_X
    # y² + xy = x³ + 1 completes to y² = x³ + x²/4 + 1
    assert ReducedCurve.from_model(model(1, 0, 0, 0, 1)) == ReducedCurve(1, 0, 1)


@pytest.mark.parametrize('n, count', [(1, 0), (3, 36), (5, 216)])
def test_count_sys_solutions(n, count):
    assert count_sys_solutions(n) == count
    assert count == sys_solution_formula(n)


def test_count_sys_solutions_raw():
    assert count_sys_solutions_raw(1) == count_sys_solutions(1) == 0
    with pytest.raises(CapacityExceeded):
        count_sys_solutions_raw(3)


def test_count_sys_solutions_bounds(monkeypatch):
    with pytest.raises(InvalidArgument):
        count_sys_solutions(2)
    with pytest.raises(CapacityExceeded):
        count_sys_solutions(7)
    monkeypatch.setattr(counting, 'settings', _Settings(MAX_SYS_DEGREE=3))
    with pytest.raises(CapacityExceeded):
        count_sys_solutions(5)


@pytest.mark.parametrize('n, trace', [(1, 3), (3, -9), (5, 27)])
def test_trace_sigma_frob(n, trace):
    assert trace_sigma_frob(n) == trace
    assert trace == -(-3) ** ((n + 1) // 2)
