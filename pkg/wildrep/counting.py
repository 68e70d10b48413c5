"""
Point counts and Frobenius traces of curves y² = x³ + ax² + bx + c over F₃,
and the fixed-point count of σ·Frob on the reduction y² = x³ − x.
"""
import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityExceeded, InternalContradiction, InvalidArgument, SingularModelError
from .gf3n import GFElem, field, frobenius, is_square, solve_f3, subfield_test
from .settings import settings
from .weierstrass import WeierstrassModel, complete_square, residue

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedCurve:
    a: int
    b: int
    c: int

    def __post_init__(self):
        for name in ('a', 'b', 'c'):
            object.__setattr__(self, name, getattr(self, name) % 3)

    @classmethod
    def from_model(cls, m: WeierstrassModel) -> 'ReducedCurve':
        """Reduce the completed square of a 3-integral model."""
        short = complete_square(m)
        return cls(residue(short.a2), residue(short.a4), residue(short.a6))

    @property
    def discriminant(self) -> int:
        """Discriminant of the cubic, mod 3."""
        a, b, c = self.a, self.b, self.c
        return (a * a * b * b - a ** 3 * c - b ** 3) % 3

    def is_smooth(self) -> bool:
        return self.discriminant != 0

    def rhs(self, x: GFElem) -> GFElem:
        return ((x + self.a) * x + self.b) * x + self.c

    def __str__(self):
        return f'y^2 = x^3 + {self.a}x^2 + {self.b}x + {self.c} over F3'


@dataclass(frozen=True)
class TraceData:
    n: int
    a_n: int
    point_count: int

    @property
    def q(self) -> int:
        return 3 ** self.n


def count_points(c: ReducedCurve, n: int) -> int:
    """#Ẽ(F_{3^n}) by enumeration, point at infinity included."""
    if n < 1:
        raise InvalidArgument(f'extension degree must be positive, got {n}')
    if n > settings.MAX_COUNT_DEGREE:
        raise CapacityExceeded(f'point enumeration over GF(3^{n}) exceeds '
                               f'MAX_COUNT_DEGREE={settings.MAX_COUNT_DEGREE}')
    k = field(n)
    squares = Counter(y * y for y in k.elements())
    return 1 + sum(squares[c.rhs(x)] for x in k.elements())


def frobenius_trace(c: ReducedCurve, n: int) -> TraceData:
    """a_n from a₁ by the recurrence a_{m+1} = a₁·a_m − 3·a_{m−1}, a₀ = 2."""
    if n < 1:
        raise InvalidArgument(f'extension degree must be positive, got {n}')
    if not c.is_smooth():
        raise SingularModelError(f'{c} is singular')
    a1 = 3 + 1 - count_points(c, 1)
    prev, cur = 2, a1
    for _ in range(n - 1):
        prev, cur = cur, a1 * cur - 3 * prev
    q = 3 ** n
    assert cur * cur <= 4 * q, f'Hasse bound violated: a_{n}={cur}'
    return TraceData(n, cur, q + 1 - cur)


def sys_solution_formula(n: int) -> int:
    return 3 ** n + (-3) ** ((n + 1) // 2)


def _check_sys_degree(n: int, bound: int, bound_name: str):
    if n < 1 or n % 2 == 0:
        raise InvalidArgument(f'the fixed-point system needs odd n, got {n}')
    if n > bound:
        raise CapacityExceeded(f'fixed-point system for n={n} exceeds {bound_name}={bound}')


def count_sys_solutions(n: int) -> int:
    """
    Number of affine (x, y) with x^{3^n} = x − 1, y^{3^n} = y, y² = x³ − x.

    The x form a coset of F_{3^n} inside F_{3^{3n}}, found by solving the
    F₃-linear equation x^{3^n} − x = −1. For each x, s = x³ − x lies in
    F_{3^n} and contributes its number of square roots there.
    """
    _check_sys_degree(n, settings.MAX_SYS_DEGREE, 'MAX_SYS_DEGREE')
    return _count_sys_solutions(n)


@lru_cache(maxsize=None)
def _count_sys_solutions(n: int) -> int:
    k = field(3 * n)
    images = [frobenius(e, n) - e for e in k.basis()]
    matrix = [[image.coeffs[i] for image in images] for i in range(k.degree)]
    solved = solve_f3(matrix, (-k.one()).coeffs)
    if solved is None:
        raise InternalContradiction(f'x^(3^{n}) - x = -1 has no solution in {k}')
    particular, kernel = solved
    if len(kernel) != n:
        raise InternalContradiction(f'kernel of x^(3^{n}) - x has dimension {len(kernel)}')

    count = 0
    for combo in itertools.product(range(3), repeat=n):
        coords = list(particular)
        for coeff, vector in zip(combo, kernel):
            coords = [(u + coeff * v) % 3 for u, v in zip(coords, vector)]
        x = k.element(coords)
        s = x * x * x - x
        if not subfield_test(s, n):
            raise InternalContradiction(f'x^3 - x = {s!r} is not in GF(3^{n})')
        if not s:
            count += 1
        elif is_square(s, n):
            count += 2
    log.debug('fixed-point system n=%d: %d affine solutions', n, count)
    return count


def count_sys_solutions_raw(n: int) -> int:
    """The same count by a double loop over F_{3^{3n}} × F_{3^n}."""
    _check_sys_degree(n, settings.MAX_RAW_SYS_DEGREE, 'MAX_RAW_SYS_DEGREE')
    k = field(3 * n)
    ys = [y for y in k.elements() if subfield_test(y, n)]
    assert len(ys) == 3 ** n
    count = 0
    for x in k.elements():
        if frobenius(x, n) != x - 1:
            continue
        rhs = x * x * x - x
        count += sum(1 for y in ys if y * y == rhs)
    return count


def trace_sigma_frob(n: int) -> int:
    """tr ρ(σ·Frob) = deg + 1 − #fixed points = 3ⁿ − count_sys_solutions(n)."""
    return 3 ** n - count_sys_solutions(n)
