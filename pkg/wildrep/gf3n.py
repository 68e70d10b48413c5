"""
Finite fields F_{3^d} = F₃[t]/(m(t)).

The modulus m is the lexicographically least monic irreducible polynomial
of degree d, comparing coefficient tuples (c₀, …, c_d) from c₀ up. No
compatible embeddings between fields are built: membership in a subfield
F_{3^n} is decided with the Frobenius x ↦ x^{3^n}.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Sequence, Tuple, Union

from .errors import CapacityExceeded, DivisionByZero, FieldMismatch, InvalidArgument
from .settings import settings

log = logging.getLogger(__name__)

P = 3

Poly = Tuple[int, ...]


def _poly_rem(a: Sequence[int], m: Sequence[int]) -> List[int]:
    """Remainder of `a` modulo the monic `m` over F₃, as a list of len(m) - 1."""
    d = len(m) - 1
    rem = [x % P for x in a] + [0] * max(0, d - len(a))
    for k in range(len(rem) - 1, d - 1, -1):
        c = rem[k]
        if not c:
            continue
        shift = k - d
        for i, mi in enumerate(m):
            rem[shift + i] = (rem[shift + i] - c * mi) % P
    return rem[:d]


def is_irreducible(modulus: Sequence[int]) -> bool:
    """Trial division by every monic polynomial of degree <= d/2."""
    d = len(modulus) - 1
    assert d >= 1 and modulus[-1] == 1, 'expected a monic polynomial'
    for k in range(1, d // 2 + 1):
        for lower in itertools.product(range(P), repeat=k):
            if not any(_poly_rem(modulus, lower + (1,))):
                return False
    return True


@dataclass(frozen=True)
class FieldDescriptor:
    degree: int
    modulus: Poly

    def __post_init__(self):
        if len(self.modulus) != self.degree + 1:
            raise InvalidArgument(f'modulus {self.modulus} has wrong degree')
        if not is_irreducible(self.modulus):
            raise InvalidArgument(f'modulus {self.modulus} is reducible over F3')

    @property
    def order(self) -> int:
        return P ** self.degree

    def element(self, coeffs: Sequence[int]) -> 'GFElem':
        return GFElem(self, tuple(_poly_rem(coeffs, self.modulus)))

    def from_int(self, c: int) -> 'GFElem':
        return self.element([c])

    def zero(self) -> 'GFElem':
        return self.from_int(0)

    def one(self) -> 'GFElem':
        return self.from_int(1)

    def gen(self) -> 'GFElem':
        """The class of t."""
        return self.element([0, 1])

    def basis(self) -> List['GFElem']:
        return [self.element([0] * j + [1]) for j in range(self.degree)]

    def elements(self) -> Iterator['GFElem']:
        for coeffs in itertools.product(range(P), repeat=self.degree):
            yield GFElem(self, coeffs)

    def __repr__(self):
        return f'GF(3^{self.degree})'


@lru_cache(maxsize=None)
def _field(degree: int) -> FieldDescriptor:
    for lower in itertools.product(range(P), repeat=degree):
        modulus = lower + (1,)
        if is_irreducible(modulus):
            log.debug('GF(3^%d) modulus %s', degree, modulus)
            return FieldDescriptor(degree, modulus)
    raise AssertionError(f'no irreducible polynomial of degree {degree}')


def field(degree: int) -> FieldDescriptor:
    """The (cached, deterministic) field with 3^degree elements."""
    if degree < 1:
        raise InvalidArgument(f'field degree must be positive, got {degree}')
    if degree > settings.MAX_FIELD_DEGREE:
        raise CapacityExceeded(f'GF(3^{degree}) exceeds MAX_FIELD_DEGREE='
                               f'{settings.MAX_FIELD_DEGREE}')
    return _field(degree)


@dataclass(frozen=True)
class GFElem:
    field: FieldDescriptor
    coeffs: Poly

    def _other(self, other: Union['GFElem', int]) -> 'GFElem':
        if isinstance(other, int):
            return self.field.from_int(other)
        if not isinstance(other, GFElem):
            return NotImplemented
        if other.field != self.field:
            raise FieldMismatch(f'{self.field} vs {other.field}')
        return other

    def __add__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return GFElem(self.field, tuple((a + b) % P for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return GFElem(self.field, tuple(-a % P for a in self.coeffs))

    def __sub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return GFElem(self.field, tuple((a - b) % P for a, b in zip(self.coeffs, other.coeffs)))

    def __rsub__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        prod = [0] * (2 * self.field.degree - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        return GFElem(self.field, tuple(_poly_rem(prod, self.field.modulus)))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** -k
        result, base = self.field.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inv(self) -> 'GFElem':
        if not self:
            raise DivisionByZero(f'inverse of zero in {self.field}')
        return self ** (self.field.order - 2)

    def __truediv__(self, other):
        other = self._other(other)
        if other is NotImplemented:
            return other
        return self * other.inv()

    def __bool__(self):
        return any(self.coeffs)

    def __repr__(self):
        return f'{self.field!r}{list(self.coeffs)}'


def frobenius(x: GFElem, n: int) -> GFElem:
    """x ↦ x^{3^n}."""
    if n < 0:
        raise InvalidArgument(f'Frobenius power must be non-negative, got {n}')
    for _ in range(n % x.field.degree):
        x = x * x * x
    return x


def subfield_test(x: GFElem, n: int) -> bool:
    """Whether x lies in F_{3^n}, i.e. is fixed by the n-th power Frobenius."""
    return frobenius(x, n) == x


def is_square(x: GFElem, degree: Optional[int] = None) -> bool:
    """
    Whether x is a square in F_{3^degree} (default: x's own field), by Euler's
    criterion. With an explicit degree, x must lie in that subfield.
    """
    if not x:
        return True
    d = x.field.degree if degree is None else degree
    if d < 1 or x.field.degree % d:
        raise InvalidArgument(f'GF(3^{d}) is not a subfield of {x.field}')
    return x ** ((P ** d - 1) // 2) == x.field.one()


def solve_f3(matrix: Sequence[Sequence[int]],
             rhs: Sequence[int]) -> Optional[Tuple[List[int], List[List[int]]]]:
    """
    Solve A·v = b over F₃ by Gauss-Jordan elimination.
    Returns (particular solution, kernel basis), or None when inconsistent.
    """
    n_rows, n_cols = len(matrix), len(matrix[0])
    aug = [[x % P for x in row] + [b % P] for row, b in zip(matrix, rhs)]
    pivots: List[int] = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        pivot = next((i for i in range(r, n_rows) if aug[i][c]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        # Units of F3 are their own inverses
        unit = aug[r][c]
        aug[r] = [x * unit % P for x in aug[r]]
        for i in range(n_rows):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [(x - f * y) % P for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1

    if any(row[n_cols] and not any(row[:n_cols]) for row in aug):
        return None

    particular = [0] * n_cols
    for i, c in enumerate(pivots):
        particular[c] = aug[i][n_cols]
    kernel = []
    for free in (c for c in range(n_cols) if c not in pivots):
        v = [0] * n_cols
        v[free] = 1
        for i, c in enumerate(pivots):
            v[c] = -aug[i][free] % P
        kernel.append(v)
    return particular, kernel
